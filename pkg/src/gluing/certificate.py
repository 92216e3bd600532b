"""Gluing certificates and structured failure reasons"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from src.semigroup import GroupElement, SplitSpec
from src.presentation import Binomial, Presentation


class ReasonKind(str, Enum):
    """Which requirement of the gluing characterization failed"""

    MIXED_ONLY_COMPONENT = "mixed_only_component"
    NO_GLUED_DEGREE = "no_glued_degree"
    MIXED_AT_GLUED_DEGREE = "mixed_at_glued_degree"
    AMBIGUOUS_GLUED_DEGREE = "ambiguous_glued_degree"
    NON_MULTIPLE_SHARED_DEGREE = "non_multiple_shared_degree"
    INTERSECTION_NOT_CYCLIC = "intersection_not_cyclic"
    GENERATOR_NOT_SHARED = "generator_not_shared"


@dataclass(frozen=True)
class NotGlued:
    """A split that is not a gluing, with the witness degree when there is one"""

    split: SplitSpec
    kind: ReasonKind
    degree: Optional[GroupElement] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return False

    def describe(self) -> str:
        text = self.kind.value.replace('_', ' ')
        if self.degree is not None:
            text += f" at {self.degree}"
        if self.detail:
            text += f" ({self.detail})"
        return text


@dataclass(frozen=True)
class GluingCertificate:
    """Witness that S is the gluing of <left> and <right>.

    combined is left_presentation + right_presentation + the glued binomial,
    all in the variables of S.
    """

    split: SplitSpec
    glued_degree: GroupElement
    glued_binomial: Binomial
    left_presentation: Presentation
    right_presentation: Presentation
    combined: Presentation


GluingResult = Union[GluingCertificate, NotGlued]
