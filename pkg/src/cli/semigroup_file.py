"""Line-oriented semigroup text files.

    # comment
    free_rank: 2
    torsion: 4
    gen: 1 ; 9 -5
    gen: 3 ; -7 5
    split: glued 1-4|5-7

Generator lines list torsion coordinates first, then a ';', then the free
coordinates; without torsion the ';' is omitted.
"""
import re
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.semigroup import AbelianGroup, GroupElement, Semigroup, SplitSpec
from src.utils.errors import SemigroupFileError

_NUMBERS = re.compile(r'[\s,]+')


def parse_integers(text: str) -> List[int]:
    """Integers separated by spaces and/or commas"""
    text = text.strip().strip('()')
    if not text:
        return []
    try:
        return [int(token) for token in _NUMBERS.split(text) if token]
    except ValueError:
        raise SemigroupFileError(f"Cannot read '{text}' as a list of integers")


class GeneratorLine(BaseModel):
    torsion: List[int] = Field(default_factory=list)
    free: List[int] = Field(default_factory=list)


class SemigroupFile(BaseModel):
    """Validated contents of a semigroup file"""

    free_rank: int = Field(ge=0)
    torsion: List[int] = Field(default_factory=list)
    generators: List[GeneratorLine]
    splits: Dict[str, str] = Field(default_factory=dict)

    @field_validator('torsion')
    @classmethod
    def torsion_orders_at_least_two(cls, value: List[int]) -> List[int]:
        if any(d < 2 for d in value):
            raise ValueError(f"torsion orders must be at least 2, got {value}")
        return value

    @model_validator(mode='after')
    def generator_lengths(self) -> "SemigroupFile":
        if not self.generators:
            raise ValueError("no gen: lines")
        for i, g in enumerate(self.generators):
            if len(g.free) != self.free_rank or len(g.torsion) != len(self.torsion):
                raise ValueError(
                    f"generator {i + 1} has {len(g.torsion)} torsion and {len(g.free)} free "
                    f"coordinates, expected {len(self.torsion)} and {self.free_rank}"
                )
        return self

    @classmethod
    def parse(cls, text: str) -> "SemigroupFile":
        """
        Parse file text

        Raises:
            SemigroupFileError: unknown keys, bad integers or failed validation
        """
        fields: Dict = {'generators': [], 'splits': {}}
        for number, raw in enumerate(text.splitlines(), 1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition(':')
            if not sep:
                raise SemigroupFileError(f"Line {number}: expected 'key: value', got '{raw.strip()}'")
            key = key.strip()
            if key == 'free_rank':
                numbers = parse_integers(value)
                if len(numbers) != 1:
                    raise SemigroupFileError(f"Line {number}: free_rank takes one integer")
                fields['free_rank'] = numbers[0]
            elif key == 'torsion':
                fields['torsion'] = parse_integers(value)
            elif key == 'gen':
                torsion, semi, free = value.partition(';')
                if not semi:
                    torsion, free = '', torsion
                fields['generators'].append({'torsion': parse_integers(torsion), 'free': parse_integers(free)})
            elif key == 'split':
                parts = value.split()
                if len(parts) != 2:
                    raise SemigroupFileError(f"Line {number}: split takes a name and a split such as 1-4|5-8")
                fields['splits'][parts[0]] = parts[1]
            else:
                raise SemigroupFileError(f"Line {number}: unknown key '{key}'")
        try:
            return cls.model_validate(fields)
        except ValidationError as e:
            raise SemigroupFileError(f"Invalid semigroup file: {e.errors()[0]['msg']}")

    @classmethod
    def load(cls, path: str) -> "SemigroupFile":
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise SemigroupFileError(f"Cannot read {path}: {e.strerror}")
        return cls.parse(text)

    @classmethod
    def from_semigroup(cls, S: Semigroup, splits: Optional[Dict[str, SplitSpec]] = None) -> "SemigroupFile":
        return cls(
            free_rank=S.group.free_rank,
            torsion=list(S.group.torsion_orders),
            generators=[
                GeneratorLine(torsion=list(g.torsion_part), free=list(g.free_part))
                for g in S.generators
            ],
            splits={name: split.format() for name, split in (splits or {}).items()},
        )

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(self.free_rank, tuple(self.torsion))

    def to_semigroup(self) -> Semigroup:
        """Build the Semigroup (raises NotReducedError / ZeroGeneratorError)"""
        group = self.group
        return Semigroup(
            group,
            tuple(GroupElement(group, tuple(g.free), tuple(g.torsion)) for g in self.generators),
        )

    def split(self, name: str) -> SplitSpec:
        if name not in self.splits:
            raise SemigroupFileError(f"No split named '{name}'")
        return SplitSpec.parse(self.splits[name], len(self.generators))

    def dumps(self) -> str:
        """Canonical text; parse(dumps()) gives back an equal model"""
        lines = [
            f"free_rank: {self.free_rank}",
            "torsion:" + "".join(f" {d}" for d in self.torsion),
        ]
        for g in self.generators:
            free = " ".join(str(x) for x in g.free)
            if self.torsion:
                lines.append(f"gen: {' '.join(str(x) for x in g.torsion)} ; {free}")
            else:
                lines.append(f"gen: {free}")
        for name, split in self.splits.items():
            lines.append(f"split: {name} {split}")
        return "\n".join(lines) + "\n"


def parse_degree(text: str, group: AbelianGroup) -> GroupElement:
    """
    Read a degree such as "18", "(13,13)" or "(2;0,20)" (torsion first)

    Raises:
        SemigroupFileError: malformed text or wrong number of coordinates
    """
    body = text.strip().strip('()')
    torsion_text, semi, free_text = body.partition(';')
    if not semi:
        torsion_text, free_text = '', torsion_text
    free = parse_integers(free_text)
    torsion = parse_integers(torsion_text)
    if len(free) != group.free_rank or len(torsion) != len(group.torsion_orders):
        raise SemigroupFileError(f"Degree '{text}' does not fit the group {group}")
    return GroupElement(group, tuple(free), tuple(torsion))
