"""Bipartitions of a generator list"""
import re
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from src.utils.errors import SplitError

_RANGE = re.compile(r'^(\d+)(?:-(\d+))?$')


@dataclass(frozen=True)
class SplitSpec:
    """Partition of generator indices 0..l-1 into two nonempty sides"""

    left: Tuple[int, ...]
    right: Tuple[int, ...]

    def __post_init__(self):
        left, right = tuple(sorted(self.left)), tuple(sorted(self.right))
        if not left or not right:
            raise SplitError("Both sides of a split must be nonempty")
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise SplitError("A split lists some index twice")
        if set(left) & set(right):
            raise SplitError(f"Sides share indices {sorted(set(left) & set(right))}")
        if set(left) | set(right) != set(range(len(left) + len(right))):
            raise SplitError("A split must cover the generator indices exactly")
        object.__setattr__(self, 'left', left)
        object.__setattr__(self, 'right', right)

    @property
    def size(self) -> int:
        return len(self.left) + len(self.right)

    @classmethod
    def natural(cls, r: int, l: int) -> "SplitSpec":
        """First r generators against the remaining l - r"""
        if not 0 < r < l:
            raise SplitError(f"Cannot split {l} generators after position {r}")
        return cls(tuple(range(r)), tuple(range(r, l)))

    @classmethod
    def parse(cls, text: str, l: int) -> "SplitSpec":
        """
        Parse a 1-based split such as "1-4|5-8" or "1,3|2"

        Args:
            text: Split text, sides separated by '|'
            l: Number of generators

        Returns:
            SplitSpec with 0-based indices
        """
        sides = text.strip().split('|')
        if len(sides) != 2:
            raise SplitError(f"Split '{text}' needs exactly one '|'")
        parsed = [cls._parse_side(side, l) for side in sides]
        split = cls(tuple(parsed[0]), tuple(parsed[1]))
        if split.size != l:
            raise SplitError(f"Split '{text}' does not cover all {l} generators")
        return split

    @staticmethod
    def _parse_side(text: str, l: int) -> List[int]:
        indices = []
        for token in text.split(','):
            token = token.strip()
            match = _RANGE.match(token)
            if not match:
                raise SplitError(f"Cannot read '{token}' as an index or range")
            start = int(match.group(1))
            end = int(match.group(2) or start)
            if not 1 <= start <= end <= l:
                raise SplitError(f"Range '{token}' is outside 1-{l}")
            indices.extend(range(start - 1, end))
        return indices

    def format(self) -> str:
        return f"{_format_side(self.left)}|{_format_side(self.right)}"

    def side_of(self, index: int) -> str:
        return 'left' if index in self.left else 'right'

    def swapped(self) -> "SplitSpec":
        return SplitSpec(self.right, self.left)

    def __str__(self) -> str:
        return self.format()


def _format_side(indices: Tuple[int, ...]) -> str:
    parts = []
    start = prev = indices[0]
    for i in indices[1:] + (None,):
        if i is not None and i == prev + 1:
            prev = i
            continue
        parts.append(f"{start + 1}" if start == prev else f"{start + 1}-{prev + 1}")
        if i is not None:
            start = prev = i
    return ",".join(parts)


def all_splits(l: int) -> Iterator[SplitSpec]:
    """The 2^(l-1) - 1 bipartitions, generator 0 always on the left"""
    for mask in range(1, 2 ** (l - 1)):
        left = [0] + [i for i in range(1, l) if not mask >> (i - 1) & 1]
        right = [i for i in range(1, l) if mask >> (i - 1) & 1]
        yield SplitSpec(tuple(left), tuple(right))
