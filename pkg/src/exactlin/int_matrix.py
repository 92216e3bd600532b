"""Immutable integer matrices with arbitrary-precision entries"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from src.utils.errors import DimensionMismatchError


Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix stored row-major.

    Entries are plain Python ints, so no operation can overflow.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"Negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int = None) -> "IntMatrix":
        """
        Build a matrix from a list of rows

        Args:
            rows: Integer rows, all of the same length
            cols: Column count, required only when rows is empty

        Returns:
            IntMatrix
        """
        rows = [tuple(int(x) for x in row) for row in rows]
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if cols is not None and cols != width:
            raise DimensionMismatchError(f"Expected {cols} columns, got {width}")
        for row in rows:
            if len(row) != width:
                raise DimensionMismatchError("Rows have different lengths")
        return cls(len(rows), width, tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def vstack(cls, blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        """Stack matrices with equal column counts on top of each other"""
        cols = blocks[0].cols
        rows: List[Vector] = []
        for block in blocks:
            if block.cols != cols:
                raise DimensionMismatchError("vstack needs equal column counts")
            rows.extend(block.rows_list())
        return cls.from_rows(rows, cols)

    @classmethod
    def block_diagonal(cls, first: "IntMatrix", second: "IntMatrix") -> "IntMatrix":
        """Return [first 0; 0 second]"""
        rows = [tuple(row) + (0,) * second.cols for row in first.rows_list()]
        rows += [(0,) * first.cols + tuple(row) for row in second.rows_list()]
        return cls.from_rows(rows, first.cols + second.cols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def rows_list(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = [other.column(j) for j in range(other.cols)]
        rows = [
            tuple(sum(a * b for a, b in zip(self.row(i), col)) for col in other_cols)
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(rows, other.cols)

    def apply(self, vector: Sequence[int]) -> Vector:
        """Return self · vector for a column vector"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} for {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def left_apply(self, vector: Sequence[int]) -> Vector:
        """Return vector · self for a row vector"""
        if len(vector) != self.rows:
            raise DimensionMismatchError(f"Vector of length {len(vector)} for {self.rows} rows")
        return tuple(
            sum(vector[i] * self.entries[i * self.cols + j] for i in range(self.rows))
            for j in range(self.cols)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(
            self[i, j] == 0
            for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(str(x) for x in row) + "]" for row in self.rows_list())
