"""Positive grading functionals by exact Fourier-Motzkin elimination"""
import logging
from fractions import Fraction
from math import ceil, floor, gcd, lcm
from typing import List, Optional, Sequence, Tuple

from src.utils.errors import NotReducedError

logger = logging.getLogger(__name__)

# a . w >= b
Constraint = Tuple[Tuple[Fraction, ...], Fraction]


def _eliminate(system: List[Constraint], var: int) -> List[Constraint]:
    """Project the system onto the variables before `var`"""
    lower, upper, kept = [], [], []
    for coeffs, rhs in system:
        a = coeffs[var]
        if a > 0:
            lower.append((coeffs, rhs))
        elif a < 0:
            upper.append((coeffs, rhs))
        else:
            kept.append((coeffs[:var], rhs))

    for lo_coeffs, lo_rhs in lower:
        for up_coeffs, up_rhs in upper:
            p, q = lo_coeffs[var], -up_coeffs[var]
            coeffs = tuple(q * x + p * y for x, y in zip(lo_coeffs[:var], up_coeffs[:var]))
            kept.append((coeffs, q * lo_rhs + p * up_rhs))

    reduced = []
    seen = set()
    for coeffs, rhs in kept:
        if not any(coeffs):
            if rhs > 0:
                return None
            continue
        if (coeffs, rhs) not in seen:
            seen.add((coeffs, rhs))
            reduced.append((coeffs, rhs))
    return reduced


def _bounds(system: List[Constraint], var: int, fixed: Sequence[Fraction]):
    """Lower and upper bound on `var` once the earlier variables are fixed"""
    low: Optional[Fraction] = None
    high: Optional[Fraction] = None
    for coeffs, rhs in system:
        a = coeffs[var]
        if a == 0:
            continue
        bound = (rhs - sum(c * x for c, x in zip(coeffs, fixed))) / a
        if a > 0:
            low = bound if low is None else max(low, bound)
        else:
            high = bound if high is None else min(high, bound)
    return low, high


def find_positive_grading(vectors: Sequence[Sequence[int]], dim: int) -> Tuple[int, ...]:
    """
    Integer w with w . v >= 1 for every vector

    Back-substitution picks the smallest admissible integer for each
    coordinate, falling back to the rational bound.

    Args:
        vectors: Free parts of the generators
        dim: Their common length

    Returns:
        Primitive integer functional

    Raises:
        NotReducedError: no such functional exists
    """
    if dim == 0 or any(not any(v) for v in vectors):
        raise NotReducedError("Some generator has zero free part")

    system: List[Constraint] = [
        (tuple(Fraction(x) for x in v), Fraction(1)) for v in vectors
    ]
    stages = {dim: system}
    for var in range(dim - 1, -1, -1):
        projected = _eliminate(stages[var + 1], var)
        if projected is None:
            raise NotReducedError("No positive grading exists: the generators meet their negatives")
        stages[var] = projected

    point: List[Fraction] = []
    for var in range(dim):
        low, high = _bounds(stages[var + 1], var, point)
        if low is not None:
            candidate = Fraction(ceil(low))
            value = candidate if high is None or candidate <= high else low
        elif high is not None:
            value = Fraction(min(0, floor(high)))
        else:
            value = Fraction(0)
        point.append(value)

    scale = 1
    for x in point:
        scale = lcm(scale, x.denominator)
    w = [int(x * scale) for x in point]
    common = 0
    for x in w:
        common = gcd(common, x)
    w = tuple(x // common for x in w) if common > 1 else tuple(w)
    logger.debug(f"Positive grading {w} for {len(vectors)} generators")
    return w
