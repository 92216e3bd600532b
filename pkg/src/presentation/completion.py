"""Binomial Buchberger completion for the lattice ideal of ker S"""
import heapq
import logging
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from src.exactlin import Vector
from src.fibers import Factorization
from src.semigroup import Semigroup
from .binomial import Binomial, Presentation, binomial_sort_key

logger = logging.getLogger(__name__)

# (lead, trail) exponent vectors with lead > trail in the pass order
Pair = Tuple[Vector, Vector]
OrderKey = Callable[[Vector], Tuple]


def graded_revlex_key(weights: Sequence[int], cheapest: int) -> OrderKey:
    """
    Weighted reverse-lex order in which `cheapest` is the smallest variable

    A monomial divisible by the cheapest variable loses every tie to one
    that is not.
    """
    l = len(weights)
    perm = [j for j in range(l) if j != cheapest] + [cheapest]
    reverse = list(reversed(perm))

    def key(a: Vector) -> Tuple:
        return (sum(w * x for w, x in zip(weights, a)),) + tuple(-a[p] for p in reverse)

    return key


def _divide_common(u: Vector, v: Vector) -> Pair:
    common = [min(a, b) for a, b in zip(u, v)]
    return tuple(a - c for a, c in zip(u, common)), tuple(b - c for b, c in zip(v, common))


def _orient(u: Vector, v: Vector, key: OrderKey) -> Optional[Pair]:
    """Saturated pair with the larger term first, None for the zero binomial"""
    u, v = _divide_common(u, v)
    if u == v:
        return None
    return (u, v) if key(u) > key(v) else (v, u)


def _divides(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _reduce(pair: Pair, basis: List[Pair], key: OrderKey) -> Optional[Pair]:
    """Top-reduce until no lead divides the leading term"""
    current: Optional[Pair] = pair
    while current is not None:
        lead, trail = current
        reducer = next((g for g in basis if _divides(g[0], lead)), None)
        if reducer is None:
            return current
        shifted = tuple(x - a + b for x, a, b in zip(lead, reducer[0], reducer[1]))
        current = _orient(shifted, trail, key)
    return None


def _s_pair(first: Pair, second: Pair, key: OrderKey) -> Optional[Pair]:
    lcm = tuple(max(a, b) for a, b in zip(first[0], second[0]))
    u = tuple(m - a + b for m, a, b in zip(lcm, first[0], first[1]))
    v = tuple(m - a + b for m, a, b in zip(lcm, second[0], second[1]))
    return _orient(u, v, key)


def _coprime(a: Vector, b: Vector) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _complete(pairs: List[Pair], key: OrderKey) -> List[Pair]:
    """Buchberger completion; returns a minimal Groebner basis for `key`"""
    basis: List[Pair] = []
    queue: list = []
    counter = 0

    def insert(pair: Pair):
        nonlocal counter
        for other in basis:
            if _coprime(pair[0], other[0]):
                continue
            lcm = tuple(max(a, b) for a, b in zip(pair[0], other[0]))
            heapq.heappush(queue, (key(lcm), counter, pair, other))
            counter += 1
        basis.append(pair)

    for pair in pairs:
        reduced = _reduce(pair, basis, key)
        if reduced is not None:
            insert(reduced)

    while queue:
        _, _, first, second = heapq.heappop(queue)
        s = _s_pair(first, second, key)
        if s is None:
            continue
        reduced = _reduce(s, basis, key)
        if reduced is not None:
            insert(reduced)

    minimal: List[Pair] = []
    for i, g in enumerate(basis):
        redundant = any(
            _divides(h[0], g[0]) and (h[0] != g[0] or j < i)
            for j, h in enumerate(basis) if j != i
        )
        if not redundant:
            minimal.append(g)
    return minimal


@lru_cache(maxsize=128)
def ideal_generators(S: Semigroup) -> Presentation:
    """
    Binomial generating set of the semigroup ideal I_S

    Starts from the binomials of a kernel basis and saturates one variable
    at a time: each pass completes under a graded reverse-lex order with
    that variable cheapest, and every binomial is kept with its common
    monomial factor divided out.

    Args:
        S: Reduced semigroup

    Returns:
        Presentation (not necessarily minimal) sorted canonically
    """
    l = S.num_generators
    weights = S.weights
    pairs: List[Pair] = []
    for u in S.kernel.basis:
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        pairs.append((plus, minus))

    if pairs:
        for var in range(l):
            key = graded_revlex_key(weights, var)
            oriented = [_orient(a, b, key) for a, b in pairs]
            pairs = _complete([p for p in oriented if p is not None], key)
            logger.debug(f"Saturation pass {var + 1}/{l}: {len(pairs)} binomials")

    binomials = []
    for lead, trail in pairs:
        candidate = Binomial.canonical(S, Factorization(lead), Factorization(trail))
        if not any(candidate.same_up_to_sign(b) for b in binomials):
            binomials.append(candidate)
    binomials.sort(key=lambda b: binomial_sort_key(S, b))
    return Presentation(tuple(binomials), minimal=False)
