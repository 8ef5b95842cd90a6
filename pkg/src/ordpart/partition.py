"""Finite and witness-scale partition calculus for colorings of pairs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .intervals import IntervalSet, is_subset, order_type
from .ordinal import (
    OMEGA,
    ZERO,
    Ordinal,
    OrdinalLike,
    as_ordinal,
    from_natural,
    godel_code,
    godel_decode,
    split_decomposable,
    to_natural,
    unpair,
)

__all__ = [
    "FinOrdSet",
    "PairColoring",
    "TableColoring",
    "SierpinskiColoring",
    "DecomposableColoring",
    "ArrowResult",
    "ZeroHomogVerdict",
    "color_of",
    "color_slice",
    "find_homogeneous",
    "is_homogeneous",
    "check_arrow_finite",
    "verify_counterexample",
    "sierpinski_coloring",
    "decomposable_coloring",
    "check_zero_homog_segment",
    "repeat_enum",
    "pentagon_coloring",
    "DEFAULT_CAP",
    "DEFAULT_SCAN_BOUND",
]

DEFAULT_CAP = 8
DEFAULT_SCAN_BOUND = 10**6


class FinOrdSet(tuple):
    """Strictly increasing finite tuple of ordinals."""

    def __new__(cls, elements: Iterable[OrdinalLike] = ()):
        items = sorted({as_ordinal(e) for e in elements})
        return super().__new__(cls, items)

    def __repr__(self):
        return "{" + ", ".join(str(e) for e in self) + "}"


class PairColoring:
    """A coloring of unordered pairs of ordinals with ``k`` colors."""

    k: int = 2

    def in_domain(self, x: Ordinal) -> bool:
        raise NotImplementedError

    def _color(self, x: Ordinal, y: Ordinal) -> int:
        # x < y, both in the domain
        raise NotImplementedError

    def __call__(self, x: OrdinalLike, y: OrdinalLike) -> int:
        return color_of(self, x, y)


@dataclass(frozen=True)
class TableColoring(PairColoring):
    """An explicit color table on a finite ground set."""

    ground: FinOrdSet
    table: Mapping[Tuple[Ordinal, Ordinal], int]
    k: int = 2

    def __post_init__(self):
        object.__setattr__(self, "ground", FinOrdSet(self.ground))
        fixed = {}
        for (x, y), c in self.table.items():
            x, y = as_ordinal(x), as_ordinal(y)
            if x == y:
                raise ValueError(f"pair ({x}, {x}) is not a 2-element set")
            key = (x, y) if x < y else (y, x)
            if not 0 <= c < self.k:
                raise ValueError(f"color {c} of pair {key} out of range 0..{self.k - 1}")
            if key in fixed and fixed[key] != c:
                raise ValueError(f"pair {key} colored twice")
            fixed[key] = c
        for x, y in itertools.combinations(self.ground, 2):
            if (x, y) not in fixed:
                raise ValueError(f"pair ({x}, {y}) has no color")
        if len(fixed) != len(self.ground) * (len(self.ground) - 1) // 2:
            raise ValueError("table colors pairs outside the ground set")
        object.__setattr__(self, "table", fixed)

    @classmethod
    def from_function(cls, ground: Iterable[OrdinalLike], fn, k: int = 2) -> "TableColoring":
        g = FinOrdSet(ground)
        return cls(g, {(x, y): fn(x, y) for x, y in itertools.combinations(g, 2)}, k)

    @classmethod
    def constant(cls, n: int, color: int = 0, k: int = 2) -> "TableColoring":
        return cls.from_function(range(n), lambda x, y: color, k)

    def in_domain(self, x):
        return x in self.ground

    def _color(self, x, y):
        return self.table[(x, y)]


@dataclass(frozen=True)
class SierpinskiColoring(PairColoring):
    """For ``x < y``: color 0 iff ``code(x) < code(y)``, else color 1."""

    bound: Ordinal

    def in_domain(self, x):
        return x < self.bound

    def _color(self, x, y):
        return 0 if godel_code(x) < godel_code(y) else 1


@dataclass(frozen=True)
class DecomposableColoring(PairColoring):
    """Color 1 iff exactly one element of the pair lies below ``cut``."""

    alpha: Ordinal
    cut: Ordinal
    tail: Ordinal

    def in_domain(self, x):
        return x < self.alpha

    def _color(self, x, y):
        return 1 if (x < self.cut) != (y < self.cut) else 0


def color_of(C: PairColoring, x: OrdinalLike, y: OrdinalLike) -> int:
    x, y = as_ordinal(x), as_ordinal(y)
    if x == y:
        raise ValueError(f"cannot color the degenerate pair ({x}, {y})")
    for v in (x, y):
        if not C.in_domain(v):
            raise ValueError(f"{v} is outside the coloring's domain")
    return C._color(x, y) if x < y else C._color(y, x)


def color_slice(C: PairColoring, x: OrdinalLike, i: int, S: Iterable[OrdinalLike]) -> FinOrdSet:
    """``{y in S : y != x and C(x, y) == i}``."""
    x = as_ordinal(x)
    if not C.in_domain(x):
        raise ValueError(f"{x} is outside the coloring's domain")
    return FinOrdSet(y for y in FinOrdSet(S) if y != x and color_of(C, x, y) == i)


def is_homogeneous(C: PairColoring, S: Iterable[OrdinalLike], i: int) -> bool:
    return all(color_of(C, x, y) == i for x, y in itertools.combinations(FinOrdSet(S), 2))


def find_homogeneous(C: TableColoring, i: int, m: int) -> Optional[FinOrdSet]:
    """Lexicographically least ``i``-monochromatic subset of size ``m``."""
    ground = list(C.ground)
    if m <= 0:
        return FinOrdSet()

    def extend(chosen: List[Ordinal], start: int) -> Optional[List[Ordinal]]:
        if len(chosen) == m:
            return chosen
        for j in range(start, len(ground) - (m - len(chosen)) + 1):
            y = ground[j]
            if all(C._color(x, y) == i for x in chosen):
                found = extend(chosen + [y], j + 1)
                if found is not None:
                    return found
        return None

    found = extend([], 0)
    return None if found is None else FinOrdSet(found)


@dataclass
class ArrowResult:
    """Outcome of a finite arrow check.

    ``holds`` is True or False when settled and None when the search was
    skipped (above the cap with no witness).
    """

    n: int
    goals: Tuple[int, ...]
    holds: Optional[bool]
    witness: Optional[TableColoring] = None
    reason: str = ""

    def __bool__(self):
        return bool(self.holds)


def verify_counterexample(n: int, goals: Sequence[int], C: TableColoring) -> bool:
    """True iff ``C`` colors ``{0..n-1}`` with no ``i``-monochromatic set of size ``goals[i]``."""
    if list(C.ground) != [from_natural(v) for v in range(n)] or C.k != len(goals):
        return False
    return all(find_homogeneous(C, i, g) is None for i, g in enumerate(goals))


def check_arrow_finite(
    n: int,
    goals: Sequence[int],
    cap: int = DEFAULT_CAP,
    witness: Optional[TableColoring] = None,
) -> ArrowResult:
    """Decide ``n -> (goals[0], ..., goals[k-1])^2`` for finite ``n``.

    Depth-first search over colorings of the pairs of ``{0..n-1}``, pruning
    any branch that completes a monochromatic set of the target size.  A
    completed coloring is a counterexample.  Above ``cap`` the search is not
    run; a supplied ``witness`` can still refute the relation.
    """
    goals = tuple(int(g) for g in goals)
    if len(goals) < 1:
        raise ValueError("at least one goal is required")
    if n < 0 or any(g < 0 for g in goals):
        raise ValueError("n and goals must be non-negative")
    k = len(goals)
    if any(g <= 1 and g <= n for g in goals):
        return ArrowResult(n, goals, True, reason="degenerate goal")
    if witness is not None:
        if verify_counterexample(n, goals, witness):
            return ArrowResult(n, goals, False, witness, reason="supplied witness")
        raise ValueError("supplied witness is not a valid counterexample")
    if n > cap:
        return ArrowResult(n, goals, None, reason=f"n = {n} exceeds search cap {cap}")

    edges = list(itertools.combinations(range(n), 2))
    colors: Dict[Tuple[int, int], int] = {}
    # neighbors[c][v]: vertices joined to v by color c so far
    neighbors = [[set() for _ in range(n)] for _ in range(k)]

    def has_clique(cands: set, size: int, c: int) -> bool:
        if size <= 0:
            return True
        if len(cands) < size:
            return False
        for v in sorted(cands):
            if has_clique(cands & neighbors[c][v], size - 1, c):
                return True
            cands = cands - {v}
            if len(cands) < size:
                return False
        return False

    def completes(u: int, v: int, c: int) -> bool:
        # does edge (u, v) of color c finish a c-clique of size goals[c]?
        return has_clique(neighbors[c][u] & neighbors[c][v], goals[c] - 2, c)

    def search(idx: int) -> bool:
        if idx == len(edges):
            return True
        u, v = edges[idx]
        for c in range(k):
            if completes(u, v, c):
                continue
            colors[(u, v)] = c
            neighbors[c][u].add(v)
            neighbors[c][v].add(u)
            if search(idx + 1):
                return True
            neighbors[c][u].discard(v)
            neighbors[c][v].discard(u)
            del colors[(u, v)]
        return False

    if search(0):
        table = {(from_natural(u), from_natural(v)): c for (u, v), c in colors.items()}
        ground = FinOrdSet(range(n))
        return ArrowResult(n, goals, False, TableColoring(ground, table, k), reason="exhaustive search")
    return ArrowResult(n, goals, True, reason="exhaustive search")


def pentagon_coloring() -> TableColoring:
    """Color 1 iff the circular distance on ``{0..4}`` is 1."""
    return TableColoring.from_function(
        range(5), lambda x, y: 1 if (int(y) - int(x)) % 5 in (1, 4) else 0
    )


def sierpinski_coloring(bound: OrdinalLike) -> SierpinskiColoring:
    bound = as_ordinal(bound)
    if not bound > OMEGA:
        raise ValueError(f"bound must exceed w, got {bound}")
    return SierpinskiColoring(bound)


def decomposable_coloring(alpha: OrdinalLike) -> DecomposableColoring:
    alpha = as_ordinal(alpha)
    parts = split_decomposable(alpha)
    if parts is None:
        raise ValueError(f"{alpha} is indecomposable or below 2")
    return DecomposableColoring(alpha, *parts)


@dataclass
class ZeroHomogVerdict:
    homogeneous: bool
    side: Optional[str] = None  # "lower" or "upper"
    order_type: Optional[Ordinal] = None
    below_alpha: Optional[bool] = None
    message: str = ""


def check_zero_homog_segment(alpha: OrdinalLike, H: IntervalSet) -> ZeroHomogVerdict:
    """Show a 0-homogeneous interval set for the split coloring has type below ``alpha``."""
    C = decomposable_coloring(alpha)
    if not is_subset(H, IntervalSet([(ZERO, C.alpha)])):
        raise ValueError(f"{H} is not a subset of [0, {C.alpha})")
    lower = IntervalSet([(ZERO, C.cut)])
    upper = IntervalSet([(C.cut, C.alpha)])
    if is_subset(H, lower):
        side = "lower"
    elif is_subset(H, upper):
        side = "upper"
    else:
        return ZeroHomogVerdict(False, message=f"not 0-homogeneous: straddles {C.cut}")
    tp = order_type(H)
    return ZeroHomogVerdict(True, side, tp, tp < C.alpha)


@lru_cache(maxsize=64)
def _enumeration(beta: Ordinal, scan_bound: int) -> Tuple[Tuple[Ordinal, ...], bool]:
    # ordinals below beta in code order, scanning codes below scan_bound;
    # second field is True when the list is known to be complete
    size = to_natural(beta)
    found = []
    for code in range(scan_bound):
        a = godel_decode(code)
        if a is not None and a < beta:
            found.append(a)
            if size is not None and len(found) == size:
                return tuple(found), True
    return tuple(found), False


def repeat_enum(beta: OrdinalLike, m: int, scan_bound: int = DEFAULT_SCAN_BOUND) -> Ordinal:
    """The ``m``-th entry of an enumeration of ``beta`` repeating every element infinitely often.

    ``m`` is unpaired to ``(i, j)`` and the result is the ``i``-th ordinal
    below ``beta`` in code order; ``j`` only indexes the repetition.
    Indices past what the code scan reaches fall back to 0.  For finite
    ``beta`` the index ``i`` wraps around.
    """
    beta = as_ordinal(beta)
    if beta.is_zero:
        raise ValueError("beta must be positive")
    i, _ = unpair(m)
    size = to_natural(beta)
    if size is not None:
        elems, _ = _enumeration(beta, scan_bound)
        return elems[i % len(elems)] if elems else ZERO
    # scan lazily: only as far as index i needs
    bound = 64
    while True:
        elems, _ = _enumeration(beta, min(bound, scan_bound))
        if i < len(elems):
            return elems[i]
        if bound >= scan_bound:
            return ZERO
        bound *= 8
