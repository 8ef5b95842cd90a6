"""Sets of ordinals as finite unions of half-open intervals ``[lo, hi)``."""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .ordinal import (
    ONE,
    ZERO,
    Ordinal,
    OrdinalLike,
    add,
    as_ordinal,
    decompose_strong,
    is_indecomposable,
    sub_left,
    sum_ordinals,
)

__all__ = [
    "IntervalSet",
    "PreconditionError",
    "singleton",
    "union",
    "intersect",
    "difference",
    "contains",
    "is_subset",
    "order_type",
    "sets_less",
    "image",
    "trim_above",
    "segment_partition",
    "strong_decompose_set",
    "parse_interval_set",
]

Interval = Tuple[Ordinal, Ordinal]


class PreconditionError(ValueError):
    """A named hypothesis of an operation does not hold."""

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(f"{condition}: {message}")


class IntervalSet:
    """Immutable, normalized union of half-open intervals.

    Intervals are kept sorted, pairwise disjoint and non-adjacent.
    """

    __slots__ = ("_intervals",)

    def __init__(self, intervals: Iterable[Tuple[OrdinalLike, OrdinalLike]] = ()):
        self._intervals: Tuple[Interval, ...] = _normalize(
            (as_ordinal(lo), as_ordinal(hi)) for lo, hi in intervals
        )

    @classmethod
    def range(cls, lo: OrdinalLike, hi: OrdinalLike) -> "IntervalSet":
        return cls([(lo, hi)])

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return self._intervals

    def __iter__(self):
        return iter(self._intervals)

    def __len__(self):
        return len(self._intervals)

    def __bool__(self):
        return bool(self._intervals)

    def __eq__(self, other):
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self):
        return hash(self._intervals)

    def __contains__(self, x):
        return contains(self, x)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    @property
    def min(self) -> Optional[Ordinal]:
        return self._intervals[0][0] if self._intervals else None

    @property
    def sup(self) -> Optional[Ordinal]:
        """Least strict upper bound, i.e. the last ``hi``."""
        return self._intervals[-1][1] if self._intervals else None

    def __str__(self):
        return format_interval_set(self)

    def __repr__(self):
        return f"IntervalSet({str(self)!r})"


def _normalize(intervals: Iterable[Interval]) -> Tuple[Interval, ...]:
    items = sorted((iv for iv in intervals if iv[0] < iv[1]), key=lambda iv: iv[0])
    out: List[Interval] = []
    for lo, hi in items:
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return tuple(out)


def singleton(x: OrdinalLike) -> IntervalSet:
    x = as_ordinal(x)
    return IntervalSet([(x, add(x, ONE))])


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return IntervalSet(a.intervals + b.intervals)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out = []
    i = j = 0
    A, B = a.intervals, b.intervals
    while i < len(A) and j < len(B):
        lo = max(A[i][0], B[j][0])
        hi = min(A[i][1], B[j][1])
        if lo < hi:
            out.append((lo, hi))
        if A[i][1] < B[j][1]:
            i += 1
        else:
            j += 1
    return IntervalSet(out)


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out = []
    for lo, hi in a.intervals:
        cur = lo
        for blo, bhi in b.intervals:
            if bhi <= cur:
                continue
            if blo >= hi:
                break
            if blo > cur:
                out.append((cur, blo))
            cur = max(cur, bhi)
            if cur >= hi:
                break
        if cur < hi:
            out.append((cur, hi))
    return IntervalSet(out)


def contains(a: IntervalSet, x: OrdinalLike) -> bool:
    x = as_ordinal(x)
    return any(lo <= x < hi for lo, hi in a.intervals)


def is_subset(a: IntervalSet, b: IntervalSet) -> bool:
    return not difference(a, b)


def order_type(a: IntervalSet) -> Ordinal:
    return sum_ordinals([sub_left(lo, hi) for lo, hi in a.intervals])


def sets_less(a: IntervalSet, b: IntervalSet) -> bool:
    """Every element of ``a`` lies below every element of ``b``."""
    if not a or not b:
        return True
    return a.sup <= b.min


def image(d: IntervalSet, start: OrdinalLike, stop: OrdinalLike) -> IntervalSet:
    """Elements of ``d`` whose positions in ``d`` lie in ``[start, stop)``.

    Positions are taken along the order isomorphism between ``order_type(d)``
    and ``d``.
    """
    start, stop = as_ordinal(start), as_ordinal(stop)
    out = []
    offset = ZERO
    for lo, hi in d.intervals:
        end = add(offset, sub_left(lo, hi))
        a, b = max(start, offset), min(stop, end)
        if a < b:
            out.append((add(lo, sub_left(offset, a)), add(lo, sub_left(offset, b))))
        offset = end
        if offset >= stop:
            break
    return IntervalSet(out)


def trim_above(
    A: IntervalSet, A1: IntervalSet, x: OrdinalLike, alpha: OrdinalLike
) -> IntervalSet:
    """The part of ``A1`` strictly above ``x``.

    When ``alpha`` is indecomposable and both ``A`` and ``A1`` have order
    type ``alpha``, removing the initial segment up to ``x`` leaves a set
    that still has order type ``alpha``.
    """
    x, alpha = as_ordinal(x), as_ordinal(alpha)
    if not is_indecomposable(alpha):
        raise PreconditionError("indecomposable alpha", f"alpha = {alpha} is not a power of w")
    if not alpha > ONE:
        raise PreconditionError("alpha > 1", f"alpha = {alpha}")
    if order_type(A) != alpha:
        raise PreconditionError("tp A = alpha", f"tp A = {order_type(A)}, alpha = {alpha}")
    if not is_subset(A1, A):
        raise PreconditionError("A1 subset of A", f"{A1} is not contained in {A}")
    if order_type(A1) != alpha:
        raise PreconditionError("tp A1 = alpha", f"tp A1 = {order_type(A1)}, alpha = {alpha}")
    if not contains(A, x):
        raise PreconditionError("x in A", f"{x} is not in {A}")
    above = add(x, ONE)
    return IntervalSet((max(lo, above), hi) for lo, hi in A1.intervals)


def segment_partition(beta: OrdinalLike, F: Sequence[OrdinalLike]) -> List[IntervalSet]:
    """Cut ``[0, beta)`` at the points of ``F``.

    Returns ``[D0, {F[0]}, D1, ..., {F[-1]}, Dp]``; the gaps ``Di`` may be
    empty.
    """
    beta = as_ordinal(beta)
    points = [as_ordinal(v) for v in F]
    for i, v in enumerate(points):
        if not v < beta:
            raise ValueError(f"F[{i}] = {v} is not below beta = {beta}")
        if i and not points[i - 1] < v:
            raise ValueError(f"F is not strictly increasing at index {i}")
    pieces = []
    lo = ZERO
    for v in points:
        pieces.append(IntervalSet([(lo, v)]))
        pieces.append(singleton(v))
        lo = add(v, ONE)
    pieces.append(IntervalSet([(lo, beta)]))
    return pieces


def strong_decompose_set(D: IntervalSet, beta: OrdinalLike) -> List[IntervalSet]:
    """Split ``D`` into consecutive pieces of indecomposable order type.

    The piece types, in order, are the Cantor normal form summands of
    ``order_type(D)``.
    """
    beta = as_ordinal(beta)
    if not is_subset(D, IntervalSet([(ZERO, beta)])):
        raise ValueError(f"{D} is not a subset of [0, {beta})")
    pieces = []
    pos = ZERO
    for summand in decompose_strong(order_type(D)):
        nxt = add(pos, summand)
        pieces.append(image(D, pos, nxt))
        pos = nxt
    return pieces


def _scan_until(body: str, pos: int, stop: str) -> int:
    depth = 0
    while pos < len(body):
        ch = body[pos]
        if ch == "(":
            depth += 1
        elif ch == ")" and depth:
            depth -= 1
        elif ch == stop and depth == 0:
            return pos
        pos += 1
    raise ValueError(f"unterminated range, expected {stop!r}: {body!r}")


def parse_interval_set(text: str) -> IntervalSet:
    """Parse ``[a,b)+[c,d)``; ``{}`` or an empty string is the empty set."""
    from .expr import parse_ordinal

    body = text.strip()
    if body in ("", "{}", "\u2205"):
        return IntervalSet()
    intervals = []
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos >= len(body) or body[pos] != "[":
            raise ValueError(f"expected '[' at offset {pos}: {body!r}")
        comma = _scan_until(body, pos + 1, ",")
        close = _scan_until(body, comma + 1, ")")
        intervals.append((parse_ordinal(body[pos + 1:comma]), parse_ordinal(body[comma + 1:close])))
        pos = close + 1
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos == len(body):
            break
        if body[pos] != "+":
            raise ValueError(f"expected '+' between ranges at offset {pos}: {body!r}")
        pos += 1
    return IntervalSet(intervals)


def format_interval_set(a: IntervalSet, unicode: bool = False) -> str:
    from .expr import render

    if not a:
        return "{}"
    return "+".join(f"[{render(lo, unicode)},{render(hi, unicode)})" for lo, hi in a.intervals)
