"""Ordinals below epsilon-zero in Cantor normal form.

An :class:`Ordinal` is an immutable tuple of ``(exponent, coefficient)``
terms with strictly decreasing exponents and positive integer
coefficients.  The empty tuple is 0.  Exponents are themselves ordinals,
so every value is a finite tree and the universe is exactly the ordinals
below epsilon-zero.

Every countable-ordinal side condition that appears in the partition
theorems is satisfied automatically here: the representable universe is
closed under ``+``, ``*`` and ``**`` and every member is countable.
"""

from __future__ import annotations

from functools import reduce
from math import isqrt
from numbers import Integral
from typing import Iterable, Optional, Sequence, Tuple, Union

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "OrdinalLike",
    "as_ordinal",
    "cmp",
    "add",
    "sub_left",
    "mul",
    "pow",
    "min_ord",
    "is_indecomposable",
    "split_decomposable",
    "decompose_strong",
    "godel_code",
    "godel_decode",
    "from_natural",
    "to_natural",
    "omega_pow",
    "pair",
    "unpair",
]

Term = Tuple["Ordinal", int]
OrdinalLike = Union["Ordinal", int]


class Ordinal:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[Tuple[OrdinalLike, int]] = ()):
        checked = []
        for exp, coef in terms:
            exp = as_ordinal(exp)
            if not isinstance(coef, Integral) or isinstance(coef, bool):
                raise TypeError(f"coefficient must be an int, got {coef!r}")
            if coef < 1:
                raise ValueError(f"coefficient must be >= 1, got {coef}")
            if checked and _cmp(checked[-1][0], exp) <= 0:
                raise ValueError("exponents must be strictly decreasing")
            checked.append((exp, int(coef)))
        self._terms: Tuple[Term, ...] = tuple(checked)
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: Tuple[Term, ...]) -> "Ordinal":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_finite(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not self._terms[0][0]._terms)

    @property
    def is_limit(self) -> bool:
        return bool(self._terms) and bool(self._terms[-1][0]._terms)

    @property
    def leading_exponent(self) -> "Ordinal":
        """Exponent of the leading term; 0 for the ordinal 0 by convention."""
        return self._terms[0][0] if self._terms else ZERO

    def __eq__(self, other):
        if isinstance(other, Ordinal):
            return self._terms == other._terms
        if isinstance(other, Integral) and not isinstance(other, bool):
            return other >= 0 and self._terms == from_natural(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Ordinal", self._terms))
        return self._hash

    def _coerce(self, other) -> Optional["Ordinal"]:
        try:
            return as_ordinal(other)
        except (TypeError, ValueError):
            return None

    def __lt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else _cmp(self, o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else _cmp(self, o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else _cmp(self, o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else _cmp(self, o) >= 0

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else add(self, o)

    def __radd__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else add(o, self)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else mul(o, self)

    def __pow__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else pow(self, o)

    def __rpow__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else pow(o, self)

    def __bool__(self):
        return bool(self._terms)

    def __int__(self):
        n = to_natural(self)
        if n is None:
            raise ValueError(f"{self} is not finite")
        return n

    def __str__(self):
        from .expr import render

        return render(self)

    def __repr__(self):
        return f"Ordinal({str(self)!r})"


def as_ordinal(x: OrdinalLike) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, Integral) and not isinstance(x, bool):
        return from_natural(int(x))
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


def from_natural(n: int) -> Ordinal:
    if n < 0:
        raise ValueError(f"natural number expected, got {n}")
    if n == 0:
        return ZERO
    return Ordinal._raw(((ZERO, int(n)),))


def to_natural(a: Ordinal) -> Optional[int]:
    if not a._terms:
        return 0
    if a.is_finite:
        return a._terms[0][1]
    return None


def omega_pow(e: OrdinalLike, coef: int = 1) -> Ordinal:
    """``omega ** e * coef`` as a single term."""
    if coef == 0:
        return ZERO
    return Ordinal._raw(((as_ordinal(e), coef),))


ZERO = Ordinal._raw(())
ONE = Ordinal._raw(((ZERO, 1),))
OMEGA = Ordinal._raw(((ONE, 1),))


def _cmp(a: Ordinal, b: Ordinal) -> int:
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a._terms, b._terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a._terms), len(b._terms)
    return (la > lb) - (la < lb)


def cmp(a: OrdinalLike, b: OrdinalLike) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return _cmp(as_ordinal(a), as_ordinal(b))


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    if not b._terms:
        return a
    if not a._terms:
        return b
    lead_exp, lead_coef = b._terms[0]
    kept = []
    for exp, coef in a._terms:
        c = _cmp(exp, lead_exp)
        if c > 0:
            kept.append((exp, coef))
        elif c == 0:
            kept.append((exp, coef + lead_coef))
            return Ordinal._raw(tuple(kept) + b._terms[1:])
        else:
            break
    return Ordinal._raw(tuple(kept) + b._terms)


def sub_left(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """The unique ``g`` with ``a + g == b``; requires ``a <= b``."""
    a, b = as_ordinal(a), as_ordinal(b)
    if _cmp(a, b) > 0:
        raise ValueError(f"left subtraction needs a <= b, got a={a}, b={b}")
    ta, tb = a._terms, b._terms
    i = 0
    while i < len(ta) and ta[i] == tb[i]:
        i += 1
    if i == len(ta):
        return Ordinal._raw(tb[i:])
    # first differing position: same exponent with a smaller coefficient, or
    # a's exponent smaller; everything of a from here on is absorbed
    eb, cb = tb[i]
    ea, ca = ta[i]
    if _cmp(ea, eb) == 0:
        return Ordinal._raw(((eb, cb - ca),) + tb[i + 1:])
    return Ordinal._raw(tb[i:])


def _mul_term(a: Ordinal, exp: Ordinal, coef: int) -> Ordinal:
    # a * (omega**exp * coef), a nonzero
    lead_exp, lead_coef = a._terms[0]
    if not exp._terms:
        return Ordinal._raw(((lead_exp, lead_coef * coef),) + a._terms[1:])
    return Ordinal._raw(((add(lead_exp, exp), coef),))


def mul(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    if not a._terms or not b._terms:
        return ZERO
    result = ZERO
    for exp, coef in b._terms:
        result = add(result, _mul_term(a, exp, coef))
    return result


def _pow_natural(a: Ordinal, n: int) -> Ordinal:
    result, base = ONE, a
    # right-to-left binary method is fine: powers of one base commute
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def pow(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Ordinal exponentiation ``a ** b`` with ``0 ** 0 == 1``."""
    a, b = as_ordinal(a), as_ordinal(b)
    if not b._terms:
        return ONE
    if not a._terms:
        return ZERO
    if a == ONE:
        return ONE
    if b.is_finite:
        if a.is_finite:
            return from_natural(a._terms[0][1] ** b._terms[0][1])
        return _pow_natural(a, b._terms[0][1])
    # b = limit part + finite tail
    if b._terms[-1][0]._terms:
        limit, n = b, 0
    else:
        limit, n = Ordinal._raw(b._terms[:-1]), b._terms[-1][1]
    if a.is_finite:
        # k ** (omega * d) == omega ** d, with d = sum omega**(e - 1) * c
        d = Ordinal._raw(tuple((sub_left(ONE, e), c) for e, c in limit._terms))
        head = omega_pow(d)
    else:
        head = omega_pow(mul(a.leading_exponent, limit))
    return mul(head, _pow_natural(a, n)) if n else head


def min_ord(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    return a if _cmp(a, b) <= 0 else b


def is_indecomposable(a: OrdinalLike) -> bool:
    """True iff ``a`` is a power of omega (1 included, 0 excluded)."""
    a = as_ordinal(a)
    return len(a._terms) == 1 and a._terms[0][1] == 1


def decompose_strong(t: OrdinalLike) -> list:
    """Indecomposable summands of ``t`` in non-increasing order."""
    t = as_ordinal(t)
    return [omega_pow(e) for e, c in t._terms for _ in range(c)]


def split_decomposable(a: OrdinalLike) -> Optional[Tuple[Ordinal, Ordinal]]:
    """Split ``a`` as ``b + c`` with ``b, c < a``, or None if impossible.

    ``c`` is the last indecomposable summand and ``b`` is everything
    before it.
    """
    a = as_ordinal(a)
    if not a._terms or is_indecomposable(a):
        return None
    *head, (exp, coef) = a._terms
    if coef > 1:
        head.append((exp, coef - 1))
    return Ordinal._raw(tuple(head)), omega_pow(exp)


# Cantor pairing: a bijection N x N -> N.
def pair(x: int, y: int) -> int:
    s = x + y
    return s * (s + 1) // 2 + y


def unpair(z: int) -> Tuple[int, int]:
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def godel_code(a: OrdinalLike) -> int:
    """Injective code of ``a`` as a natural number.

    ``code(0) = 0`` and ``code(w**e * c + rest) = 1 + pair(pair(code(e), c - 1), code(rest))``.
    """
    a = as_ordinal(a)
    code = 0
    for exp, coef in reversed(a._terms):
        code = 1 + pair(pair(godel_code(exp), coef - 1), code)
    return code


def godel_decode(n: int) -> Optional[Ordinal]:
    """Inverse of :func:`godel_code`; None when ``n`` codes a non-canonical tree."""
    if n < 0:
        return None
    terms = []
    while n:
        head, n = unpair(n - 1)
        exp_code, coef = unpair(head)
        exp = godel_decode(exp_code)
        if exp is None:
            return None
        if terms and _cmp(terms[-1][0], exp) <= 0:
            return None
        terms.append((exp, coef + 1))
    return Ordinal._raw(tuple(terms))


def sum_ordinals(items: Sequence[OrdinalLike]) -> Ordinal:
    return reduce(add, items, ZERO)
