"""Independent reference implementations used only by the tests.

Ordinals below w^w are held as ``{exponent: coefficient}`` dicts with
natural exponents.  Nothing here calls into ``ordpart`` arithmetic.
"""

import itertools

from ordpart.ordinal import Ordinal


def naive_from_dict(d):
    terms = [(e, c) for e, c in sorted(d.items(), reverse=True) if c]
    return Ordinal(terms)


def naive_cmp(a, b):
    # compare from the highest exponent down
    for e in sorted(set(a) | set(b), reverse=True):
        x, y = a.get(e, 0), b.get(e, 0)
        if x != y:
            return -1 if x < y else 1
    return 0


def naive_deg(a):
    live = [e for e, c in a.items() if c]
    return max(live) if live else None


def naive_add(a, b):
    """Term merge: keep a's terms above b's leading exponent, merge at it, append b."""
    d = naive_deg(b)
    if d is None:
        return {e: c for e, c in a.items() if c}
    out = {e: c for e, c in a.items() if c and e > d}
    out[d] = a.get(d, 0) + b[d]
    for e, c in b.items():
        if c and e < d:
            out[e] = c
    return out


def naive_repeat(a, n):
    out = {}
    for _ in range(n):
        out = naive_add(out, a)
    return out


def naive_mul(a, b):
    """Product by repeated addition for finite factors and the supremum rule.

    ``a * w^e`` for ``e >= 1`` is the supremum of ``a * n`` over
    ``n < w^e``, which is ``w^(deg(a) + e)``.
    """
    da = naive_deg(a)
    if da is None or naive_deg(b) is None:
        return {}
    out = {}
    for e in sorted((e for e, c in b.items() if c), reverse=True):
        m = b[e]
        piece = naive_repeat(a, m) if e == 0 else naive_repeat({da + e: 1}, m)
        out = naive_add(out, piece)
    return out


def grid(max_exp=2, max_coef=3):
    """All ``sum w^e * c_e`` with ``e <= max_exp`` and ``c_e <= max_coef``."""
    for coefs in itertools.product(range(max_coef + 1), repeat=max_exp + 1):
        yield {e: c for e, c in enumerate(coefs) if c}


def all_colorings(n, k=2):
    edges = list(itertools.combinations(range(n), 2))
    for colors in itertools.product(range(k), repeat=len(edges)):
        yield dict(zip(edges, colors))


def brute_arrow(n, goals):
    """n -> (goals)^2 by trying every coloring of the pairs of {0..n-1}."""
    k = len(goals)
    for col in all_colorings(n, k):
        found = False
        for i, g in enumerate(goals):
            for S in itertools.combinations(range(n), g):
                if all(col[p] == i for p in itertools.combinations(S, 2)):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True
