"""Derivations of pair partition statements ``alpha -> (g0, g1)^2``.

Every rule application records the side conditions it relied on, with the
concrete ordinals involved, so that :func:`verify_derivation` can replay
each node using ordinal arithmetic alone.

The product rule (``em_step``) is taken as a trusted inference: from
``alpha -> (k, gamma)`` with ``alpha`` indecomposable and finite ``k >= 2``
it concludes ``alpha*beta -> (2k, min(gamma, w*beta))`` for any countable
``beta > 0``.  Countability holds for every representable ordinal.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    OrdinalLike,
    add,
    as_ordinal,
    from_natural,
    is_indecomposable,
    min_ord,
    mul,
    pow,
)

__all__ = [
    "Statement",
    "Evidence",
    "Derivation",
    "DerivationError",
    "VerifyReport",
    "rule_degenerate",
    "rule_trivial_pair",
    "rule_swap",
    "rule_monotone",
    "rule_em_step",
    "rule_normalize",
    "em_headline",
    "larson_instance",
    "verify_derivation",
]


class DerivationError(ValueError):
    """A rule was applied with a side condition that does not hold."""

    def __init__(self, rule: str, failed: Sequence[str]):
        self.rule = rule
        self.failed = list(failed)
        super().__init__(f"{rule}: side condition failed: {', '.join(failed)}")


@dataclass(frozen=True)
class Statement:
    source: Ordinal
    goals: Tuple[Ordinal, Ordinal]

    def __post_init__(self):
        object.__setattr__(self, "source", as_ordinal(self.source))
        goals = tuple(as_ordinal(g) for g in self.goals)
        if len(goals) != 2:
            raise ValueError(f"a statement has exactly two goals, got {len(goals)}")
        object.__setattr__(self, "goals", goals)

    @property
    def exponent(self) -> int:
        return 2

    def swapped(self) -> "Statement":
        return Statement(self.source, (self.goals[1], self.goals[0]))

    def __str__(self):
        return f"{self.source} -> ({self.goals[0]}, {self.goals[1]})"


@dataclass(frozen=True)
class Evidence:
    condition: str
    values: Tuple[Tuple[str, Ordinal], ...]
    ok: bool

    @classmethod
    def check(cls, condition: str, ok: bool, **values: OrdinalLike) -> "Evidence":
        return cls(condition, tuple((k, as_ordinal(v)) for k, v in values.items()), bool(ok))

    def value(self, name: str) -> Ordinal:
        return dict(self.values)[name]


@dataclass(frozen=True)
class Derivation:
    conclusion: Statement
    rule: str
    premises: Tuple["Derivation", ...] = ()
    params: Tuple[Tuple[str, Ordinal], ...] = ()
    evidence: Tuple[Evidence, ...] = ()

    @property
    def root(self) -> Statement:
        return self.conclusion

    @property
    def depth(self) -> int:
        return 1 + max((p.depth for p in self.premises), default=0)

    def param(self, name: str) -> Ordinal:
        return dict(self.params)[name]

    def nodes(self, path: str = "root"):
        """Yield ``(path, node)`` pairs, parents before premises."""
        yield path, self
        for i, p in enumerate(self.premises):
            yield from p.nodes(f"{path}.{i}")

    def summary(self) -> str:
        lines = []
        for path, node in self.nodes():
            indent = "  " * path.count(".")
            lines.append(f"{indent}{node.rule}: {node.conclusion}")
        return "\n".join(lines)


# Each checker takes (conclusion, premises, params) and returns the expected
# evidence plus the conclusion the rule forces (None if the rule leaves the
# conclusion free and constrains it only through evidence).
Checker = Callable[[Statement, Sequence[Derivation], Dict[str, Ordinal]], Tuple[List[Evidence], Optional[Statement]]]
_ARITY: Dict[str, int] = {}
_CHECKERS: Dict[str, Checker] = {}


def _rule(name: str, arity: int):
    def deco(fn: Checker) -> Checker:
        _ARITY[name] = arity
        _CHECKERS[name] = fn
        return fn

    return deco


@_rule("degenerate", 0)
def _check_degenerate(concl, premises, params):
    src = concl.source
    for i, g in enumerate(concl.goals):
        if g <= ONE and src >= g:
            return [
                Evidence.check(f"goal {i} <= 1", True, goal=g),
                Evidence.check(f"source >= goal {i}", True, source=src, goal=g),
            ], None
    return [Evidence.check("some goal <= 1 and <= source", False, source=src,
                           goal0=concl.goals[0], goal1=concl.goals[1])], None


@_rule("trivial_pair", 0)
def _check_trivial_pair(concl, premises, params):
    src = concl.source
    return [Evidence.check("source >= 2", src >= 2, source=src)], Statement(src, (2, src))


@_rule("swap", 1)
def _check_swap(concl, premises, params):
    return [], premises[0].conclusion.swapped()


@_rule("monotone", 1)
def _check_monotone(concl, premises, params):
    prev = premises[0].conclusion
    ev = [Evidence.check("source grows", concl.source >= prev.source,
                         source=concl.source, premise_source=prev.source)]
    for i in range(2):
        ev.append(Evidence.check(f"monotone shrink: goal {i}", concl.goals[i] <= prev.goals[i],
                                 goal=concl.goals[i], premise_goal=prev.goals[i]))
    return ev, None


@_rule("em_step", 1)
def _check_em_step(concl, premises, params):
    prev = premises[0].conclusion
    alpha, (k, gamma) = prev.source, prev.goals
    beta = params.get("beta")
    if beta is None:
        return [Evidence.check("parameter beta present", False)], None
    ev = [
        Evidence.check("k finite", k.is_finite, k=k),
        Evidence.check("k >= 2", k >= 2, k=k),
        Evidence.check("indecomposable alpha", is_indecomposable(alpha), alpha=alpha),
        Evidence.check("beta > 0", beta > ZERO, beta=beta),
        # every representable ordinal is below epsilon_0, hence countable
        Evidence.check("beta countable (below epsilon_0)", True, beta=beta),
    ]
    expected = Statement(mul(alpha, beta), (mul(2, k), min_ord(gamma, mul(OMEGA, beta))))
    return ev, expected


def _headline_source(nu: Ordinal, n: Ordinal) -> Ordinal:
    return pow(OMEGA, add(1, mul(nu, n)))


@_rule("normalize", 1)
def _check_normalize(concl, premises, params):
    prev = premises[0].conclusion
    nu, n = params.get("nu"), params.get("n")
    if nu is None or n is None or not n.is_finite:
        return [Evidence.check("parameters nu and finite n present", False)], None
    n_next = add(n, 1)
    source_lhs = mul(_headline_source(nu, n), pow(OMEGA, nu))
    source_rhs = _headline_source(nu, n_next)
    goal_lhs = min_ord(pow(OMEGA, add(1, nu)), mul(OMEGA, pow(OMEGA, nu)))
    goal_rhs = pow(OMEGA, add(1, nu))
    count_lhs = mul(2, pow(2, n))
    count_rhs = pow(2, n_next)
    ev = [
        Evidence.check("1 + nu <= nu + 1", add(1, nu) <= add(nu, 1),
                       left=add(1, nu), right=add(nu, 1)),
        Evidence.check("w^(1+nu*n) * w^nu = w^(1+nu*(n+1))", source_lhs == source_rhs,
                       lhs=source_lhs, rhs=source_rhs),
        Evidence.check("min(w^(1+nu), w * w^nu) = w^(1+nu)", goal_lhs == goal_rhs,
                       lhs=goal_lhs, rhs=goal_rhs),
        Evidence.check("2 * 2^n = 2^(n+1)", count_lhs == count_rhs, lhs=count_lhs, rhs=count_rhs),
        Evidence.check("premise is the product instance",
                       prev == Statement(source_lhs, (count_lhs, goal_lhs)),
                       source=prev.source, goal0=prev.goals[0], goal1=prev.goals[1]),
    ]
    return ev, Statement(source_rhs, (count_rhs, goal_rhs))


def _build(rule: str, concl: Optional[Statement], premises: Sequence[Derivation] = (),
           **params: OrdinalLike) -> Derivation:
    p = {k: as_ordinal(v) for k, v in params.items()}
    probe = concl if concl is not None else Statement(ZERO, (ZERO, ZERO))
    evidence, forced = _CHECKERS[rule](probe, premises, p)
    if concl is None:
        if forced is None:
            raise ValueError(f"rule {rule} needs an explicit conclusion")
        concl = forced
        evidence, _ = _CHECKERS[rule](concl, premises, p)
    failed = [e.condition for e in evidence if not e.ok]
    if failed:
        raise DerivationError(rule, failed)
    if forced is not None and forced != concl:
        raise DerivationError(rule, [f"conclusion must be {forced}"])
    return Derivation(concl, rule, tuple(premises), tuple(p.items()), tuple(evidence))


def rule_degenerate(alpha: OrdinalLike, goals: Sequence[OrdinalLike]) -> Derivation:
    """``alpha -> goals`` when some goal is at most 1 and at most ``alpha``."""
    return _build("degenerate", Statement(alpha, tuple(goals)))


def rule_trivial_pair(alpha: OrdinalLike) -> Derivation:
    """``alpha -> (2, alpha)`` for ``alpha >= 2``."""
    return _build("trivial_pair", Statement(alpha, (2, alpha)))


def rule_swap(d: Derivation) -> Derivation:
    return _build("swap", None, [d])


def rule_monotone(d: Derivation, alpha: OrdinalLike, goals: Sequence[OrdinalLike]) -> Derivation:
    """Enlarge the source and/or shrink the goals of a derived statement."""
    return _build("monotone", Statement(alpha, tuple(goals)), [d])


def rule_em_step(premise: Derivation, beta: OrdinalLike) -> Derivation:
    """From ``alpha -> (k, gamma)`` derive ``alpha*beta -> (2k, min(gamma, w*beta))``."""
    return _build("em_step", None, [premise], beta=beta)


def rule_normalize(premise: Derivation, nu: OrdinalLike, n: int) -> Derivation:
    return _build("normalize", None, [premise], nu=nu, n=n)


def em_headline(nu: OrdinalLike, n: int) -> Derivation:
    """Derive ``w^(1+nu*n) -> (2^n, w^(1+nu))`` by induction on ``n``."""
    nu = as_ordinal(nu)
    if n < 0:
        raise ValueError("n must be a natural number")
    top = pow(OMEGA, add(1, nu))
    if n == 0:
        return rule_degenerate(_headline_source(nu, ZERO), (1, top))
    d = rule_trivial_pair(top)
    beta = pow(OMEGA, nu)
    for m in range(1, n):
        d = rule_normalize(rule_em_step(d, beta), nu, m)
    return d


def larson_instance(n: int, k: int) -> Derivation:
    """Derive ``w^(n*k) -> (w^n, k)`` for natural ``n`` and ``k``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be natural numbers")
    source = pow(OMEGA, n * k)
    goals = (pow(OMEGA, n), from_natural(k))
    if n == 0 or k == 0:
        return rule_degenerate(source, goals)
    d = em_headline(n - 1, k - 1)
    d = rule_monotone(d, source, (k, goals[0]))
    return rule_swap(d)


@dataclass
class VerifyReport:
    ok: bool
    failures: List[Tuple[str, str]] = field(default_factory=list)
    checked: int = 0

    def __bool__(self):
        return self.ok


def _check_node(node: Derivation) -> List[str]:
    if node.rule not in _CHECKERS:
        return [f"unknown rule {node.rule!r}"]
    if len(node.premises) != _ARITY[node.rule]:
        return [f"rule {node.rule} takes {_ARITY[node.rule]} premise(s), got {len(node.premises)}"]
    expected, forced = _CHECKERS[node.rule](node.conclusion, node.premises, dict(node.params))
    problems = [f"side condition failed: {e.condition}" for e in expected if not e.ok]
    if tuple(expected) != node.evidence:
        recorded = {e.condition: e for e in node.evidence}
        bad = [e.condition for e in expected if recorded.get(e.condition) != e]
        extra = [c for c in recorded if c not in {e.condition for e in expected}]
        problems.append(f"recorded evidence does not match recomputation: {', '.join(bad + extra)}")
    if forced is not None and forced != node.conclusion:
        problems.append(f"conclusion {node.conclusion} does not follow; rule gives {forced}")
    return problems


def verify_derivation(d: Derivation) -> VerifyReport:
    """Re-check every node of ``d``; failures carry dotted node paths like ``root.0``."""
    report = VerifyReport(True)
    for path, node in d.nodes():
        report.checked += 1
        for msg in _check_node(node):
            report.failures.append((path, msg))
    report.ok = not report.failures
    return report


def tamper(d: Derivation, path: str, **changes) -> Derivation:
    """Copy of ``d`` with the node at ``path`` replaced via :func:`dataclasses.replace`."""
    parts = path.split(".")
    if parts[0] != "root":
        raise ValueError(f"bad node path {path!r}")

    def go(node: Derivation, rest: List[str]) -> Derivation:
        if not rest:
            return replace(node, **changes)
        i = int(rest[0])
        prem = list(node.premises)
        prem[i] = go(prem[i], rest[1:])
        return replace(node, premises=tuple(prem))

    return go(d, parts[1:])
