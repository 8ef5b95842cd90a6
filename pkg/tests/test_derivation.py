import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import ordinals
from ordpart.derivation import (
    DerivationError,
    Evidence,
    Statement,
    em_headline,
    larson_instance,
    rule_degenerate,
    rule_em_step,
    rule_monotone,
    rule_swap,
    rule_trivial_pair,
    tamper,
    verify_derivation,
)
from ordpart.expr import parse_ordinal as P
from ordpart.ordinal import OMEGA, add, min_ord, mul, pow

w = OMEGA


def stmt(source, *goals):
    return Statement(source, goals)


class TestBaseRules:
    def test_degenerate(self):
        assert rule_degenerate(w, [1, w ** 5]).root == stmt(w, 1, w ** 5)
        assert rule_degenerate(5, [0, 2]).root == stmt(5, 0, 2)
        with pytest.raises(DerivationError):
            rule_degenerate(w, [2, 2])
        with pytest.raises(DerivationError):
            rule_degenerate(0, [1, 5])

    def test_trivial_pair(self):
        assert rule_trivial_pair(w).root == stmt(w, 2, w)
        assert rule_trivial_pair(w ** 2).root == stmt(w ** 2, 2, w ** 2)
        with pytest.raises(DerivationError):
            rule_trivial_pair(1)

    def test_swap(self):
        d = rule_trivial_pair(w)
        assert rule_swap(d).root == stmt(w, w, 2)
        assert rule_swap(rule_swap(d)).root == d.root
        six = rule_monotone(em_headline(1, 2), w ** 6, (3, w ** 2))
        assert rule_swap(six).root == stmt(w ** 6, w ** 2, 3)

    def test_monotone(self):
        d = rule_trivial_pair(w)
        assert rule_monotone(d, w ** 2, (2, w)).root == stmt(w ** 2, 2, w)
        assert rule_monotone(d, w, (2, 5)).root == stmt(w, 2, 5)
        with pytest.raises(DerivationError):
            rule_monotone(d, 5, (2, 5))
        with pytest.raises(DerivationError):
            rule_monotone(d, w, (3, w))
        e = rule_monotone(d, w, (2, 5))
        assert any(ev.condition.startswith("monotone shrink") for ev in e.evidence)


class TestEmStep:
    def test_from_omega(self):
        d = rule_em_step(rule_trivial_pair(w), w)
        # alpha*beta = w*w; 2k = 4; min(w, w*w) = w
        assert d.root == stmt(w ** 2, 4, w)
        assert verify_derivation(d)

    def test_headline_successor_instance(self):
        premise = em_headline(1, 2)
        assert premise.root == stmt(w ** 3, 4, w ** 2)
        d = rule_em_step(premise, w)
        assert d.root == stmt(w ** 4, 8, w ** 2)

    def test_side_conditions(self):
        with pytest.raises(DerivationError, match="indecomposable alpha"):
            rule_em_step(rule_trivial_pair(w + 1), w)
        with pytest.raises(DerivationError, match="k >= 2"):
            rule_em_step(rule_degenerate(w, (1, w)), w)
        with pytest.raises(DerivationError, match="beta > 0"):
            rule_em_step(rule_trivial_pair(w), 0)
        with pytest.raises(DerivationError, match="k finite"):
            rule_em_step(rule_swap(rule_trivial_pair(w)), w)

    def test_evidence_records_values(self):
        d = rule_em_step(rule_trivial_pair(w), w)
        ev = {e.condition: e for e in d.evidence}
        assert ev["indecomposable alpha"].value("alpha") == w
        assert ev["beta countable (below epsilon_0)"].ok


class TestHeadline:
    def test_nu_one_n_two(self):
        d = em_headline(1, 2)
        assert d.root == stmt(w ** 3, 4, w ** 2)
        assert d.depth == 3
        assert verify_derivation(d)

    def test_base_cases(self):
        assert em_headline(0, 0).root == stmt(w, 1, w)
        assert em_headline(0, 0).rule == "degenerate"
        d = em_headline(w, 1)
        # 1 + w = w, so the source is w^w
        assert add(1, w) == w
        assert d.root == stmt(w ** w, 2, w ** w)

    @given(ordinals(depth=2), st.integers(0, 6))
    @settings(max_examples=60, deadline=None)
    def test_source_and_soundness(self, nu, n):
        d = em_headline(nu, n)
        assert d.root.source == pow(w, add(1, mul(nu, n)))
        assert d.root.goals == (pow(2, n), pow(w, add(1, nu)))
        assert verify_derivation(d)

    @given(ordinals(depth=2), st.integers(0, 6))
    @settings(max_examples=60)
    def test_arithmetic_identities(self, nu, n):
        assert mul(pow(w, add(1, mul(nu, n))), pow(w, nu)) == pow(w, add(1, mul(nu, n + 1)))
        assert min_ord(pow(w, add(1, nu)), mul(w, pow(w, nu))) == pow(w, add(1, nu))


class TestPowerInstance:
    def test_two_three(self):
        d = larson_instance(2, 3)
        assert d.root == stmt(w ** 6, w ** 2, 3)
        assert verify_derivation(d)
        # via w^3 -> (4, w^2): source enlarged and goal 4 shrunk to 3
        assert d.premises[0].premises[0].root == stmt(w ** 3, 4, w ** 2)

    def test_trivial_cases(self):
        assert larson_instance(0, 7).root == stmt(1, 1, 7)
        assert larson_instance(3, 0).root == stmt(1, w ** 3, 0)
        assert larson_instance(0, 7).rule == larson_instance(3, 0).rule == "degenerate"

    @pytest.mark.parametrize("n", range(6))
    @pytest.mark.parametrize("k", range(6))
    def test_grid(self, n, k):
        d = larson_instance(n, k)
        assert d.root == stmt(pow(w, n * k), pow(w, n), k)
        assert verify_derivation(d)


class TestVerify:
    def test_forged_goal(self):
        d = em_headline(1, 2)
        bad = tamper(d, "root.0", conclusion=stmt(w ** 3, 5, w ** 2))
        report = verify_derivation(bad)
        assert not report
        assert "root.0" in {p for p, _ in report.failures}

    def test_recorded_alpha_decomposable(self):
        d = em_headline(1, 2)
        # premise of the em_step node now claims w*2 -> (2, w*2), itself a valid trivial pair
        bad = tamper(d, "root.0.0", conclusion=stmt(w * 2, 2, w * 2),
                     evidence=(Evidence.check("source >= 2", True, source=w * 2),))
        report = verify_derivation(bad)
        assert not report
        at_step = [m for p, m in report.failures if p == "root.0"]
        assert "side condition failed: indecomposable alpha" in at_step
        assert "root.0.0" not in {p for p, _ in report.failures}

    def test_forged_evidence_flag(self):
        d = rule_em_step(rule_trivial_pair(w), w)
        ev = tuple(Evidence(e.condition, e.values, False) if e.condition == "k >= 2" else e for e in d.evidence)
        report = verify_derivation(tamper(d, "root", evidence=ev))
        assert [p for p, _ in report.failures] == ["root"]

    def test_unknown_rule_and_arity(self):
        d = em_headline(1, 2)
        assert not verify_derivation(tamper(d, "root", rule="magic"))
        assert not verify_derivation(tamper(d, "root", premises=()))
