from fractions import Fraction

import pytest

from asymcrit.apps import (
    ASYMPTOTIC,
    AT_INFINITY,
    CRITICAL,
    MINIMUM,
    UNBOUNDED,
    certify_level,
    choose_test_points,
    critical_values_poly,
    distance_critical_system,
    fiber_sample,
    gcv,
    infimum,
    sample_positive,
)
from asymcrit.kernel import PolyRing, parse_polynomial
from asymcrit.realalg import compare, interval_eval, rational_number, real_roots

R = PolyRing(["z1", "z2"])
C = PolyRing(["c"])

EXAMPLE_1 = "z1^2*z2^2 + 2*z1*z2^3 + z2^4 + z1^2 + 3*z1*z2 + 2*z2^2"
EXAMPLE_2 = "z1^3 + z1^2*z2^2 - 2*z1*z2 + 1"
# the positivity example with the sign that makes its critical values 1 and -27/229
POSITIVE = "z1^2*(1 - z2) + (z1*z2^2 - 1)^2"
POSITIVE_LITERAL = "z1^2*(1 - z2) - (z1*z2^2 - 1)^2"


def P(text, ring=R):
    return parse_polynomial(text, ring)


class TestCriticalValues:
    def test_golden(self):
        # the only critical point (0, 0) has value 1
        assert critical_values_poly(P("z1^4 + (z1*z2 - 1)^2")) == P("c - 1", C)

    def test_examples(self):
        assert critical_values_poly(P(EXAMPLE_1)) == P("c", C)
        assert critical_values_poly(P("z1^2 + z2^2")) == P("c", C)
        assert critical_values_poly(P(EXAMPLE_2)) == P("c - 1", C)

    def test_univariate_oracle(self):
        # f = x^3 - 3x has critical points +-1 and values -+2
        S = PolyRing(["z1"])
        assert critical_values_poly(P("z1^3 - 3*z1", S)) == P("c^2 - 4", C)

    def test_positive_example(self):
        assert critical_values_poly(P(POSITIVE)) == P("229*c^2 - 202*c - 27", C)

    def test_positive_example_literal_sign(self):
        # taken literally, the minus sign moves the critical values to -1 and -27/283
        assert critical_values_poly(P(POSITIVE_LITERAL)) == P("283*c^2 + 310*c + 27", C)

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            critical_values_poly(P("7"))


class TestGcv:
    def test_example_1(self):
        rep = gcv(P(EXAMPLE_1))
        assert rep.k0_poly == P("c", C)
        assert rep.kinf_poly.monic() == P("c + 1/4", C)
        assert [str(r) for r in rep.union_roots] == ["-1/4", "0"]
        assert rep.tags == [ASYMPTOTIC, CRITICAL]

    def test_positive_example(self):
        rep = gcv(P(POSITIVE))
        assert rep.k0_poly == P("229*c^2 - 202*c - 27", C)
        assert rep.kinf_poly.monic() == P("c", C)
        assert rep.tags == [CRITICAL, ASYMPTOTIC, CRITICAL]
        assert compare(rep.union_roots[2], rational_number(1)) == 0

    def test_tagged_pairs(self):
        rep = gcv(P(EXAMPLE_2))
        assert [(str(r), t) for r, t in rep.tagged()] == [("0", ASYMPTOTIC), ("1", CRITICAL)]
        assert rep.randomness is not None


class TestFibers:
    def test_distance_system(self):
        sys_ = distance_critical_system(P("z1^2 + z2^2"), R.gens, 1, [2, 3])
        assert sys_[0] == P("z1^2 + z2^2 - 1")
        # 2*z1*(z2 - 3) - 2*z2*(z1 - 2)
        assert sys_[1] == P("-6*z1 + 4*z2")

    def test_empty_fiber(self):
        assert fiber_sample(P("z1^2 + z2^2"), -1).empty

    def test_circle(self):
        rep = fiber_sample(P("z1^2 + z2^2"), 4)
        assert not rep.empty and len(rep.points) == 2
        for pt in rep.points:
            assert certify_level(P("z1^2 + z2^2"), pt, 4)

    def test_unbounded_example(self):
        assert not fiber_sample(P(EXAMPLE_2), -1).empty

    def test_positive_fiber(self):
        f = P(POSITIVE)
        rep = fiber_sample(f, Fraction(1, 2))
        assert not rep.empty
        assert all(certify_level(f, pt, Fraction(1, 2)) for pt in rep.points)


class TestChooseTestPoints:
    def test_interleaves(self):
        roots = real_roots(P("c^3 - 2*c", C))
        pts = choose_test_points(roots)
        assert len(pts) == len(roots) + 1
        for i, r in enumerate(roots):
            assert compare(rational_number(pts[i]), r) < 0 < compare(rational_number(pts[i + 1]), r)

    def test_empty(self):
        assert choose_test_points([]) == [0]


class TestInfimum:
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_example_1(self, seed):
        v = infimum(P(EXAMPLE_1), seed=seed)
        assert v.kind == AT_INFINITY
        assert compare(v.value, rational_number(Fraction(-1, 4))) == 0

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_example_2(self, seed):
        v = infimum(P(EXAMPLE_2), seed=seed)
        assert v.kind == UNBOUNDED and v.value is None
        assert v.witnesses[0][1]

    def test_attained(self):
        v = infimum(P("z1^2 + z2^2"))
        assert v.kind == MINIMUM and compare(v.value, rational_number(0)) == 0

    def test_attained_shifted(self):
        v = infimum(P("(z1 - 1)^2 + (z2 + 2)^2 + 3"))
        assert v.kind == MINIMUM and compare(v.value, rational_number(3)) == 0


class TestSamplePositive:
    def test_empty(self):
        rep = sample_positive(P("-z1^2 - z2^2 - 1"))
        assert rep.empty and rep.points == []

    def test_linear(self):
        f = P("z1")
        rep = sample_positive(f)
        assert not rep.empty and rep.e > 0
        assert all(certify_level(f, pt, rep.e) for pt in rep.points)

    def test_positive_example(self):
        f = P(POSITIVE)
        rep = sample_positive(f)
        assert not rep.empty and rep.e == Fraction(1, 2)
        for box in rep.boxes(Fraction(1, 10**10)):
            lo, _ = interval_eval(f, box)
            assert lo > 0
