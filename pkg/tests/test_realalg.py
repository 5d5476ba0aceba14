import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asymcrit.kernel import PolyRing, parse_polynomial
from asymcrit.realalg import (
    IsolatingInterval,
    NotZeroDimensionalError,
    compare,
    interval_eval,
    isolate_real_roots,
    rational_between,
    rational_number,
    real_roots,
    refine,
    sign_at,
    squarefree_part,
    zero_dim_real_solve,
)
from asymcrit.realalg import univariate as U

import sturm

C = PolyRing(["c"])


def P(text, ring=C):
    return parse_polynomial(text, ring)


def random_squarefree(rng, max_degree=12, coeff=20):
    while True:
        deg = rng.randint(1, max_degree)
        a = [rng.randint(-coeff, coeff) for _ in range(deg + 1)]
        if a[-1] == 0:
            continue
        a = U.primitive(a)
        if len(U.poly_gcd(a, U.derivative(a))) == 1:
            return a


class TestSquarefree:
    def test_repeated_factor(self):
        assert squarefree_part(P("c*(c-1)^2")) == P("c^2 - c")

    def test_already_squarefree(self):
        q = P("229*c^2 - 202*c - 27")
        assert squarefree_part(q) == q

    def test_constant(self):
        assert squarefree_part(P("5")) == P("1")

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_part(C.zero)


class TestIsolation:
    def test_golden_quadratic(self):
        ivs = isolate_real_roots(P("229*c^2 - 202*c - 27"))
        assert len(ivs) == 2
        lo_root, hi_root = Fraction(-27, 229), Fraction(1)
        assert ivs[0].lo <= lo_root <= ivs[0].hi
        assert ivs[1].lo <= hi_root <= ivs[1].hi

    def test_no_real_roots(self):
        assert isolate_real_roots(P("c^2 + 1")) == []

    def test_explicit_roots(self):
        ivs = isolate_real_roots(P("c*(c-2)"))
        assert [(iv.lo <= 0 <= iv.hi, iv.lo <= 2 <= iv.hi) for iv in ivs] == [(True, False), (False, True)]

    def test_endpoint_is_not_another_root(self):
        # c*(4c+1): the bisection grid hits 0 exactly next to -1/4
        roots = real_roots(P("4*c^2 + c"))
        assert [str(r) for r in roots] == ["-1/4", "0"]
        assert compare(roots[0], roots[1]) == -1
        assert rational_between(roots[0], roots[1]) < 0

    def test_descartes_matches_sturm(self):
        rng = random.Random(2024)
        for _ in range(200):
            a = random_squarefree(rng)
            assert len(U.isolate(a)) == sturm.count_real_roots(a)

    def test_intervals_disjoint_sorted_isolating(self):
        rng = random.Random(77)
        for _ in range(60):
            a = random_squarefree(rng, 9)
            ivs = U.isolate(a)
            for (l1, h1), (l2, h2) in zip(ivs, ivs[1:]):
                assert h1 < l2
            for lo, hi in ivs:
                if lo == hi:
                    assert U.evaluate(a, lo) == 0
                else:
                    assert U.evaluate(a, lo) * U.evaluate(a, hi) < 0
                    assert sturm.count_in(a, lo, hi) == 1

    @given(st.lists(st.integers(-12, 12), min_size=1, max_size=6, unique=True))
    def test_rational_roots_found_exactly(self, roots):
        a = [1]
        for r in roots:
            a = U.mul(a, [-r, 1])
        found = real_roots(a)
        assert len(found) == len(roots)
        for x, r in zip(found, sorted(roots)):
            assert compare(x, rational_number(r)) == 0


class TestRefine:
    def test_rational_root(self):
        a = real_roots(P("3*c - 1"))[0]
        b = refine(a, Fraction(1, 10**6))
        assert b.lo <= Fraction(1, 3) <= b.hi and b.interval.width <= Fraction(1, 10**6)

    def test_idempotent(self):
        a = refine(real_roots(P("c^2 - 2"))[1], Fraction(1, 100))
        assert refine(a, Fraction(1, 10)) is a

    def test_sqrt2(self):
        a = refine(real_roots(P("c^2 - 2"))[1], Fraction(1, 1000))
        assert a.interval.width <= Fraction(1, 1000)
        # oracle: 1414/1000 < sqrt 2 < 1415/1000 since 1414^2 < 2e6 < 1415^2
        assert Fraction(1414, 1000) - Fraction(1, 1000) <= a.lo and a.hi <= Fraction(1415, 1000) + Fraction(1, 1000)

    @given(st.integers(1, 40))
    def test_sign_change_kept(self, k):
        a = real_roots([-3, 0, 0, 1])[0]
        b = refine(a, Fraction(1, 2**k))
        if not b.interval.is_point():
            assert U.evaluate(b.coeffs, b.lo) * U.evaluate(b.coeffs, b.hi) < 0


class TestOrdering:
    def test_compare_across_polynomials(self):
        s2 = real_roots(P("c^2 - 2"))[1]
        s3 = real_roots(P("c^2 - 3"))[1]
        assert compare(s2, s3) == -1 and compare(s3, s2) == 1
        assert compare(s2, s2) == 0
        same = real_roots(P("(c^2 - 2)*(c + 5)"))[2]
        assert compare(s2, same) == 0

    def test_sign_at(self):
        s2 = real_roots(P("c^2 - 2"))[1]
        assert sign_at(P("c^2 - 2"), s2) == 0
        assert sign_at(P("c - 1"), s2) == 1
        assert sign_at(P("c - 3/2"), s2) == -1
        assert sign_at(P("c^4 - 4"), s2) == 0

    def test_rational_between(self):
        a, b = rational_number(0), real_roots(P("c^2 - 2"))[1]
        x = rational_between(a, b)
        assert 0 < x and x * x < 2
        assert rational_between(None, a) < 0 and rational_between(b, None) > 2


class TestIntervalEval:
    def test_encloses(self):
        R = PolyRing(["x", "y"])
        f = P("x^2 - x*y + 3", R)
        lo, hi = interval_eval(f, {"x": (Fraction(-1), Fraction(2)), "y": (Fraction(0), Fraction(1))})
        rng = random.Random(0)
        for _ in range(50):
            x, y = Fraction(rng.randint(-100, 200), 100), Fraction(rng.randint(0, 100), 100)
            assert lo <= f.eval_exact({"x": x, "y": y}) <= hi


class TestZeroDim:
    R = PolyRing(["z1", "z2"])

    def solve(self, texts, ring=None):
        ring = ring or self.R
        return zero_dim_real_solve([P(t, ring) for t in texts])

    def test_circle_and_line(self):
        sol = self.solve(["z1^2 + z2^2 - 1", "z1 - z2"])
        pts = sorted(p.approx() for p in sol.points)
        h = 2 ** -0.5
        assert pts == pytest.approx([(-h, -h), (h, h)])

    def test_imaginary(self):
        assert self.solve(["z1^2 + 1", "z2"]).points == []

    def test_origin(self):
        sol = self.solve(["z1", "z2"])
        assert [p.approx() for p in sol.points] == [(0.0, 0.0)]

    def test_inconsistent(self):
        assert self.solve(["z1", "z1 - 1"]).points == []

    def test_non_radical(self):
        R = PolyRing(["z1", "z2", "z3"])
        sol = self.solve(["(z1-1)^2*(z1+2)", "z2^2 - z1 - 2", "z3 - z1*z2"], R)
        assert len(sol.points) == 3
        sol = self.solve(["z1^2", "z2^3", "z3^2 - 2"], R)
        assert sorted(p.approx()[2] for p in sol.points) == pytest.approx([-(2**0.5), 2**0.5])

    def test_positive_dimensional(self):
        with pytest.raises(NotZeroDimensionalError):
            self.solve(["z1*z2"])

    def test_residuals_bracket_zero(self):
        rng = random.Random(8)
        for _ in range(6):
            a, b = rng.randint(-5, 5), rng.randint(1, 5)
            texts = [f"z1^2 + z2^2 - {b}", f"4*z1*z2 - ({a})"]
            sol = self.solve(texts)
            for pt in sol.points:
                box = pt.box(Fraction(1, 10**20))
                for t in texts:
                    lo, hi = interval_eval(P(t, self.R), box)
                    assert lo <= 0 <= hi


def test_isolating_interval_validation():
    with pytest.raises(ValueError):
        IsolatingInterval(Fraction(1), Fraction(0))
