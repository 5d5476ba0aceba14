import random

import pytest

from asymcrit.groebner import (
    Budget,
    IdealBasis,
    MonomialOrder,
    ResourceLimitError,
    contains,
    eliminate,
    groebner_basis,
    ideal_degree,
    intersect,
    krull_dimension,
    normal_form,
    same_ideal,
    saturate,
    saturate_bayer,
    saturate_rabinowitsch,
)
from asymcrit.kernel import GF, PolyRing, grevlex_key, parse_polynomial

from conftest import random_poly


def ideal(texts, ring):
    return IdealBasis.of([parse_polynomial(t, ring) for t in texts], ring)


def spoly(f, g):
    (mf, cf), (mg, cg) = f.leading_term(grevlex_key), g.leading_term(grevlex_key)
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    ring = f.ring
    tf = ring.from_dict({tuple(a - b for a, b in zip(lcm, mf)): ring.domain.inv(cf)})
    tg = ring.from_dict({tuple(a - b for a, b in zip(lcm, mg)): ring.domain.inv(cg)})
    return tf * f - tg * g


@pytest.fixture
def xy():
    return PolyRing(["x", "y"])


class TestBasis:
    def test_linear(self, xy):
        G = groebner_basis(ideal(["x + y", "x - y"], xy), MonomialOrder.lex(["x", "y"]))
        assert sorted(map(str, G.generators)) == ["x", "y"]

    def test_inconsistent(self, xy):
        assert groebner_basis(ideal(["x*y - 1", "x"], xy)).is_unit()

    def test_twisted_cubic(self, xyz):
        G = groebner_basis(ideal(["x^2 - y", "x^3 - z"], xyz), MonomialOrder.lex(["x", "y", "z"]))
        target = parse_polynomial("y^3 - z^2", xyz)
        assert any(g == target or g == -target for g in G.generators)
        # oracle: the explicit combination
        a, b = parse_polynomial("x^3 - z", xyz), parse_polynomial("x^2 - y", xyz)
        combo = a * parse_polynomial("x^3 + z", xyz) - b * parse_polynomial("x^4 + x^2*y + y^2", xyz)
        assert combo == target

    def test_buchberger_criterion_random(self):
        rng = random.Random(4)
        ring = PolyRing(["x", "y", "z"])
        for _ in range(15):
            gens = [random_poly(ring, rng, 3, 4) for _ in range(3)]
            gens = [g for g in gens if not g.is_zero()]
            G = groebner_basis(IdealBasis.of(gens, ring))
            for g in gens:
                assert normal_form(g, G).is_zero()
            for i, f in enumerate(G.generators):
                for g in G.generators[i + 1:]:
                    assert normal_form(spoly(f, g), G).is_zero()

    def test_reduced_basis_unique(self):
        rng = random.Random(9)
        ring = PolyRing(["x", "y", "z"])
        for _ in range(10):
            gens = [g for g in (random_poly(ring, rng, 3, 4) for _ in range(3)) if not g.is_zero()]
            a = groebner_basis(IdealBasis.of(gens, ring))
            rng.shuffle(gens)
            b = groebner_basis(IdealBasis.of(gens, ring))
            assert a.generators == b.generators

    def test_budget(self, xyz):
        with pytest.raises(ResourceLimitError):
            groebner_basis(ideal(["x^2 + y^2 + z^2 - 1", "x*y - z^2", "x*z + y - 1"], xyz), budget=Budget(max_pairs=1))

    def test_prime_field(self):
        ring = PolyRing(["x", "y"], GF(7))
        G = groebner_basis(ideal(["x*y - 1", "x^2 - 2"], ring))
        assert not G.is_unit()
        assert contains(G, parse_polynomial("y^2 - 4", ring))


class TestNormalForm:
    def test_member(self, xy):
        G = groebner_basis(ideal(["x^2 - y"], xy))
        assert normal_form(parse_polynomial("x^2 - y", xy), G).is_zero()

    def test_constant(self, xy):
        assert normal_form(xy.one, groebner_basis(ideal(["x"], xy))) == xy.one

    def test_single_step(self, xy):
        G = groebner_basis(ideal(["x^2 - y"], xy), MonomialOrder.lex(["x", "y"]))
        assert normal_form(parse_polynomial("x^2", xy), G) == parse_polynomial("y", xy)


class TestEliminate:
    def test_linear(self, xyz):
        E = eliminate(ideal(["x - y", "x - z"], xyz), ["x"], ["y", "z"])
        assert [str(g) for g in E.generators] in (["y - z"], ["-y + z"])

    def test_resultant(self, xy):
        E = eliminate(ideal(["x*y - 1", "x + y"], xy), ["x"], ["y"])
        assert [str(g) for g in E.generators] == ["y^2 + 1"]

    def test_output_in_input_ideal(self):
        rng = random.Random(6)
        ring = PolyRing(["x", "y", "z"])
        for _ in range(10):
            gens = [g for g in (random_poly(ring, rng, 2, 3) for _ in range(3)) if not g.is_zero()]
            P = IdealBasis.of(gens, ring)
            E = eliminate(P, ["x"], ["y", "z"])
            full = groebner_basis(P)
            for g in E.generators:
                assert set(g.used_vars()) <= {"y", "z"}
                assert normal_form(g.to_ring(ring), full).is_zero()

    def test_golden_second_chart(self):
        # chart z2: saturate by z2, then set z2 = u1 = u2 = 0 and keep c
        ring = PolyRing(["z1", "z2", "u1", "u2", "c"])
        P = ideal(
            [
                "z1^4 + z2^4 - 2*z1*z2^2 + z1^2 - c*z2^4",
                "4*z1^3 - 2*z2^2 + 2*z1 - u1*z2^3",
                "2*z1^2 - 2*z1*z2^2 - u2*z2^3",
            ],
            ring,
        )
        S = saturate(P, ring.gen("z2"))
        L = IdealBasis.of(list(S.generators) + [ring.gen(v) for v in ("z2", "u1", "u2")], ring)
        E = eliminate(L, ["z1", "z2", "u1", "u2"], ["c"])
        assert [str(g) for g in E.generators] == ["c"]


class TestSaturation:
    CASES = [
        (["x*y"], "x", ["y"]),
        (["x^2", "x*y"], "x", ["1"]),
        (["x"], "y", ["x"]),
    ]

    @pytest.mark.parametrize("gens,var,want", CASES)
    def test_rabinowitsch(self, xy, gens, var, want):
        S = saturate_rabinowitsch(ideal(gens, xy), xy.gen(var))
        assert same_ideal(S, ideal(want, xy))

    @pytest.mark.parametrize("gens,var,want", CASES)
    def test_bayer_matches(self, xy, gens, var, want):
        a = groebner_basis(saturate_bayer(ideal(gens, xy), var))
        b = groebner_basis(saturate_rabinowitsch(ideal(gens, xy), xy.gen(var)))
        assert a.generators == b.generators

    def test_bayer_factor_removal(self, z2):
        S = saturate_bayer(ideal(["z1*(z2^2 + 1)"], z2), "z1")
        assert same_ideal(S, ideal(["z2^2 + 1"], z2))
        S = saturate_bayer(ideal(["z1 - 1"], z2), "z1")
        assert same_ideal(S, ideal(["z1 - 1"], z2))

    def test_saturation_contains_and_is_saturated(self):
        rng = random.Random(12)
        ring = PolyRing(["x", "y", "z"])
        for _ in range(8):
            h = random_poly(ring, rng, 2, 3)
            other = random_poly(ring, rng, 2, 3)
            if h.is_zero() or other.is_zero():
                continue
            gens = [ring.gen("x") ** 2 * h, other]
            S = groebner_basis(saturate(IdealBasis.of(gens, ring), ring.gen("x")))
            assert all(normal_form(g, S).is_zero() for g in gens)
            # x^2 h lies in the saturation, so h does too
            assert normal_form(h, S).is_zero()


class TestIntersect:
    def test_coprime(self, xy):
        I = intersect([ideal(["x"], xy), ideal(["y"], xy)])
        assert same_ideal(I, ideal(["x*y"], xy))

    def test_idempotent(self, xy):
        assert same_ideal(intersect([ideal(["x"], xy), ideal(["x"], xy)]), ideal(["x"], xy))

    def test_point_and_line(self, xy):
        I = intersect([ideal(["x", "y"], xy), ideal(["x - 1"], xy)])
        assert same_ideal(I, ideal(["x^2 - x", "x*y - y"], xy))


class TestDegree:
    def test_small(self, xy):
        assert ideal_degree(ideal(["x^2 - y", "y^2"], xy)) == 4

    def test_points(self, xy):
        assert ideal_degree(ideal(["x^2 - 1", "y - x"], xy)) == 2

    def test_hypersurface(self, xyz):
        P = ideal(["x^3 + y*z - 1"], xyz)
        assert ideal_degree(P) == 3
        assert krull_dimension(P) == 2

    def test_unit(self, xy):
        assert ideal_degree(ideal(["1"], xy)) == 0
