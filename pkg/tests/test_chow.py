import itertools

import pytest

from pervchow.chow import (
    ChowRingPresentation,
    builtin,
    degree,
    mul,
    point,
    product_presentation,
    projective_space,
    quadric_surface,
)
from pervchow.serialize import parse_ring, ring_to_json


def brute_bilinear(ring, x, y):
    """Oracle: expand the product symbol by symbol, bypassing chow.mul."""
    k = x.codim + y.codim
    acc = {sym: 0 for sym in ring.basis_at(k)}
    for ca, a in zip(x.coeffs, ring.basis_at(x.codim)):
        for cb, b in zip(y.coeffs, ring.basis_at(y.codim)):
            for sym, c in ring.pair_product(a, b).items():
                acc[sym] += ca * cb * c
    return acc


class TestBuiltins:
    def test_point(self):
        r = point()
        assert r.dim == 0
        assert degree(r.unit_class()) == 1

    def test_projective_space_powers(self):
        r = projective_space(3)
        h = r.hyperplane_class()
        hh = mul(h, h)
        assert hh.as_dict() == {"h^2": 1}
        assert mul(hh, h).as_dict() == {"h^3": 1}
        assert mul(mul(hh, h), h).is_zero  # codim 4 > 3

    def test_p2_degree(self):
        r = projective_space(2)
        assert degree(mul(r.hyperplane_class(), r.hyperplane_class())) == 1

    def test_quadric_relations(self):
        q = quadric_surface()
        e, f = q.basis_class("e"), q.basis_class("f")
        assert mul(e, e).is_zero
        assert mul(f, f).is_zero
        assert mul(e, f).as_dict() == {"pt": 1}

    def test_quadric_hyperplane_square_by_oracle(self):
        # (e + f)^2 = e^2 + 2 e f + f^2 = 2 pt, by brute bilinear expansion
        q = quadric_surface()
        h = q.hyperplane_class()
        assert brute_bilinear(q, h, h) == {"pt": 2}
        assert degree(mul(h, h)) == 2

    def test_quadric_crossing_degree(self):
        q = quadric_surface()
        assert degree(mul(q.make(1, [1, 0]), q.make(1, [0, 1]))) == 1

    def test_degree_normalization_and_linearity(self):
        q = quadric_surface()
        assert degree(q.make(2, [1])) == 1
        assert degree(q.make(2, [3])) == 3
        assert degree(3 * q.make(2, [1])) == 3

    def test_unit_is_identity(self):
        for ring in (projective_space(2), quadric_surface()):
            one = ring.unit_class()
            for k in range(ring.dim + 1):
                for sym in ring.basis_at(k):
                    x = ring.basis_class(sym)
                    assert mul(one, x) == x
                    assert mul(x, one) == x

    def test_builtin_names(self):
        assert builtin("point").dim == 0
        assert builtin("P3").dim == 3
        assert builtin("quadric") == quadric_surface()
        assert builtin("product(P1,P1)").dim == 2
        assert builtin("product(P1,product(P1,P1))").dim == 3
        with pytest.raises(ValueError):
            builtin("E8")


class TestLaws:
    @pytest.mark.parametrize(
        "ring",
        [projective_space(2), projective_space(3), quadric_surface(),
         product_presentation(projective_space(1), projective_space(1)),
         product_presentation(projective_space(2), projective_space(1))],
        ids=lambda r: r.name,
    )
    def test_commutative_and_associative_on_basis(self, ring):
        symbols = [sym for level in ring.basis for sym in level]
        for a, b in itertools.product(symbols, repeat=2):
            assert ring.pair_product(a, b) == ring.pair_product(b, a)
        for a, b, c in itertools.product(symbols, repeat=3):
            xa, xb, xc = (ring.basis_class(s) for s in (a, b, c))
            assert mul(mul(xa, xb), xc) == mul(xa, mul(xb, xc))

    def test_kunneth_degree_multiplicativity(self):
        r1, r2 = projective_space(2), projective_space(1)
        prod = product_presentation(r1, r2)
        pt1 = r1.make(2, [1])
        pt2 = r2.make(1, [1])
        joint = prod.make(3, {"h^2|h": 1})
        assert degree(joint) == degree(pt1) * degree(pt2) == 1

    def test_degree_requires_top_codim(self):
        q = quadric_surface()
        with pytest.raises(ValueError):
            degree(q.hyperplane_class())

    def test_ring_mismatch_rejected(self):
        with pytest.raises(ValueError):
            mul(projective_space(1).hyperplane_class(), quadric_surface().hyperplane_class())


class TestKunnethMatchesQuadric:
    def test_basis_matching_isomorphism_exists(self):
        """Oracle: search for a degree-preserving symbol bijection matching
        structure constants, hyperplane and degree functional."""
        prod = product_presentation(projective_space(1), projective_space(1))
        quad = quadric_surface()
        found = None
        for perm in itertools.permutations(range(2)):
            mapping = {prod.basis_at(0)[0]: quad.basis_at(0)[0],
                       prod.basis_at(2)[0]: quad.basis_at(2)[0]}
            for idx, sym in enumerate(prod.basis_at(1)):
                mapping[sym] = quad.basis_at(1)[perm[idx]]

            def translate(combo):
                return {mapping[s]: c for s, c in combo.items()}

            ok = True
            symbols = list(mapping)
            for a, b in itertools.product(symbols, repeat=2):
                if translate(prod.pair_product(a, b)) != quad.pair_product(mapping[a], mapping[b]):
                    ok = False
                    break
            hyper_prod = {s: c for s, c in zip(prod.basis_at(1), prod.hyperplane) if c}
            hyper_quad = {s: c for s, c in zip(quad.basis_at(1), quad.hyperplane) if c}
            if ok and translate(hyper_prod) == hyper_quad:
                deg_prod = {s: c for s, c in zip(prod.basis_at(2), prod.degree_functional)}
                deg_quad = {s: c for s, c in zip(quad.basis_at(2), quad.degree_functional)}
                if translate(deg_prod) == deg_quad:
                    found = mapping
                    break
        assert found is not None


class TestValidation:
    def test_non_associative_rejected(self):
        products = {("a", "a"): {"b": 1}, ("a", "b"): {"c": 1}, ("b", "b"): {"c": 1}}
        with pytest.raises(ValueError):
            ChowRingPresentation("bad", 3, [["1"], ["a"], ["b"], ["c"]], products, [1], [1])

    def test_wrong_codim_target_rejected(self):
        with pytest.raises(ValueError):
            ChowRingPresentation("bad", 2, [["1"], ["a"], ["b"]], {("a", "a"): {"a": 1}}, [1], [1])

    def test_unit_row_conflict_rejected(self):
        with pytest.raises(ValueError):
            ChowRingPresentation("bad", 1, [["1"], ["a"]], {("1", "a"): {"a": 2}}, [1], [1])

    def test_duplicate_symbols_rejected(self):
        with pytest.raises(ValueError):
            ChowRingPresentation("bad", 1, [["x"], ["x"]], {}, [1], [1])

    def test_relations_route_to_groups(self):
        ring = ChowRingPresentation(
            "torsion", 1, [["1"], ["a"]], {}, [1], [1], relations={1: [[2]]}
        )
        free, torsion = ring.group(1).rank, ring.group(1).relations
        assert free == 1 and torsion == ((2,),)


class TestJson:
    @pytest.mark.parametrize(
        "ring",
        [projective_space(2), quadric_surface(),
         product_presentation(projective_space(1), projective_space(1))],
        ids=lambda r: r.name,
    )
    def test_round_trip(self, ring):
        assert parse_ring(ring_to_json(ring)) == ring

    def test_parse_builtin_name(self):
        assert parse_ring("quadric_surface") == quadric_surface()
