from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from urprior.complexes import (
    SimplicialComplex,
    build_overlap_complex,
    coboundary_matrix,
    connected_components,
    from_facets,
)
from urprior.credence import overlap_mass
from urprior.numerics import Matrix, mat_mul

from .generators import random_system


class TestConstruction:
    def test_from_facets_fills_downward(self):
        X = from_facets(("a", "b", "c"), [("a", "b", "c")])
        assert X.counts(2) == [3, 3, 1]
        assert X.simplices(1) == ((0, 1), (0, 2), (1, 2))

    def test_isolated_vertices_survive(self):
        X = from_facets(("a", "b", "c"), [("a", "b")])
        assert X.counts(1) == [3, 1]

    def test_from_facets_idempotent_on_facet_list(self):
        X = from_facets(("a", "b", "c", "d"), [("a", "b", "c"), ("c", "d")])
        again = from_facets(X.vertices, [X.label(s).strip("{}").split(",") for s in X.facets()])
        # label round-trip keeps vertex names, so the rebuilt complex matches
        assert again == X

    def test_rejects_unknown_vertex(self):
        with pytest.raises(ValueError):
            from_facets(("a",), [("a", "b")])

    def test_rejects_empty_facet(self):
        with pytest.raises(ValueError):
            from_facets(("a",), [()])

    def test_validation_catches_missing_face(self):
        with pytest.raises(ValueError):
            SimplicialComplex(("a", "b", "c"), (((0,), (1,), (2,)), ((0, 1),), ((0, 1, 2),)))

    def test_validation_catches_unsorted_level(self):
        with pytest.raises(ValueError):
            SimplicialComplex(("a", "b"), (((1,), (0,)),))

    def test_label_formatting(self, tri_unfilled):
        assert tri_unfilled.label((0, 1)) == "{1,2}"
        assert tri_unfilled.label((2,)) == "{3}"

    def test_simplices_beyond_dim_is_empty(self, tri_unfilled):
        assert tri_unfilled.simplices(5) == ()
        assert tri_unfilled.counts(3) == [3, 3, 0, 0]


class TestOverlapComplex:
    def test_triangle_filled(self, ex1):
        X = build_overlap_complex(ex1)
        assert X.vertices == ("1", "2", "3")
        assert X.counts(2) == [3, 3, 1]

    def test_triangle_unfilled(self, ex2):
        X = build_overlap_complex(ex2)
        assert X.counts(2) == [3, 3, 0]

    def test_hollow_tetrahedron(self, ex4):
        X = build_overlap_complex(ex4, max_dim=3)
        assert X.counts(3) == [4, 6, 4, 0]

    def test_max_dim_truncates(self, ex1):
        X = build_overlap_complex(ex1, max_dim=1)
        assert X.counts(2) == [3, 3, 0]
        assert X.dim == 1

    def test_membership_matches_bruteforce(self):
        # a group spans a simplex iff every member gives the common
        # overlap positive mass; recheck straight from overlap_mass
        rng = random.Random(21)
        for _ in range(40):
            system = random_system(rng)
            X = build_overlap_complex(system, max_dim=3)
            names = system.names
            for k in range(1, 4):
                expected = []
                for group in itertools.combinations(range(len(names)), k + 1):
                    labels = tuple(names[i] for i in group)
                    if all(overlap_mass(system, a, labels) > 0 for a in labels):
                        expected.append(group)
                assert X.simplices(k) == tuple(expected)


class TestCoboundaryMatrix:
    def test_vertex_to_edge_on_triangle(self, tri_filled):
        d0 = coboundary_matrix(tri_filled, 0)
        assert d0 == Matrix.from_rows([[-1, 1, 0], [-1, 0, 1], [0, -1, 1]])

    def test_edge_to_triangle_on_filled(self, tri_filled):
        d1 = coboundary_matrix(tri_filled, 1)
        assert d1 == Matrix.from_rows([[1, -1, 1]])

    def test_edge_to_triangle_on_plugged(self, plugged):
        d1 = coboundary_matrix(plugged, 1)
        assert d1.rows == 3 and d1.cols == 6
        assert d1 == Matrix.from_rows(
            [
                [1, 0, -1, 0, 1, 0],
                [0, 1, -1, 0, 0, 1],
                [0, 0, 0, 1, -1, 1],
            ]
        )

    def test_hollow_tetra_shapes(self, ex4):
        X = build_overlap_complex(ex4, max_dim=3)
        assert coboundary_matrix(X, 0).cols == 4
        d1 = coboundary_matrix(X, 1)
        assert (d1.rows, d1.cols) == (4, 6)
        d2 = coboundary_matrix(X, 2)
        assert d2.rows == 0 and d2.cols == 4

    def test_composition_vanishes(self):
        rng = random.Random(22)
        from .generators import random_complex

        for _ in range(30):
            X = random_complex(rng)
            for k in (0, 1):
                product = mat_mul(coboundary_matrix(X, k + 1), coboundary_matrix(X, k))
                assert all(e == Fraction(0) for row in product.entries for e in row)

    def test_rejects_negative_degree(self, tri_filled):
        with pytest.raises(ValueError):
            coboundary_matrix(tri_filled, -1)


class TestComponents:
    def test_connected_complex(self, tri_unfilled):
        assert connected_components(tri_unfilled) == [(0, 1, 2)]

    def test_two_pieces(self):
        X = from_facets(("a", "b", "c", "d"), [("a", "b"), ("c", "d")])
        assert connected_components(X) == [(0, 1), (2, 3)]

    def test_isolated_vertex_is_own_component(self):
        X = from_facets(("a", "b", "c"), [("a", "b")])
        assert connected_components(X) == [(0, 1), (2,)]
