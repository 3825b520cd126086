"""Tests for complexes and reduced homology over QQ and GF(p)."""

from itertools import permutations

import pytest

from src.models.complex import SimplicialComplex
from src.models.errors import DomainError
from src.models.field import GF2, RATIONALS, CoefficientField
from src.services.homology import boundary_matrix, rank_exact, reduced_homology, sparse_rank
from tests.conftest import reduced_euler

HOLLOW_TRIANGLE = SimplicialComplex.from_facets(3, [0b011, 0b110, 0b101])

# six-vertex real projective plane
RP2 = SimplicialComplex.from_facets(
    6,
    [
        sum(1 << (v - 1) for v in f)
        for f in [
            (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
            (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
        ]
    ],
)


def simplex_boundary(d: int) -> SimplicialComplex:
    """The boundary of the d-simplex on d + 1 vertices."""
    full = (1 << (d + 1)) - 1
    return SimplicialComplex.from_facets(d + 1, [full & ~(1 << j) for j in range(d + 1)])


class TestField:
    def test_parse(self):
        assert CoefficientField.parse("q") == RATIONALS
        assert CoefficientField.parse("f2") == GF2
        assert CoefficientField.parse("fp:7").characteristic == 7
        assert CoefficientField.parse("fp:7").label == "GF(7)"

    @pytest.mark.parametrize("text", ["fp:6", "fp:x", "reals"])
    def test_parse_rejects(self, text):
        with pytest.raises(DomainError):
            CoefficientField.parse(text)


class TestRank:
    def test_empty(self):
        assert rank_exact([]) == 0
        assert rank_exact([[0, 0], [0, 0]]) == 0

    def test_identity(self):
        assert rank_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3

    def test_characteristic_matters(self):
        rows = [[1, 1], [1, -1]]
        assert rank_exact(rows, RATIONALS) == 2
        assert rank_exact(rows, GF2) == 1

    def test_sparse_drops_entries_that_vanish_mod_p(self):
        entries = {0: {0: 2, 1: 1}, 1: {0: 4}}
        assert sparse_rank(entries, (2, 2), RATIONALS) == 2
        assert sparse_rank(entries, (2, 2), GF2) == 1
        assert sparse_rank({}, (3, 3)) == 0
        assert sparse_rank({0: {}}, (0, 0)) == 0


class TestReducedHomology:
    def test_irrelevant_complex(self, coefficients):
        dims = reduced_homology(SimplicialComplex.irrelevant(2), coefficients)
        assert dims.nonzero() == {-1: 1}

    def test_void_complex(self, coefficients):
        assert reduced_homology(SimplicialComplex.void(2), coefficients).nonzero() == {}

    def test_hollow_triangle(self, coefficients):
        assert reduced_homology(HOLLOW_TRIANGLE, coefficients).nonzero() == {1: 1}

    def test_boundary_rank(self):
        faces = {0: [0b001, 0b010, 0b100], 1: [0b011, 0b101, 0b110]}
        entries, shape = boundary_matrix(faces, 1)
        assert shape == (3, 3)
        assert entries[0] == {0: -1, 1: -1}
        assert sparse_rank(entries, shape) == 2

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_simplex_boundary_is_a_sphere(self, d, coefficients):
        assert reduced_homology(simplex_boundary(d), coefficients).nonzero() == {d - 1: 1}

    def test_full_simplex_is_acyclic(self, coefficients):
        D = SimplicialComplex.from_facets(4, [0b1111])
        assert reduced_homology(D, coefficients).nonzero() == {}

    def test_two_points(self, coefficients):
        D = SimplicialComplex.from_facets(2, [0b01, 0b10])
        assert reduced_homology(D, coefficients).nonzero() == {0: 1}

    def test_too_many_vertices_is_a_domain_error(self):
        with pytest.raises(DomainError):
            SimplicialComplex.from_facets(65, [1])

    def test_projective_plane_sees_characteristic(self):
        assert reduced_homology(RP2, RATIONALS).nonzero() == {}
        assert reduced_homology(RP2, GF2).nonzero() == {1: 1, 2: 1}
        assert reduced_homology(RP2, CoefficientField.parse("fp:3")).nonzero() == {}

    @pytest.mark.parametrize(
        "D", [HOLLOW_TRIANGLE, RP2, simplex_boundary(3), SimplicialComplex.irrelevant(3)]
    )
    def test_euler_poincare(self, D, coefficients):
        assert reduced_homology(D, coefficients).euler_characteristic() == reduced_euler(D)

    def test_relabeling_invariance(self):
        D = SimplicialComplex.from_facets(4, [0b0011, 0b0110, 0b1100])
        expected = reduced_homology(D).nonzero()
        for perm in permutations(range(4)):
            assert reduced_homology(D.relabel(perm)).nonzero() == expected
