"""Classification tables: algebras, spinor spaces, even subalgebras."""

import pytest

from spinorlab.errors import InvalidInput
from spinorlab.tables import (
    AlgebraDescriptor,
    classify_complex,
    classify_real,
    spinor_space,
)

# Named isomorphism classes from the low-dimensional catalogue.
CATALOGUE = [
    (("R", 2, 1), [(2, 0), (1, 1)]),
    (("C", 2, 1), [(3, 0), (1, 2)]),
    (("H", 2, 1), [(0, 4), (4, 0), (1, 3)]),
    (("R", 4, 1), [(3, 1), (2, 2)]),
    (("H", 2, 2), [(5, 0), (1, 4)]),
    (("C", 4, 1), [(0, 5), (4, 1), (2, 3)]),
    (("H", 4, 1), [(6, 0), (5, 1), (1, 5), (2, 4)]),
    (("C", 8, 1), [(7, 0), (1, 6), (5, 2), (3, 4)]),
    (("R", 8, 2), [(0, 7), (4, 3)]),
    (("H", 4, 2), [(6, 1), (2, 5)]),
]


class TestRealClassification:
    def test_examples(self):
        assert classify_real(3, 0) == AlgebraDescriptor("C", 2, 1)
        assert classify_real(0, 2) == AlgebraDescriptor("H", 1, 1)
        assert classify_real(0, 0) == AlgebraDescriptor("R", 1, 1)

    def test_dimension_identity(self):
        for p in range(9):
            for q in range(9 - p):
                assert classify_real(p, q).real_dimension == 2 ** (p + q)

    def test_isomorphism_catalogue(self):
        for (ring, dim, summands), sigs in CATALOGUE:
            for p, q in sigs:
                assert classify_real(p, q) == AlgebraDescriptor(ring, dim, summands), (p, q)

    def test_out_of_range(self):
        with pytest.raises(InvalidInput):
            classify_real(10, 8)


class TestComplexClassification:
    def test_rows(self):
        assert classify_complex(4) == AlgebraDescriptor("C", 4, 1)
        assert classify_complex(0) == AlgebraDescriptor("C", 1, 1)
        assert classify_complex(3) == AlgebraDescriptor("C", 2, 2)

    def test_dimension_identity(self):
        for n in range(9):
            desc = classify_complex(n)
            assert desc.summands * desc.matrix_dim**2 * 2 == 2 ** (n + 1)


class TestSpinorSpaces:
    def test_examples(self):
        alg = spinor_space(1, 3, "algebraic")
        assert (alg.field, alg.dim, alg.summands) == ("H", 2, 1)
        cla = spinor_space(1, 3, "classical")
        assert (cla.field, cla.dim, cla.summands) == ("C", 2, 1)
        even = spinor_space(2, 0, "even_subalgebra")
        assert even == AlgebraDescriptor("C", 1, 1)

    def test_even_subalgebra_chain(self):
        for p in range(9):
            for q in range(9 - p):
                if p + q == 0:
                    continue
                via_q = classify_real(p, q - 1) if q >= 1 else None
                via_p = classify_real(q, p - 1) if p >= 1 else None
                if via_q is not None and via_p is not None:
                    assert via_q == via_p, (p, q)
                assert spinor_space(p, q, "even_subalgebra") == (via_q or via_p)

    def test_classical_matches_even_subalgebra_spinors(self):
        # a classical spinor is an algebraic spinor of the even subalgebra
        for p in range(9):
            for q in range(9 - p):
                if p + q == 0:
                    continue
                cla = spinor_space(p, q, "classical")
                even = spinor_space(p, q, "even_subalgebra")
                per_summand = even.real_dimension // even.summands
                assert per_summand == (
                    cla.dim * {"R": 1, "C": 2, "H": 4}[cla.field] * cla.dim
                ), (p, q)

    def test_complex_variants(self):
        alg = spinor_space(1, 3, "algebraic", "complex")
        assert (alg.field, alg.dim, alg.summands) == ("C", 4, 1)
        cla = spinor_space(1, 3, "classical", "complex")
        assert (cla.field, cla.dim, cla.summands) == ("C", 2, 2)
        cla5 = spinor_space(5, 0, "classical", "complex")
        assert (cla5.field, cla5.dim, cla5.summands) == ("C", 4, 1)

    def test_degenerate_rows_error(self):
        with pytest.raises(InvalidInput):
            spinor_space(0, 0, "even_subalgebra")
        with pytest.raises(InvalidInput):
            spinor_space(0, 0, "classical")
        with pytest.raises(InvalidInput):
            spinor_space(1, 0, "unknown_kind")
