from fractions import Fraction

import pytest

from discforge.errors import DegenerateDual, NotInSpan, ParseError
from discforge.lattice import (
    IntMatrix,
    clear_denominators,
    det,
    integer_solve,
    kernel_lattice_basis,
    lattice_index,
    rank,
    rational_nullspace,
    row_hermite,
    row_hermite_transform,
    smallest_multiplier,
)


def test_intmatrix_rejects_ragged_and_nonint():
    with pytest.raises(ParseError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(ParseError):
        IntMatrix([[1, 2.5]])
    with pytest.raises(ParseError):
        IntMatrix([[1, True]])


def test_rank_and_det():
    assert rank(IntMatrix([[1, 1, 1, 1], [0, 1, 2, 3]])) == 2
    assert rank(IntMatrix([[2, 4], [1, 2]])) == 1
    assert det(IntMatrix([[3, 1], [1, 2]])) == 5
    assert det(IntMatrix([[0, 1], [1, 0]])) == -1
    assert det(IntMatrix([[2, 0, 0], [0, 3, 0], [0, 0, 5]])) == 30


def test_row_hermite_transform_reconstructs():
    m = IntMatrix([[4, 6, 2], [2, 2, 0], [0, 2, 2]])
    h, u = row_hermite_transform(m)
    # H = U * M exactly
    for i in range(h.rows):
        for j in range(h.cols):
            assert h.row(i)[j] == sum(
                u.row(i)[k] * m.row(k)[j] for k in range(m.rows)
            )
    assert abs(det(u)) == 1


def test_row_hermite_canonical_shape():
    h = row_hermite(IntMatrix([[2, 4, 4], [0, 6, 12], [0, 0, 0]]))
    assert h.to_lists() == [[2, 4, 4], [0, 6, 12]]
    # pivots positive, entries above reduced into [0, pivot)
    h2 = row_hermite(IntMatrix([[1, 5], [0, 3]]))
    assert h2.to_lists() == [[1, 2], [0, 3]]


def test_kernel_lattice_twisted_cubic():
    a = IntMatrix([[1, 1, 1, 1], [0, 1, 2, 3]])
    basis = kernel_lattice_basis(a)
    assert len(basis.vectors) == 2
    for v in basis.vectors:
        assert all(
            sum(a.row(i)[j] * v[j] for j in range(4)) == 0 for i in range(2)
        )
    # saturated: the basis generates the full integer kernel
    b = IntMatrix([list(v) for v in basis.vectors]).transpose()
    assert lattice_index(b) == 1


def test_kernel_respects_known_vector():
    # (1,-2,1) spans the kernel of the quadratic configuration
    a = IntMatrix([[1, 1, 1], [0, 1, 2]])
    basis = kernel_lattice_basis(a)
    assert list(basis.vectors) == [(1, -2, 1)]


def test_lattice_index():
    assert lattice_index(IntMatrix([[1], [3], [-2], [-2]])) == 1
    assert lattice_index(IntMatrix([[2], [-2]])) == 2
    assert lattice_index(IntMatrix([[1, 0], [0, 1], [1, 1]])) == 1
    assert lattice_index(IntMatrix([[2, 0], [0, 2], [2, 2]])) == 4
    with pytest.raises(DegenerateDual):
        lattice_index(IntMatrix([[1, 2], [2, 4]]))


def test_integer_solve():
    m = IntMatrix([[0, 1], [-3, 1], [2, -3], [-1, 1], [2, 0]])
    gamma = integer_solve(m, (1, 0))
    assert gamma is not None
    assert tuple(
        sum(g * m.row(i)[j] for i, g in enumerate(gamma)) for j in range(2)
    ) == (1, 0)
    # no integer combination of even vectors reaches an odd target
    assert integer_solve(IntMatrix([[2, 0], [0, 2]]), (1, 0)) is None


def test_smallest_multiplier():
    rows = IntMatrix([[0, 1], [-3, 1], [2, -3], [-1, 1], [2, 0]])
    assert smallest_multiplier(rows, (1, 0)) == 1
    assert smallest_multiplier(IntMatrix([[2, 0], [0, 1]]), (1, 0)) == 2
    with pytest.raises(NotInSpan):
        smallest_multiplier(IntMatrix([[1, 0]]), (0, 1))


def test_rational_nullspace_and_clear():
    rows = [[Fraction(1), Fraction(2), Fraction(3)]]
    basis = rational_nullspace(rows)
    assert len(basis) == 2
    for v in basis:
        assert sum(r * x for r, x in zip(rows[0], v)) == 0
    assert clear_denominators([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert clear_denominators([Fraction(2), Fraction(4)]) == (1, 2)
