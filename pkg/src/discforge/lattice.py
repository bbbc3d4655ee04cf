"""Exact integer and rational linear algebra.

Everything here runs over Python ints and ``fractions.Fraction``; no floats
anywhere.  Determinants and ranks use fraction-free Bareiss elimination,
lattice computations use row-style Hermite normal form with unimodular
transforms, and canonical bases make equal lattices compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import DegenerateDual, NotInSpan, ParseError


class IntMatrix:
    """Immutable rectangular integer matrix."""

    __slots__ = ("data",)

    def __init__(self, rows) -> None:
        data = []
        width = None
        for row in rows:
            tup = tuple(row)
            for v in tup:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ParseError(f"matrix entry {v!r} is not an integer")
            if width is None:
                width = len(tup)
            elif len(tup) != width:
                raise ParseError("matrix rows have unequal lengths")
            data.append(tup)
        object.__setattr__(self, "data", tuple(data))

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.data)) if self.data else IntMatrix([])

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"


@dataclass(frozen=True)
class LatticeBasis:
    """Canonical basis of a sublattice of Z^ambient.

    ``vectors`` are the rows of the Hermite normal form of any generating
    set, so two equal lattices always produce identical objects.
    """

    ambient: int
    vectors: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def matrix(self) -> IntMatrix:
        return IntMatrix(self.vectors)


def rank(m: IntMatrix) -> int:
    """Rank via fraction-free Bareiss elimination."""
    a = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r


def det(m: IntMatrix) -> int:
    """Determinant of a square matrix, fraction-free."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.data]
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def row_hermite_transform(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form with transform: returns (H, U), H = U*M.

    H is in row echelon form with positive pivots and entries above each
    pivot reduced into [0, pivot); U is unimodular.  Zero rows of H sit at
    the bottom.
    """
    nr, nc = m.rows, m.cols
    a = [list(r) for r in m.data]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    r = 0
    pivots: list[int] = []
    for c in range(nc):
        if r == nr:
            break
        while True:
            nz = [i for i in range(r, nr) if a[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(a[i][c]), i))
            if best != r:
                a[r], a[best] = a[best], a[r]
                u[r], u[best] = u[best], u[r]
            clean = True
            for i in range(r + 1, nr):
                if a[i][c] != 0:
                    q = a[i][c] // a[r][c]
                    for j in range(nc):
                        a[i][j] -= q * a[r][j]
                    for j in range(nr):
                        u[i][j] -= q * u[r][j]
                    if a[i][c] != 0:
                        clean = False
            if clean:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                for j in range(nc):
                    a[i][j] -= q * a[r][j]
                for j in range(nr):
                    u[i][j] -= q * u[r][j]
        pivots.append(c)
        r += 1
    return IntMatrix(a), IntMatrix(u)


def row_hermite(m: IntMatrix) -> IntMatrix:
    """Row Hermite normal form with zero rows removed."""
    h, _ = row_hermite_transform(m)
    return IntMatrix([row for row in h.data if any(row)])


def _pivot_columns(h: IntMatrix) -> list[int]:
    cols = []
    for row in h.data:
        if not any(row):
            break
        cols.append(next(j for j, v in enumerate(row) if v))
    return cols


def kernel_lattice_basis(m: IntMatrix) -> LatticeBasis:
    """Canonical basis of the saturated integer kernel {v : M v = 0}.

    Computed through the unimodular transform of the Hermite form of M^T:
    the transform rows aligned with zero rows of the echelon form span all
    integer solutions, hence the kernel comes out saturated by construction.
    """
    h, u = row_hermite_transform(m.transpose())
    vecs = [u.row(i) for i in range(h.rows) if not any(h.row(i))]
    if not vecs:
        return LatticeBasis(m.cols, ())
    canon = row_hermite(IntMatrix(vecs))
    return LatticeBasis(m.cols, canon.data)


def lattice_index(c: IntMatrix) -> int:
    """Index in its saturation of the lattice spanned by the columns of c.

    Equals the gcd of all maximal minors; requires full column rank.
    """
    n, m = c.rows, c.cols
    if m == 0:
        return 1
    if rank(c) < m:
        raise DegenerateDual("columns are rank deficient, index undefined")
    g = 0
    for sub in combinations(range(n), m):
        g = gcd(g, det(IntMatrix([c.row(i) for i in sub])))
        if g == 1:
            return 1
    return g


def integer_solve(m: IntMatrix, target) -> tuple[int, ...] | None:
    """Integer row combination x with x*M = target, or None.

    The returned x is the deterministic solution obtained through the
    Hermite transform; any other integer solution differs by an element of
    the left kernel of M.
    """
    target = tuple(target)
    if len(target) != m.cols:
        raise ValueError("target length does not match matrix width")
    h, u = row_hermite_transform(m)
    piv = _pivot_columns(h)
    t = list(target)
    y = []
    for j, c in enumerate(piv):
        p = h.row(j)[c]
        if t[c] % p != 0:
            return None
        q = t[c] // p
        y.append(q)
        if q:
            for k in range(m.cols):
                t[k] -= q * h.row(j)[k]
    if any(t):
        return None
    x = [0] * m.rows
    for j, coeff in enumerate(y):
        if coeff:
            for k in range(m.rows):
                x[k] += coeff * u.row(j)[k]
    return tuple(x)


def smallest_multiplier(rows: IntMatrix, w) -> int:
    """Minimal q >= 1 with q*w in the integer row span of ``rows``.

    Raises NotInSpan when w is outside the rational row span.
    """
    w = tuple(w)
    h = row_hermite(rows)
    piv = _pivot_columns(h)
    t = [Fraction(x) for x in w]
    denoms = [1]
    for j, c in enumerate(piv):
        coeff = t[c] / h.row(j)[c]
        denoms.append(coeff.denominator)
        if coeff:
            for k in range(len(w)):
                t[k] -= coeff * h.row(j)[k]
    if any(t):
        raise NotInSpan("vector lies outside the rational row span")
    return lcm(*denoms)


def rational_nullspace(rows) -> list[tuple[Fraction, ...]]:
    """Basis of the rational nullspace {v : M v = 0} of a matrix.

    Accepts any nested iterable of ints or Fractions; plain Gauss-Jordan
    over Fraction.  Returned vectors have a 1 in their free coordinate.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return []
    nc = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for j, c in enumerate(pivots):
            v[c] = -a[j][f]
        basis.append(tuple(v))
    return basis


def clear_denominators(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector.

    The sign convention keeps the first nonzero coordinate's sign.
    """
    fracs = [Fraction(x) for x in vec]
    mult = lcm(*[f.denominator for f in fracs]) if fracs else 1
    ints = [int(f * mult) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)
