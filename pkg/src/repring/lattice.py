"""Exact arithmetic with integer matrices and sublattices of Z^n.

Matrices are plain row-major ``list[list[int]]`` with arbitrary-precision
entries.  The module provides the two classical normal forms (Smith and
Hermite) together with the lattice operations built on top of them:
kernels, saturation, membership tests, and finitely generated abelian
quotients in invariant-factor form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list[int]]
Vector = list[int]


def _shape(a: Matrix) -> tuple[int, int]:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for r in a:
        if len(r) != cols:
            raise ValueError("matrix rows have unequal lengths")
    return rows, cols


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = _shape(a)
    rb, cb = _shape(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    return [[sum(a[i][k] * b[k][j] for k in range(ca)) for j in range(cb)] for i in range(ra)]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    rows, cols = _shape(a)
    if len(v) != cols:
        raise ValueError("vector length does not match matrix width")
    return [sum(a[i][k] * v[k] for k in range(cols)) for i in range(rows)]


def transpose(a: Matrix) -> Matrix:
    rows, cols = _shape(a)
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def det(a: Matrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n, m = _shape(a)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    w = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if w[k][k] == 0:
            for i in range(k + 1, n):
                if w[i][k] != 0:
                    w[k], w[i] = w[i], w[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) // prev
            w[i][k] = 0
        prev = w[k][k]
    return sign * w[n - 1][n - 1]


def mat_inverse_unimodular(a: Matrix) -> Matrix:
    """Invert an integer matrix with determinant +-1.

    Raises ValueError if the matrix is not unimodular (the inverse would
    not be integral).
    """
    n, m = _shape(a)
    if n != m:
        raise ValueError("cannot invert a non-square matrix")
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    out = []
    for row in work:
        ints = []
        for x in row[n:]:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular; inverse is not integral")
            ints.append(int(x))
        out.append(ints)
    return out


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with D = U * a * V diagonal.

    U and V are unimodular.  The diagonal of D is nonnegative and each
    entry divides the next.  Pivots are chosen by smallest nonzero
    absolute value, which keeps intermediate entries small on the dense
    small matrices this package works with.
    """
    m, n = _shape(a)
    d = [row[:] for row in a]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def add_row(dst: int, src: int, q: int) -> None:
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    for k in range(min(m, n)):
        while True:
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != k:
                swap_rows(k, best[0])
            if best[1] != k:
                swap_cols(k, best[1])
            if d[k][k] < 0:
                negate_row(k)
            piv = d[k][k]
            clean = True
            for i in range(k + 1, m):
                if d[i][k] != 0:
                    add_row(i, k, -(d[i][k] // piv))
                    if d[i][k] != 0:
                        clean = False
            for j in range(k + 1, n):
                if d[k][j] != 0:
                    add_col(j, k, -(d[k][j] // piv))
                    if d[k][j] != 0:
                        clean = False
            if not clean:
                continue
            # Column and row are clear; enforce divisibility of the
            # trailing block by the pivot.
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if d[i][j] % piv != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(k, offender, 1)
        if k < min(m, n) and d[k][k] == 0:
            break
    return u, d, v


def hermite_normal_form(a: Matrix) -> tuple[Matrix, Matrix]:
    """Return (H, U) with H = U * a in row Hermite normal form.

    U is unimodular.  H is in row-echelon shape with positive pivots and
    every entry above a pivot reduced into [0, pivot).  Zero rows sink to
    the bottom.  This is the canonical form used for sublattice equality.
    """
    m, n = _shape(a)
    h = [row[:] for row in a]
    u = identity_matrix(m)

    def add_row(dst: int, src: int, q: int) -> None:
        h[dst] = [x + q * y for x, y in zip(h[dst], h[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    row = 0
    for col in range(n):
        if row == m:
            break
        while True:
            cands = [(abs(h[i][col]), i) for i in range(row, m) if h[i][col] != 0]
            if not cands:
                break
            _, p = min(cands)
            if p != row:
                h[row], h[p] = h[p], h[row]
                u[row], u[p] = u[p], u[row]
            if h[row][col] < 0:
                h[row] = [-x for x in h[row]]
                u[row] = [-x for x in u[row]]
            done = True
            for i in range(row + 1, m):
                if h[i][col] != 0:
                    add_row(i, row, -(h[i][col] // h[row][col]))
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if h[row][col] == 0:
            continue
        for i in range(row):
            q = h[i][col] // h[row][col]
            if q:
                add_row(i, row, -q)
        row += 1
    return h, u


@dataclass(frozen=True)
class FinAbGroup:
    """A finitely generated abelian group in invariant-factor form."""

    free_rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = None
        for f in self.invariant_factors:
            if f < 2:
                raise ValueError("invariant factors must be >= 2")
            if prev is not None and f % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = f

    @property
    def is_torsion_free(self) -> bool:
        return not self.invariant_factors

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n


class Sublattice:
    """A sublattice of Z^ambient_rank given by generating row vectors.

    Equality and hashing go through the canonical form: the row Hermite
    normal form of the generator matrix with zero rows dropped.
    """

    __slots__ = ("ambient_rank", "generators", "hnf_rows")

    def __init__(self, ambient_rank: int, generators) -> None:
        if ambient_rank < 0:
            raise ValueError("ambient rank must be nonnegative")
        gens = [list(map(int, g)) for g in generators]
        for g in gens:
            if len(g) != ambient_rank:
                raise ValueError("generator length does not match ambient rank")
        self.ambient_rank = ambient_rank
        self.generators = tuple(tuple(g) for g in gens)
        if gens:
            h, _ = hermite_normal_form(gens)
            rows = tuple(tuple(r) for r in h if any(r))
        else:
            rows = ()
        self.hnf_rows = rows

    @property
    def rank(self) -> int:
        return len(self.hnf_rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sublattice):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.hnf_rows == other.hnf_rows

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.hnf_rows))

    def __repr__(self) -> str:
        return f"Sublattice({self.ambient_rank}, {list(map(list, self.hnf_rows))})"


def full_lattice(ambient_rank: int) -> Sublattice:
    return Sublattice(ambient_rank, identity_matrix(ambient_rank))


def kernel(a: Matrix) -> Sublattice:
    """The saturated sublattice {v : a @ v = 0} of Z^ncols."""
    m, n = _shape(a)
    if m == 0:
        raise ValueError("kernel of an empty matrix needs an explicit width; "
                         "use full_lattice instead")
    _, d, v = smith_normal_form(a)
    gens = []
    for j in range(n):
        dj = d[j][j] if j < min(m, n) else 0
        if dj == 0:
            gens.append([v[i][j] for i in range(n)])
    return Sublattice(n, gens)


def saturate(s: Sublattice) -> Sublattice:
    """Smallest saturated sublattice containing s: (Q*s) intersect Z^n."""
    n = s.ambient_rank
    if not s.hnf_rows:
        return Sublattice(n, [])
    ortho = kernel([list(r) for r in s.hnf_rows])
    if not ortho.hnf_rows:
        return full_lattice(n)
    return kernel([list(r) for r in ortho.hnf_rows])


def quotient_group(ambient_rank: int, s: Sublattice) -> FinAbGroup:
    """Z^ambient_rank modulo s, in invariant-factor form."""
    if s.ambient_rank != ambient_rank:
        raise ValueError("sublattice lives in a different ambient rank")
    if not s.hnf_rows:
        return FinAbGroup(ambient_rank, ())
    _, d, _ = smith_normal_form([list(r) for r in s.hnf_rows])
    k = len(s.hnf_rows)
    diag = [d[i][i] for i in range(min(k, ambient_rank))]
    nonzero = [x for x in diag if x != 0]
    return FinAbGroup(ambient_rank - len(nonzero),
                      tuple(x for x in nonzero if x > 1))


def is_member(s: Sublattice, v) -> bool:
    """Whether the integer vector v lies in the sublattice s."""
    w = list(map(int, v))
    if len(w) != s.ambient_rank:
        raise ValueError("vector length does not match ambient rank")
    for row in s.hnf_rows:
        piv = next(j for j, x in enumerate(row) if x != 0)
        if any(w[j] != 0 for j in range(piv)):
            return False
        if w[piv] % row[piv] != 0:
            return False
        q = w[piv] // row[piv]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return not any(w)


def coset_representative(s: Sublattice, v) -> tuple[int, ...]:
    """Canonical representative of v + s, by reduction against the HNF rows.

    Two vectors reduce to the same representative exactly when they lie
    in the same coset.
    """
    w = list(map(int, v))
    if len(w) != s.ambient_rank:
        raise ValueError("vector length does not match ambient rank")
    for row in s.hnf_rows:
        piv = next(j for j, x in enumerate(row) if x != 0)
        q = w[piv] // row[piv]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return tuple(w)
