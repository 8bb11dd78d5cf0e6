"""Exact dense matrices over cyclotomic scalars, plus subspace machinery.

Everything here is elementary row-reduction style linear algebra done with
:class:`~acceptcert.exactalg.cyclotomic.CycNum` entries, so results are exact.
Characteristic polynomials use the Faddeev-LeVerrier recurrence (division-free
apart from rational scalar divisions), determinants and inverses come from it.

Subspaces of an ambient coordinate space are stored by their reduced row
echelon basis, which is unique, so two Subspace objects are equal iff they
describe the same space.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, ExactAlgError, ZERO, ONE, cyc_rational, _coerce


def _as_cyc(value) -> CycNum:
    out = _coerce(value)
    if out is NotImplemented:
        raise ExactAlgError("cannot use %r as an exact scalar" % (value,))
    return out


class ExactMatrix:
    """Immutable dense matrix with exact cyclotomic entries (row-major)."""

    __slots__ = ("rows", "cols", "entries", "_key", "_hash")

    def __init__(self, rows: int, cols: int, entries: tuple):
        assert len(entries) == rows * cols
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._key = None
        self._hash = None

    @classmethod
    def make(cls, data) -> "ExactMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = []
        for row in data:
            if len(row) != cols:
                raise ExactAlgError("ragged matrix data")
            entries.extend(_as_cyc(v) for v in row)
        return cls(rows, cols, tuple(entries))

    @classmethod
    def identity(cls, k: int) -> "ExactMatrix":
        entries = [ZERO] * (k * k)
        for i in range(k):
            entries[i * k + i] = ONE
        return cls(k, k, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag) -> "ExactMatrix":
        diag = [_as_cyc(v) for v in diag]
        k = len(diag)
        entries = [ZERO] * (k * k)
        for i, v in enumerate(diag):
            entries[i * k + i] = v
        return cls(k, k, tuple(entries))

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    # --- arithmetic -------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ExactAlgError("matrix shapes %dx%d and %dx%d do not chain"
                                % (self.rows, self.cols, other.rows, other.cols))
        n, m, k = self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = None
                for t in range(k):
                    av = arow[t]
                    if av.is_zero():
                        continue
                    bv = b[t * m + j]
                    if bv.is_zero():
                        continue
                    term = av * bv
                    acc = term if acc is None else acc + term
                out.append(ZERO if acc is None else acc)
        return ExactMatrix(n, m, tuple(out))

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scaled(self, scalar) -> "ExactMatrix":
        c = _as_cyc(scalar)
        return ExactMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ExactAlgError("matrix shape mismatch")

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(self.entries[j * self.cols + i]
                                 for i in range(self.cols) for j in range(self.rows)))

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(x.conj() for x in self.entries))

    def conj_transpose(self) -> "ExactMatrix":
        return self.transpose().conj()

    def trace(self) -> CycNum:
        assert self.rows == self.cols
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i * self.cols + i]
        return acc

    # --- polynomial invariants ---------------------------------------------

    def char_poly(self) -> tuple:
        """Coefficients of det(xI - M), descending, starting with the monic 1."""
        assert self.rows == self.cols
        n = self.rows
        coeffs = [ONE]
        mk = self
        ident = ExactMatrix.identity(n)
        ck = -mk.trace()
        coeffs.append(ck)
        for k in range(2, n + 1):
            mk = self * (mk + ident.scaled(ck))
            ck = -(mk.trace() * cyc_rational(Fraction(1, k)))
            coeffs.append(ck)
        return tuple(coeffs)

    def det(self) -> CycNum:
        if self.rows == 0:
            return ONE
        cp = self.char_poly()
        last = cp[-1]
        return last if self.rows % 2 == 0 else -last

    def inverse(self) -> "ExactMatrix":
        """Inverse via Cayley-Hamilton: needs nonzero determinant."""
        cp = self.char_poly()
        c_n = cp[-1]
        if c_n.is_zero():
            raise ExactAlgError("matrix is singular")
        n = self.rows
        acc = ExactMatrix.identity(n)       # builds M^(n-1) + c1 M^(n-2) + ...
        for k in range(1, n):
            acc = self * acc + ExactMatrix.identity(n).scaled(cp[k])
        return acc.scaled(-c_n.inverse())

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                want = ONE if i == j else ZERO
                if self.entries[i * self.cols + j] != want:
                    return False
        return True

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.entries)

    def is_unitary(self) -> bool:
        return (self.conj_transpose() * self).is_identity()

    def is_orthogonal(self) -> bool:
        return (self.transpose() * self).is_identity()

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.entries)

    def commutes_with(self, other: "ExactMatrix") -> bool:
        return (self * other - other * self).is_zero()

    # --- canonical order, equality, serialization --------------------------

    def sort_key(self):
        key = self._key
        if key is None:
            key = (self.rows, self.cols, tuple(v.sort_key() for v in self.entries))
            self._key = key
        return key

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.rows, self.cols, self.entries))
            self._hash = h
        return h

    def to_json(self) -> list:
        return [[self.entries[i * self.cols + j].to_json() for j in range(self.cols)]
                for i in range(self.rows)]

    @staticmethod
    def from_json(data) -> "ExactMatrix":
        return ExactMatrix.make([[CycNum.from_json(cell) for cell in row] for row in data])

    def __repr__(self):
        return "ExactMatrix(%dx%d)" % (self.rows, self.cols)


def char_poly(m: ExactMatrix) -> tuple:
    return m.char_poly()


# --- row reduction and subspaces ---------------------------------------------


def rref(vectors) -> tuple:
    """Reduced row echelon form of a list of row vectors (tuples of CycNum).

    Returns (rows, pivot_columns); zero rows are dropped.  The output is the
    unique RREF basis of the span, so it can be compared across computations.
    """
    work = [list(v) for v in vectors]
    if not work:
        return (), ()
    width = len(work[0])
    pivots = []
    rank = 0
    for col in range(width):
        piv = None
        for r in range(rank, len(work)):
            if not work[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [inv * v for v in work[rank]]
        for r in range(len(work)):
            if r != rank and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return tuple(tuple(row) for row in work[:rank]), tuple(pivots)


class Subspace:
    """A linear subspace of an ambient coordinate space, in canonical RREF form."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: tuple, pivots: tuple):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, vectors, ambient: int) -> "Subspace":
        vectors = [tuple(_as_cyc(v) for v in vec) for vec in vectors]
        for vec in vectors:
            if len(vec) != ambient:
                raise ExactAlgError("vector length does not match ambient dimension")
        basis, pivots = rref(vectors)
        return cls(ambient, basis, pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        vec = [_as_cyc(v) for v in vector]
        if len(vec) != self.ambient:
            raise ExactAlgError("vector length does not match ambient dimension")
        for row, piv in zip(self.basis, self.pivots):
            c = vec[piv]
            if not c.is_zero():
                vec = [v - c * w for v, w in zip(vec, row)]
        return all(v.is_zero() for v in vec)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def subspace_intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if s1.ambient != s2.ambient:
        raise ExactAlgError("ambient dimensions differ")
    if s1.dim == 0 or s2.dim == 0:
        return Subspace.from_vectors([], s1.ambient)
    r1, r2 = s1.dim, s2.dim
    # columns: r1 coefficients for s1's basis, then r2 for s2's, rows: ambient
    data = []
    for i in range(s1.ambient):
        row = [s1.basis[j][i] for j in range(r1)]
        row += [-s2.basis[j][i] for j in range(r2)]
        data.append(row)
    stacked = ExactMatrix.make(data)
    combos = nullspace(stacked)
    vectors = []
    for combo in combos.basis:
        vec = [ZERO] * s1.ambient
        for j in range(r1):
            c = combo[j]
            if c.is_zero():
                continue
            for i in range(s1.ambient):
                vec[i] = vec[i] + c * s1.basis[j][i]
        vectors.append(tuple(vec))
    return Subspace.from_vectors(vectors, s1.ambient)


def nullspace(m: ExactMatrix) -> Subspace:
    """Kernel {x : M x = 0} as a Subspace of dimension m.cols."""
    rows = [m.row(i) for i in range(m.rows)]
    basis, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vectors = []
    for f in free:
        vec = [ZERO] * m.cols
        vec[f] = ONE
        for row, piv in zip(basis, pivots):
            vec[piv] = -row[f]
        vectors.append(tuple(vec))
    return Subspace.from_vectors(vectors, m.cols)


def commutant(mats) -> Subspace:
    """Matrices X (flattened row-major, ambient N*N) with XM = MX for all inputs."""
    mats = list(mats)
    if not mats:
        raise ExactAlgError("commutant of an empty family is the full space; pass [I]")
    n = mats[0].rows
    for m in mats:
        if m.rows != n or m.cols != n:
            raise ExactAlgError("commutant needs square matrices of one size")
    constraint_rows = []
    for m in mats:
        for i in range(n):
            for j in range(n):
                row = [ZERO] * (n * n)
                # entry (i, j) of XM - MX as a linear form in X[a, b]
                for b in range(n):
                    row[i * n + b] = row[i * n + b] + m[b, j]
                for a in range(n):
                    row[a * n + j] = row[a * n + j] - m[i, a]
                constraint_rows.append(row)
    stacked = ExactMatrix.make(constraint_rows)
    return nullspace(stacked)


def flatten_matrix(m: ExactMatrix) -> tuple:
    return m.entries


def unflatten_matrix(vec, n: int) -> ExactMatrix:
    vec = tuple(_as_cyc(v) for v in vec)
    assert len(vec) == n * n
    return ExactMatrix(n, n, vec)
