"""Ambient compact groups: products of SU(n), Sp(1), SO(3), and central quotients.

Group elements are exact objects: an SU(n) or SO(3) component is an
ExactMatrix, an Sp(1) component is a unit quaternion with real cyclotomic
components.  An element of a product is an AmbientElement (tuple of
components); an element of a central quotient is a QuotElement storing the
canonical coset representative (minimum of the coset under the deterministic
sort key), so equality and hashing are plain structural comparisons.

Component products are memoized in a module cache: group-theoretic phases
(closures, homomorphism verification, cocycle tables) repeat the same factor
pairs constantly, and each distinct pair is only ever computed once.
"""

from __future__ import annotations

import itertools
import os

from .exactalg import (
    CycNum,
    ExactAlgError,
    ExactMatrix,
    ONE,
    ZERO,
    cyc_rational,
    cyc_zeta,
)
from .exactalg.cyclotomic import _coerce


class GroupError(ExactAlgError):
    """An element failed membership validation for its declared group."""


# --- quaternions --------------------------------------------------------------


class Quat:
    """Quaternion a + b i + c j + d k with real cyclotomic components."""

    __slots__ = ("a", "b", "c", "d", "_key", "_hash")

    def __init__(self, a: CycNum, b: CycNum, c: CycNum, d: CycNum):
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self._key = None
        self._hash = None

    @classmethod
    def make(cls, a, b, c, d) -> "Quat":
        comps = []
        for v in (a, b, c, d):
            cv = _coerce(v)
            if cv is NotImplemented:
                raise GroupError("quaternion component %r is not an exact scalar" % (v,))
            comps.append(cv)
        for cv in comps:
            if not cv.is_real():
                raise GroupError("quaternion components must be real cyclotomic values")
        return cls(*comps)

    @classmethod
    def one(cls) -> "Quat":
        return _QUAT_ONE

    def __mul__(self, other: "Quat") -> "Quat":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quat(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def conj(self) -> "Quat":
        return Quat(self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Quat":
        n = self.norm_sq()
        if n == ONE:
            return self.conj()
        if n.is_zero():
            raise GroupError("the zero quaternion has no inverse")
        scale = n.inverse()
        flip = self.conj()
        return Quat(flip.a * scale, flip.b * scale, flip.c * scale, flip.d * scale)

    def __neg__(self) -> "Quat":
        return Quat(-self.a, -self.b, -self.c, -self.d)

    def norm_sq(self) -> CycNum:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def is_unit(self) -> bool:
        return self.norm_sq() == ONE

    def real_part(self) -> CycNum:
        return self.a

    def is_identity(self) -> bool:
        return self.a == ONE and self.b.is_zero() and self.c.is_zero() and self.d.is_zero()

    def sort_key(self):
        key = self._key
        if key is None:
            key = (self.a.sort_key(), self.b.sort_key(), self.c.sort_key(), self.d.sort_key())
            self._key = key
        return key

    def __eq__(self, other):
        if not isinstance(other, Quat):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.a, self.b, self.c, self.d))
            self._hash = h
        return h

    def to_json(self) -> dict:
        return {"q": [self.a.to_json(), self.b.to_json(), self.c.to_json(), self.d.to_json()]}

    @staticmethod
    def from_json(obj: dict) -> "Quat":
        comps = obj["q"]
        if len(comps) != 4:
            raise GroupError("quaternion JSON needs exactly 4 components")
        return Quat.make(*(CycNum.from_json(c) for c in comps))

    def __repr__(self):
        return "Quat(%r, %r, %r, %r)" % (self.a, self.b, self.c, self.d)


_QUAT_ONE = Quat(ONE, ZERO, ZERO, ZERO)
QUAT_I = Quat(ZERO, ONE, ZERO, ZERO)
QUAT_J = Quat(ZERO, ZERO, ONE, ZERO)
QUAT_K = Quat(ZERO, ZERO, ZERO, ONE)


def adjoint_to_so3(q: Quat) -> ExactMatrix:
    """Rotation matrix of v -> q v q^-1 on the span of i, j, k (unit q).

    Columns are the images of i, j, k, so for example (1+i)/sqrt(2) maps to the
    quarter turn [[1,0,0],[0,0,-1],[0,1,0]].
    """
    a, b, c, d = q.a, q.b, q.c, q.d
    two = cyc_rational(2)
    aa, bb, cc, dd = a * a, b * b, c * c, d * d
    return ExactMatrix.make([
        [aa + bb - cc - dd, two * (b * c - a * d), two * (b * d + a * c)],
        [two * (b * c + a * d), aa - bb + cc - dd, two * (c * d - a * b)],
        [two * (b * d - a * c), two * (c * d + a * b), aa - bb - cc + dd],
    ])


# --- factors ------------------------------------------------------------------


class Factor:
    """One ambient factor: kind is "SU" (with size n >= 2), "Sp1" or "SO3"."""

    __slots__ = ("kind", "n")

    def __init__(self, kind: str, n: int = 0):
        if kind == "SU":
            if n < 2:
                raise GroupError("SU factor needs n >= 2")
        elif kind in ("Sp1", "SO3"):
            n = 0
        else:
            raise GroupError("unknown factor kind %r" % (kind,))
        self.kind = kind
        self.n = n

    def identity(self):
        if self.kind == "SU":
            return ExactMatrix.identity(self.n)
        if self.kind == "Sp1":
            return Quat.one()
        return ExactMatrix.identity(3)

    def validate(self, part) -> None:
        if self.kind == "Sp1":
            if not isinstance(part, Quat):
                raise GroupError("Sp(1) component must be a quaternion")
            if not part.is_unit():
                raise GroupError("Sp(1) component is not a unit quaternion")
            return
        if not isinstance(part, ExactMatrix):
            raise GroupError("%s component must be a matrix" % self.describe())
        if self.kind == "SU":
            if part.rows != self.n or part.cols != self.n:
                raise GroupError("SU(%d) component has wrong shape" % self.n)
            if not part.is_unitary():
                raise GroupError("SU(%d) component is not unitary" % self.n)
            if part.det() != ONE:
                raise GroupError("SU(%d) component has determinant != 1" % self.n)
            return
        if part.rows != 3 or part.cols != 3:
            raise GroupError("SO(3) component has wrong shape")
        if not part.is_real():
            raise GroupError("SO(3) component has non-real entries")
        if not part.is_orthogonal():
            raise GroupError("SO(3) component is not orthogonal")
        if part.det() != ONE:
            raise GroupError("SO(3) component has determinant != 1")

    def center_parts(self) -> tuple:
        """All central elements of this factor (they are finitely many)."""
        if self.kind == "SU":
            z = cyc_zeta(self.n)
            return tuple(ExactMatrix.identity(self.n).scaled(z ** k) for k in range(self.n))
        if self.kind == "Sp1":
            return (Quat.one(), -Quat.one())
        return (ExactMatrix.identity(3),)

    def part_inverse(self, part):
        if self.kind == "Sp1":
            return part.conj()
        return part.conj_transpose()

    def describe(self) -> str:
        if self.kind == "SU":
            return "SU(%d)" % self.n
        return "Sp(1)" if self.kind == "Sp1" else "SO(3)"

    def part_to_json(self, part):
        return part.to_json()

    def part_from_json(self, obj):
        if self.kind == "Sp1":
            return Quat.from_json(obj)
        return ExactMatrix.from_json(obj)

    def __repr__(self):
        return "Factor(%s)" % self.describe()


def su_factor(n: int) -> Factor:
    return Factor("SU", n)


def sp1_factor() -> Factor:
    return Factor("Sp1")


def so3_factor() -> Factor:
    return Factor("SO3")


# --- ambient elements ---------------------------------------------------------


_MUL_CACHE: dict = {}
_MUL_CACHE_LIMIT = int(os.environ.get("ACCEPTCERT_MULCACHE", "400000"))


def _memo_mul(a, b):
    key = (a, b)
    got = _MUL_CACHE.get(key)
    if got is None:
        got = a * b
        if len(_MUL_CACHE) >= _MUL_CACHE_LIMIT:
            _MUL_CACHE.clear()
        _MUL_CACHE[key] = got
    return got


class AmbientElement:
    """Element of a product of factors; components multiply independently."""

    __slots__ = ("parts", "_key", "_hash")

    def __init__(self, parts: tuple):
        self.parts = parts
        self._key = None
        self._hash = None

    def __mul__(self, other: "AmbientElement") -> "AmbientElement":
        return AmbientElement(tuple(
            _memo_mul(x, y) for x, y in zip(self.parts, other.parts)
        ))

    def inverse(self) -> "AmbientElement":
        out = []
        for part in self.parts:
            if isinstance(part, Quat):
                out.append(part.conj())
            else:
                out.append(part.conj_transpose())
        return AmbientElement(tuple(out))

    def is_identity(self) -> bool:
        for part in self.parts:
            if isinstance(part, Quat):
                if not part.is_identity():
                    return False
            elif not part.is_identity():
                return False
        return True

    def sort_key(self):
        key = self._key
        if key is None:
            key = tuple(p.sort_key() for p in self.parts)
            self._key = key
        return key

    def __eq__(self, other):
        if not isinstance(other, AmbientElement):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.parts)
            self._hash = h
        return h

    def __repr__(self):
        return "AmbientElement(%d parts)" % len(self.parts)


class QuotElement:
    """Element of an ambient group modulo a finite central subgroup.

    Stores the canonical representative: the minimum of the coset under the
    deterministic sort key.  Two cosets are equal iff their reps are equal.
    """

    __slots__ = ("group", "rep", "_hash")

    def __init__(self, group: "GroupSpec", rep: AmbientElement):
        self.group = group
        self.rep = rep
        self._hash = None

    def __mul__(self, other: "QuotElement") -> "QuotElement":
        assert self.group is other.group
        return QuotElement(self.group, self.group.coset_rep(self.rep * other.rep))

    def inverse(self) -> "QuotElement":
        return QuotElement(self.group, self.group.coset_rep(self.rep.inverse()))

    def is_identity(self) -> bool:
        return self.rep.is_identity()

    def sort_key(self):
        return self.rep.sort_key()

    def __eq__(self, other):
        if not isinstance(other, QuotElement):
            return NotImplemented
        return self.group is other.group and self.rep == other.rep

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.rep)
            self._hash = h
        return h

    def __repr__(self):
        return "QuotElement(%r)" % (self.rep,)


# --- target group layout ------------------------------------------------------


class GroupSpec:
    """A product of classical factors, optionally modulo a central subgroup.

    ``center_gens`` is a list of part tuples generating the subgroup Z to
    quotient by; each generator must be central in the ambient product (scalar
    in SU factors, +-1 in Sp(1) factors, identity in SO(3) factors).  The full
    subgroup is enumerated at construction.
    """

    def __init__(self, factors, center_gens=()):
        self.factors = tuple(factors)
        if not self.factors:
            raise GroupError("a group needs at least one factor")
        gens = []
        for parts in center_gens:
            elem = self.element(parts, validate=False)
            self._validate_central(elem)
            gens.append(elem)
        self.z_subgroup = self._close_center(gens)
        self.is_quotient = len(self.z_subgroup) > 1

    # construction helpers

    def element(self, parts, validate: bool = True) -> AmbientElement:
        parts = tuple(parts)
        if len(parts) != len(self.factors):
            raise GroupError("expected %d components, got %d"
                             % (len(self.factors), len(parts)))
        if validate:
            for factor, part in zip(self.factors, parts):
                factor.validate(part)
        return AmbientElement(parts)

    def identity_ambient(self) -> AmbientElement:
        return AmbientElement(tuple(f.identity() for f in self.factors))

    def _validate_central(self, elem: AmbientElement) -> None:
        for factor, part in zip(self.factors, elem.parts):
            centrals = factor.center_parts()
            if part not in centrals:
                raise GroupError(
                    "component is not central in %s" % factor.describe()
                )
            factor.validate(part)

    def _close_center(self, gens) -> tuple:
        ident = self.identity_ambient()
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen, key=lambda e: e.sort_key()))

    # quotient structure

    def coset_rep(self, x: AmbientElement) -> AmbientElement:
        if not self.is_quotient:
            return x
        best = None
        for z in self.z_subgroup:
            cand = z * x
            if best is None or cand.sort_key() < best.sort_key():
                best = cand
        return best

    def wrap(self, x: AmbientElement):
        """Group element for the ambient x (a QuotElement when Z is nontrivial)."""
        if not self.is_quotient:
            return x
        return QuotElement(self, self.coset_rep(x))

    def wrap_parts(self, parts, validate: bool = True):
        return self.wrap(self.element(parts, validate=validate))

    def identity(self):
        return self.wrap(self.identity_ambient())

    def lifts(self, x) -> tuple:
        """All ambient preimages of a group element (the coset Z times rep)."""
        amb = self.ambient_of(x)
        if not self.is_quotient:
            return (amb,)
        return tuple(z * amb for z in self.z_subgroup)

    @staticmethod
    def ambient_of(x) -> AmbientElement:
        return x.rep if isinstance(x, QuotElement) else x

    def canonical_lift(self, x) -> AmbientElement:
        """The canonical ambient representative (minimal in its Z-coset)."""
        return self.ambient_of(x)

    # centers

    def ambient_center_elements(self) -> tuple:
        """All central elements of the ambient product (a finite set)."""
        per_factor = [f.center_parts() for f in self.factors]
        return tuple(AmbientElement(combo) for combo in itertools.product(*per_factor))

    def center_elements(self) -> tuple:
        """Center of the group itself: ambient center modulo Z, deduplicated.

        The ambient product is connected, so the center of the quotient is the
        image of the ambient center.
        """
        seen = []
        out = []
        for amb in self.ambient_center_elements():
            w = self.wrap(amb)
            if w not in seen:
                seen.append(w)
                out.append(w)
        return tuple(sorted(out, key=lambda e: e.sort_key()))

    # serialization

    def element_to_json(self, x) -> list:
        amb = self.ambient_of(x)
        return [f.part_to_json(p) for f, p in zip(self.factors, amb.parts)]

    def element_from_json(self, data, validate: bool = True):
        if len(data) != len(self.factors):
            raise GroupError("expected %d components, got %d"
                             % (len(self.factors), len(data)))
        parts = tuple(f.part_from_json(obj) for f, obj in zip(self.factors, data))
        return self.wrap_parts(parts, validate=validate)

    def describe(self) -> str:
        base = " x ".join(f.describe() for f in self.factors)
        if self.is_quotient:
            return "(%s) / Z with |Z| = %d" % (base, len(self.z_subgroup))
        return base

    def __repr__(self):
        return "GroupSpec(%s)" % self.describe()
