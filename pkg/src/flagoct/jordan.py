"""The exceptional Jordan algebra of Hermitian 3x3 octonion matrices.

A :class:`JordanMatrix` stores the three real diagonal entries and the three
independent octonion slots of

    [[x1,      p,       q ],
     [conj(p), x2,      r ],
     [conj(q), conj(r), x3]]

with the Jordan product a o b = (ab + ba)/2 evaluated through genuine
octonion matrix products (no associativity assumed anywhere).  The module
also provides the projective-point and incidence predicates, the root-space
decomposition of traceless matrices, the cubic determinant form, and the
27x27 operator calculus (multiplication operators, bracket identities).

Canonical ordering of the 27-dimensional basis: the 3 diagonal units, then
the r-slot octonion units e1..e8, then the p-slot, then the q-slot.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .octonion import Octonion, Scalar

SLOTS = ("r", "p", "q")  # slot k carries the k-th root space, k = 1, 2, 3


class OctMatrix3:
    """A 3x3 matrix with octonion entries (not necessarily Hermitian)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Octonion]]):
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("need a 3x3 entry grid")
        self.rows: Tuple[Tuple[Octonion, ...], ...] = tuple(tuple(r) for r in rows)

    @staticmethod
    def zero() -> "OctMatrix3":
        z = Octonion.zero()
        return OctMatrix3(((z, z, z), (z, z, z), (z, z, z)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OctMatrix3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "OctMatrix3") -> "OctMatrix3":
        return OctMatrix3(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "OctMatrix3") -> "OctMatrix3":
        return OctMatrix3(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> "OctMatrix3":
        return OctMatrix3(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c: Scalar) -> "OctMatrix3":
        return OctMatrix3(tuple(tuple(a.scale(c) for a in r) for r in self.rows))

    def __mul__(self, other: "OctMatrix3") -> "OctMatrix3":
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = Octonion.zero()
                for k in range(3):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return OctMatrix3(tuple(out))

    def conjugate_transpose(self) -> "OctMatrix3":
        return OctMatrix3(
            tuple(
                tuple(self.rows[j][i].conjugate() for j in range(3)) for i in range(3)
            )
        )

    def trace(self) -> Octonion:
        t = Octonion.zero()
        for i in range(3):
            t = t + self.rows[i][i]
        return t

    def commutator(self, other: "OctMatrix3") -> "OctMatrix3":
        return self * other - other * self

    def is_hermitian(self) -> bool:
        return self == self.conjugate_transpose() and all(
            self.rows[i][i].is_real() for i in range(3)
        )

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)


@dataclass(frozen=True)
class JordanMatrix:
    """A Hermitian 3x3 octonion matrix in slot coordinates."""

    x1: Fraction
    x2: Fraction
    x3: Fraction
    p: Octonion
    q: Octonion
    r: Octonion

    def __post_init__(self) -> None:
        for name in ("x1", "x2", "x3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero() -> "JordanMatrix":
        z = Octonion.zero()
        return JordanMatrix(Fraction(0), Fraction(0), Fraction(0), z, z, z)

    @staticmethod
    def identity() -> "JordanMatrix":
        z = Octonion.zero()
        return JordanMatrix(Fraction(1), Fraction(1), Fraction(1), z, z, z)

    @staticmethod
    def diagonal(x1: Scalar, x2: Scalar, x3: Scalar) -> "JordanMatrix":
        z = Octonion.zero()
        return JordanMatrix(Fraction(x1), Fraction(x2), Fraction(x3), z, z, z)

    @staticmethod
    def diag_unit(k: int) -> "JordanMatrix":
        """The diagonal idempotent with a single 1 in position k (1-based)."""
        if k not in (1, 2, 3):
            raise ValueError("diagonal index must be 1..3")
        vals = [Fraction(0)] * 3
        vals[k - 1] = Fraction(1)
        return JordanMatrix.diagonal(*vals)

    @staticmethod
    def from_slots(
        x1: Scalar = 0,
        x2: Scalar = 0,
        x3: Scalar = 0,
        p: Optional[Octonion] = None,
        q: Optional[Octonion] = None,
        r: Optional[Octonion] = None,
    ) -> "JordanMatrix":
        z = Octonion.zero()
        return JordanMatrix(
            Fraction(x1), Fraction(x2), Fraction(x3), p or z, q or z, r or z
        )

    @staticmethod
    def slot_unit(slot: str, i: int) -> "JordanMatrix":
        """Basis element with octonion unit e_i in the named slot (p, q or r)."""
        if slot not in SLOTS:
            raise ValueError(f"slot must be one of {SLOTS}, got {slot!r}")
        return JordanMatrix.from_slots(**{slot: Octonion.unit(i)})

    @staticmethod
    def from_matrix(m: OctMatrix3) -> "JordanMatrix":
        if not m.is_hermitian():
            raise ValueError("matrix is not Hermitian with real diagonal")
        return JordanMatrix(
            m.rows[0][0].real_part(),
            m.rows[1][1].real_part(),
            m.rows[2][2].real_part(),
            m.rows[0][1],
            m.rows[0][2],
            m.rows[1][2],
        )

    @staticmethod
    def random_traceless(rng: random.Random, span: int = 3) -> "JordanMatrix":
        x1 = Fraction(rng.randint(-span, span))
        x2 = Fraction(rng.randint(-span, span))
        return JordanMatrix.from_slots(
            x1,
            x2,
            -x1 - x2,
            p=Octonion.random(rng, span),
            q=Octonion.random(rng, span),
            r=Octonion.random(rng, span),
        )

    # -- views -----------------------------------------------------------------

    def to_matrix(self) -> OctMatrix3:
        d1 = Octonion.scalar(self.x1)
        d2 = Octonion.scalar(self.x2)
        d3 = Octonion.scalar(self.x3)
        return OctMatrix3(
            (
                (d1, self.p, self.q),
                (self.p.conjugate(), d2, self.r),
                (self.q.conjugate(), self.r.conjugate(), d3),
            )
        )

    def trace(self) -> Fraction:
        return self.x1 + self.x2 + self.x3

    def is_diagonal(self) -> bool:
        return self.p.is_zero() and self.q.is_zero() and self.r.is_zero()

    def slot(self, name: str) -> Octonion:
        if name not in SLOTS:
            raise ValueError(f"slot must be one of {SLOTS}, got {name!r}")
        return getattr(self, name)

    def coordinates(self) -> Tuple[Fraction, ...]:
        """Coordinates on the canonical 27-element basis."""
        return (
            (self.x1, self.x2, self.x3)
            + self.r.coords
            + self.p.coords
            + self.q.coords
        )

    @staticmethod
    def from_coordinates(coords: Sequence[Scalar]) -> "JordanMatrix":
        if len(coords) != 27:
            raise ValueError("need 27 coordinates")
        c = [Fraction(v) for v in coords]
        return JordanMatrix(
            c[0],
            c[1],
            c[2],
            p=Octonion.from_coords(c[11:19]),
            q=Octonion.from_coords(c[19:27]),
            r=Octonion.from_coords(c[3:11]),
        )

    # -- linear structure --------------------------------------------------------

    def __add__(self, other: "JordanMatrix") -> "JordanMatrix":
        return JordanMatrix(
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
            self.p + other.p,
            self.q + other.q,
            self.r + other.r,
        )

    def __sub__(self, other: "JordanMatrix") -> "JordanMatrix":
        return self + (-other)

    def __neg__(self) -> "JordanMatrix":
        return JordanMatrix(-self.x1, -self.x2, -self.x3, -self.p, -self.q, -self.r)

    def scale(self, c: Scalar) -> "JordanMatrix":
        c = Fraction(c)
        return JordanMatrix(
            c * self.x1,
            c * self.x2,
            c * self.x3,
            self.p.scale(c),
            self.q.scale(c),
            self.r.scale(c),
        )

    def is_zero(self) -> bool:
        return self == JordanMatrix.zero()

    # -- multiplicative structure ---------------------------------------------

    def jordan(self, other: "JordanMatrix") -> "JordanMatrix":
        """The Jordan product (ab + ba) / 2."""
        a, b = self.to_matrix(), other.to_matrix()
        return JordanMatrix.from_matrix((a * b + b * a).scale(Fraction(1, 2)))

    def square(self) -> "JordanMatrix":
        a = self.to_matrix()
        return JordanMatrix.from_matrix(a * a)

    def trace_form(self, other: "JordanMatrix") -> Fraction:
        """The symmetric pairing Re(tr(ab)) via the genuine matrix product."""
        return (self.to_matrix() * other.to_matrix()).trace().real_part()


def jordan_product(a: JordanMatrix, b: JordanMatrix) -> JordanMatrix:
    return a.jordan(b)


def is_projective_point(a: JordanMatrix) -> bool:
    """True iff the matrix squares to itself and has trace one."""
    return a.trace() == 1 and a.square() == a


def is_incident(a: JordanMatrix, b: JordanMatrix) -> bool:
    """Incidence predicate Re(tr(ab)) == 0; both inputs must be points."""
    if not is_projective_point(a) or not is_projective_point(b):
        raise ValueError("incidence is defined only for projective points")
    return a.trace_form(b) == 0


def jordan_determinant(a: JordanMatrix) -> Fraction:
    """Cubic form tr(aoaoa)/3 - tr(aoa) tr(a)/2 + tr(a)^3 / 6."""
    sq = a.jordan(a)
    cube = a.jordan(sq)
    t = a.trace()
    return (
        Fraction(1, 3) * cube.trace()
        - Fraction(1, 2) * sq.trace() * t
        + Fraction(1, 6) * t**3
    )


# -- root-space decomposition of traceless matrices ---------------------------


def gamma_value(k: int, x: JordanMatrix) -> Fraction:
    """The k-th diagonal root functional: x2-x3, x1-x2, x1-x3 for k=1,2,3."""
    if k == 1:
        return x.x2 - x.x3
    if k == 2:
        return x.x1 - x.x2
    if k == 3:
        return x.x1 - x.x3
    raise ValueError("root index must be 1..3")


def slot_of_root(k: int) -> str:
    """Slot letter carrying the k-th root space: r, p, q for k = 1, 2, 3."""
    if k not in (1, 2, 3):
        raise ValueError("root index must be 1..3")
    return SLOTS[k - 1]


def decompose(
    a: JordanMatrix,
) -> Tuple[JordanMatrix, JordanMatrix, JordanMatrix, JordanMatrix]:
    """Split a traceless matrix into diagonal part plus the three slot parts."""
    if a.trace() != 0:
        raise ValueError("decomposition is defined for traceless matrices only")
    diag = JordanMatrix.diagonal(a.x1, a.x2, a.x3)
    h1 = JordanMatrix.from_slots(r=a.r)
    h2 = JordanMatrix.from_slots(p=a.p)
    h3 = JordanMatrix.from_slots(q=a.q)
    return diag, h1, h2, h3


def root_space_check(x: JordanMatrix, a: JordanMatrix, k: int) -> bool:
    """Verify [x,[x,a]] == gamma_k(x)^2 * a by exact matrix commutators."""
    if not x.is_diagonal() or x.trace() != 0:
        raise ValueError("x must be diagonal and traceless")
    slot = slot_of_root(k)
    if a.x1 or a.x2 or a.x3 or any(
        not a.slot(s).is_zero() for s in SLOTS if s != slot
    ):
        raise ValueError(f"a must be supported on the {slot!r} slot only")
    xm, am = x.to_matrix(), a.to_matrix()
    double = xm.commutator(xm.commutator(am))
    return double == am.scale(gamma_value(k, x) ** 2)


# -- 27x27 operator calculus ---------------------------------------------------


def canonical_basis() -> Tuple[JordanMatrix, ...]:
    basis: List[JordanMatrix] = [JordanMatrix.diag_unit(k) for k in (1, 2, 3)]
    for slot in SLOTS:
        basis.extend(JordanMatrix.slot_unit(slot, i) for i in range(1, 9))
    return tuple(basis)


_CANONICAL_BASIS = canonical_basis()


class LinearOperator27:
    """A linear endomorphism of the 27-dimensional space, as exact rows."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Fraction]]):
        if len(rows) != 27 or any(len(r) != 27 for r in rows):
            raise ValueError("need a 27x27 matrix")
        self.rows: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(c) for c in r) for r in rows
        )

    @staticmethod
    def zero() -> "LinearOperator27":
        return LinearOperator27(((Fraction(0),) * 27,) * 27)

    @staticmethod
    def from_function(fn) -> "LinearOperator27":
        """Matrix of a linear map JordanMatrix -> JordanMatrix (columns = images)."""
        cols = [fn(b).coordinates() for b in _CANONICAL_BASIS]
        rows = [[cols[j][i] for j in range(27)] for i in range(27)]
        return LinearOperator27(rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearOperator27):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "LinearOperator27") -> "LinearOperator27":
        return LinearOperator27(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "LinearOperator27") -> "LinearOperator27":
        return LinearOperator27(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def scale(self, c: Scalar) -> "LinearOperator27":
        c = Fraction(c)
        return LinearOperator27(tuple(tuple(c * a for a in r) for r in self.rows))

    def _scaled_ints(self) -> Tuple[List[List[int]], int]:
        """Integer matrix plus common denominator (exact)."""
        denom = 1
        for r in self.rows:
            for v in r:
                d = v.denominator
                denom = denom * d // gcd(denom, d)
        ints = [
            [v.numerator * (denom // v.denominator) for v in r] for r in self.rows
        ]
        return ints, denom

    def __mul__(self, other: "LinearOperator27") -> "LinearOperator27":
        # integer matrix product with zero skipping, then one exact rescale
        a, da = self._scaled_ints()
        b, db = other._scaled_ints()
        out = [[0] * 27 for _ in range(27)]
        for i in range(27):
            arow = a[i]
            orow = out[i]
            for k in range(27):
                av = arow[k]
                if av:
                    brow = b[k]
                    for j in range(27):
                        bv = brow[j]
                        if bv:
                            orow[j] += av * bv
        d = da * db
        return LinearOperator27(
            [[Fraction(v, d) for v in row] for row in out]
        )

    def commutator(self, other: "LinearOperator27") -> "LinearOperator27":
        return self * other - other * self

    def apply(self, a: JordanMatrix) -> JordanMatrix:
        v = a.coordinates()
        return JordanMatrix.from_coordinates(
            tuple(sum(c * x for c, x in zip(row, v)) for row in self.rows)
        )

    def is_zero(self) -> bool:
        return all(c == 0 for r in self.rows for c in r)


_STRUCTURE: List[List[List[Tuple[int, Fraction]]]] = []


def _structure_constants() -> List[List[List[Tuple[int, Fraction]]]]:
    """Sparse Jordan structure tensor over the canonical basis.

    ``S[i][j]`` lists (k, c) with basis_i o basis_j = sum c * basis_k.
    Computed once from genuine matrix products, then reused to assemble
    multiplication operators without repeated octonion arithmetic.
    """
    if not _STRUCTURE:
        basis = canonical_basis()
        for i in range(27):
            row = []
            for j in range(27):
                coords = basis[i].jordan(basis[j]).coordinates()
                row.append([(k, c) for k, c in enumerate(coords) if c])
            _STRUCTURE.append(row)
    return _STRUCTURE


def hat_operator(a: JordanMatrix) -> LinearOperator27:
    """Jordan multiplication operator y -> a o y."""
    struct = _structure_constants()
    coords = a.coordinates()
    rows = [[Fraction(0)] * 27 for _ in range(27)]
    for i, ai in enumerate(coords):
        if ai:
            srow = struct[i]
            for j in range(27):
                for k, c in srow[j]:
                    rows[k][j] += ai * c
    return LinearOperator27(rows)


def tilde_operator(s: OctMatrix3) -> LinearOperator27:
    """Matrix-commutator operator y -> [s, y] for skew s (maps Hermitian to
    Hermitian; from_matrix validates that on every basis image)."""
    return LinearOperator27.from_function(
        lambda y: JordanMatrix.from_matrix(s.commutator(y.to_matrix()))
    )


def matrix_commutator(a: JordanMatrix, b: JordanMatrix) -> OctMatrix3:
    """The genuine matrix commutator [a, b] (skew, generally not Hermitian)."""
    return a.to_matrix().commutator(b.to_matrix())


def bracket_lemma_parts(x: JordanMatrix, a: JordanMatrix) -> Tuple[bool, bool]:
    """Exact operator identities for diagonal traceless x and Hermitian a:

    (i)  [hat(x), hat(a)] equals 1/4 of the commutator operator of [x, a];
    (ii) [hat(x), [hat(x), hat(a)]] equals 1/4 of hat([x, [x, a]]).
    """
    if not x.is_diagonal() or x.trace() != 0:
        raise ValueError("x must be diagonal and traceless")
    hx, ha = hat_operator(x), hat_operator(a)
    inner = hx.commutator(ha)
    xa = matrix_commutator(x, a)
    first = inner == tilde_operator(xa).scale(Fraction(1, 4))
    double = JordanMatrix.from_matrix(x.to_matrix().commutator(xa))
    second = hx.commutator(inner) == hat_operator(double).scale(Fraction(1, 4))
    return first, second


def bracket_lemma_check(x: JordanMatrix, a: JordanMatrix) -> bool:
    first, second = bracket_lemma_parts(x, a)
    return first and second


def operator_eigenvalue_check(x: JordanMatrix, k: int) -> bool:
    """For diagonal traceless x and every unit a in slot k, verify the double
    operator bracket scales hat(a) by gamma_k(x)^2 / 4."""
    if not x.is_diagonal() or x.trace() != 0:
        raise ValueError("x must be diagonal and traceless")
    hx = hat_operator(x)
    lam = gamma_value(k, x) ** 2 / 4
    for i in range(1, 9):
        a = JordanMatrix.slot_unit(slot_of_root(k), i)
        ha = hat_operator(a)
        if hx.commutator(hx.commutator(ha)) != ha.scale(lam):
            return False
    return True


# -- textual form ---------------------------------------------------------------


def format_jordan(a: JordanMatrix) -> str:
    """Canonical text form `x1,x2,x3; p=(..8 entries..); q=(..); r=(..)`."""

    def oct_text(o: Octonion) -> str:
        return "(" + ",".join(str(c) for c in o.coords) + ")"

    return (
        f"{a.x1},{a.x2},{a.x3}; "
        f"p={oct_text(a.p)}; q={oct_text(a.q)}; r={oct_text(a.r)}"
    )


_JORDAN_RE = re.compile(
    r"^\s*(?P<x1>[^,;]+),(?P<x2>[^,;]+),(?P<x3>[^,;]+)\s*;"
    r"\s*p\s*=\s*\((?P<p>[^)]*)\)\s*;"
    r"\s*q\s*=\s*\((?P<q>[^)]*)\)\s*;"
    r"\s*r\s*=\s*\((?P<r>[^)]*)\)\s*$"
)


def parse_jordan(text: str) -> JordanMatrix:
    """Parse the canonical text form produced by :func:`format_jordan`."""
    m = _JORDAN_RE.match(text)
    if not m:
        raise ValueError(
            "expected `x1,x2,x3; p=(a1,..,a8); q=(..); r=(..)` with rational entries"
        )

    def frac(s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except ValueError as exc:
            raise ValueError(f"bad rational entry {s.strip()!r}") from exc

    def oct_of(group: str) -> Octonion:
        parts = m.group(group).split(",")
        if len(parts) != 8:
            raise ValueError(f"slot {group} needs 8 entries, got {len(parts)}")
        return Octonion.from_coords([frac(s) for s in parts])

    return JordanMatrix.from_slots(
        frac(m.group("x1")),
        frac(m.group("x2")),
        frac(m.group("x3")),
        p=oct_of("p"),
        q=oct_of("q"),
        r=oct_of("r"),
    )
