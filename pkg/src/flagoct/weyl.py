"""Weight lattice, root systems and reflection groups for Spin(8) inside F4.

Weights live in exact L-coordinates (the standard orthonormal basis of the
rank-4 weight space).  The lattice of interest is the span of the four
weights rho_1 = L1, rho_2 = L1+L2, rho_3 = w5-L4, rho_4 = w5 where
w5 = (L1+L2+L3+L4)/2: concretely, all-integer or all-half-integer vectors.

Reflection groups are generated exactly as sets of 4x4 rational orthogonal
matrices (breadth-first closure with a hard element bound).  The quotient
W_F4 / W_Spin(8) is modelled by the order-6 group generated by the
reflections in w4, w5-w4 and w5, identified with the symmetric group on
{1,2,3}; the small A2 system of the rank-2 symmetric space (functionals
gamma_1 = x2-x3, gamma_2 = x1-x2, gamma_3 = x1-x3 on diagonal slots) is kept
separate, with its own inversion-set bookkeeping.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .poly import ResourceLimitError

Scalar = Union[int, Fraction]

GROUP_ENUMERATION_BOUND = 2000


@dataclass(frozen=True)
class Weight:
    """A weight-space vector in exact L-coordinates."""

    coords: Tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.coords) != 4:
            raise ValueError("weights have 4 coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @staticmethod
    def of(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> "Weight":
        return Weight((Fraction(a), Fraction(b), Fraction(c), Fraction(d)))

    @staticmethod
    def zero() -> "Weight":
        return Weight.of(0, 0, 0, 0)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, c: Scalar) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords))

    def dot(self, other: "Weight") -> Fraction:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_lattice(self) -> bool:
        """Membership in the lattice spanned by rho_1..rho_4."""
        ints = all(c.denominator == 1 for c in self.coords)
        halves = all(c.denominator == 2 for c in self.coords)
        return ints or halves

    def rho_coordinates(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """Coordinates with respect to the basis rho_1..rho_4 (exact)."""
        w1, w2, w3, w4 = self.coords
        return (w1 - w2, w2 - w3, w3 - w4, w3 + w4)


def L(i: int) -> Weight:
    """The i-th standard coordinate weight, 1-based."""
    if not 1 <= i <= 4:
        raise ValueError("index must be 1..4")
    coords = [Fraction(0)] * 4
    coords[i - 1] = Fraction(1)
    return Weight(tuple(coords))


def omega(j: int) -> Weight:
    """Lattice generators: omega(i) = L(i) for i<=4, omega(5) the half-sum."""
    if 1 <= j <= 4:
        return L(j)
    if j == 5:
        return Weight.of(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    raise ValueError("index must be 1..5")


def rho(j: int) -> Weight:
    """The degree-2 polynomial generators' weights: L1, L1+L2, w5-L4, w5."""
    if j == 1:
        return L(1)
    if j == 2:
        return L(1) + L(2)
    if j == 3:
        return omega(5) - L(4)
    if j == 4:
        return omega(5)
    raise ValueError("index must be 1..4")


# -- root systems ---------------------------------------------------------------


@dataclass(frozen=True)
class RootSystem:
    roots: FrozenSet[Weight]
    simple: Tuple[Weight, ...]

    def positive(self) -> FrozenSet[Weight]:
        """Roots that are nonnegative integer combinations of the simple ones."""
        out = []
        for root in self.roots:
            coeffs = simple_root_coefficients(root, self.simple)
            if coeffs is not None and all(c >= 0 for c in coeffs):
                out.append(root)
        return frozenset(out)


def simple_root_coefficients(
    v: Weight, simple: Sequence[Weight]
) -> Optional[Tuple[Fraction, ...]]:
    """Solve v = sum c_i simple_i exactly; None if the system is unsolvable."""
    n = len(simple)
    # Gaussian elimination on the 4 x n system with right-hand side v.
    rows = [[simple[j].coords[i] for j in range(n)] + [v.coords[i]] for i in range(4)]
    pivots: List[Tuple[int, int]] = []
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, 4) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(4):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append((rank, col))
        rank += 1
    for r in range(rank, 4):
        if rows[r][n] != 0:
            return None
    coeffs = [Fraction(0)] * n
    for r, c in pivots:
        coeffs[c] = rows[r][n]
    return tuple(coeffs)


def spin8_simple_roots() -> Tuple[Weight, ...]:
    return (L(1) - L(2), L(2) - L(3), L(3) - L(4), L(3) + L(4))


def f4_simple_roots() -> Tuple[Weight, ...]:
    half = Fraction(1, 2)
    return (
        Weight.of(half, -half, -half, -half),
        L(2),
        L(3) - L(2),
        L(4) - L(3),
    )


def spin8_roots() -> FrozenSet[Weight]:
    """The 24 roots +-L_i +- L_j (i < j)."""
    out = []
    for i, j in itertools.combinations(range(1, 5), 2):
        for si in (1, -1):
            for sj in (1, -1):
                out.append(L(i).scale(si) + L(j).scale(sj))
    return frozenset(out)


def f4_short_roots() -> FrozenSet[Weight]:
    """The 24 short roots: +-L_i and all (+-L1 +- L2 +- L3 +- L4)/2."""
    out = [L(i).scale(s) for i in range(1, 5) for s in (1, -1)]
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=4):
        out.append(Weight(tuple(half * s for s in signs)))
    return frozenset(out)

def f4_roots() -> FrozenSet[Weight]:
    return spin8_roots() | f4_short_roots()


def spin8_root_system() -> RootSystem:
    return RootSystem(spin8_roots(), spin8_simple_roots())


def f4_root_system() -> RootSystem:
    return RootSystem(f4_roots(), f4_simple_roots())


# -- Weyl group elements --------------------------------------------------------

Matrix4 = Tuple[
    Tuple[Fraction, Fraction, Fraction, Fraction],
    Tuple[Fraction, Fraction, Fraction, Fraction],
    Tuple[Fraction, Fraction, Fraction, Fraction],
    Tuple[Fraction, Fraction, Fraction, Fraction],
]


@dataclass(frozen=True)
class WeylElement:
    """An exact orthogonal 4x4 matrix acting on weight space."""

    matrix: Matrix4

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.matrix)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("need a 4x4 matrix")
        object.__setattr__(self, "matrix", rows)

    @staticmethod
    def identity() -> "WeylElement":
        return WeylElement(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(4)) for i in range(4)
            )
        )

    @staticmethod
    def reflection(root: Weight) -> "WeylElement":
        if root.is_zero():
            raise ValueError("cannot reflect in the zero vector")
        norm = root.dot(root)
        rows = []
        for i in range(4):
            row = []
            for j in range(4):
                val = Fraction(1 if i == j else 0)
                val -= 2 * root.coords[i] * root.coords[j] / norm
                row.append(val)
            rows.append(tuple(row))
        return WeylElement(tuple(rows))

    def apply(self, w: Weight) -> Weight:
        return Weight(
            tuple(sum(r * c for r, c in zip(row, w.coords)) for row in self.matrix)
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        cols = list(zip(*other.matrix))
        return WeylElement(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.matrix
            )
        )

    def inverse(self) -> "WeylElement":
        # all group elements here are orthogonal, so the transpose inverts
        return WeylElement(tuple(zip(*self.matrix)))

    def is_identity(self) -> bool:
        return self == WeylElement.identity()

    def preserves_lattice(self) -> bool:
        return all(self.apply(rho(j)).is_lattice() for j in range(1, 5))

    def is_signed_permutation(self) -> Tuple[bool, int]:
        """(is a signed permutation matrix, number of -1 entries)."""
        minus = 0
        for row in self.matrix:
            nonzero = [c for c in row if c != 0]
            if len(nonzero) != 1 or abs(nonzero[0]) != 1:
                return False, 0
            if nonzero[0] == -1:
                minus += 1
        cols_ok = all(
            sum(1 for r in range(4) if self.matrix[r][c] != 0) == 1 for c in range(4)
        )
        return cols_ok, minus


def reflect(v: Weight, root: Weight) -> Weight:
    """Reflection of v across the hyperplane orthogonal to the root."""
    if root.is_zero():
        raise ValueError("cannot reflect in the zero vector")
    factor = 2 * v.dot(root) / root.dot(root)
    return v - root.scale(factor)


def generate_group(
    generators: Sequence[WeylElement], bound: int = GROUP_ENUMERATION_BOUND
) -> FrozenSet[WeylElement]:
    """Breadth-first closure of the generators under multiplication."""
    for g in generators:
        if not g.preserves_lattice():
            raise ValueError("generator does not preserve the weight lattice")
    seen = {WeylElement.identity()}
    frontier = list(seen)
    while frontier:
        next_frontier = []
        for w in frontier:
            for g in generators:
                x = g * w
                if x not in seen:
                    seen.add(x)
                    if len(seen) > bound:
                        raise ResourceLimitError(
                            f"group enumeration exceeded bound {bound}"
                        )
                    next_frontier.append(x)
        frontier = next_frontier
    return frozenset(seen)


@lru_cache(maxsize=None)
def spin8_weyl() -> FrozenSet[WeylElement]:
    return generate_group([WeylElement.reflection(r) for r in spin8_simple_roots()])


@lru_cache(maxsize=None)
def f4_weyl() -> FrozenSet[WeylElement]:
    return generate_group([WeylElement.reflection(r) for r in f4_simple_roots()])


def is_spin8_element(w: WeylElement) -> bool:
    """Signed permutation with an even number of sign flips."""
    ok, minus = w.is_signed_permutation()
    return ok and minus % 2 == 0


# -- the order-6 complement and the coset partition ------------------------------


def sigma_tilde_generators() -> Dict[str, WeylElement]:
    """Reflections in w4, w5-w4 and w5 (the complement's three involutions)."""
    return {
        "omega4": WeylElement.reflection(omega(4)),
        "omega5_minus_omega4": WeylElement.reflection(omega(5) - omega(4)),
        "omega5": WeylElement.reflection(omega(5)),
    }


@lru_cache(maxsize=None)
def sigma_tilde_group() -> FrozenSet[WeylElement]:
    return generate_group(list(sigma_tilde_generators().values()))


def coset_partition_of_f4_positives() -> Dict[str, FrozenSet[Weight]]:
    """Partition the 12 positive F4 roots with nontrivial coset by generator.

    A positive root delta is put in the class of generator g when
    s_delta * s_g lies in W_Spin(8) (equivalently the two reflections define
    the same coset).  Long roots have s_delta already in W_Spin(8) and are
    reported under the key "trivial".
    """
    gens = sigma_tilde_generators()
    spin = spin8_weyl()
    classes: Dict[str, List[Weight]] = {k: [] for k in gens}
    classes["trivial"] = []
    for delta in sorted(
        f4_root_system().positive(), key=lambda w: tuple(w.coords)
    ):
        s = WeylElement.reflection(delta)
        if s in spin:
            classes["trivial"].append(delta)
            continue
        hits = [k for k, g in gens.items() if (s * g.inverse()) in spin]
        if len(hits) != 1:
            raise AssertionError(
                f"root {delta} matched {len(hits)} coset classes; expected exactly 1"
            )
        classes[hits[0]].append(delta)
    return {k: frozenset(v) for k, v in classes.items()}


@dataclass(frozen=True)
class SemidirectReport:
    spin8_order: int
    f4_order: int
    complement_order: int
    normal: bool
    intersection_trivial: bool
    orders_multiply: bool
    braid_relation: bool

    def ok(self) -> bool:
        return (
            self.normal
            and self.intersection_trivial
            and self.orders_multiply
            and self.braid_relation
            and self.complement_order == 6
        )


def semidirect_report(full_conjugation: bool = False) -> SemidirectReport:
    """Verify the inner semidirect decomposition of W_F4.

    Normality is checked by conjugating the Spin(8) reflection generators by
    the F4 generators (sufficient, since conjugation by a fixed element is an
    automorphism); with ``full_conjugation`` every pair is conjugated.
    """
    spin = spin8_weyl()
    f4 = f4_weyl()
    comp = sigma_tilde_group()

    spin_gens = [WeylElement.reflection(r) for r in spin8_simple_roots()]
    f4_gens = [WeylElement.reflection(r) for r in f4_simple_roots()]
    if full_conjugation:
        normal = all(
            g * h * g.inverse() in spin for g in f4 for h in spin_gens
        )
    else:
        normal = all(
            g * h * g.inverse() in spin for g in f4_gens for h in spin_gens
        )

    gens = sigma_tilde_generators()
    braid = (
        gens["omega5"]
        == gens["omega4"] * gens["omega5_minus_omega4"] * gens["omega4"]
    )
    return SemidirectReport(
        spin8_order=len(spin),
        f4_order=len(f4),
        complement_order=len(comp),
        normal=normal,
        intersection_trivial=len(spin & comp) == 1
        and next(iter(spin & comp)).is_identity(),
        orders_multiply=len(spin) * len(comp) == len(f4),
        braid_relation=braid,
    )


def semidirect_check() -> bool:
    return semidirect_report().ok()


# -- the symmetric group on three letters and its A2 bookkeeping -----------------


@dataclass(frozen=True)
class Sigma3Element:
    """A permutation of {1,2,3}; perm[i-1] is the image of i."""

    perm: Tuple[int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.perm) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {self.perm}")

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def compose(self, other: "Sigma3Element") -> "Sigma3Element":
        """self after other."""
        return Sigma3Element(tuple(self(other(i)) for i in (1, 2, 3)))

    def inverse(self) -> "Sigma3Element":
        inv = [0, 0, 0]
        for i in (1, 2, 3):
            inv[self(i) - 1] = i
        return Sigma3Element(tuple(inv))

    def is_identity(self) -> bool:
        return self.perm == (1, 2, 3)

    @property
    def name(self) -> str:
        return _S3_NAMES[self.perm]


S3_IDENTITY = Sigma3Element((1, 2, 3))
S3_S1 = Sigma3Element((1, 3, 2))  # the transposition (2,3)
S3_S2 = Sigma3Element((2, 1, 3))  # the transposition (1,2)
S3_S3 = Sigma3Element((3, 2, 1))  # the transposition (1,3)

_S3_NAMES: Dict[Tuple[int, int, int], str] = {
    (1, 2, 3): "1",
    (1, 3, 2): "s1",
    (2, 1, 3): "s2",
    (3, 1, 2): "s1s2",
    (2, 3, 1): "s2s1",
    (3, 2, 1): "s1s2s1",
}

SIGMA3_NAMES: Tuple[str, ...] = ("1", "s1", "s2", "s1s2", "s2s1", "s1s2s1")


def sigma3_all() -> Dict[str, Sigma3Element]:
    return {name: Sigma3Element(perm) for perm, name in _S3_NAMES.items()}


def sigma3_by_name(name: str) -> Sigma3Element:
    table = {v: k for k, v in _S3_NAMES.items()}
    if name not in table:
        raise KeyError(f"unknown element name {name!r}; use one of {SIGMA3_NAMES}")
    return Sigma3Element(table[name])


# gamma functionals on the diagonal coordinates (x1, x2, x3):
#   gamma_1 = x2 - x3, gamma_2 = x1 - x2, gamma_3 = x1 - x3 = gamma_1 + gamma_2
GAMMA_COEFFS: Dict[int, Tuple[int, int, int]] = {
    1: (0, 1, -1),
    2: (1, -1, 0),
    3: (1, 0, -1),
}


def act_on_functional(
    sigma: Sigma3Element, coeffs: Tuple[int, int, int]
) -> Tuple[int, int, int]:
    """(sigma . gamma)(x) = gamma(sigma^{-1} x) on coefficient vectors."""
    inv = sigma.inverse()
    return tuple(coeffs[inv(j) - 1] for j in (1, 2, 3))


def act_on_gamma(sigma: Sigma3Element, k: int) -> Tuple[int, int]:
    """Return (sign, j) with sigma . gamma_k = sign * gamma_j."""
    image = act_on_functional(sigma, GAMMA_COEFFS[k])
    for j, base in GAMMA_COEFFS.items():
        if image == base:
            return 1, j
        if image == tuple(-c for c in base):
            return -1, j
    raise AssertionError(f"image {image} is not a signed gamma functional")


def inversion_set(sigma: Sigma3Element) -> FrozenSet[int]:
    """Indices k with sigma^{-1} gamma_k negative."""
    inv = sigma.inverse()
    return frozenset(k for k in (1, 2, 3) if act_on_gamma(inv, k)[0] == -1)


def cell_dimension_polynomial() -> Dict[int, int]:
    """Multiplicity-8 cell dimensions: degree 8*|inversions| -> cell count."""
    out: Dict[int, int] = {}
    for name in SIGMA3_NAMES:
        d = 8 * len(inversion_set(sigma3_by_name(name)))
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def sigma3_identification() -> Dict[str, Sigma3Element]:
    """Transposition labels for the three complement reflections.

    The fixed dictionary sends the reflection in w4 to (1,2), in w5-w4 to
    (2,3) and in w5 to (1,3); it extends to a group isomorphism since the
    braid relation maps to (1,2)(2,3)(1,2) = (1,3).
    """
    return {
        "omega4": S3_S2,
        "omega5_minus_omega4": S3_S1,
        "omega5": S3_S3,
    }


def transposition(i: int, j: int) -> Sigma3Element:
    if i == j or not {i, j} <= {1, 2, 3}:
        raise ValueError("need two distinct indices in 1..3")
    perm = [1, 2, 3]
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return Sigma3Element(tuple(perm))
