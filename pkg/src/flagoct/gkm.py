"""Moment-graph (GKM) model for the equivariant cohomology of the flag.

The graph has the six permutations of {1,2,3} as vertices and an edge
{sigma, t.sigma} for every transposition t (left multiplication), nine edges
in all.  Each edge class carries a degree-8 label:

* abstract mode, coefficients in Q[b1,b2]: the edges of the transposition
  fixing 1 (i.e. (2,3)) carry b1, the edges of (1,2) carry b2, and the edges
  of (1,3) carry b3 = b1 + b2.  This pairing of transpositions to labels is
  forced by the fixed-point restriction classes: it is the unique one under
  which their difference along every edge is divisible by the edge label.
* realized mode, coefficients in Q[rho1..rho4]: each label becomes the
  torus-equivariant Euler class of the corresponding eight-dimensional
  representation, a product of four linear forms, W-invariant and pairwise
  coprime across classes.

A piecewise class (CohTuple) assigns one polynomial per vertex; membership
in the equivariant cohomology ring is the divisibility of every edge
difference by the edge label, with realized-mode entries additionally
required to be W-invariant.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from .cohomology import B_RING, RestrictionTable, matrix_rank
from .poly import (
    FormProduct,
    LinearForm,
    PolyRing,
    Polynomial,
    ResourceLimitError,
    RingMismatchError,
    exact_divide,
    pairwise_coprime,
)
from .weyl import (
    SIGMA3_NAMES,
    Sigma3Element,
    Weight,
    WeylElement,
    inversion_set,
    rho,
    sigma3_by_name,
    spin8_simple_roots,
    transposition,
)

RHO_RING = PolyRing.make(("rho1", "rho2", "rho3", "rho4"), (2, 2, 2, 2))

# transposition attached to each root index: s_gamma1 = (2,3), s_gamma2 = (1,2),
# s_gamma3 = (1,3)
ROOT_TRANSPOSITIONS: Dict[int, Tuple[int, int]] = {1: (2, 3), 2: (1, 2), 3: (1, 3)}


def abstract_label(k: int) -> Polynomial:
    b1, b2 = B_RING.gens()
    if k == 1:
        return b1
    if k == 2:
        return b2
    if k == 3:
        return b1 + b2
    raise ValueError("edge class must be 1..3")


@dataclass(frozen=True)
class GkmEdge:
    u: str
    v: str
    k: int  # edge class = root index of the transposition


def gkm_edges() -> Tuple[GkmEdge, ...]:
    """The nine unordered edges {sigma, t sigma}, one record per edge."""
    edges = []
    seen = set()
    for k, (i, j) in ROOT_TRANSPOSITIONS.items():
        t = transposition(i, j)
        for name in SIGMA3_NAMES:
            sigma = sigma3_by_name(name)
            other = t.compose(sigma)
            key = frozenset((sigma.name, other.name))
            if key in seen:
                continue
            seen.add(key)
            edges.append(GkmEdge(sigma.name, other.name, k))
    return tuple(edges)


@dataclass(frozen=True)
class CohTuple:
    """One polynomial per vertex; mode 'Hb' (abstract) or 'HT' (realized)."""

    mode: str
    entries: Mapping[str, Polynomial]

    def __post_init__(self) -> None:
        if self.mode not in ("Hb", "HT"):
            raise ValueError("mode must be 'Hb' or 'HT'")
        missing = [n for n in SIGMA3_NAMES if n not in self.entries]
        if missing:
            raise ValueError(f"missing vertex entries: {missing}")
        expected = B_RING if self.mode == "Hb" else RHO_RING
        for name, p in self.entries.items():
            if p.ring != expected:
                raise RingMismatchError(
                    f"entry {name!r} lives in {p.ring.names}, expected {expected.names}"
                )
        object.__setattr__(self, "entries", dict(self.entries))

    def entry(self, name: str) -> Polynomial:
        return self.entries[name]


@dataclass(frozen=True)
class MembershipResult:
    ok: bool
    failing_edge: Optional[GkmEdge]
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


# -- Weyl action on the realized coefficient ring -------------------------------


def _weight_to_poly(w: Weight) -> Polynomial:
    """Express a weight as a linear polynomial in rho-coordinates."""
    coords = w.rho_coordinates()
    gens = RHO_RING.gens()
    out = RHO_RING.zero()
    for c, g in zip(coords, gens):
        out = out + c * g
    return out


def l_polynomials() -> Tuple[Polynomial, ...]:
    """The four orthonormal coordinate weights as elements of Q[rho1..rho4]."""
    from .weyl import L

    return tuple(_weight_to_poly(L(i)) for i in range(1, 5))


def _generator_substitutions() -> List[Dict[str, Polynomial]]:
    """Substitution maps for the four simple reflections of W_Spin(8)."""
    subs = []
    for root in spin8_simple_roots():
        w = WeylElement.reflection(root)
        subs.append(
            {
                f"rho{j}": _weight_to_poly(w.apply(rho(j)))
                for j in range(1, 5)
            }
        )
    return subs


_GEN_SUBS: Optional[List[Dict[str, Polynomial]]] = None


def generator_substitutions() -> List[Dict[str, Polynomial]]:
    global _GEN_SUBS
    if _GEN_SUBS is None:
        _GEN_SUBS = _generator_substitutions()
    return _GEN_SUBS


def is_w_invariant(p: Polynomial) -> bool:
    """Invariance under the reflection group generators (hence the group)."""
    if p.ring != RHO_RING:
        raise RingMismatchError("invariance is defined for the realized ring")
    return all(p.substitute(sub) == p for sub in generator_substitutions())


def invariance_sign(p: Polynomial) -> Optional[int]:
    """+1 if strictly invariant, -1 if alternating, None if neither."""
    signs = set()
    for sub in generator_substitutions():
        image = p.substitute(sub)
        if image == p:
            signs.add(1)
        elif image == -p:
            signs.add(-1)
        else:
            return None
    if signs == {1}:
        return 1
    if signs == {-1}:
        return -1
    return None


# -- realized labels -------------------------------------------------------------


def _form(coeffs: Sequence[int]) -> LinearForm:
    return LinearForm(RHO_RING, tuple(Fraction(c) for c in coeffs))


def displayed_euler_products() -> Dict[str, FormProduct]:
    """The three four-factor products exactly as displayed.

    In L-coordinates these expand to the weight products of the three
    eight-dimensional representations: the vector one for the first, the two
    half-spin ones for the others.
    """
    return {
        "b1T": FormProduct(
            Fraction(1),
            (
                _form((1, 0, 0, 0)),  # rho1
                _form((-1, 1, 0, 0)),  # rho2 - rho1
                _form((0, 0, -1, 1)),  # rho4 - rho3
                _form((0, -1, 1, 1)),  # rho4 - rho2 + rho3
            ),
        ),
        "b2T": FormProduct(
            Fraction(1),
            (
                _form((0, 0, 0, 1)),  # rho4
                _form((0, -1, 0, 1)),  # rho4 - rho2
                _form((-1, 0, 1, 0)),  # rho3 - rho1
                _form((1, -1, 1, 0)),  # rho3 - rho2 + rho1
            ),
        ),
        "b3T": FormProduct(
            Fraction(1),
            (
                _form((0, 0, 1, 0)),  # rho3
                _form((0, -1, 1, 0)),  # rho3 - rho2
                _form((-1, 0, 0, 1)),  # rho4 - rho1
                _form((1, -1, 0, 1)),  # rho4 - rho2 + rho1
            ),
        ),
    }


@dataclass(frozen=True)
class EulerRealization:
    """The three displayed Euler-class products plus computed findings.

    ``canonical_signs`` normalizes each product so its leading coefficient
    (grevlex) is positive; with those signs the additivity
    b1T + b2T = b3T holds exactly, mirroring the abstract relation
    b3 = b1 + b2.  ``vanishing_combination`` is the sign pattern
    (s1, s2, s3) with s1*b1T + s2*b2T + s3*b3T = 0 for the displayed signs.
    """

    b1T: FormProduct
    b2T: FormProduct
    b3T: FormProduct
    squares_match_display: bool
    invariance_signs: Tuple[int, int, int]
    coprime: bool
    canonical_signs: Tuple[int, int, int]
    additivity_with_canonical_signs: bool
    vanishing_combination: Optional[Tuple[int, int, int]]

    def products(self) -> Tuple[FormProduct, FormProduct, FormProduct]:
        return (self.b1T, self.b2T, self.b3T)

    def realized_label(self, k: int) -> Polynomial:
        """Label of edge class k: the canonically signed k-th product."""
        prods = self.products()
        return prods[k - 1].expand() * self.canonical_signs[k - 1]

    @property
    def passed(self) -> bool:
        return (
            self.squares_match_display
            and all(s == 1 for s in self.invariance_signs)
            and self.coprime
            and self.additivity_with_canonical_signs
        )


def realize_in_bt() -> EulerRealization:
    prods = displayed_euler_products()
    b1T, b2T, b3T = prods["b1T"], prods["b2T"], prods["b3T"]

    # squaring each factor list must reproduce the displayed squares
    squares_ok = True
    for fp in (b1T, b2T, b3T):
        doubled = FormProduct(fp.scalar**2, fp.forms + fp.forms)
        squares_ok = squares_ok and doubled.expand() == fp.expand() * fp.expand()

    expanded = [fp.expand() for fp in (b1T, b2T, b3T)]
    inv_signs = tuple(invariance_sign(p) for p in expanded)
    if any(s is None for s in inv_signs):
        raise AssertionError("a realized label is not invariant up to sign")

    coprime, _ = pairwise_coprime((b1T, b2T, b3T))

    def lex_leading_coefficient(p: Polynomial) -> Fraction:
        return p.terms[max(p.terms)]

    canonical = tuple(
        1 if lex_leading_coefficient(p) > 0 else -1 for p in expanded
    )
    additive = (
        expanded[0] * canonical[0] + expanded[1] * canonical[1]
        == expanded[2] * canonical[2]
    )
    vanishing = None
    for signs in itertools.product((1, -1), repeat=3):
        if sum(
            (p * s for p, s in zip(expanded, signs)), RHO_RING.zero()
        ).is_zero():
            vanishing = signs
            break
    return EulerRealization(
        b1T=b1T,
        b2T=b2T,
        b3T=b3T,
        squares_match_display=squares_ok,
        invariance_signs=inv_signs,
        coprime=coprime,
        canonical_signs=canonical,
        additivity_with_canonical_signs=additive,
        vanishing_combination=vanishing,
    )


_REALIZATION: Optional[EulerRealization] = None


def cached_realization() -> EulerRealization:
    global _REALIZATION
    if _REALIZATION is None:
        _REALIZATION = realize_in_bt()
    return _REALIZATION


def realized_label(k: int) -> Polynomial:
    return cached_realization().realized_label(k)


def label_hyperplanes(k: int) -> Tuple[LinearForm, ...]:
    prods = cached_realization().products()
    return prods[k - 1].forms


# -- membership -------------------------------------------------------------------


def _label_for(mode: str, k: int) -> Polynomial:
    return abstract_label(k) if mode == "Hb" else realized_label(k)


def vanishes_on_hyperplanes(p: Polynomial, forms: Sequence[LinearForm]) -> bool:
    """True iff p restricts to zero on the kernel of every given form."""
    for form in forms:
        pivot = next(i for i, c in enumerate(form.coeffs) if c != 0)
        images = {}
        for i, name in enumerate(p.ring.names):
            if i == pivot:
                expr = p.ring.zero()
                for j, c in enumerate(form.coeffs):
                    if j != pivot:
                        expr = expr - (c / form.coeffs[pivot]) * p.ring.var(
                            p.ring.names[j]
                        )
                images[name] = expr
            else:
                images[name] = p.ring.var(name)
        if not p.substitute(images).is_zero():
            return False
    return True


def check_membership(t: CohTuple, method: str = "division") -> MembershipResult:
    """Edge-divisibility test; realized entries must also be W-invariant.

    ``method`` selects exact polynomial division ("division") or, in realized
    mode, vanishing on the label's four hyperplanes ("hyperplanes"); the two
    are equivalent since each label is a product of four pairwise
    non-proportional linear forms.
    """
    if method not in ("division", "hyperplanes"):
        raise ValueError("method must be 'division' or 'hyperplanes'")
    if method == "hyperplanes" and t.mode != "HT":
        raise ValueError("hyperplane method applies to realized tuples")
    if t.mode == "HT":
        for name in SIGMA3_NAMES:
            if not is_w_invariant(t.entry(name)):
                return MembershipResult(
                    False, None, f"entry at vertex {name!r} is not W-invariant"
                )
    for edge in gkm_edges():
        diff = t.entry(edge.u) - t.entry(edge.v)
        if method == "division":
            ok = exact_divide(diff, _label_for(t.mode, edge.k)) is not None
        else:
            ok = vanishes_on_hyperplanes(diff, label_hyperplanes(edge.k))
        if not ok:
            return MembershipResult(
                False,
                edge,
                f"difference along {{{edge.u},{edge.v}}} is not a multiple "
                f"of the class-{edge.k} label",
            )
    return MembershipResult(True, None)


def p1_p2_equivalence(t: CohTuple) -> Tuple[bool, bool, bool]:
    """Evaluate the inversion-set-restricted predicate and the full one.

    Returns (restricted, full, agree).  The restricted form checks each
    sigma only against the roots gamma with sigma^{-1} gamma negative; since
    every unordered edge has exactly one endpoint inverting its root, the two
    predicates test identical difference/label pairs.
    """
    full = check_membership(t).ok
    restricted = True
    for name in SIGMA3_NAMES:
        sigma = sigma3_by_name(name)
        for k in inversion_set(sigma):
            i, j = ROOT_TRANSPOSITIONS[k]
            other = transposition(i, j).compose(sigma)
            diff = t.entry(sigma.name) - t.entry(other.name)
            if exact_divide(diff, _label_for(t.mode, k)) is None:
                restricted = False
    return restricted, full, restricted == full


# -- random tuples for property checks -------------------------------------------


def random_membership_tuple(rng: random.Random, degree: int = 2) -> CohTuple:
    """A guaranteed member: polynomial in the two restriction classes."""
    table = RestrictionTable()
    b1, b2 = B_RING.gens()
    entries = {name: B_RING.zero() for name in SIGMA3_NAMES}
    # random polynomial P(c1, c2) with coefficients in Q[b1,b2]
    for _ in range(rng.randint(1, 4)):
        d1, d2 = rng.randint(0, degree), rng.randint(0, degree)
        scalar = Fraction(rng.randint(-3, 3))
        cdeg = rng.randint(0, 1)
        coeff = (b1 ** rng.randint(0, cdeg)) * (b2 ** rng.randint(0, cdeg))
        for name in SIGMA3_NAMES:
            sigma = sigma3_by_name(name)
            u = table.restriction(sigma, 1)
            v = table.restriction(sigma, 2)
            entries[name] = entries[name] + scalar * coeff * u**d1 * v**d2
    return CohTuple("Hb", entries)


def random_arbitrary_tuple(rng: random.Random, degree: int = 2) -> CohTuple:
    b1, b2 = B_RING.gens()
    entries = {}
    for name in SIGMA3_NAMES:
        p = B_RING.zero()
        for e1 in range(degree + 1):
            for e2 in range(degree + 1 - e1):
                p = p + Fraction(rng.randint(-2, 2)) * b1**e1 * b2**e2
        entries[name] = p
    return CohTuple("Hb", entries)


def restriction_class_tuple(k: int) -> CohTuple:
    """The tuple of fixed-point restrictions of the k-th Euler class."""
    table = RestrictionTable()
    return CohTuple(
        "Hb",
        {
            name: table.restriction(sigma3_by_name(name), k)
            for name in SIGMA3_NAMES
        },
    )


# -- free-rank verification --------------------------------------------------------


def bm_degrees() -> Tuple[int, ...]:
    """Cohomological degrees of the polynomial generators of H*(BM)."""
    return (4, 8, 8, 12)


def bm_dimension(degree: int) -> int:
    """Dimension of H^degree(BM) = Q[u1..u4], deg u = (4,8,8,12)."""
    if degree < 0:
        return 0
    count = 0
    d1, d2, d3, d4 = bm_degrees()
    for a in range(degree // d1 + 1):
        for b in range((degree - a * d1) // d2 + 1):
            for c in range((degree - a * d1 - b * d2) // d3 + 1):
                rem = degree - a * d1 - b * d2 - c * d3
                if rem >= 0 and rem % d4 == 0:
                    count += 1
    return count


def predicted_rank(degree: int) -> int:
    """Coefficient of t^degree in (1+2t^8+2t^16+t^24) * series of H*(BM)."""
    cell_degrees = (0, 8, 8, 16, 16, 24)
    return sum(bm_dimension(degree - c) for c in cell_degrees)


def _invariant_basis(poly_degree: int) -> List[Polynomial]:
    """Monomials in the basic invariants with total polynomial degree given.

    The basic invariants are the elementary symmetric functions of the
    squared coordinate weights in degrees 1, 2, 3 plus their product
    (poly degrees 2, 4, 6, 4); the invariant ring is free on them.
    """
    ls = l_polynomials()
    sq = [l * l for l in ls]
    s1 = sum(sq, RHO_RING.zero())
    s2 = sum(
        (sq[i] * sq[j] for i in range(4) for j in range(i + 1, 4)),
        RHO_RING.zero(),
    )
    s3 = sum(
        (
            sq[i] * sq[j] * sq[k]
            for i in range(4)
            for j in range(i + 1, 4)
            for k in range(j + 1, 4)
        ),
        RHO_RING.zero(),
    )
    prod = ls[0] * ls[1] * ls[2] * ls[3]
    gens = [(s1, 2), (s2, 4), (prod, 4), (s3, 6)]
    out: List[Polynomial] = []

    def rec(idx: int, deg_left: int, acc: Polynomial) -> None:
        if idx == len(gens):
            if deg_left == 0:
                out.append(acc)
            return
        g, d = gens[idx]
        power = acc
        e = 0
        while deg_left - e * d >= 0:
            rec(idx + 1, deg_left - e * d, power)
            e += 1
            if deg_left - e * d >= 0:
                power = power * g
    rec(0, poly_degree, RHO_RING.one())
    return out


def free_rank_check(degree_cutoff: int = 8) -> List[Tuple[int, int, int]]:
    """Degreewise dimension of the realized GKM solution space vs prediction.

    For each even cohomological degree d <= cutoff, unknowns are one
    invariant-basis coefficient vector per vertex; constraints force every
    edge difference to vanish on the four hyperplanes of the edge label.
    Returns (degree, computed, predicted) rows.
    """
    if degree_cutoff % 2 != 0 or degree_cutoff < 0:
        raise ValueError("degree cutoff must be a nonnegative even integer")
    if degree_cutoff > 16:
        raise ResourceLimitError("free-rank check is bounded at degree 16")
    rows: List[Tuple[int, int, int]] = []
    edges = gkm_edges()
    vertex_index = {name: i for i, name in enumerate(SIGMA3_NAMES)}
    for d in range(0, degree_cutoff + 1, 2):
        basis = _invariant_basis(d // 2)
        nb = len(basis)
        if nb == 0:
            rows.append((d, 0, predicted_rank(d)))
            continue
        # restrictions of each basis polynomial to each label hyperplane
        constraints: List[List[Fraction]] = []
        for edge in edges:
            for form in label_hyperplanes(edge.k):
                pivot = next(i for i, c in enumerate(form.coeffs) if c != 0)
                images = {}
                for i, name in enumerate(RHO_RING.names):
                    if i == pivot:
                        expr = RHO_RING.zero()
                        for j, c in enumerate(form.coeffs):
                            if j != pivot:
                                expr = expr - (c / form.coeffs[pivot]) * RHO_RING.var(
                                    RHO_RING.names[j]
                                )
                        images[name] = expr
                    else:
                        images[name] = RHO_RING.var(name)
                restricted = [b.substitute(images) for b in basis]
                monomials = sorted({e for p in restricted for e in p.terms})
                for mono in monomials:
                    row = [Fraction(0)] * (6 * nb)
                    iu, iv = vertex_index[edge.u], vertex_index[edge.v]
                    for m, rp in enumerate(restricted):
                        c = rp.terms.get(mono, Fraction(0))
                        if c:
                            row[iu * nb + m] += c
                            row[iv * nb + m] -= c
                    if any(x != 0 for x in row):
                        constraints.append(row)
        rank = matrix_rank(constraints) if constraints else 0
        computed = 6 * nb - rank
        rows.append((d, computed, predicted_rank(d)))
    return rows
