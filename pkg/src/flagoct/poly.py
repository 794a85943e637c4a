"""Sparse multivariate polynomials over the rationals.

Monomials are dense exponent tuples keyed to the ordered variable list of a
:class:`PolyRing`; coefficients are :class:`fractions.Fraction` (exact, lowest
terms by construction).  The term order used everywhere is graded reverse
lexicographic (grevlex) on raw exponents.  Each variable additionally carries
a grading degree (used for weighted-degree queries and graded dimension
counts) which is metadata only and does not affect the term order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Operands belong to different polynomial rings."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured size bounds."""


def grevlex_key(exponents: Exponents) -> Tuple:
    """Sort key; ``max`` over keys picks the grevlex-leading monomial."""
    return (sum(exponents),) + tuple(-e for e in reversed(exponents))


@dataclass(frozen=True)
class PolyRing:
    """An ordered tuple of named variables, each with a grading degree."""

    names: Tuple[str, ...]
    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if any(d < 1 for d in self.degrees):
            raise ValueError("grading degrees must be positive")

    @staticmethod
    def make(names: Sequence[str], degrees: Optional[Sequence[int]] = None) -> "PolyRing":
        names = tuple(names)
        degs = tuple(degrees) if degrees is not None else tuple(1 for _ in names)
        return PolyRing(names, degs)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring {self.names}") from None

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exponents: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exponents!r} for ring {self.names}")
        c = Fraction(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def weighted_degree(self, exponents: Exponents) -> int:
        return sum(e * d for e, d in zip(exponents, self.degrees))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        vs = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"PolyRing({vs})"


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponents, Fraction]):
        self.ring = ring
        self.terms: Dict[Exponents, Fraction] = {
            e: c for e, c in terms.items() if c != 0
        }
        self._hash: Optional[int] = None

    # -- basic protocol ----------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands in different rings: {self.ring.names} vs {other.ring.names}"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return self.ring.const(other) - self

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {e: k * c for e, k in self.terms.items()})
        self._check(other)
        out: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Polynomial":
        c = Fraction(other)
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return self * (Fraction(1) / c)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- queries -----------------------------------------------------------

    def total_degree(self) -> int:
        """Maximum exponent sum; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self) -> int:
        """Maximum weighted (graded) degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.weighted_degree(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        """True when all terms share one weighted degree (zero counts)."""
        degs = {self.ring.weighted_degree(e) for e in self.terms}
        return len(degs) <= 1

    def leading_exponents(self) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_exponents()]

    def leading_term(self) -> "Polynomial":
        e = self.leading_exponents()
        return Polynomial(self.ring, {e: self.terms[e]})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self / self.leading_coefficient()

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.terms.values())

    def homogeneous_component(self, weighted_degree: int) -> "Polynomial":
        return Polynomial(
            self.ring,
            {
                e: c
                for e, c in self.terms.items()
                if self.ring.weighted_degree(e) == weighted_degree
            },
        )

    def sorted_terms(self) -> Iterator[Tuple[Exponents, Fraction]]:
        """Terms in descending grevlex order."""
        for e in sorted(self.terms, key=grevlex_key, reverse=True):
            yield e, self.terms[e]

    # -- substitution / evaluation ------------------------------------------

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of values")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            prod = c
            for v, k in zip(vals, e):
                if k:
                    prod *= v**k
            total += prod
        return total

    def substitute(
        self,
        images: Mapping[str, "Polynomial"],
        target: Optional[PolyRing] = None,
    ) -> "Polynomial":
        """Ring map sending each variable to ``images[name]``.

        Every variable of the source ring must have an image; all images must
        live in one ring (``target`` if given).
        """
        missing = [n for n in self.ring.names if n not in images]
        if missing:
            raise KeyError(f"substitute: no image for variables {missing}")
        rings = {p.ring for p in images.values()}
        if len(rings) != 1:
            raise RingMismatchError("substitute: images live in different rings")
        tring = rings.pop()
        if target is not None and target != tring:
            raise RingMismatchError("substitute: images not in requested target ring")
        img = [images[n] for n in self.ring.names]
        # memoized powers per variable
        powers: list[Dict[int, Polynomial]] = [{0: tring.one()} for _ in img]
        out = tring.zero()
        for e, c in self.terms.items():
            term = tring.const(c)
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        p = max(cache)
                        acc = cache[p]
                        while p < k:
                            acc = acc * img[i]
                            p += 1
                            cache[p] = acc
                    term = term * cache[k]
            out = out + term
        return out

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.ring.names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Polynomial({self})"


# -- linear forms and their products ----------------------------------------


@dataclass(frozen=True)
class LinearForm:
    """A degree-one form sum(coeffs[i] * ring.names[i])."""

    ring: PolyRing
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.ring.nvars:
            raise ValueError("coefficient count does not match ring")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @staticmethod
    def from_polynomial(p: Polynomial) -> "LinearForm":
        coeffs = [Fraction(0)] * p.ring.nvars
        for e, c in p.terms.items():
            if sum(e) != 1:
                raise ValueError("polynomial is not a linear form")
            coeffs[e.index(1)] = c
        return LinearForm(p.ring, tuple(coeffs))

    def to_polynomial(self) -> Polynomial:
        out: Dict[Exponents, Fraction] = {}
        for i, c in enumerate(self.coeffs):
            if c:
                e = [0] * self.ring.nvars
                e[i] = 1
                out[tuple(e)] = c
        return Polynomial(self.ring, out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def normalized(self) -> "LinearForm":
        """Scale so the first nonzero coefficient is 1 (canonical line rep)."""
        for c in self.coeffs:
            if c:
                return LinearForm(self.ring, tuple(x / c for x in self.coeffs))
        raise ValueError("zero form has no normalization")

    def is_proportional_to(self, other: "LinearForm") -> bool:
        if self.ring != other.ring:
            raise RingMismatchError("forms in different rings")
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized().coeffs == other.normalized().coeffs

    def __str__(self) -> str:
        return str(self.to_polynomial())


@dataclass(frozen=True)
class FormProduct:
    """A scalar times a product of linear forms (kept in factored shape)."""

    scalar: Fraction
    forms: Tuple[LinearForm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        rings = {f.ring for f in self.forms}
        if len(rings) > 1:
            raise RingMismatchError("factors live in different rings")

    @property
    def ring(self) -> PolyRing:
        if not self.forms:
            raise ValueError("empty product has no ring")
        return self.forms[0].ring

    @property
    def nfactors(self) -> int:
        return len(self.forms)

    def expand(self) -> Polynomial:
        out = self.ring.const(self.scalar)
        for f in self.forms:
            out = out * f.to_polynomial()
        return out

    def __str__(self) -> str:
        inner = " * ".join(f"({f})" for f in self.forms)
        if self.scalar == 1:
            return inner
        return f"{self.scalar} * {inner}"


def pairwise_coprime(
    products: Sequence[FormProduct],
) -> Tuple[bool, Optional[Tuple[int, int, LinearForm]]]:
    """Check no two products share a linear factor up to scalar.

    Returns ``(True, None)`` or ``(False, (i, j, shared_form))`` with the
    first shared factor found.
    """
    for i, j in itertools.combinations(range(len(products)), 2):
        for f in products[i].forms:
            for g in products[j].forms:
                if f.is_proportional_to(g):
                    return False, (i, j, f.normalized())
    return True, None


# -- assorted helpers ---------------------------------------------------------


def elementary_symmetric(i: int, *args: Polynomial) -> Polynomial:
    """The i-th elementary symmetric polynomial of the given arguments."""
    if not args:
        raise ValueError("need at least one argument")
    ring = args[0].ring
    for a in args:
        if a.ring != ring:
            raise RingMismatchError("arguments in different rings")
    if i < 0 or i > len(args):
        raise ValueError(f"elementary symmetric index {i} out of range")
    if i == 0:
        return ring.one()
    out = ring.zero()
    for combo in itertools.combinations(args, i):
        term = ring.one()
        for a in combo:
            term = term * a
        out = out + term
    return out


def exact_divide(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Return q with f == q*g if g divides f exactly, else None.

    Single-divisor division by leading terms decides exact divisibility over
    a field regardless of monomial order, so no Groebner machinery is needed.
    """
    if f.ring != g.ring:
        raise RingMismatchError("dividend and divisor in different rings")
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    ring = f.ring
    g_lead = g.leading_exponents()
    g_lc = g.terms[g_lead]
    quotient: Dict[Exponents, Fraction] = {}
    rem = f
    while rem.terms:
        e = rem.leading_exponents()
        diff = tuple(a - b for a, b in zip(e, g_lead))
        if any(d < 0 for d in diff):
            return None
        c = rem.terms[e] / g_lc
        quotient[diff] = c
        rem = rem - Polynomial(ring, {diff: c}) * g
    return Polynomial(ring, quotient)
