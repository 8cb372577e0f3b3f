"""Cox-ring gradings of toric P(1,1,2,3)-bundles over P^1.

A bundle P(lambda, mu, nu) is the projective simplicial toric variety whose
Cox ring C[u, v, x, y, z, w] carries the Z^2-grading

    u  v  x  y       z   w
    1  1  0  lambda  mu  nu
    0  0  1  1       2   3

with irrelevant ideal (u, v) * (x, y, z, w).  All scalars are exact
rationals (fractions.Fraction); no floating point is used anywhere.

This module normalizes grading matrices to the canonical (lambda, mu, nu)
form, assigns divisor classes to the torus-invariant coordinate divisors,
enumerates monomial bases of integral divisor classes, and computes the
coordinate strata of base loci.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple

VARIABLES = ("u", "v", "x", "y", "z", "w")
BASE_VARS = frozenset({"u", "v"})
FIBER_VARS = frozenset({"x", "y", "z", "w"})

# H-degrees of u, v, x, y, z, w; fixed by the bundle structure.
BOTTOM_ROW = (0, 0, 1, 1, 2, 3)


class InvalidMatrix(ValueError):
    """Grading matrix does not present a P(1,1,2,3)-bundle over P^1."""


class EmptyLinearSystem(ValueError):
    """Requested base locus of a divisor class with no sections."""


@dataclass(frozen=True)
class BundleParams:
    """Parameters (lambda, mu, nu) of the bundle P(lambda, mu, nu).

    The normalized form has lam >= 0; arbitrary integer triplets are
    accepted so that intersection formulas can be evaluated on the full
    parameter grid.
    """

    lam: int
    mu: int
    nu: int

    @property
    def is_normalized(self) -> bool:
        return self.lam >= 0

    def __str__(self) -> str:
        return f"P({self.lam},{self.mu},{self.nu})"


@dataclass(frozen=True)
class GradingMatrix:
    """2x6 grading matrix with rows (deg_F, deg_H) per coordinate."""

    top_row: tuple[int, int, int, int, int, int]
    bottom_row: tuple[int, int, int, int, int, int] = BOTTOM_ROW

    @classmethod
    def from_params(cls, p: BundleParams) -> "GradingMatrix":
        return cls((1, 1, 0, p.lam, p.mu, p.nu))

    def shifted(self, k: int) -> "GradingMatrix":
        """Row operation top_row += k * bottom_row (a gauge change)."""
        top = tuple(t + k * b for t, b in zip(self.top_row, self.bottom_row))
        return GradingMatrix(top, self.bottom_row)

    def swapped_xy(self) -> "GradingMatrix":
        """Interchange the x and y columns."""
        t = self.top_row
        return GradingMatrix((t[0], t[1], t[3], t[2], t[4], t[5]), self.bottom_row)


@dataclass(frozen=True)
class DivisorClass:
    """Element h*H + f*F of the rank-2 divisor class group of the bundle."""

    h: Fraction
    f: Fraction

    def __init__(self, h, f):
        object.__setattr__(self, "h", Fraction(h))
        object.__setattr__(self, "f", Fraction(f))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h + other.h, self.f + other.f)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h - other.h, self.f - other.f)

    def __mul__(self, scalar) -> "DivisorClass":
        return DivisorClass(self.h * scalar, self.f * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.h, -self.f)

    @property
    def is_integral(self) -> bool:
        return self.h.denominator == 1 and self.f.denominator == 1

    def __str__(self) -> str:
        terms = []
        for coeff, sym in ((self.h, "H"), (self.f, "F")):
            if coeff == 0:
                continue
            if coeff == 1:
                terms.append(f"+{sym}")
            elif coeff == -1:
                terms.append(f"-{sym}")
            else:
                terms.append(f"{signed(coeff)}{sym}")
        if not terms:
            return "0"
        joined = "".join(terms)
        return joined[1:] if joined.startswith("+") else joined


def signed(q: Fraction) -> str:
    """Rational with an explicit leading sign, e.g. +3/2 or -1."""
    return f"+{q}" if q >= 0 else str(q)


H = DivisorClass(1, 0)
F = DivisorClass(0, 1)


class ExponentVector(NamedTuple):
    """Exponents (a, b, c, d, e, f) of a monomial u^a v^b x^c y^d z^e w^f."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def support(self) -> frozenset[str]:
        return frozenset(v for v, k in zip(VARIABLES, self) if k > 0)

    def __str__(self) -> str:
        parts = []
        for v, k in zip(VARIABLES, self):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Stratum:
    """Torus-invariant subvariety V(zero_set) of the bundle.

    The zero set may not contain {u, v} or {x, y, z, w}: those loci are cut
    out by the irrelevant ideal and are empty in the bundle.
    """

    zero_set: frozenset[str]

    def __post_init__(self):
        bad = set(self.zero_set) - set(VARIABLES)
        if bad:
            raise ValueError(f"unknown coordinates {sorted(bad)}")
        if BASE_VARS <= self.zero_set or FIBER_VARS <= self.zero_set:
            raise ValueError(f"irrelevant-ideal stratum {sorted(self.zero_set)}")

    @property
    def codim(self) -> int:
        # Base conditions (u, v) and fiber conditions (x, y, z, w) cut the
        # two factors independently, so each coordinate counts once.
        return len(self.zero_set)

    def __str__(self) -> str:
        ordered = sorted(self.zero_set, key=VARIABLES.index)
        return "{" + ",".join(ordered) + "}"


def normalize(m: GradingMatrix) -> BundleParams:
    """Canonical (lambda, mu, nu) of the bundle presented by a grading matrix.

    The top row must be (1, 1, alpha, beta, gamma, delta) over the fixed
    bottom row.  Shifting the top row by -min(alpha, beta) times the bottom
    row and swapping x and y if needed yields the unique equivalent form
    with x-degree 0 and lambda >= 0.
    """
    if tuple(m.bottom_row) != BOTTOM_ROW:
        raise InvalidMatrix(f"bottom row must be {BOTTOM_ROW}, got {m.bottom_row}")
    if len(m.top_row) != 6 or m.top_row[0] != 1 or m.top_row[1] != 1:
        raise InvalidMatrix(f"(u,v) degrees must be (1,1), got top row {m.top_row}")
    alpha, beta, gamma, delta = m.top_row[2:]
    base = min(alpha, beta)
    return BundleParams(abs(alpha - beta), gamma - 2 * base, delta - 3 * base)


def torus_divisor_class(p: BundleParams, coord: str) -> DivisorClass:
    """Divisor class of the coordinate divisor D_coord on P(lambda, mu, nu)."""
    classes = {
        "u": F,
        "v": F,
        "x": H,
        "y": DivisorClass(1, p.lam),
        "z": DivisorClass(2, p.mu),
        "w": DivisorClass(3, p.nu),
    }
    try:
        return classes[coord]
    except KeyError:
        raise ValueError(f"coordinate must be one of {VARIABLES}, got {coord!r}")


def monomial_bidegree(p: BundleParams, e: ExponentVector) -> tuple[int, int]:
    """(F-degree, H-degree) of the monomial with exponents e."""
    fdeg = e.a + e.b + p.lam * e.d + p.mu * e.e + p.nu * e.f
    hdeg = e.c + e.d + 2 * e.e + 3 * e.f
    return fdeg, hdeg


def monomial_basis(p: BundleParams, cls: DivisorClass) -> list[ExponentVector]:
    """All monomials of bidegree (cls.f, cls.h), in lexicographic order.

    Empty for classes with negative or non-integral entries that admit no
    monomials.  The enumeration is finite: the H-degree bounds c, d, e, f
    and the residual F-degree is split over a and b.
    """
    if not cls.is_integral:
        return []
    hdeg = int(cls.h)
    fdeg = int(cls.f)
    if hdeg < 0:
        return []
    found = []
    for f_ in range(hdeg // 3 + 1):
        for e_ in range((hdeg - 3 * f_) // 2 + 1):
            for d_ in range(hdeg - 3 * f_ - 2 * e_ + 1):
                c_ = hdeg - 3 * f_ - 2 * e_ - d_
                rest = fdeg - (p.lam * d_ + p.mu * e_ + p.nu * f_)
                if rest < 0:
                    continue
                for a_ in range(rest + 1):
                    found.append(ExponentVector(a_, rest - a_, c_, d_, e_, f_))
    return sorted(found)


def _is_irrelevant(zero_set: frozenset[str]) -> bool:
    return BASE_VARS <= zero_set or FIBER_VARS <= zero_set


def base_locus_strata(p: BundleParams, cls: DivisorClass) -> list[Stratum]:
    """Minimal coordinate strata covering the base locus of |cls|.

    A stratum V(Z) lies in the base locus exactly when every basis monomial
    contains a variable of Z.  All 2^6 subsets are scanned; subsets cut out
    by the irrelevant ideal are skipped and only inclusion-minimal zero sets
    are returned.  Raises EmptyLinearSystem when |cls| has no sections.
    """
    basis = monomial_basis(p, cls)
    if not basis:
        raise EmptyLinearSystem(f"|{cls}| has no sections on {p}")
    supports = [m.support() for m in basis]
    covering = []
    for r in range(len(VARIABLES) + 1):
        for combo in combinations(VARIABLES, r):
            zero_set = frozenset(combo)
            if _is_irrelevant(zero_set):
                continue
            if all(zero_set & s for s in supports):
                covering.append(zero_set)
    minimal = [
        z for z in covering
        if not any(other < z for other in covering)
    ]
    minimal.sort(key=lambda z: (len(z), sorted(VARIABLES.index(v) for v in z)))
    return [Stratum(z) for z in minimal]


def is_dz_movable_on_x(p: BundleParams) -> bool:
    """Combinatorial certificate that D_z restricts to a movable class.

    Checks that every stratum of the base locus of |3 D_z| has codimension
    at least 2 in the bundle and that some monomial of the hypersurface
    class 6H + 2*nu*F avoids the stratum, so a generic hypersurface does
    not contain it.  This certifies that the base locus of D_z restricted
    to the hypersurface has codimension >= 2; it is a sufficient
    certificate, not a characterization of movability.
    """
    dz = torus_divisor_class(p, "z")
    strata = base_locus_strata(p, 3 * dz)
    hypersurface_monomials = [
        m.support() for m in monomial_basis(p, DivisorClass(6, 2 * p.nu))
    ]
    for stratum in strata:
        if stratum.codim < 2:
            return False
        if not any(s.isdisjoint(stratum.zero_set) for s in hypersurface_monomials):
            return False
    return True
