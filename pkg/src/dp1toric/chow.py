"""Exact top-intersection products on P(lambda, mu, nu) and its hypersurfaces.

Products of divisor classes are expanded as polynomials in H and F and
reduced modulo F^2 = 0 (distinct fibers of the bundle are disjoint).  A
degree-4 class is then a combination of H^4 and H^3*F, whose values are

    (H^4) = -(6*lambda + 3*mu + 2*nu) / 36,    (H^3 * F) = 1/6.

The H^4 value can also be re-derived from the vanishing of the product of
the four fiber-coordinate divisors, which `derive_h4` does as an
independent cross-check of the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .grading import BundleParams, DivisorClass, signed, torus_divisor_class


class DegreeOverflow(ValueError):
    """More than four divisor classes multiplied on a 4-fold."""


class DegreeMismatch(ValueError):
    """Cycle class of the wrong degree passed to a top evaluation."""


@dataclass(frozen=True)
class CycleClass:
    """Cycle class sum of q_{ij} * H^i * F^j with 0 <= i <= 4, j <= 1.

    Terms with F-exponent >= 2 are dropped on construction (the reduction
    F^2 = 0); zero coefficients are not stored.
    """

    coefficients: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        reduced = {}
        for (i, j), q in self.coefficients.items():
            q = Fraction(q)
            if j >= 2 or q == 0:
                continue
            if not 0 <= i <= 4 or j < 0:
                raise ValueError(f"monomial H^{i}F^{j} out of range")
            reduced[(i, j)] = q
        object.__setattr__(self, "coefficients", reduced)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coefficients.get((i, j), Fraction(0))

    @property
    def degree(self) -> int | None:
        """Common degree i + j of the stored terms; None for 0 or mixed."""
        degrees = {i + j for i, j in self.coefficients}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self, degree: int) -> bool:
        return all(i + j == degree for i, j in self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for (i, j), q in sorted(self.coefficients.items(), reverse=True):
            powers = [f"{sym}^{k}" if k > 1 else sym
                      for sym, k in (("H", i), ("F", j)) if k > 0]
            mono = "*".join(powers)
            parts.append(f"{signed(q)}*{mono}" if mono else signed(q))
        joined = "".join(parts)
        return joined[1:] if joined.startswith("+") else joined


def product(classes: list[DivisorClass]) -> CycleClass:
    """Expand the product of divisor classes, reducing by F^2 = 0."""
    if len(classes) == 0:
        raise ValueError("empty product")
    if len(classes) > 4:
        raise DegreeOverflow(f"{len(classes)} factors exceed the dimension 4")
    acc = {(0, 0): Fraction(1)}
    for cls in classes:
        nxt: dict[tuple[int, int], Fraction] = {}
        for (i, j), q in acc.items():
            if cls.h != 0:
                key = (i + 1, j)
                nxt[key] = nxt.get(key, Fraction(0)) + q * cls.h
            if cls.f != 0 and j + 1 < 2:
                key = (i, j + 1)
                nxt[key] = nxt.get(key, Fraction(0)) + q * cls.f
        acc = nxt
    return CycleClass(acc)


def evaluate_top(p: BundleParams, c: CycleClass) -> Fraction:
    """Degree of a top (degree-4) cycle class on P(lambda, mu, nu)."""
    if not c.is_homogeneous(4):
        raise DegreeMismatch(f"top evaluation needs degree 4, got {c}")
    h4 = -Fraction(6 * p.lam + 3 * p.mu + 2 * p.nu, 36)
    return c.coefficient(4, 0) * h4 + c.coefficient(3, 1) * Fraction(1, 6)


def derive_h4(p: BundleParams) -> Fraction:
    """Solve for (H^4) from the empty intersection of the fiber divisors.

    The four divisors D_x, D_y, D_z, D_w have no common point, so their
    product vanishes.  Expanding it leaves a linear equation in the unknown
    (H^4) with (H^3 * F) = 1/6 known; this derivation is independent of the
    closed form used by `evaluate_top`.
    """
    cyc = product([torus_divisor_class(p, t) for t in "xyzw"])
    coeff_h4 = cyc.coefficient(4, 0)
    coeff_h3f = cyc.coefficient(3, 1)
    # coeff_h4 * (H^4) + coeff_h3f * (1/6) = 0
    return -coeff_h3f * Fraction(1, 6) / coeff_h4


def x_class(p: BundleParams) -> DivisorClass:
    """Class 6H + 2*nu*F of the degree-1 del Pezzo hypersurface."""
    return DivisorClass(6, 2 * p.nu)


def anticanonical_on_x(p: BundleParams) -> DivisorClass:
    """-K_X = H + (lambda + mu - nu + 2) F by adjunction."""
    return DivisorClass(1, p.lam + p.mu - p.nu + 2)


def triple_on_x(p: BundleParams, a: DivisorClass, b: DivisorClass,
                c: DivisorClass) -> Fraction:
    """Triple intersection (a . b . c) on the hypersurface X.

    Restriction is computed upstairs: (a . b . c)_X = (a . b . c . X)_P.
    """
    return evaluate_top(p, product([a, b, c, x_class(p)]))


def minus_k_cubed(p: BundleParams) -> Fraction:
    """Closed form (-K_X)^3 = 2*lambda + (5/2)*mu - 3*nu + 6."""
    return 2 * p.lam + Fraction(5, 2) * p.mu - 3 * p.nu + 6
