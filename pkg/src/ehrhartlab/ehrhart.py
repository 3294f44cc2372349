"""Ehrhart polynomials and their coefficients.

The central object is :class:`EhrhartPolynomial`: the degree-n polynomial
whose value at k is the number of lattice points in the k-fold dilate of
an n-dimensional lattice polytope.  Construction is by exact interpolation
through counts at k = 0..n (no oversampling; a degree mismatch means the
counter is buggy and is reported as such).

The bipyramid family additionally has closed-form coefficients

    c_i = C(n-1, i) 2^i + (2/n) sum_{j=i-1}^{n-1} C(n, j+1) 2^j C(j+1, i) B_{j-i+1}

for i = 1..n (constant term 1), with B the Bernoulli numbers in the
B_1 = -1/2 convention, and the first coefficient collapses to

    c_1 = 2(n-1) + (4 - 2^n) B_{n-1},

which equals 2(n-1) for even n and grows like +-(n/(pi e))^n for odd n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import (
    Polynomial,
    bernoulli,
    bernoulli_magnitude_bounds,
    binomial,
    interpolate,
)
from .polytopes import LatticePolytope, vertex_content


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Ehrhart polynomial of a polytope of dimension ``dimension``.

    Invariants checked at construction: degree equals the dimension, the
    constant coefficient is 1, and the leading coefficient (the volume)
    is positive.
    """

    dimension: int
    poly: Polynomial

    def __post_init__(self) -> None:
        if self.poly.degree != self.dimension:
            raise ValueError(
                f"degree {self.poly.degree} does not match dimension "
                f"{self.dimension}; the underlying counter is inconsistent"
            )
        if self.poly.coefficient(0) != 1:
            raise ValueError(
                "constant coefficient must be 1 (dilation 0 contains exactly "
                "the origin)"
            )
        if self.poly.leading_coefficient <= 0:
            raise ValueError("leading coefficient (volume) must be positive")

    def coefficient(self, i: int) -> Fraction:
        return self.poly.coefficient(i)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self.poly.coefficients

    @property
    def volume(self) -> Fraction:
        return self.poly.leading_coefficient

    @property
    def point_count(self) -> Fraction:
        """Value at k = 1: the number of lattice points in the polytope."""
        return self.poly(1)

    def __call__(self, k: int) -> Fraction:
        return self.poly(k)


def ehrhart_of(
    p: LatticePolytope, counter: Callable[[int], int]
) -> EhrhartPolynomial:
    """Interpolate the Ehrhart polynomial through counter(0..n).

    The counter must be exact; positivity and integrality of every count
    are checked, and the EhrhartPolynomial invariants double as a
    counter-correctness tripwire.
    """
    n = p.dimension
    points = []
    for k in range(n + 1):
        value = counter(k)
        if not isinstance(value, int) or value <= 0:
            raise ValueError(f"counter returned non-positive value {value} at k={k}")
        points.append((k, value))
    return EhrhartPolynomial(n, interpolate(points))


def product_coefficients(
    ehr_p: EhrhartPolynomial, ehr_q: EhrhartPolynomial
) -> EhrhartPolynomial:
    """Ehrhart polynomial of a product: the coefficient convolution
    c_j(PxQ) = sum_i c_i(P) c_{j-i}(Q)."""
    return EhrhartPolynomial(
        ehr_p.dimension + ehr_q.dimension, ehr_p.poly * ehr_q.poly
    )


def qn_coefficients(n: int) -> EhrhartPolynomial:
    """Closed-form Ehrhart coefficients of the bipyramid over the
    (n-1)-cube; agrees with interpolation of the closed count."""
    if n < 2:
        raise ValueError("this family requires dimension >= 2")
    coeffs = [Fraction(1)]
    for i in range(1, n + 1):
        value = Fraction(binomial(n - 1, i) * 2**i)
        tail = Fraction(0)
        for j in range(i - 1, n):
            tail += (
                binomial(n, j + 1)
                * 2**j
                * binomial(j + 1, i)
                * bernoulli(j - i + 1)
            )
        coeffs.append(value + Fraction(2, n) * tail)
    return EhrhartPolynomial(n, Polynomial(coeffs))


def qn_first_coefficient(n: int) -> Fraction:
    """First Ehrhart coefficient of the bipyramid family:
    2(n-1) + (4 - 2^n) B_{n-1}."""
    if n < 2:
        raise ValueError("this family requires dimension >= 2")
    return 2 * (n - 1) + (4 - 2**n) * bernoulli(n - 1)


def qn_growth_check(k: int) -> bool:
    """Finite check behind the odd-dimension growth statement.

    For n = 2k+1 the first coefficient satisfies

        (-1)^k c_1 = (-1)^k 4k + (2^{2k+1} - 4) |B_{2k}|,

    so (-1)^k c_1 must lie strictly between (-1)^k 4k + (2^{2k+1}-4) * L
    and the same with U, where (L, U) are the rational magnitude bounds
    for B_{2k}.  True for every k >= 2 since the bounds bracket strictly.
    """
    if k < 2:
        raise ValueError("growth check starts at k = 2 (dimension 5)")
    n = 2 * k + 1
    signed = (-1) ** k * qn_first_coefficient(n)
    lower_mag, upper_mag = bernoulli_magnitude_bounds(k)
    base = Fraction((-1) ** k * 4 * k)
    factor = 2 ** (2 * k + 1) - 4
    return base + factor * lower_mag < signed < base + factor * upper_mag


def second_coefficient_from_facets(p: LatticePolytope) -> Fraction:
    """Second-highest coefficient of a polygon from its edges.

    In the plane the facet formula (half the sum over facets of the facet
    volume normalized by the facet sublattice determinant) reduces to half
    the total lattice length of the boundary, and the lattice length of an
    edge is the gcd of the edge vector's coordinates.  Higher dimensions
    would need facet triangulation machinery and are rejected; take the
    coefficient from interpolation there.
    """
    if p.dimension != 2:
        raise ValueError("facet formula implemented for polygons only")
    if p.halfspaces is None:
        raise ValueError("polygon needs its half-space (edge) representation")
    total = Fraction(0)
    for hs in p.halfspaces:
        tight = sorted(v for v in p.vertices if hs.is_tight_at(v))
        if len(tight) < 2:
            raise ValueError(
                f"edge {hs.normal}.x = {hs.rhs} touches fewer than two vertices"
            )
        v, w = tight[0], tight[-1]
        total += vertex_content((w[0] - v[0], w[1] - v[1]))
    return total / 2
