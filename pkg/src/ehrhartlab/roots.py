"""Roots of Ehrhart polynomials and the inequality suite they support.

Root finding is multiplicity-safe: the polynomial is first split into
squarefree factors by exact rational arithmetic (Yun's algorithm), each
factor's roots come from the companion-matrix eigenvalues, and a few
Newton steps polish every simple root.  Residuals are then measured by
evaluating the monic polynomial at the float roots in exact rational
complex arithmetic, so the reported bound is the true residual of the
returned approximations, not float evaluation noise.

The inequality checks themselves (coefficient ratios, the volume bound,
and the point-count bound) are exact rational comparisons valid for
polytopes all of whose Ehrhart roots share the real part -1/a; they do
not verify that hypothesis - compose them with :func:`common_real_part`
or the exact :func:`parity_necessary_check`.  The parity check is a
necessary condition only: a polynomial symmetric about -1/a can still
have roots off that line (the degree-9 bipyramid is such a case).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .ehrhart import EhrhartPolynomial
from .exact import Polynomial, binomial, squarefree_decomposition

DEFAULT_REAL_PART_TOL = 1e-7
DEFAULT_CONJUGATION_TOL = 1e-9


@dataclass(frozen=True)
class RootSet:
    """All complex roots (with multiplicity) of one polynomial.

    ``residual_bound`` is max |p_monic(z)| over the returned roots,
    measured exactly; ``roots`` are sorted by (real, imag) so output is
    deterministic.
    """

    roots: tuple[complex, ...]
    residual_bound: float
    source_degree: int


class BoundVerdict(NamedTuple):
    """Outcome of one exact inequality lhs <= rhs."""

    holds: bool
    is_equality: bool
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class WillsIndexVerdict:
    index: int
    coefficient: Fraction
    bound: Fraction
    holds: bool


@dataclass(frozen=True)
class WillsVerdict:
    """Per-coefficient comparison against the cube bound 2^i C(n, i)."""

    dimension: int
    per_index: tuple[WillsIndexVerdict, ...]
    overall: bool

    @property
    def violations(self) -> tuple[int, ...]:
        return tuple(row.index for row in self.per_index if not row.holds)

    @property
    def equalities(self) -> tuple[int, ...]:
        return tuple(
            row.index
            for row in self.per_index
            if row.holds and row.coefficient == row.bound
        )


def _newton_polish(factor: Polynomial, roots: np.ndarray) -> list[complex]:
    coeffs = [float(c) for c in factor.coefficients]
    deriv = [float(c) for c in factor.derivative().coefficients]

    def horner(cs: list[float], z: complex) -> complex:
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    polished = []
    for raw in roots:
        z = complex(raw)
        for _ in range(8):
            dv = horner(deriv, z)
            if dv == 0:
                break
            step = horner(coeffs, z) / dv
            z -= step
            if abs(step) <= 1e-16 * max(1.0, abs(z)):
                break
        polished.append(z)
    return polished


def _exact_monic_residual(p: Polynomial, roots: tuple[complex, ...]) -> float:
    monic = p.monic().coefficients
    worst = 0.0
    for z in roots:
        zr, zi = Fraction(z.real), Fraction(z.imag)
        ar, ai = Fraction(0), Fraction(0)
        for c in reversed(monic):
            ar, ai = ar * zr - ai * zi + c, ar * zi + ai * zr
        worst = max(worst, math.sqrt(float(ar * ar + ai * ai)))
    return worst


def find_roots(p: Polynomial) -> RootSet:
    """All complex roots of p with multiplicity.

    Exact squarefree splitting first, so multiple roots (the dilated-cube
    polynomials are the extreme case) come out exact instead of scattered.
    Deterministic for a given input.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no root set")
    if p.degree < 1:
        raise ValueError("root finding requires degree >= 1")
    roots: list[complex] = []
    for factor, multiplicity in squarefree_decomposition(p):
        if factor.degree == 1:
            # -c0/c1 exactly; keep the float conversion as the only loss.
            value = complex(-factor.coefficient(0) / factor.coefficient(1))
            roots.extend([value] * multiplicity)
            continue
        companion_roots = np.roots(
            [float(c) for c in reversed(factor.coefficients)]
        )
        for z in _newton_polish(factor, companion_roots):
            roots.extend([z] * multiplicity)
    roots.sort(key=lambda z: (z.real, z.imag))
    return RootSet(tuple(roots), _exact_monic_residual(p, tuple(roots)), p.degree)


def common_real_part(
    rs: RootSet, target: Fraction | int, tol: float = DEFAULT_REAL_PART_TOL
) -> bool:
    """True iff every root's real part is within tol of -target.

    Callers pass the positive rational 1/a to test the line Re = -1/a.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    t = float(Fraction(target))
    return all(abs(z.real + t) <= tol for z in rs.roots)


def parity_necessary_check(ehr: EhrhartPolynomial, a: Fraction | int) -> bool:
    """Exact root-free necessary condition for all roots on Re = -1/a.

    Shifts the polynomial by -1/a and tests q(-t) == (-1)^n q(t)
    coefficient-wise.  Roots on the line force this symmetry; the
    converse fails, so combine with :func:`find_roots` for sufficiency.
    """
    af = Fraction(a)
    if af <= 0:
        raise ValueError("a must be positive")
    q = ehr.poly.shift(-1 / af)
    n = ehr.dimension
    return all(
        q.coefficient(i) == 0 for i in range(n + 1) if (n - i) % 2 == 1
    )


def braun_disc_check(rs: RootSet, n: int, tol: float = 1e-9) -> bool:
    """True iff every root lies in the disc |z + 1/2| <= n(n - 1/2) + tol,
    the region that must contain all Ehrhart roots in dimension n.  A
    failure signals a counting or interpolation bug, not new mathematics."""
    radius = n * (n - 0.5) + tol
    return all(abs(z + 0.5) <= radius for z in rs.roots)


def wills_check(ehr: EhrhartPolynomial) -> WillsVerdict:
    """Compare every coefficient against the cube bound 2^i C(n, i).

    The bound is the conjectured maximum for centrally symmetric lattice
    polytopes whose only interior lattice point is the origin; violations
    are findings, not errors.
    """
    n = ehr.dimension
    rows = []
    for i in range(n + 1):
        bound = Fraction(2**i * binomial(n, i))
        coefficient = ehr.coefficient(i)
        rows.append(
            WillsIndexVerdict(i, coefficient, bound, coefficient <= bound)
        )
    return WillsVerdict(n, tuple(rows), all(r.holds for r in rows))


def coefficient_ratio_bound(
    ehr: EhrhartPolynomial, a: Fraction | int, s: int, t: int
) -> BoundVerdict:
    """Exact test of c_t/c_s <= a^(t-s) C(n,t)/C(n,s) for 0 <= s < t <= n.

    Valid when all roots have real part -1/a (not verified here).  With
    a = 2 and s = 0 this row is exactly the cube bound on c_t."""
    n = ehr.dimension
    if not 0 <= s < t <= n:
        raise ValueError(f"need 0 <= s < t <= {n}, got ({s}, {t})")
    cs = ehr.coefficient(s)
    if cs == 0:
        raise ValueError(
            "coefficient ratio undefined: c_s = 0 cannot occur for Ehrhart "
            "polynomials in the hypothesis class"
        )
    af = Fraction(a)
    lhs = ehr.coefficient(t) / cs
    rhs = af ** (t - s) * Fraction(binomial(n, t), binomial(n, s))
    return BoundVerdict(lhs <= rhs, lhs == rhs, lhs, rhs)


def volume_bound(ehr: EhrhartPolynomial, a: Fraction | int) -> BoundVerdict:
    """Exact test of vol <= (a/(a+1))^n * (point count).

    Equality holds exactly when the polynomial is (ak+1)^n."""
    af = Fraction(a)
    lhs = ehr.volume
    rhs = (af / (af + 1)) ** ehr.dimension * ehr.point_count
    return BoundVerdict(lhs <= rhs, lhs == rhs, lhs, rhs)


def point_count_bound(ehr: EhrhartPolynomial, a: Fraction | int) -> BoundVerdict:
    """Exact test of
    (point count) <= (a+1)^(n-2) (a+2) / a^(n-1) * vol + (a+1)^(n-2).

    Needs n >= 2.  Equality holds iff at most one conjugate root pair has
    nonzero imaginary part; in particular always in dimensions 2 and 3,
    and for polynomials with all roots real (the cube)."""
    n = ehr.dimension
    if n < 2:
        raise ValueError("the point-count bound needs dimension >= 2")
    af = Fraction(a)
    lhs = ehr.point_count
    rhs = (af + 1) ** (n - 2) * (af + 2) / af ** (n - 1) * ehr.volume + (
        af + 1
    ) ** (n - 2)
    return BoundVerdict(lhs <= rhs, lhs == rhs, lhs, rhs)


def gamma_sum_identity_check(ehr: EhrhartPolynomial) -> bool:
    """Vieta self-test: c_{n-1}/c_n equals minus the root sum, i.e. the
    second-highest monic coefficient.  A tautology on exact coefficients;
    it guards the plumbing, not the mathematics."""
    if ehr.dimension < 1:
        raise ValueError("needs degree >= 1")
    monic = ehr.poly.monic()
    return ehr.coefficient(ehr.dimension - 1) / ehr.volume == monic.coefficient(
        ehr.dimension - 1
    )


def conjugation_closed(
    rs: RootSet, tol: float = DEFAULT_CONJUGATION_TOL
) -> bool:
    """Every root with nonzero imaginary part has a matching conjugate."""
    pending = [z for z in rs.roots if abs(z.imag) > tol]
    for z in list(pending):
        if z.imag <= 0:
            continue
        match = next(
            (w for w in pending if abs(w - z.conjugate()) <= 10 * tol * max(1, abs(z))),
            None,
        )
        if match is None:
            return False
    return True


def nonreal_pair_count(rs: RootSet, tol: float = DEFAULT_CONJUGATION_TOL) -> int:
    """Number of conjugate pairs with nonzero imaginary part."""
    return sum(1 for z in rs.roots if z.imag > tol)
