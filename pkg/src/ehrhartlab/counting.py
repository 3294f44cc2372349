"""Lattice point enumeration in dilates.

Three layers, from slow-and-universal to fast-and-specialized:

* :func:`count_box_scan` - iterate the bounding box against a membership
  predicate.  Ground truth for everything else; kept to desk scale.
* :func:`count_minkowski_dp` - dynamic programming for the Minkowski sums
  a*C_m + b*C_m* that arise as slices of the cube-crosspolytope hybrid.
  Cost O(m * b^2), which makes the degree-7 interpolation instantaneous.
* closed forms - :func:`count_qn_closed` for the bipyramid family.

All counts are exact Python ints; (2k+1)^(n-1) at n = 13 already exceeds
64-bit ranges, so nothing here ever touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Callable, Sequence

from .polytopes import FamilyTag, LatticePolytope, dilate

Point = tuple[int, ...]


@dataclass(frozen=True)
class MembershipOracle:
    """Membership predicate plus a box that certainly contains the polytope."""

    dimension: int
    contains: Callable[[Point], bool]
    bounding_radius: int


def _deficiency_within(coords: Sequence[int], a: int, b: int) -> bool:
    # x lies in a*C_m + b*C_m*  iff  sum_i max(|x_i| - a, 0) <= b.
    total = 0
    for c in coords:
        d = abs(c) - a
        if d > 0:
            total += d
            if total > b:
                return False
    return True


def oracle_for(p: LatticePolytope) -> MembershipOracle:
    """Membership oracle for a family polytope or one with half-spaces.

    Family oracles account for the accumulated dilation scale, so the
    oracle of ``dilate(pn_family(3), 2)`` answers for the dilated body.
    """
    fam = p.family
    if fam is not None and fam.tag is not FamilyTag.GENERIC:
        s = fam.scale
        if fam.tag is FamilyTag.CUBE:
            return MembershipOracle(
                p.dimension, lambda x: all(abs(c) <= s for c in x), s
            )
        if fam.tag is FamilyTag.CROSSPOLYTOPE:
            return MembershipOracle(
                p.dimension, lambda x: sum(abs(c) for c in x) <= s, s
            )
        if fam.tag is FamilyTag.PN_FAMILY:

            def inside_pn(x: Point) -> bool:
                h = abs(x[-1])
                if h > s:
                    return False
                return _deficiency_within(x[:-1], s - h, h)

            return MembershipOracle(p.dimension, inside_pn, s)
        if fam.tag in (FamilyTag.QN_FAMILY, FamilyTag.BIPYRAMID):

            def inside_qn(x: Point) -> bool:
                h = abs(x[-1])
                if h > s:
                    return False
                return all(abs(c) <= s - h for c in x[:-1])

            return MembershipOracle(p.dimension, inside_qn, s)
        if fam.tag is FamilyTag.PRODUCT:
            sub = [oracle_for(dilate(f, s) if s > 1 else f) for f in fam.factors]
            dims = [f.dimension for f in fam.factors]

            def inside_product(x: Point) -> bool:
                pos = 0
                for oracle, d in zip(sub, dims):
                    if not oracle.contains(x[pos : pos + d]):
                        return False
                    pos += d
                return True

            radius = max(o.bounding_radius for o in sub)
            return MembershipOracle(p.dimension, inside_product, radius)
    if p.halfspaces is not None:
        # Test largest-norm normals first: they tend to reject soonest.
        ordered = sorted(
            p.halfspaces, key=lambda h: -sum(c * c for c in h.normal)
        )

        def inside_hrep(x: Point) -> bool:
            return all(h.contains(x) for h in ordered)

        return MembershipOracle(p.dimension, inside_hrep, p.bounding_radius())
    raise ValueError(
        "no membership oracle: polytope has neither a family tag nor half-spaces"
    )


def count_box_scan(
    oracle: MembershipOracle,
    chunks: int = 1,
    max_points: int | None = None,
) -> int:
    """Exact point count by scanning the bounding box.

    ``chunks`` partitions the first coordinate into contiguous ranges that
    are counted independently and summed in order, so the total does not
    depend on the partition.  ``max_points`` refuses scans whose box
    exceeds the budget.
    """
    r = oracle.bounding_radius
    dim = oracle.dimension
    side = 2 * r + 1
    if max_points is not None and side**dim > max_points:
        raise ValueError(
            f"box scan of {side}^{dim} points exceeds the budget of {max_points}; "
            "use a family counter instead"
        )
    if dim == 0:
        return 1
    contains = oracle.contains
    first_axis = range(-r, r + 1)
    if chunks <= 1:
        starts = [list(first_axis)]
    else:
        chunks = min(chunks, side)
        starts = [list(first_axis)[i::chunks] for i in range(chunks)]

    def scan(first_values: list[int]) -> int:
        count = 0
        if dim == 1:
            for x0 in first_values:
                if contains((x0,)):
                    count += 1
            return count
        for x0 in first_values:
            for rest in iter_product(range(-r, r + 1), repeat=dim - 1):
                if contains((x0,) + rest):
                    count += 1
        return count

    return sum(scan(chunk) for chunk in starts)


def count_minkowski_dp(m: int, a: int, b: int) -> int:
    """Points of a*C_m + b*C_m* : vectors with sum_i max(|x_i| - a, 0) <= b.

    Coordinate-by-coordinate DP over the remaining "deficiency budget":
    a coordinate with deficiency 0 has 2a+1 choices, one with deficiency
    d in 1..b has exactly 2 (namely +-(a+d)).
    """
    if m < 1:
        raise ValueError("dimension must be >= 1")
    if a < 0 or b < 0:
        raise ValueError("scales must be nonnegative")
    exact = [0] * (b + 1)
    exact[0] = 1
    core = 2 * a + 1
    for _ in range(m):
        nxt = [0] * (b + 1)
        running = 0  # 2 * sum of exact[0..d-1]
        for d in range(b + 1):
            nxt[d] = core * exact[d] + running
            running += 2 * exact[d]
        exact = nxt
    return sum(exact)


def count_qn_closed(n: int, k: int) -> int:
    """Bipyramid over the (n-1)-cube, dilated by k:
    (2k+1)^(n-1) + 2 * sum_{j=0}^{k-1} (2j+1)^(n-1)."""
    if n < 2:
        raise ValueError("this family requires dimension >= 2")
    if k < 0:
        raise ValueError("dilation must be nonnegative")
    return (2 * k + 1) ** (n - 1) + 2 * sum(
        (2 * j + 1) ** (n - 1) for j in range(k)
    )


def count_pn_sliced(n: int, k: int) -> int:
    """Slice decomposition for the cube-crosspolytope hybrid at dilation k.

    The height-j slice is (k-|j|)*C_{n-1} + |j|*C_{n-1}*, counted by the
    deficiency DP and summed over j = -k..k.
    """
    if n < 2:
        raise ValueError("this family requires dimension >= 2")
    if k < 0:
        raise ValueError("dilation must be nonnegative")
    m = n - 1
    total = count_minkowski_dp(m, k, 0)
    for j in range(1, k + 1):
        total += 2 * count_minkowski_dp(m, k - j, j)
    return total


def count_product(
    count_p: Callable[[int], int], count_q: Callable[[int], int], k: int
) -> int:
    """Point count of a product at dilation k: the product of the counts."""
    return count_p(k) * count_q(k)


def dilation_counter(
    p: LatticePolytope, max_box_points: int | None = None
) -> Callable[[int], int]:
    """Best exact counter k -> #(kP cap Z^n) for the given polytope.

    Family polytopes use their closed forms / DP; anything else falls back
    to a box scan of the dilate (guarded by ``max_box_points``).
    """
    fam = p.family
    if fam is not None and fam.tag is not FamilyTag.GENERIC:
        s = fam.scale
        if fam.tag is FamilyTag.CUBE:
            return lambda k: (2 * s * k + 1) ** p.dimension
        if fam.tag is FamilyTag.CROSSPOLYTOPE:
            return lambda k: count_minkowski_dp(p.dimension, 0, s * k)
        if fam.tag is FamilyTag.PN_FAMILY:
            return lambda k: count_pn_sliced(fam.n, s * k)
        if fam.tag in (FamilyTag.QN_FAMILY, FamilyTag.BIPYRAMID):
            return lambda k: count_qn_closed(fam.n, s * k)
        if fam.tag is FamilyTag.PRODUCT:
            subs = [
                dilation_counter(dilate(f, s) if s > 1 else f, max_box_points)
                for f in fam.factors
            ]

            def counter(k: int) -> int:
                total = 1
                for c in subs:
                    total *= c(k)
                return total

            return counter

    def scan_counter(k: int) -> int:
        if k == 0:
            return 1  # every polytope here contains the origin
        return count_box_scan(oracle_for(dilate(p, k)), max_points=max_box_points)

    return scan_counter
