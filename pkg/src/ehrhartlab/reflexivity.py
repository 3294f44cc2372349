"""l-reflexivity and its equivalent characterizations.

A lattice polytope with the origin interior and irredundant facet
description u_i . x <= l_i (u_i primitive) is *l-reflexive* when

    (i)   the origin is interior,
    (ii)  its vertices are primitive, and
    (iii) every facet distance l_i equals l.

:func:`reflexivity_equivalence` verifies that three different
computations of this property agree: the definition read off directly,
a polar-side test, and an Ehrhart-coefficient test.  Two subtleties make
the naive versions of the last two non-equivalent, and both are handled
(and kept visible in the report) here:

* With l the lcm of the l_i, the scaled polar candidate vertices
  l*u_i/l_i are *always* integral, so bare latticeness of the scaled
  polar distinguishes nothing.  The faithful polar-side test also needs
  the polar's vertices primitive (that is exactly "all l_i = l") and the
  polar's facets at distance l.  The polar's facets are dual to the
  vertices of the original: a vertex v = c*w (w primitive, c the content)
  gives the polar facet {w . x <= l/c}, at integral distance l exactly
  when c = 1.  So the dual-side distance condition is vertex primitivity
  of the original, computed here through the contents.

* The coefficient identity  c_{n-1} = (n/2l) * vol  holds exactly when
  all facet distances are equal; it is blind to vertex primitivity.
  Witness: conv{(+-1,0), (0,+-2)} has all four edges at distance 2 and
  satisfies the identity with l = 2, yet its vertices (0,+-2) are not
  primitive, so it is not 2-reflexive.  The report therefore conjoins
  the identity with vertex primitivity, and also exposes the raw
  identity verdict and both of its sides.

With these readings the three verdicts agree on every polytope with the
origin interior, and the agreement is asserted: a disagreement can only
be an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ehrhart import EhrhartPolynomial
from .polytopes import (
    LatticePolytope,
    index,
    is_primitive,
    polar_scaled,
    vertex_content,
)
from .roots import RootSet, common_real_part


@dataclass(frozen=True)
class ReflexivityReport:
    """Three-way l-reflexivity verdict for one polytope.

    ``coefficient_identity`` is the bare identity c_{n-1} == (n/2l) vol
    (its two sides are ``identity_lhs``/``identity_rhs``);
    ``coefficient_check`` conjoins it with vertex primitivity, which the
    identity cannot see.  ``agree`` is always true for valid inputs.
    """

    index_l: int
    def_check: bool
    polar_check: bool
    coefficient_check: bool
    coefficient_identity: bool
    vertices_primitive: bool
    identity_lhs: Fraction
    identity_rhs: Fraction
    agree: bool


def is_l_reflexive(p: LatticePolytope) -> tuple[bool, int | None]:
    """Test the l-reflexivity definition; returns (verdict, l).

    Requires an (irredundant, primitive-normal) half-space representation.
    The returned l is the common facet distance when the verdict is true.
    """
    if p.halfspaces is None:
        raise ValueError("l-reflexivity needs a half-space representation")
    if any(h.rhs < 1 for h in p.halfspaces):
        return False, None  # origin not strictly interior
    distances = {h.rhs for h in p.halfspaces}
    if len(distances) != 1:
        return False, None
    if not all(is_primitive(v) for v in p.vertices):
        return False, None
    return True, distances.pop()


def reflexivity_equivalence(
    p: LatticePolytope, ehr: EhrhartPolynomial
) -> ReflexivityReport:
    """Evaluate the three equivalent l-reflexivity tests with l = index(p).

    Raises :class:`OriginNotInteriorError` for hypothesis failures; a
    disagreement between the three verdicts raises RuntimeError since it
    can only mean a bug in this library.
    """
    l = index(p)  # raises OriginNotInteriorError when rhs < 1 somewhere
    if ehr.dimension != p.dimension:
        raise ValueError("Ehrhart polynomial does not match the polytope")

    verdict, common = is_l_reflexive(p)
    def_check = verdict and common == l

    vertices_primitive = all(is_primitive(v) for v in p.vertices)

    polar = polar_scaled(p, l)
    polar_vertices_primitive = all(
        c.denominator == 1 for v in polar.vertices for c in v
    ) and all(
        is_primitive(tuple(int(c) for c in v)) for v in polar.vertices
    )
    # Dual facet distances: vertex v = content * w gives the polar facet
    # {w . x <= l/content}; all at distance l  iff  every content is 1.
    dual_distances_are_l = all(vertex_content(v) == 1 for v in p.vertices)
    polar_check = polar.is_lattice and polar_vertices_primitive and dual_distances_are_l

    n = p.dimension
    identity_lhs = ehr.coefficient(n - 1)
    identity_rhs = Fraction(n, 2 * l) * ehr.volume
    coefficient_identity = identity_lhs == identity_rhs
    coefficient_check = coefficient_identity and vertices_primitive

    agree = def_check == polar_check == coefficient_check
    if not agree:
        raise RuntimeError(
            "reflexivity checks disagree "
            f"(def={def_check}, polar={polar_check}, coeff={coefficient_check}); "
            "this indicates a bug, not a property of the input"
        )
    return ReflexivityReport(
        index_l=l,
        def_check=def_check,
        polar_check=polar_check,
        coefficient_check=coefficient_check,
        coefficient_identity=coefficient_identity,
        vertices_primitive=vertices_primitive,
        identity_lhs=identity_lhs,
        identity_rhs=identity_rhs,
        agree=agree,
    )


def root_line_reflexivity_consequence(
    p: LatticePolytope,
    ehr: EhrhartPolynomial,
    rs: RootSet,
    tol: float = 1e-7,
) -> bool:
    """If all roots have real part -1/(2l) with l = index(p), assert the
    coefficient identity c_{n-1} = (n/2l) vol.

    This is the unimodular-invariant consequence of the root-line
    hypothesis (conjugate pairing makes the root sum real, and the root
    sum is c_{n-1}/vol).  Vacuously true when the hypothesis fails.
    """
    l = index(p)
    if not common_real_part(rs, Fraction(1, 2 * l), tol):
        return True
    n = p.dimension
    return ehr.coefficient(n - 1) == Fraction(n, 2 * l) * ehr.volume
