"""Acceptance suite: one test per criterion, exact comparisons unless a
tolerance is stated, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines, or use the CLI equivalent ``ehrhartlab verify-all``.
"""

import itertools
import json
import time
from fractions import Fraction

from ehrhartlab.cli import main
from ehrhartlab.counting import (
    count_box_scan,
    count_minkowski_dp,
    count_pn_sliced,
    count_qn_closed,
    dilation_counter,
    oracle_for,
)
from ehrhartlab.ehrhart import (
    ehrhart_of,
    product_coefficients,
    qn_coefficients,
    qn_first_coefficient,
    qn_growth_check,
)
from ehrhartlab.polytopes import (
    crosspolytope,
    cube,
    dilate,
    hull2d,
    index,
    pn_family,
    product,
    qn_family,
)
from ehrhartlab.reflexivity import (
    reflexivity_equivalence,
    root_line_reflexivity_consequence,
)
from ehrhartlab.roots import (
    braun_disc_check,
    coefficient_ratio_bound,
    common_real_part,
    find_roots,
    parity_necessary_check,
    point_count_bound,
    volume_bound,
    wills_check,
)
from ehrhartlab.verification import (
    EXCEPTIONAL_TRIANGLE,
    HYBRID7_COEFFICIENTS,
    _random_polygon_agreement,
)


def report(number: int, name: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {name}")
    assert ok, f"criterion {number} ({name}) failed"


def ehr(poly):
    return ehrhart_of(poly, dilation_counter(poly))


def test_criterion_01_hybrid7_reproduction(capsys):
    start = time.perf_counter()
    code = main(["ehrhart", "--family", "pn:7", "--format", "json"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    payload = json.loads(out)
    expected = [str(c) for c in HYBRID7_COEFFICIENTS]
    ok = code == 0 and payload["coefficients"] == expected and elapsed <= 10.0
    with capsys.disabled():
        report(1, f"degree-7 hybrid coefficients via CLI ({elapsed:.2f}s)", ok)


def test_criterion_02_bipyramid_coefficients(capsys):
    start = time.perf_counter()
    ok = qn_coefficients(9).coefficient(1) == Fraction(494, 15)
    ok &= qn_coefficients(11).coefficient(3) == Fraction(1976)
    ok &= qn_coefficients(13).coefficient(5) == Fraction(260832, 5)
    for n in (9, 11, 13):
        interp = ehrhart_of(qn_family(n), lambda k, n=n: count_qn_closed(n, k))
        ok &= interp.coefficients == qn_coefficients(n).coefficients
    elapsed = time.perf_counter() - start
    ok &= elapsed <= 1.0
    with capsys.disabled():
        report(2, f"bipyramid coefficients ({elapsed:.3f}s)", ok)


def test_criterion_03_first_coefficient_closed_form(capsys):
    ok = True
    for n in range(2, 21):
        value = qn_first_coefficient(n)
        ok &= value == qn_coefficients(n).coefficient(1)
        if n % 2 == 0:
            ok &= value == 2 * (n - 1)
    with capsys.disabled():
        report(3, "first-coefficient closed form, n = 2..20", ok)


def test_criterion_04_counterexample_propagation(capsys):
    hybrid = ehr(pn_family(7))
    ok = True
    for m in range(6):
        c1 = (
            hybrid.coefficient(1)
            if m == 0
            else product_coefficients(hybrid, ehr(cube(m))).coefficient(1)
        )
        ok &= c1 == Fraction(1534, 105) + 2 * m
        ok &= c1 > 2 * (7 + m)
    with capsys.disabled():
        report(4, "counterexample propagation, m = 0..5", ok)


def test_criterion_05_oracle_equivalence(capsys):
    ok = True
    for n in range(2, 5):
        for k in range(4):
            box_q = (
                count_box_scan(oracle_for(dilate(qn_family(n), k)))
                if k
                else 1
            )
            box_p = (
                count_box_scan(oracle_for(dilate(pn_family(n), k)))
                if k
                else 1
            )
            ok &= box_q == count_qn_closed(n, k)
            ok &= box_p == count_pn_sliced(n, k)
    for m in range(1, 4):
        for a in range(4):
            for b in range(4):
                r = a + b
                brute = sum(
                    1
                    for x in itertools.product(range(-r, r + 1), repeat=m)
                    if sum(max(abs(c) - a, 0) for c in x) <= b
                )
                ok &= brute == count_minkowski_dp(m, a, b)
    with capsys.disabled():
        report(5, "oracle equivalence (box scan vs closed vs DP)", ok)


def test_criterion_06_wills_verdicts(capsys):
    ok = True
    for n in range(1, 11):
        verdict = wills_check(ehr(cube(n)))
        ok &= verdict.overall and verdict.equalities == tuple(range(n + 1))
    hybrid_verdict = wills_check(ehr(pn_family(7)))
    ok &= hybrid_verdict.violations == (1,)
    for n, i in ((9, 1), (11, 3), (13, 5)):
        verdict = wills_check(qn_coefficients(n))
        ok &= i in verdict.violations
        ok &= 0 not in verdict.violations
        ok &= n not in verdict.violations
    with capsys.disabled():
        report(6, "coefficient-bound verdicts at known indices", ok)


def test_criterion_07_inequality_suite(capsys):
    ok = True
    for n in range(1, 9):
        for body, is_cube in ((cube(n), True), (crosspolytope(n), False)):
            e = ehr(body)
            ok &= parity_necessary_check(e, 2)
            rs = find_roots(e.poly)
            ok &= all(abs(z.real + 0.5) <= 1e-7 for z in rs.roots)
            for s in range(n + 1):
                for t in range(s + 1, n + 1):
                    verdict = coefficient_ratio_bound(e, 2, s, t)
                    ok &= verdict.holds
                    expect_eq = (
                        True
                        if (is_cube or n == 1)
                        else ((s, t) == (n - 1, n))
                    )
                    ok &= verdict.is_equality == expect_eq
            vol = volume_bound(e, 2)
            ok &= vol.holds and vol.is_equality == (is_cube or n == 1)
            if n >= 2:
                pc = point_count_bound(e, 2)
                ok &= pc.holds
                ok &= pc.is_equality == (is_cube or n in (2, 3))
    with capsys.disabled():
        report(7, "inequality suite with a = 2, n <= 8", ok)


def test_criterion_08_wills_for_root_line_class(capsys):
    ok = all(
        wills_check(ehr(crosspolytope(n))).overall for n in range(1, 11)
    )
    with capsys.disabled():
        report(8, "coefficient bounds hold for crosspolytopes, n <= 10", ok)


def test_criterion_09_reflexivity(capsys):
    ok = True
    for body in (cube(2), cube(3)):
        r = reflexivity_equivalence(body, ehr(body))
        ok &= r.agree and r.def_check and r.index_l == 1
    triangle = hull2d(EXCEPTIONAL_TRIANGLE)
    tri_ehr = ehr(triangle)
    r = reflexivity_equivalence(triangle, tri_ehr)
    ok &= r.agree and r.def_check and r.index_l == 1
    roots = sorted(find_roots(tri_ehr.poly).roots, key=lambda z: z.real)
    ok &= abs(roots[0] - (-2 / 3)) <= 1e-9
    ok &= abs(roots[1] - (-1 / 3)) <= 1e-9
    doubled = dilate(cube(2), 2)
    doubled_ehr = ehr(doubled)
    doubled_roots = find_roots(doubled_ehr.poly)
    ok &= index(doubled) == 2
    ok &= common_real_part(doubled_roots, Fraction(1, 4))
    ok &= root_line_reflexivity_consequence(doubled, doubled_ehr, doubled_roots)
    ok &= _random_polygon_agreement(50) >= 50
    with capsys.disabled():
        report(9, "reflexivity three-way agreement incl. 50 random polygons", ok)


def test_criterion_10_growth_bounds(capsys):
    ok = all(qn_growth_check(k) for k in range(2, 8))
    with capsys.disabled():
        report(10, "growth bounds for odd dimensions 5..15", ok)


def test_criterion_11_braun_disc_sanity(capsys):
    ok = True
    produced = [(ehr(pn_family(7)), 7)]
    for n in range(1, 9):
        produced.append((ehr(cube(n)), n))
        produced.append((ehr(crosspolytope(n)), n))
    for n in (9, 11, 13):
        produced.append((qn_coefficients(n), n))
    triangle = hull2d(EXCEPTIONAL_TRIANGLE)
    produced.append((ehr(triangle), 2))
    produced.append((ehr(dilate(cube(2), 2)), 2))
    produced.append((ehr(product(pn_family(3), cube(2))), 5))
    for e, n in produced:
        ok &= braun_disc_check(find_roots(e.poly), n)
    with capsys.disabled():
        report(11, f"root disc sanity over {len(produced)} root sets", ok)
