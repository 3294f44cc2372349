"""Command-line interface.

Subcommands
-----------
count       lattice points in the k-fold dilate
ehrhart     exact Ehrhart coefficients
roots       complex roots, common-real-part detection, parity, disc check
wills       per-coefficient comparison against the cube bound
bounds      the ratio / volume / point-count inequality suite for a given a
reflexive   l-reflexivity report (definition, polar, coefficient identity)
verify-all  run the whole verification table

Polytopes come either from the family grammar

    cube:N | cross:N | pn:N | qn:N | product(SPEC,SPEC) | dilate(SPEC,K)

or from a JSON file (see README for the schema).  Exact values are always
rendered as fraction strings; decimals appear only for roots, rounded to
12 significant digits.  Exit status: 0 success, 1 a check reported a
violation (a finding, not an error), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .counting import count_box_scan, dilation_counter, oracle_for
from .ehrhart import EhrhartPolynomial, ehrhart_of
from .exact import Polynomial
from .polytopes import (
    Family,
    FamilyTag,
    Halfspace,
    LatticePolytope,
    OriginNotInteriorError,
    crosspolytope,
    cube,
    dilate,
    hull2d,
    pn_family,
    product,
    qn_family,
)
from .reflexivity import (
    reflexivity_equivalence,
    root_line_reflexivity_consequence,
)
from .roots import (
    braun_disc_check,
    coefficient_ratio_bound,
    common_real_part,
    find_roots,
    parity_necessary_check,
    point_count_bound,
    volume_bound,
    wills_check,
)
from .verification import run_all

DEFAULT_MAX_BOX_POINTS = 10**8

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CommandRequest:
    subcommand: str
    family_spec: str | None = None
    json_path: str | None = None
    k: int = 1
    a: Fraction = Fraction(2)
    tol: float = 1e-7
    fmt: str = "plain"
    max_box_points: int = DEFAULT_MAX_BOX_POINTS
    method: str = "auto"
    threads: int = 1


class SpecError(ValueError):
    pass


class _SpecParser:
    """Recursive-descent parser for the family grammar."""

    _FAMILIES = {
        "cube": (cube, 1),
        "cross": (crosspolytope, 1),
        "pn": (pn_family, 2),
        "qn": (qn_family, 2),
    }

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> None:
        raise SpecError(f"spec error at position {self.pos}: {message}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.fail(f"expected '{ch}'")
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a name (cube, cross, pn, qn, product, dilate)")
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a positive integer")
        return int(self.text[start : self.pos])

    def parse(self) -> LatticePolytope:
        poly = self.parse_spec()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("trailing input after a complete spec")
        return poly

    def parse_spec(self) -> LatticePolytope:
        name = self.word()
        if name == "product":
            self.expect("(")
            left = self.parse_spec()
            self.expect(",")
            right = self.parse_spec()
            self.expect(")")
            return product(left, right)
        if name == "dilate":
            self.expect("(")
            inner = self.parse_spec()
            self.expect(",")
            factor = self.integer()
            self.expect(")")
            try:
                return dilate(inner, factor)
            except ValueError as exc:
                raise SpecError(str(exc)) from exc
        if name in self._FAMILIES:
            ctor, minimum = self._FAMILIES[name]
            self.expect(":")
            n = self.integer()
            if n < minimum:
                self.fail(f"'{name}' requires a parameter >= {minimum}")
            return ctor(n)
        self.fail(f"unknown family '{name}'")
        raise AssertionError  # unreachable


def parse_polytope_spec(text: str) -> LatticePolytope:
    return _SpecParser(text).parse()


# ---------------------------------------------------------------------------
# JSON schemas


def fraction_str(value: Fraction) -> str:
    return str(value)


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def polytope_to_json(p: LatticePolytope) -> dict[str, Any]:
    out: dict[str, Any] = {
        "dimension": p.dimension,
        "vertices": [list(v) for v in p.vertices],
    }
    if p.halfspaces is not None:
        out["halfspaces"] = [
            {"normal": list(h.normal), "rhs": h.rhs} for h in p.halfspaces
        ]
    if p.family is not None:
        out["family"] = _family_to_json(p.family)
    return out


def _family_to_json(fam: Family) -> dict[str, Any]:
    params: dict[str, Any] = {}
    if fam.tag is FamilyTag.PRODUCT:
        params["scale"] = fam.scale
        params["factors"] = [polytope_to_json(f) for f in fam.factors]
    elif fam.tag is not FamilyTag.GENERIC:
        params["n"] = fam.n
        params["scale"] = fam.scale
    return {"tag": fam.tag.value, "params": params}


_FAMILY_CTORS = {
    "cube": cube,
    "crosspolytope": crosspolytope,
    "pn": pn_family,
    "qn": qn_family,
    "bipyramid": qn_family,
}


def polytope_from_json(obj: Any, path: str = "$") -> LatticePolytope:
    if not isinstance(obj, dict):
        raise ValueError(f"{path}: expected an object")
    family = obj.get("family")
    rebuilt: LatticePolytope | None = None
    if family is not None:
        rebuilt = _polytope_from_family_json(family, f"{path}.family")
    if rebuilt is not None:
        _check_consistent(obj, rebuilt, path)
        return rebuilt
    dimension = obj.get("dimension")
    if not isinstance(dimension, int) or dimension < 1:
        raise ValueError(f"{path}.dimension: expected a positive integer")
    vertices = obj.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise ValueError(
            f"{path}.vertices: required (only a family tag may replace them)"
        )
    for i, v in enumerate(vertices):
        if not isinstance(v, list) or len(v) != dimension or not all(
            isinstance(c, int) for c in v
        ):
            raise ValueError(
                f"{path}.vertices[{i}]: expected {dimension} integers"
            )
    halfspaces = None
    raw_hs = obj.get("halfspaces")
    if raw_hs is not None:
        if not isinstance(raw_hs, list):
            raise ValueError(f"{path}.halfspaces: expected a list")
        halfspaces = []
        for i, h in enumerate(raw_hs):
            hp = f"{path}.halfspaces[{i}]"
            if not isinstance(h, dict):
                raise ValueError(f"{hp}: expected an object")
            normal = h.get("normal")
            rhs = h.get("rhs")
            if (
                not isinstance(normal, list)
                or len(normal) != dimension
                or not all(isinstance(c, int) for c in normal)
            ):
                raise ValueError(f"{hp}.normal: expected {dimension} integers")
            if not isinstance(rhs, int):
                raise ValueError(f"{hp}.rhs: expected an integer")
            try:
                halfspaces.append(Halfspace(tuple(normal), rhs))
            except ValueError as exc:
                raise ValueError(f"{hp}: {exc}") from exc
        halfspaces = tuple(halfspaces)
    fam = Family(FamilyTag.GENERIC) if family is not None else None
    try:
        return LatticePolytope(
            dimension, tuple(tuple(v) for v in vertices), halfspaces, fam
        )
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _polytope_from_family_json(
    family: Any, path: str
) -> LatticePolytope | None:
    if not isinstance(family, dict) or "tag" not in family:
        raise ValueError(f"{path}: expected an object with a 'tag'")
    tag = family["tag"]
    params = family.get("params", {}) or {}
    if tag == "generic":
        return None
    if tag == "product":
        factors = params.get("factors")
        if not isinstance(factors, list) or len(factors) != 2:
            raise ValueError(f"{path}.params.factors: expected two factors")
        built = product(
            polytope_from_json(factors[0], f"{path}.params.factors[0]"),
            polytope_from_json(factors[1], f"{path}.params.factors[1]"),
        )
    elif tag in _FAMILY_CTORS:
        n = params.get("n")
        if not isinstance(n, int):
            raise ValueError(f"{path}.params.n: expected an integer")
        try:
            built = _FAMILY_CTORS[tag](n)
        except ValueError as exc:
            raise ValueError(f"{path}: {exc}") from exc
    else:
        raise ValueError(f"{path}.tag: unknown family '{tag}'")
    scale = params.get("scale", 1)
    if not isinstance(scale, int) or scale < 1:
        raise ValueError(f"{path}.params.scale: expected a positive integer")
    if scale > 1:
        built = dilate(built, scale)
    return built


def _check_consistent(obj: dict, rebuilt: LatticePolytope, path: str) -> None:
    if "dimension" in obj and obj["dimension"] != rebuilt.dimension:
        raise ValueError(
            f"{path}.dimension: {obj['dimension']} does not match the family "
            f"({rebuilt.dimension})"
        )
    if "vertices" in obj:
        given = {tuple(v) for v in obj["vertices"]}
        if given != set(rebuilt.vertices):
            raise ValueError(
                f"{path}.vertices: inconsistent with the family construction"
            )


def ehrhart_to_json(ehr: EhrhartPolynomial) -> dict[str, Any]:
    return {
        "dimension": ehr.dimension,
        "coefficients": [fraction_str(c) for c in ehr.coefficients],
    }


def ehrhart_from_json(obj: Any, path: str = "$") -> EhrhartPolynomial:
    if not isinstance(obj, dict):
        raise ValueError(f"{path}: expected an object")
    dimension = obj.get("dimension")
    coeffs = obj.get("coefficients")
    if not isinstance(dimension, int):
        raise ValueError(f"{path}.dimension: expected an integer")
    if not isinstance(coeffs, list):
        raise ValueError(f"{path}.coefficients: expected a list")
    return EhrhartPolynomial(
        dimension, Polynomial([Fraction(c) for c in coeffs])
    )


# ---------------------------------------------------------------------------
# Report rendering


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), sub, rows)
    elif isinstance(value, list):
        for i, sub in enumerate(value):
            _flatten(f"{prefix}[{i}]", sub, rows)
    else:
        rows.append((prefix, "" if value is None else str(value)))


def _polytope_summary(poly_json: dict[str, Any]) -> str:
    fam = poly_json.get("family", {}).get("tag", "generic")
    params = poly_json.get("family", {}).get("params", {})
    label = fam
    if "n" in params:
        label = f"{fam}:{params['n']}"
        if params.get("scale", 1) != 1:
            label = f"dilate({label},{params['scale']})"
    elif fam == "product":
        label = f"product of {len(params.get('factors', []))} factors"
    return (
        f"{label}, dimension {poly_json['dimension']}, "
        f"{len(poly_json['vertices'])} vertices"
    )


def render_report(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    if fmt == "plain" and "rows" in report and "overall" in report:
        lines = [
            f"[{row['status']}] {row['number']:2d}  {row['name']:<34} {row['detail']}"
            for row in report["rows"]
        ]
        lines.append(
            f"overall: {'PASS' if report['overall'] else 'FAIL'}"
        )
        return "\n".join(lines)
    if "polytope" in report:
        report = {**report, "polytope": _polytope_summary(report["polytope"])}
    rows: list[tuple[str, str]] = []
    _flatten("", report, rows)
    if fmt == "csv":
        lines = ["key,value"]
        for key, value in rows:
            if "," in value or '"' in value:
                value = '"' + value.replace('"', '""') + '"'
            lines.append(f"{key},{value}")
        return "\n".join(lines)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


# ---------------------------------------------------------------------------
# Subcommand implementations


def _load_polytope(req: CommandRequest) -> LatticePolytope:
    if (req.family_spec is None) == (req.json_path is None):
        raise SpecError("exactly one polytope source (--family or --json) required")
    if req.family_spec is not None:
        return parse_polytope_spec(req.family_spec)
    with open(req.json_path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON in {req.json_path}: {exc}") from exc
    return polytope_from_json(data)


def _polygonize(p: LatticePolytope) -> LatticePolytope:
    """Polygons without half-spaces get them from the 2D hull."""
    if p.halfspaces is None and p.dimension == 2:
        return hull2d(p.vertices)
    return p


def _counter(req: CommandRequest, p: LatticePolytope):
    if req.method == "box":
        return lambda k: (
            1
            if k == 0
            else count_box_scan(
                oracle_for(dilate(p, k)),
                chunks=req.threads,
                max_points=req.max_box_points,
            )
        )
    return dilation_counter(p, max_box_points=req.max_box_points)


def _ehrhart_for(req: CommandRequest, p: LatticePolytope) -> EhrhartPolynomial:
    return ehrhart_of(p, _counter(req, p))


def _cmd_count(req: CommandRequest) -> tuple[dict, int]:
    p = _load_polytope(req)
    if req.k < 0:
        raise SpecError("dilation must be nonnegative")
    value = _counter(req, p)(req.k)
    report = {
        "polytope": polytope_to_json(p),
        "k": req.k,
        "count": value,
        "method": "box-scan" if req.method == "box" else "auto",
    }
    return report, EXIT_OK


def _cmd_ehrhart(req: CommandRequest) -> tuple[dict, int]:
    p = _load_polytope(req)
    ehr = _ehrhart_for(req, p)
    report = {"polytope": polytope_to_json(p)}
    report.update(ehrhart_to_json(ehr))
    return report, EXIT_OK


def _roots_payload(req: CommandRequest, ehr: EhrhartPolynomial) -> dict[str, Any]:
    rs = find_roots(ehr.poly)
    reals = [z.real for z in rs.roots]
    spread = max(reals) - min(reals) if reals else 0.0
    detected = _round12(sum(reals) / len(reals)) if spread <= req.tol else None
    target = 1 / req.a
    return {
        "roots": [[_round12(z.real), _round12(z.imag)] for z in rs.roots],
        "residual_bound": _round12(rs.residual_bound),
        "source_degree": rs.source_degree,
        "real_part_target": fraction_str(-target),
        "common_real_part": common_real_part(rs, target, req.tol),
        "detected_common_real_part": detected,
        "parity_necessary_check": parity_necessary_check(ehr, req.a),
        "braun_disc_check": braun_disc_check(rs, ehr.dimension),
    }


def _cmd_roots(req: CommandRequest) -> tuple[dict, int]:
    p = _load_polytope(req)
    ehr = _ehrhart_for(req, p)
    report = {"polytope": polytope_to_json(p)}
    report.update(ehrhart_to_json(ehr))
    report.update(_roots_payload(req, ehr))
    return report, EXIT_OK


def _cmd_wills(req: CommandRequest) -> tuple[dict, int]:
    p = _load_polytope(req)
    ehr = _ehrhart_for(req, p)
    verdict = wills_check(ehr)
    report = {
        "polytope": polytope_to_json(p),
        "dimension": verdict.dimension,
        "per_index": [
            {
                "i": row.index,
                "coefficient": fraction_str(row.coefficient),
                "bound": fraction_str(row.bound),
                "holds": row.holds,
            }
            for row in verdict.per_index
        ],
        "violations": list(verdict.violations),
        "overall": verdict.overall,
    }
    return report, EXIT_OK if verdict.overall else EXIT_FINDING


def _bound_json(verdict) -> dict[str, Any]:
    return {
        "holds": verdict.holds,
        "is_equality": verdict.is_equality,
        "lhs": fraction_str(verdict.lhs),
        "rhs": fraction_str(verdict.rhs),
    }


def _cmd_bounds(req: CommandRequest) -> tuple[dict, int]:
    p = _load_polytope(req)
    ehr = _ehrhart_for(req, p)
    n = ehr.dimension
    ratio_rows = []
    all_hold = True
    for s in range(n + 1):
        for t in range(s + 1, n + 1):
            verdict = coefficient_ratio_bound(ehr, req.a, s, t)
            all_hold &= verdict.holds
            ratio_rows.append({"s": s, "t": t, **_bound_json(verdict)})
    vol = volume_bound(ehr, req.a)
    all_hold &= vol.holds
    report = {
        "polytope": polytope_to_json(p),
        "a": fraction_str(req.a),
        "hypothesis": _roots_payload(req, ehr),
        "ratio_bounds": ratio_rows,
        "volume_bound": _bound_json(vol),
    }
    if n >= 2:
        pc = point_count_bound(ehr, req.a)
        all_hold &= pc.holds
        report["point_count_bound"] = _bound_json(pc)
    return report, EXIT_OK if all_hold else EXIT_FINDING


def _cmd_reflexive(req: CommandRequest) -> tuple[dict, int]:
    p = _polygonize(_load_polytope(req))
    if p.halfspaces is None:
        raise SpecError(
            "reflexivity needs a half-space representation (2D hulls are "
            "built automatically; higher dimensions must supply halfspaces)"
        )
    ehr = _ehrhart_for(req, p)
    try:
        report_obj = reflexivity_equivalence(p, ehr)
    except OriginNotInteriorError as exc:
        raise SpecError(f"hypothesis failure: {exc}") from exc
    rs = find_roots(ehr.poly)
    consequence = root_line_reflexivity_consequence(p, ehr, rs, req.tol)
    report = {
        "polytope": polytope_to_json(p),
        "index_l": report_obj.index_l,
        "def_check": report_obj.def_check,
        "polar_check": report_obj.polar_check,
        "coefficient_check": report_obj.coefficient_check,
        "coefficient_identity": report_obj.coefficient_identity,
        "vertices_primitive": report_obj.vertices_primitive,
        "identity_lhs": fraction_str(report_obj.identity_lhs),
        "identity_rhs": fraction_str(report_obj.identity_rhs),
        "agree": report_obj.agree,
        "root_line_consequence": consequence,
    }
    return report, EXIT_OK if report_obj.def_check else EXIT_FINDING


def _cmd_verify_all(req: CommandRequest) -> tuple[dict, int]:
    rows = run_all()
    report = {
        "rows": [
            {
                "number": row.number,
                "name": row.name,
                "status": "PASS" if row.passed else "FAIL",
                "detail": row.detail,
            }
            for row in rows
        ],
        "overall": all(row.passed for row in rows),
    }
    return report, EXIT_OK if report["overall"] else EXIT_FINDING


_COMMANDS = {
    "count": _cmd_count,
    "ehrhart": _cmd_ehrhart,
    "roots": _cmd_roots,
    "wills": _cmd_wills,
    "bounds": _cmd_bounds,
    "reflexive": _cmd_reflexive,
    "verify-all": _cmd_verify_all,
}


def run(req: CommandRequest, out=None) -> int:
    """Execute a validated request; prints the report, returns exit status."""
    try:
        report, status = _COMMANDS[req.subcommand](req)
    except (SpecError, OriginNotInteriorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render_report(report, req.fmt), file=out if out is not None else sys.stdout)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrhartlab",
        description="Exact Ehrhart polynomials and coefficient-bound checks "
        "for lattice polytopes.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(sp, polytope_source=True):
        if polytope_source:
            group = sp.add_mutually_exclusive_group(required=True)
            group.add_argument("--family", help="family spec, e.g. pn:7")
            group.add_argument("--json", dest="json_path", help="polytope JSON file")
        sp.add_argument(
            "--format",
            dest="fmt",
            choices=("plain", "json", "csv"),
            default="plain",
        )
        sp.add_argument(
            "--max-box-points",
            type=int,
            default=DEFAULT_MAX_BOX_POINTS,
            help="refuse box scans beyond this many candidate points",
        )

    sp = sub.add_parser("count", help="lattice points in the k-fold dilate")
    add_common(sp)
    sp.add_argument("-k", type=int, default=1, help="dilation factor")
    sp.add_argument(
        "--method",
        choices=("auto", "box"),
        default="auto",
        help="'box' forces the brute-force scan (oracle / debugging)",
    )

    sp = sub.add_parser("ehrhart", help="exact Ehrhart coefficients")
    add_common(sp)

    sp = sub.add_parser("roots", help="roots and real-part diagnostics")
    add_common(sp)
    sp.add_argument("-a", type=Fraction, default=Fraction(2),
                    help="test the root line Re = -1/a (default 2)")
    sp.add_argument("--tol", type=float, default=1e-7)

    sp = sub.add_parser("wills", help="coefficient bound verdicts")
    add_common(sp)

    sp = sub.add_parser("bounds", help="inequality suite for a given a")
    add_common(sp)
    sp.add_argument("-a", type=Fraction, default=Fraction(2))
    sp.add_argument("--tol", type=float, default=1e-7)

    sp = sub.add_parser("reflexive", help="l-reflexivity report")
    add_common(sp)
    sp.add_argument("--tol", type=float, default=1e-7)

    sp = sub.add_parser("verify-all", help="run the verification table")
    add_common(sp, polytope_source=False)

    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    threads = 1
    env = os.environ.get("EHRHART_THREADS")
    if env:
        try:
            threads = max(1, int(env))
        except ValueError:
            threads = 1
    return CommandRequest(
        subcommand=args.subcommand,
        family_spec=getattr(args, "family", None),
        json_path=getattr(args, "json_path", None),
        k=getattr(args, "k", 1),
        a=getattr(args, "a", Fraction(2)),
        tol=getattr(args, "tol", 1e-7),
        fmt=getattr(args, "fmt", "plain"),
        max_box_points=getattr(args, "max_box_points", DEFAULT_MAX_BOX_POINTS),
        method=getattr(args, "method", "auto"),
        threads=threads,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches our convention
        return int(exc.code or 0)
    return run(request_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
