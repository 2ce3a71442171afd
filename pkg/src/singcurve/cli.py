"""Command-line front end.

    singcurve hilbert DOC            Hilbert data of S/I, d and p_a
    singcurve wspace DOC L           basis of (W_C)_L
    singcurve verify DOC             nesting, lci, codimension formula, plane theorem
    singcurve beta N B D L [--brute EXPR]

Exit status: 0 success, 1 a verification failed, 2 bad input,
3 a precondition failed (characteristic divides the degree, not a curve,
no stabilization, l < 2d).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from .field import Field
from .invariants import (
    CheckReport,
    DomainError,
    LeadingMismatch,
    NoStabilization,
    NotACurve,
    analyze_curve,
    backend_dimensions,
    beta_bruteforce,
    beta_closed_form,
    curve_invariants,
    default_window,
    lci_check,
    nesting_check,
    quotient_hilbert,
    verify_codim_formula,
    verify_plane_theorem,
)
from .parser import PolynomialSyntaxError, UnknownVariable, parse_polynomial
from .polynomial import IdealPresentation, NonHomogeneousGenerator
from .slices import CharDividesDegree, ideal_slice, ideal_square_slice, singular_slice, slice_table_row

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

PRECONDITION_ERRORS = (CharDividesDegree, NotACurve, NoStabilization, DomainError, LeadingMismatch)
INPUT_ERRORS = (PolynomialSyntaxError, NonHomogeneousGenerator, json.JSONDecodeError, ValueError, OSError)


@dataclass
class InputDocument:
    field: Field
    variables: list[str]
    generators: list[str]
    options: dict = dc_field(default_factory=dict)
    comment: object = None

    @classmethod
    def from_dict(cls, data: dict) -> InputDocument:
        if not isinstance(data, dict):
            raise ValueError("input document must be a JSON object")
        variables = data.get("variables")
        generators = data.get("generators")
        if not variables or not all(isinstance(v, str) for v in variables):
            raise ValueError("'variables' must be a nonempty list of names")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        if not generators or not all(isinstance(g, str) for g in generators):
            raise ValueError("'generators' must be a nonempty list of strings")
        return cls(
            Field.from_dict(data.get("field")),
            list(variables),
            list(generators),
            dict(data.get("options") or {}),
            data.get("comment"),
        )

    @classmethod
    def load(cls, path: str | Path) -> InputDocument:
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def ideal(self) -> IdealPresentation:
        return IdealPresentation.from_strings(self.generators, self.variables, self.field)

    def window(self, I: IdealPresentation) -> tuple[int, int]:
        w = self.options.get("window")
        if w:
            return _check_window(int(w[0]), int(w[1]))
        return default_window(I)

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "variables": self.variables,
            "generators": self.generators,
            "options": self.options,
        }


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture document (``nodal_cubic``, ``twisted_cubic``, ...)."""
    return Path(str(resources.files("singcurve") / "fixtures" / f"{name}.json"))


def fixture_names() -> list[str]:
    root = resources.files("singcurve") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> InputDocument:
    return InputDocument.load(fixture_path(name))


def _check_window(lo: int, hi: int) -> tuple[int, int]:
    if lo < 1 or hi < lo:
        raise ValueError(f"bad window [{lo}, {hi}]")
    return lo, hi


def _parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be L_MIN:L_MAX, got {text!r}") from None
    return lo, hi


def _apply_overrides(doc: InputDocument, args) -> InputDocument:
    if getattr(args, "field", None):
        doc.field = args.field
    if getattr(args, "window", None):
        doc.options["window"] = list(args.window)
    if getattr(args, "gtilde", None) is not None:
        doc.options["g_tilde"] = args.gtilde
    return doc


# -- commands --------------------------------------------------------------


def _cross_check(doc: InputDocument, I: IdealPresentation, window, report: dict):
    """Compare every per-degree dimension with the other backend."""
    other = Field.rational() if I.field.is_prime else Field.prime()
    alt = IdealPresentation.from_strings(doc.generators, doc.variables, other)
    mine = report["table"]
    theirs = backend_dimensions(alt, window, other)
    report["cross_check"] = {"field": other.to_dict(), "agree": mine == theirs}
    if mine != theirs:
        bad = [a["l"] for a, b in zip(mine, theirs) if a != b]
        report["warnings"].append(
            f"dimensions differ from {other} at degrees {bad}; possible bad-prime artifact"
        )


def cmd_hilbert(doc: InputDocument) -> tuple[dict, int]:
    I = doc.ideal()
    window = doc.window(I)
    report = _new_report("hilbert", doc, window)
    report["table"] = [slice_table_row(I, l) for l in range(window[0], window[1] + 1)]
    report["skipped"] = [r["l"] for r in report["table"] if r["dim_W"] is None]
    if doc.options.get("backend") == "both":
        _cross_check(doc, I, window, report)
    rec = quotient_hilbert(I, window)
    report["hilbert"] = rec.to_dict()
    try:
        inv = curve_invariants(I, window)
    except NotACurve as exc:
        report["error"] = f"NotACurve: {exc}"
        return report, EXIT_PRECONDITION
    report["invariants"] = inv.to_dict()
    return report, EXIT_OK


def cmd_wspace(doc: InputDocument, l: int) -> tuple[dict, int]:
    I = doc.ideal()
    report = _new_report("wspace", doc, None)
    report["command"]["l"] = l
    W = singular_slice(I, l)
    report["wspace"] = {
        "l": l,
        "dim_S": W.ambient_dim,
        "dim_W": W.dim,
        "codim_W": W.codim,
        "dim_I": ideal_slice(I, l).dim,
        "dim_I2": ideal_square_slice(I, l).dim,
        "basis": [g.render(doc.variables) for g in W.polynomials(I.n)],
    }
    return report, EXIT_OK


def _guarded(name: str, fn) -> dict:
    try:
        result = fn()
    except (AssertionError, *PRECONDITION_ERRORS) as exc:
        return {"name": name, "verdict": "ERROR", "detail": f"{type(exc).__name__}: {exc}",
                "first_failure": None, "rows": [], "skipped": []}
    return result.to_dict() if isinstance(result, CheckReport) else result


def cmd_verify(doc: InputDocument) -> tuple[dict, int]:
    I = doc.ideal()
    window = doc.window(I)
    degrees = range(window[0], window[1] + 1)
    report = _new_report("verify", doc, window)
    checks = [_guarded("nesting", lambda: nesting_check(I, degrees)),
              _guarded("lci", lambda: lci_check(I, degrees))]

    if doc.options.get("integral", True):
        try:
            inv = analyze_curve(I, window, doc.options.get("g_tilde"))
        except PRECONDITION_ERRORS as exc:
            checks.append({"name": "invariants", "verdict": "ERROR",
                           "detail": f"{type(exc).__name__}: {exc}",
                           "first_failure": None, "rows": [], "skipped": []})
        else:
            report["invariants"] = inv.to_dict()
            report["hilbert"] = inv.hilbert.to_dict()
            report["omega"] = inv.omega.to_dict()
            checks.append(_guarded(
                "codim_formula", lambda: verify_codim_formula(I, inv.g_plus_mu, window, inv=inv)))
            if I.n == 2 and len(I.generators) == 1:
                checks.append(_guarded("plane_theorem", lambda: verify_plane_theorem(I, window)))
            else:
                checks.append({"name": "plane_theorem", "verdict": "SKIPPED",
                               "detail": "not a single plane-curve equation in P^2",
                               "first_failure": None, "rows": [], "skipped": []})
    else:
        report["notes"].append("input marked non-integral: only unconditional checks run")

    report["checks"] = checks
    report["skipped"] = sorted({l for c in checks for l in c.get("skipped", [])})
    failed = any(c["verdict"] in ("FAIL", "ERROR") for c in checks)
    return report, EXIT_FAIL if failed else EXIT_OK


def _parse_brute(expr: str, b: int, field: Field):
    names = [f"x{i}" for i in range(b + 2)]
    try:
        return parse_polynomial(expr, names, field)
    except UnknownVariable:
        letters = list("xyzwuvst")[: b + 2]
        if len(letters) < b + 2:
            raise
        return parse_polynomial(expr, letters, field)


def cmd_beta(n: int, b: int, d: int, l: int, brute: str | None = None,
             field: Field | None = None) -> tuple[dict, int]:
    field = field or Field.prime()
    report = {
        "command": {"name": "beta", "n": n, "b": b, "d": d, "l": l, "brute": brute,
                    "field": field.to_dict()},
        "warnings": [],
    }
    closed = beta_closed_form(n, b, d, l)
    report["beta"] = {"closed_form": closed}
    if brute is None:
        return report, EXIT_OK
    f = _parse_brute(brute, b, field)
    if f.is_zero() or not f.is_homogeneous() or f.degree != d:
        raise NonHomogeneousGenerator(f"--brute must be a nonzero form of degree {d}")
    value = beta_bruteforce(n, b, f, l)
    report["beta"].update({"bruteforce": value, "verdict": "PASS" if value == closed else "FAIL"})
    return report, EXIT_OK if value == closed else EXIT_FAIL


def _new_report(name: str, doc: InputDocument, window) -> dict:
    return {
        "command": {"name": name, "document": doc.to_dict(),
                    "window": list(window) if window else None},
        "warnings": [],
        "notes": [],
    }


# -- output ----------------------------------------------------------------


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def summarize(report: dict) -> str:
    cmd = report["command"]["name"]
    lines = [f"== {cmd} =="]
    if "table" in report:
        lines.append(f"{'l':>3} {'dim S':>6} {'dim I':>6} {'I^2':>6} {'W_C':>6} {'K':>6} {'Omega':>6}")
        for r in report["table"]:
            cells = [r["l"], r["dim_S"], r["dim_I"], r["dim_I2"], r["dim_W"], r["dim_K"], r["omega"]]
            lines.append(" ".join(f"{'-' if c is None else c:>{3 if i == 0 else 6}}"
                                  for i, c in enumerate(cells)))
    if "hilbert" in report:
        h = report["hilbert"]
        lines.append(f"Hilbert polynomial of S/I: {h['polynomial']} (from l={h['stable_from']})")
    if "omega" in report:
        h = report["omega"]
        lines.append(f"Omega_C polynomial: {h['polynomial']} (from l={h['stable_from']})")
    if "invariants" in report:
        inv = report["invariants"]
        parts = [f"{k}={v}" for k, v in inv.items() if v is not None]
        lines.append("invariants: " + ", ".join(parts))
    if "wspace" in report:
        w = report["wspace"]
        lines.append(f"dim (W_C)_{w['l']} = {w['dim_W']} (codim {w['codim_W']} in S_{w['l']})")
        lines.extend(f"  {g}" for g in w["basis"])
    if "beta" in report:
        bt = report["beta"]
        line = f"beta = {bt['closed_form']}"
        if "bruteforce" in bt:
            line += f", brute force = {bt['bruteforce']}: {bt['verdict']}"
        lines.append(line)
    for c in report.get("checks", []):
        extra = f" (first failure at l={c['first_failure']})" if c["first_failure"] is not None else ""
        lines.append(f"[{c['verdict']}] {c['name']}{extra} {c['detail']}".rstrip())
    if report.get("skipped"):
        lines.append(f"skipped degrees (characteristic divides l): {report['skipped']}")
    if report.get("error"):
        lines.append(f"error: {report['error']}")
    lines.extend(f"note: {n}" for n in report.get("notes", []))
    lines.extend(f"warning: {w}" for w in report.get("warnings", []))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=Field.parse, help="prime:P or rational (overrides the document)")
    common.add_argument("--json", action="store_true", help="print the JSON report instead of the summary")
    common.add_argument("--out", help="write the JSON report to this path")

    doc_opts = argparse.ArgumentParser(add_help=False)
    doc_opts.add_argument("document", help="input JSON document, or fixture:NAME")
    doc_opts.add_argument("--window", type=_parse_window, help="degree window L_MIN:L_MAX")
    doc_opts.add_argument("--gtilde", type=int, help="genus of the normalization, if known")

    parser = argparse.ArgumentParser(prog="singcurve", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="cmd", required=True)
    sub.add_parser("hilbert", parents=[common, doc_opts], help="Hilbert data of S/I")
    ws = sub.add_parser("wspace", parents=[common, doc_opts], help="basis of (W_C)_l")
    ws.add_argument("l", type=int)
    sub.add_parser("verify", parents=[common, doc_opts], help="run the verification suite")
    bt = sub.add_parser("beta", parents=[common], help="codimension of (I^2)_l for I=(f, x_{b+2},...,x_n)")
    for name in ("n", "b", "d", "l"):
        bt.add_argument(name, type=int)
    bt.add_argument("--brute", metavar="EXPR", help="also row-reduce with this form f")
    return parser


def _load_document(source: str) -> InputDocument:
    if source.startswith("fixture:"):
        return load_fixture(source[len("fixture:"):])
    return InputDocument.load(source)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    try:
        if args.cmd == "beta":
            report, status = cmd_beta(args.n, args.b, args.d, args.l, args.brute, args.field)
        else:
            doc = _apply_overrides(_load_document(args.document), args)
            if args.cmd == "hilbert":
                report, status = cmd_hilbert(doc)
            elif args.cmd == "wspace":
                report, status = cmd_wspace(doc, args.l)
            else:
                report, status = cmd_verify(doc)
    except PRECONDITION_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    text = dumps(report)
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text if args.json else summarize(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
