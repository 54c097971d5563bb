"""Command-line front end.

    parahiggs compute --genus 1 --deg-a 0 --deg-b 0 \\
        --alpha1 1/10 --alpha2 1/2 --eta 6/10 --format json
    parahiggs sweep config.json --format csv
    parahiggs verify [--genus 1 2 3] [--worked-examples]

``compute`` is the default subcommand, so its flags may be given directly.
Exit codes: 0 ok, 1 usage, 2 validation, 3 internal mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .assembly import METHODS, ModuliReport, n111_only, poincare_U
from .errors import InexactDivision, InternalMismatch, NonUnitLeadingTerm, ValidationError
from .series import LaurentPoly
from .verify import WORKED_EXAMPLES, default_grid, run_verify
from .weights import ModuliInput, WeightPoint, format_rational, validate

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_INTERNAL = 0, 1, 2, 3
FORMATS = ("json", "csv", "text")
SUBCOMMANDS = ("compute", "sweep", "verify")
INTERNAL_ERRORS = (InternalMismatch, NonUnitLeadingTerm, InexactDivision)

ROW_FIELDS = ["g", "a", "b", "alpha1", "alpha2", "eta", "case", "tau", "Delta",
              "dimension", "betti", "palindrome", "methods_agree", "error"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _onoff(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return text == "on"


def poly_json(p: LaurentPoly):
    """Ascending coefficient list; Laurent polys fall back to an exponent map."""
    if p.is_polynomial():
        return p.coefficients()
    return {"terms": {str(k): c for k, c in sorted(p.terms.items())}}


def report_dict(rep: ModuliReport) -> dict:
    return {
        "input": rep.input.as_dict(),
        "Delta": rep.derived.Delta,
        "tau": format_rational(rep.derived.tau),
        "case": rep.derived.case_label.value if rep.derived.case_label else None,
        "dualized": rep.dualized,
        "working_case": (rep.working_derived.case_label.value
                         if rep.working_derived and rep.working_derived.case_label else None),
        "method": rep.method,
        "poincare": poly_json(rep.poincare),
        "betti": rep.betti,
        "n111": poly_json(rep.n111_contribution),
        "triples": poly_json(rep.triples_contribution),
        "complex_dimension": rep.complex_dimension,
        "real_dimension": rep.real_dimension,
        "duality_palindrome": rep.duality_palindrome,
        "duality_palindrome_2dim": rep.duality_palindrome_2dim,
        "euler_characteristic": rep.euler_characteristic,
        "nonnegative": rep.nonnegative,
        "discrepancies": rep.discrepancies,
    }


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


def _row(inp: ModuliInput, rep: Optional[ModuliReport] = None, error: str = "",
         agree: Optional[bool] = None) -> dict:
    p = inp.points[0]
    row = dict.fromkeys(ROW_FIELDS)
    row.update(g=inp.g, a=inp.a, b=inp.b, Delta=inp.Delta, error=error or None,
               methods_agree=agree, **p.as_dict())
    if rep is not None:
        row.update(case=rep.derived.case_label.value if rep.derived.case_label else None,
                   tau=format_rational(rep.derived.tau), dimension=rep.complex_dimension,
                   betti=rep.betti, palindrome=rep.duality_palindrome)
    return row


def _csv(rows: List[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=ROW_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        flat = dict(r)
        if isinstance(flat["betti"], list):
            flat["betti"] = " ".join(map(str, flat["betti"]))
        w.writerow({k: "" if v is None else v for k, v in flat.items()})
    return buf.getvalue()


def _text_report(rep: ModuliReport) -> str:
    d = rep.derived
    lines = [
        f"input      g={rep.input.g} a={rep.input.a} b={rep.input.b} "
        + " ".join(f"{k}={v}" for k, v in rep.input.points[0].as_dict().items()),
        f"Delta={d.Delta}  tau={format_rational(d.tau)}  case={d.case_label}"
        + ("  (computed on the dual)" if rep.dualized else ""),
        f"P_t(U)     = {rep.poincare}",
        f"  (1,1,1)  = {rep.n111_contribution}",
        f"  triples  = {rep.triples_contribution}",
        f"betti      {rep.betti}",
        f"dimension  complex {rep.complex_dimension}, real {rep.real_dimension}",
        f"euler      {rep.euler_characteristic}",
        f"palindrome own degree: {rep.duality_palindrome}, "
        f"about 2*dim: {rep.duality_palindrome_2dim}",
    ]
    return "\n".join(lines)


def _rows_text(rows: List[dict]) -> str:
    out = []
    for r in rows:
        head = f"g={r['g']} a={r['a']} b={r['b']} ({r['alpha1']}, {r['alpha2']}, {r['eta']})"
        if r["error"]:
            out.append(f"{head}: {r['error']}")
        else:
            out.append(f"{head}: {r['case']} tau={r['tau']} betti={r['betti']}")
    return "\n".join(out)


def _build_input(args) -> ModuliInput:
    point = WeightPoint(args.alpha1, args.alpha2, args.eta)
    return ModuliInput(args.genus, (point,) * args.punctures, args.deg_a, args.deg_b)


def run_single(args, out) -> int:
    if (args.jacobian or args.sum_all_d0) and args.method != "direct" and args.punctures == 1:
        raise UsageError("--jacobian/--sum-all-d0 need --method direct")
    if args.punctures < 1:
        raise UsageError("--punctures must be at least 1")
    inp = _build_input(args)
    if args.punctures > 1:
        derived = validate(inp, require_case=False)
        n111 = n111_only(inp, args.jacobian, args.sum_all_d0)
        payload = {"input": inp.as_dict(), "Delta": derived.Delta,
                   "tau": format_rational(derived.tau), "n111": poly_json(n111),
                   "assembly": None}
        if args.format == "json":
            out.write(dump_json(payload) + "\n")
        elif args.format == "csv":
            out.write("g,a,b,punctures,tau,n111\n")
            out.write(f"{inp.g},{inp.a},{inp.b},{inp.s},{payload['tau']},{n111}\n")
        else:
            out.write(f"P_t(N_(1,1,1)) = {n111}\n(assembly needs one marked point)\n")
        return EXIT_OK
    rep = poincare_U(inp, args.method, args.jacobian, args.sum_all_d0)
    if args.format == "json":
        out.write(dump_json(report_dict(rep)) + "\n")
    elif args.format == "csv":
        out.write(_csv([_row(inp, rep, agree=True if args.method == "both" else None)]))
    else:
        out.write(_text_report(rep) + "\n")
    return EXIT_OK


@dataclass
class SweepConfig:
    genus: List[int]
    degrees: List[tuple]
    points: List[dict]
    method: str = "both"
    format: str = "json"

    @classmethod
    def load(cls, path: str) -> "SweepConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read sweep config {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise UsageError("sweep config must be a JSON object")
        unknown = set(raw) - {"genus", "degrees", "points", "method", "format"}
        if unknown:
            raise UsageError(f"unknown sweep config keys: {sorted(unknown)}")
        try:
            genus = [int(g) for g in raw.get("genus", [])]
            degrees = [(int(a), int(b)) for a, b in raw.get("degrees", [])]
            points = [{k: str(p[k]) for k in ("alpha1", "alpha2", "eta")}
                      for p in raw.get("points", [])]
        except (TypeError, ValueError, KeyError) as exc:
            raise UsageError(f"malformed sweep config: {exc!r}") from exc
        cfg = cls(genus, degrees, points, raw.get("method", "both"), raw.get("format", "json"))
        if cfg.method not in METHODS:
            raise UsageError(f"sweep method must be one of {METHODS}")
        if cfg.format not in FORMATS:
            raise UsageError(f"sweep format must be one of {FORMATS}")
        return cfg


def sweep_rows(cfg: SweepConfig) -> List[dict]:
    rows = []
    for g in cfg.genus:
        for a, b in cfg.degrees:
            for pt in cfg.points:
                rows.append(_sweep_one(g, a, b, pt, cfg.method))
    return rows


def _sweep_one(g, a, b, pt, method) -> dict:
    try:
        point = WeightPoint(pt["alpha1"], pt["alpha2"], pt["eta"])
    except ValidationError as exc:
        row = dict.fromkeys(ROW_FIELDS)
        row.update(g=g, a=a, b=b, Delta=a + b, error=f"{type(exc).__name__}: {exc}", **pt)
        return row
    inp = ModuliInput(g, (point,), a, b)
    try:
        rep = poincare_U(inp, method)
    except ValidationError as exc:
        return _row(inp, error=f"{type(exc).__name__}: {exc}")
    except INTERNAL_ERRORS as exc:
        return _row(inp, error=f"{type(exc).__name__}: {exc}", agree=False)
    return _row(inp, rep, agree=True if method == "both" else None)


def run_sweep(args, out) -> int:
    cfg = SweepConfig.load(args.config)
    fmt = args.format or cfg.format
    rows = sweep_rows(cfg)
    if fmt == "json":
        out.write(dump_json(rows) + "\n")
    elif fmt == "csv":
        out.write(_csv(rows))
    else:
        out.write(_rows_text(rows) + ("\n" if rows else ""))
    return EXIT_OK


def run_verify_cmd(args, out) -> int:
    if args.worked_examples:
        inputs = [ex[0] for ex in WORKED_EXAMPLES]
    else:
        inputs = default_grid(genera=args.genus)
    result = run_verify(inputs)
    for line in result.summary_lines():
        out.write(line + "\n")
    return EXIT_OK if result.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parahiggs", description="Poincaré polynomials of parabolic "
                     "U(2,1)-Higgs moduli spaces with marked points.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("compute", help="one input")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--deg-a", type=int, required=True)
    c.add_argument("--deg-b", type=int, required=True)
    c.add_argument("--alpha1", required=True, help="rational 'p/q'")
    c.add_argument("--alpha2", required=True, help="rational 'p/q'")
    c.add_argument("--eta", required=True, help="rational 'p/q'")
    c.add_argument("--punctures", type=int, default=1,
                   help="marked points sharing these weights; >1 only gives the (1,1,1) part")
    c.add_argument("--method", choices=METHODS, default="both")
    c.add_argument("--jacobian", type=_onoff, default=False, metavar="{on,off}")
    c.add_argument("--sum-all-d0", type=_onoff, default=False, metavar="{on,off}")
    c.add_argument("--format", choices=FORMATS, default="json")

    s = sub.add_parser("sweep", help="table over a JSON config")
    s.add_argument("config")
    s.add_argument("--format", choices=FORMATS, default=None)

    v = sub.add_parser("verify", help="closed vs direct reconciliation over a grid")
    v.add_argument("--genus", type=int, nargs="+", default=[1, 2, 3])
    v.add_argument("--worked-examples", action="store_true",
                   help="only the two worked genus-one examples")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in SUBCOMMANDS and argv[0] not in ("-h", "--help"):
        argv.insert(0, "compute")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        handler = {"compute": run_single, "sweep": run_sweep, "verify": run_verify_cmd}
        return handler[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except INTERNAL_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
