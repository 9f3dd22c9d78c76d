"""Command-line interface.

Exit status 0 on success, 1 on malformed input (including bad flags), 2 on a
well-formed request whose mathematical preconditions fail.  Errors are written
to stderr as a JSON object ``{"error", "kind", "message"}``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .coxeter import count_coxeter, coxeter_number, enumerate_coxeter
from .errors import DomainError, GasfError, InputError, MalformedSpec
from .invariants import full_report, is_nonempty, verify_lower_bound
from .multiplicity import (
    dominant_weights_below,
    freudenthal,
    kostant_mult,
    orbit_size,
    weyl_dimension,
)
from .rational import fmt, fmt_vec, parse_vec
from .root_datum import build_root_datum
from .schema import REPORT_SCHEMA
from .series import INCONCLUSIVE, LaurentSeries, invert, multiply
from .strata import leq_Q, meet, steinberg_contains, strata_query
from .torus import c_gamma, discriminant_valuation, newton_point, parse_gamma, r_gamma
from . import verify as _verify


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; we reserve 2 for domain errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        _emit_error("usage", "input", message)
        raise SystemExit(1)


def _emit_error(name: str, kind: str, message: str):
    print(json.dumps({"error": name, "kind": kind, "message": message}, sort_keys=True),
          file=sys.stderr)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_json(arg: str):
    """Inline JSON (starting with '{', '[' or '"') or a path to a JSON file."""
    text = arg.strip()
    if not text.startswith(("{", "[", '"')):
        try:
            text = Path(arg).read_text()
        except OSError as e:
            raise MalformedSpec(f"cannot read {arg}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedSpec(f"invalid JSON in {arg!r}: {e.msg}") from None


def _datum(args):
    return build_root_datum(args.datum)


def _coweight(d, text: str):
    return d.coweight(parse_vec(text))


def _trunc(args):
    return getattr(args, "trunc", None)


# ---------------------------------------------------------------------------
# handlers; each returns (exit status, text)


def cmd_datum_show(args):
    return 0, _dump(_datum(args).summary())


def cmd_datum_weyl(args):
    d = _datum(args)
    out = {"name": d.name, "order": len(d.weyl_group), "w0": d.w0.word_string()}
    if args.list:
        out["elements"] = [w.word_string() for w in d.weyl_group]
    return 0, _dump(out)


def cmd_cox_enum(args):
    d = _datum(args)
    return 0, "\n".join(w.word_string() for w in enumerate_coxeter(d))


def cmd_cox_count(args):
    d = _datum(args)
    return 0, str(count_coxeter(d))


def cmd_cox_number(args):
    d = _datum(args)
    if len(d.components) != 1:
        raise MalformedSpec("the Coxeter number needs an irreducible datum")
    return 0, str(coxeter_number(d))


def cmd_mult_table(args):
    d = _datum(args)
    lam = _coweight(d, args.lam)
    rows = ["type\tlambda\tmu\tm_freudenthal\tm_kostant\tagree"]
    mus = [_coweight(d, args.mu)] if args.mu else dominant_weights_below(d, lam)
    for mu in mus:
        f = freudenthal(d, lam, mu)
        k = kostant_mult(d, lam, mu)
        rows.append("\t".join([d.name, ",".join(fmt_vec(lam)), ",".join(fmt_vec(mu)),
                               str(f), str(k), "yes" if f == k else "NO"]))
    return 0, "\n".join(rows)


def cmd_mult_dim(args):
    d = _datum(args)
    lam = _coweight(d, args.lam)
    total = sum(freudenthal(d, lam, mu) * orbit_size(d, mu) for mu in dominant_weights_below(d, lam))
    return 0, _dump({"lambda": fmt_vec(lam), "weyl_dimension": weyl_dimension(d, lam),
                     "weight_count": total})


def cmd_strata_query(args):
    d = _datum(args)
    return 0, _dump(strata_query(d, _coweight(d, args.nu)))


def cmd_strata_meet(args):
    d = _datum(args)
    m = meet(d, _coweight(d, args.lam1), _coweight(d, args.lam2))
    return 0, _dump({"meet": fmt_vec(m)})


def cmd_strata_leq(args):
    d = _datum(args)
    return 0, _dump({"leq": leq_Q(d, _coweight(d, args.nu), _coweight(d, args.lam))})


def cmd_strata_steinberg(args):
    d = _datum(args)
    g = parse_gamma(d, _load_json(args.gamma), _trunc(args))
    lam = _coweight(d, args.lam)
    return 0, _dump({"contains": steinberg_contains(g, lam), "newton_leq": leq_Q(d, newton_point(g), lam)})


def _series(arg: str) -> LaurentSeries:
    return LaurentSeries.from_json(_load_json(arg) if arg.strip()[:1] in "{[\"" or
                                   os.path.exists(arg) else arg)


def _series_json(s: LaurentSeries) -> dict:
    v = s.valuation()
    return {"series": s.to_json(), "text": str(s), "valuation": v if isinstance(v, int) else str(v)}


def cmd_series_val(args):
    s = _series(args.a)
    v = s.valuation()
    return 0, str(v) if v is not INCONCLUSIVE else "INCONCLUSIVE"


def cmd_series_mul(args):
    return 0, _dump(_series_json(multiply(_series(args.a), _series(args.b))))


def cmd_series_inv(args):
    return 0, _dump(_series_json(invert(_series(args.a), args.precision)))


def cmd_springer_report(args):
    d = _datum(args)
    g = parse_gamma(d, _load_json(args.gamma), _trunc(args))
    rep = full_report(g, _coweight(d, args.lam)).to_json()
    if args.json:
        return 0, _dump(rep)
    return 0, "\n".join(f"{k}: {json.dumps(rep[k], sort_keys=True)}" for k in sorted(rep))


def cmd_springer_invariants(args):
    d = _datum(args)
    g = parse_gamma(d, _load_json(args.gamma), _trunc(args))
    return 0, _dump({"newton": fmt_vec(newton_point(g)), "d": fmt(discriminant_valuation(g)),
                     "r": fmt(r_gamma(g)), "c": c_gamma(g)})


def cmd_springer_nonempty(args):
    d = _datum(args)
    g = parse_gamma(d, _load_json(args.gamma), _trunc(args))
    return 0, _dump({"nonempty": is_nonempty(g, _coweight(d, args.lam))})


def cmd_springer_lower_bound(args):
    d = _datum(args)
    scan = verify_lower_bound(d, args.radius, oracle=not args.no_oracle)
    if args.tsv:
        lines = ["lambda\tmu\tmultiplicity\tstatus"]
        lines += ["\t".join([",".join(lam), ",".join(mu), str(m), s]) for lam, mu, m, s in scan.rows]
        text = "\n".join(lines)
    else:
        text = _dump(scan.summary())
    return (0 if scan.passed else 2), text


def cmd_springer_schema(args):
    return 0, _dump(REPORT_SCHEMA)


def _suite_output(results, as_json: bool) -> tuple[int, str]:
    status = 0 if all(r.passed for r in results) else 2
    if as_json:
        return status, _dump([r.to_json() for r in results])
    return status, "\n".join(r.line() for r in results)


def cmd_verify_all(args):
    res = _verify.run_verification_suite(seed=args.seed, small=args.small, raise_on_failure=False)
    return _suite_output(res, args.json)


def cmd_verify_suite(args):
    res = _verify.run_verification_suite([args.suite], seed=args.seed, small=args.small,
                                         raise_on_failure=False)
    return _suite_output(res, args.json)


def cmd_verify_lower_bound(args):
    d = _datum(args)
    scan = verify_lower_bound(d, args.radius)
    line = (f"{'PASS' if scan.passed else 'FAIL'} lower-bound {d.name} radius {args.radius}: "
            f"{scan.pairs} pairs, minimum {scan.min_mult}, bound {scan.bound}")
    return (0 if scan.passed else 2), (_dump(scan.summary()) if args.json else line)


def cmd_verify_equivalence(args):
    res = _verify.suite_equivalence(args.seed, types=(args.datum,), trials=args.trials)
    return _suite_output([res], args.json)


# ---------------------------------------------------------------------------
# parser


def _add_datum(p):
    p.add_argument("--datum", "--type", dest="datum", required=True,
                   help="root datum, e.g. A2, GL3, B2*A1, or a JSON file")


def _add_trunc(p):
    p.add_argument("--trunc", type=int, default=None,
                   help="series truncation (default: $SPRINGER_TRUNCATION or 16)")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="gasf", description="Invariants of generalized affine Springer fibers.")
    top.add_argument("--version", action="version", version=f"gasf {__version__}")
    verbs = top.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def sub(group, name, fn, help_text):
        p = group.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    g = verbs.add_parser("datum", help="root data").add_subparsers(dest="sub", required=True)
    p = sub(g, "show", cmd_datum_show, "Cartan matrix, roots, fundamental (co)weights")
    _add_datum(p)
    p = sub(g, "weyl", cmd_datum_weyl, "Weyl group order and longest element")
    _add_datum(p)
    p.add_argument("--list", action="store_true", help="list every element as a reduced word")

    g = verbs.add_parser("cox", help="Coxeter elements").add_subparsers(dest="sub", required=True)
    _add_datum(sub(g, "enum", cmd_cox_enum, "reduced words, one per line"))
    _add_datum(sub(g, "count", cmd_cox_count, "number of Coxeter elements"))
    _add_datum(sub(g, "number", cmd_cox_number, "Coxeter number h"))

    g = verbs.add_parser("mult", help="weight multiplicities").add_subparsers(dest="sub", required=True)
    p = sub(g, "table", cmd_mult_table, "Freudenthal vs Kostant table (TSV)")
    _add_datum(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", default=None, help="a single mu (default: every dominant mu <= lambda)")
    p = sub(g, "dim", cmd_mult_dim, "Weyl dimension and weight count")
    _add_datum(p)
    p.add_argument("--lambda", dest="lam", required=True)

    g = verbs.add_parser("strata", help="orders and stratifications").add_subparsers(dest="sub", required=True)
    p = sub(g, "query", cmd_strata_query, "stratum of a rational dominant nu")
    _add_datum(p)
    p.add_argument("--nu", required=True)
    p = sub(g, "meet", cmd_strata_meet, "meet of two integral dominant coweights")
    _add_datum(p)
    p.add_argument("--lambda1", dest="lam1", required=True)
    p.add_argument("--lambda2", dest="lam2", required=True)
    p = sub(g, "leq", cmd_strata_leq, "nu <= lambda in the rational order")
    _add_datum(p)
    p.add_argument("--nu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p = sub(g, "steinberg", cmd_strata_steinberg, "Steinberg-base membership of gamma")
    _add_datum(p)
    _add_trunc(p)
    p.add_argument("--gamma", required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    g = verbs.add_parser("series", help="truncated Laurent series").add_subparsers(dest="sub", required=True)
    p = sub(g, "val", cmd_series_val, "valuation")
    p.add_argument("a")
    p = sub(g, "mul", cmd_series_mul, "product")
    p.add_argument("a")
    p.add_argument("b")
    p = sub(g, "inv", cmd_series_inv, "inverse")
    p.add_argument("a")
    p.add_argument("--precision", type=int, default=None)

    g = verbs.add_parser("springer", help="fiber invariants").add_subparsers(dest="sub", required=True)
    p = sub(g, "report", cmd_springer_report, "full dimension and count report")
    _add_datum(p)
    _add_trunc(p)
    p.add_argument("--gamma", required=True, help="JSON file or inline JSON")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--json", action="store_true")
    p = sub(g, "invariants", cmd_springer_invariants, "Newton point, d, r and c of gamma")
    _add_datum(p)
    _add_trunc(p)
    p.add_argument("--gamma", required=True)
    p = sub(g, "nonempty", cmd_springer_nonempty, "nonemptiness of the fiber")
    _add_datum(p)
    _add_trunc(p)
    p.add_argument("--gamma", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p = sub(g, "verify-lower-bound", cmd_springer_lower_bound, "multiplicity lower bound scan")
    _add_datum(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--tsv", action="store_true")
    p.add_argument("--no-oracle", action="store_true", help="skip the Kostant cross-check")
    sub(g, "schema", cmd_springer_schema, "JSON schema of the report")

    g = verbs.add_parser("verify", help="verification suites").add_subparsers(dest="sub", required=True)
    p = sub(g, "all", cmd_verify_all, "every suite")
    p.add_argument("--small", action="store_true", help="smaller randomized samples")
    p.add_argument("--seed", type=int, default=None, help="required for randomized suites")
    p.add_argument("--json", action="store_true")
    p = sub(g, "suite", cmd_verify_suite, "one named suite")
    p.add_argument("suite", choices=sorted(list(_verify.EXHAUSTIVE) + list(_verify.RANDOMIZED)))
    p.add_argument("--small", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p = sub(g, "lower-bound", cmd_verify_lower_bound, "lower bound scan for one datum")
    _add_datum(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p = sub(g, "equivalence", cmd_verify_equivalence, "randomized nonemptiness cross-check")
    _add_datum(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        status, text = args.fn(args)
    except InputError as e:
        _emit_error(type(e).__name__, "input", str(e))
        return 1
    except DomainError as e:
        _emit_error(type(e).__name__, "domain", str(e))
        return 2
    except GasfError as e:  # pragma: no cover - every error is one of the two kinds
        _emit_error(type(e).__name__, "input", str(e))
        return 1
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
