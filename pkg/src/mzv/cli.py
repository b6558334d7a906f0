"""Command-line front end.

Subcommands: product (word products), renorm (renormalized values), table
(value tables with golden diffs), compare (scheme agreement), eval (numeric
evaluators), verify (identity suites). Exit codes: 0 success, 1 verification
or diff failure, 2 usage error, 3 precision error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from .bernoulli import RIEMANN, ZERO_INCLUSIVE
from .laurent import PrecisionError
from .numeric import (
    PrecisionUnreachableError,
    mzv_eval,
    mzv_star_eval,
    qmzv_eval,
    qmzv_star_eval,
)
from .ratfunc import PoleAtZeroError
from .words import (
    DomainError,
    MixedAlphabetError,
    UnsupportedMergeError,
    mixable_shuffle,
    parse_m_word,
    parse_x_word,
    parse_z_word,
    quasi_shuffle,
    render_wordsum,
    shuffle,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

FIXTURE_ENV = "MZV_FIXTURE_DIR"


def _rat(text: str) -> str:
    return str(text)


def _format_rational(x: Fraction) -> str:
    return str(x)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _parse_args_list(text):
    return tuple(int(p) for p in text.split(","))


def _parse_word(text, word_type=None):
    text = text.strip()
    if text.startswith("("):
        return parse_m_word(text)
    if word_type == "x" or (set(text) <= set("01") and "," not in text and text):
        return parse_x_word(text)
    return parse_z_word(text)


# -- product -------------------------------------------------------------

def _cmd_product(args):
    w1 = _parse_word(args.words[0], args.alphabet)
    w2 = _parse_word(args.words[1], args.alphabet)
    if args.type == "shuffle":
        out = shuffle(w1, w2)
    elif args.type == "stuffle":
        out = quasi_shuffle(w1, w2)
    else:
        out = mixable_shuffle(w1, w2, Fraction(args.weight))
    if args.format == "json":
        terms = [[str(w), str(c)] for w, c in out.sorted_items()]
        print(_dump_json({"product": args.type, "terms": terms}))
    else:
        print(render_wordsum(out))
    return EXIT_OK


# -- renorm ---------------------------------------------------------------

def _cmd_renorm(args):
    from . import gz, mp

    if args.scheme == "gz":
        s = _parse_args_list(args.args)
        if args.direction:
            r = [Fraction(p) for p in args.direction.split(",")]
            val = gz.gz_renorm_directional(s, r, args.trunc)
            from .ratfunc import ratfunc_limit0

            val = ratfunc_limit0(val)
        else:
            val = gz.gz_renorm(s, trunc=args.trunc)
        payload = {"scheme": "gz", "args": list(s), "value": _format_rational(val)}
    else:
        s = _parse_args_list(args.args)
        if len(s) != 2 or any(x > 0 for x in s):
            raise DomainError("mp renormalization takes two non-positive integers")
        val = mp.mp_value(-s[0], -s[1], Fraction(args.v), args.method, args.convention)
        payload = {
            "scheme": "mp",
            "args": list(s),
            "method": args.method,
            "convention": args.convention,
            "value": _format_rational(val),
        }
    if args.format == "json":
        print(_dump_json(payload))
    else:
        print(payload["value"])
    return EXIT_OK


# -- tables ---------------------------------------------------------------

def load_fixture(which: str):
    override = os.environ.get(FIXTURE_ENV)
    name = f"{which}_table.json"
    if override:
        path = os.path.join(override, name)
        with open(path) as fh:
            return json.load(fh)
    with resources.files("mzv.fixtures").joinpath(name).open() as fh:
        return json.load(fh)


def _table_values(which, max_val, args):
    from . import gz, mp

    if which == "gz":
        return gz.gz_table(max_val, trunc=args.trunc)
    return mp.mp_table(max_val, Fraction(args.v), args.method, args.convention)


def _render_table(rows, max_val, fmt):
    header = [""] + [f"a={a}" for a in range(max_val + 1)]
    txt_rows = [[f"b={b}"] + [_format_rational(v) for v in row] for b, row in enumerate(rows)]
    if fmt == "json":
        return _dump_json(
            {"max": max_val, "rows": [[_format_rational(v) for v in row] for row in rows]}
        )
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(r) for r in txt_rows]
        return "\n".join(lines)
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "---|" * (max_val + 2))
        lines += ["| " + " | ".join(r) + " |" for r in txt_rows]
        return "\n".join(lines)
    width = max(len(c) for r in txt_rows for c in r) + 1
    lines = ["".join(h.rjust(width) for h in header)]
    lines += ["".join(c.rjust(width) for c in r) for r in txt_rows]
    return "\n".join(lines)


def _cmd_table(args):
    rows = _table_values(args.which, args.max, args)
    print(_render_table(rows, args.max, args.format))
    if args.diff_golden is not None:
        if args.diff_golden == "":
            golden = load_fixture(args.which)
        else:
            with open(args.diff_golden) as fh:
                golden = json.load(fh)
        mismatches = []
        grows = golden["rows"]
        for b in range(args.max + 1):
            for a in range(args.max + 1):
                got = _format_rational(rows[b][a])
                want = str(grows[b][a])
                if got != want:
                    mismatches.append({"a": a, "b": b, "computed": got, "golden": want})
        if mismatches:
            print(f"golden diff: {len(mismatches)} mismatching cells", file=sys.stderr)
            for m in mismatches:
                print(
                    f"  (a={m['a']}, b={m['b']}): computed {m['computed']} != golden {m['golden']}",
                    file=sys.stderr,
                )
            return EXIT_FAIL
        print("golden diff: all cells match", file=sys.stderr)
    return EXIT_OK


# -- compare ---------------------------------------------------------------

def _cmd_compare(args):
    from .mp import compare_gz_mp

    report = compare_gz_mp(args.max)
    if args.format == "json":
        payload = {
            "max": report["max"],
            "required_agreement_holds": report["required_agreement_holds"],
            "agree": [
                {"a": e["a"], "b": e["b"], "value": _format_rational(e["value"])}
                for e in report["agree"]
            ],
            "disagree": [
                {
                    "a": e["a"],
                    "b": e["b"],
                    "gz": _format_rational(e["gz"]),
                    "mp": _format_rational(e["mp"]),
                }
                for e in report["disagree"]
            ],
        }
        print(_dump_json(payload))
    else:
        print(f"agreement cells: {len(report['agree'])}, disagreements: {len(report['disagree'])}")
        for e in report["disagree"]:
            print(
                f"  (a={e['a']}, b={e['b']}): gz={_format_rational(e['gz'])} "
                f"mp={_format_rational(e['mp'])}"
            )
        print(
            "required agreement (a+b odd with b != 0, and the diagonal): "
            + ("holds" if report["required_agreement_holds"] else "VIOLATED")
        )
    return EXIT_OK if report["required_agreement_holds"] else EXIT_FAIL


# -- eval -----------------------------------------------------------------

def _cmd_eval(args):
    s = _parse_args_list(args.args)
    target = Fraction(args.target)
    if args.kind == "mzv":
        nv = mzv_eval(s, target)
    elif args.kind == "star":
        nv = mzv_star_eval(s, target)
    else:
        q = Fraction(args.q)
        nv = (qmzv_star_eval if args.star else qmzv_eval)(s, q, target)
    payload = {
        "kind": args.kind,
        "args": list(s),
        "value": nv.decimal_str(args.digits),
        "error_bound": str(float(nv.error_bound)),
        "terms_used": nv.terms_used,
        "tail_model": nv.note,
    }
    if args.kind == "qmzv":
        payload["q"] = str(Fraction(args.q))
    if args.format == "json":
        print(_dump_json(payload))
    else:
        print(f"{payload['value']}  (error <= {payload['error_bound']}, terms {nv.terms_used})")
    return EXIT_OK


# -- verify ----------------------------------------------------------------

def _cmd_verify(args):
    from .suites import REGISTRY, run_all, run_suite

    params = {}
    if args.params:
        for chunk in args.params.split(","):
            k, _, v = chunk.partition("=")
            params[k.strip()] = int(v)
    if args.suite == "all":
        results = run_all()
    else:
        results = [run_suite(args.suite, **params)]
    ok = all(r.passed for r in results if r.implemented)
    if args.json:
        print(_dump_json({"passed": ok, "suites": [r.to_json() for r in results]}))
    else:
        for r in results:
            if not r.implemented:
                print(f"[skip] {r.suite}: not implemented ({r.note})")
                continue
            status = "pass" if r.passed else "FAIL"
            print(f"[{status}] {r.suite}: {len(r.cases)} cases", end="")
            if r.tolerance is not None:
                print(f" (tolerance {float(r.tolerance):.3g})", end="")
            print()
            for c in r.cases:
                if not c.passed:
                    print(f"    FAIL {c.instance}: lhs={float(c.lhs)} rhs={float(c.rhs)}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="mzv", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("product", help="shuffle / stuffle / mixable products of words")
    pr.add_argument("--type", choices=["shuffle", "stuffle", "mixable"], required=True)
    pr.add_argument("--weight", default="1", help="mixable-shuffle weight lambda")
    pr.add_argument("--alphabet", choices=["z", "x", "m"], default=None)
    pr.add_argument("--format", choices=["plain", "json"], default="plain")
    pr.add_argument("words", nargs=2)
    pr.set_defaults(fn=_cmd_product)

    rn = sub.add_parser("renorm", help="renormalized values at non-positive integers")
    rn.add_argument("scheme", choices=["gz", "mp"])
    rn.add_argument("--args", required=True, help='argument list, e.g. "0,-2"')
    rn.add_argument("--direction", default=None, help='gz: exact directions "r1,r2"')
    rn.add_argument("--delta", action="store_true", help="gz: symbolic |s|+delta directions (default)")
    rn.add_argument("--trunc", type=int, default=None)
    rn.add_argument("--v", default="0", help="mp: Hurwitz shift")
    rn.add_argument("--method", choices=["sym", "birkhoff", "ev12", "ev21"], default="birkhoff")
    rn.add_argument(
        "--convention", choices=[RIEMANN, ZERO_INCLUSIVE], default=RIEMANN
    )
    rn.add_argument("--format", choices=["plain", "json"], default="plain")
    rn.set_defaults(fn=_cmd_renorm)

    tb = sub.add_parser("table", help="value tables, optionally diffed against golden data")
    tb.add_argument("which", choices=["gz", "mp"])
    tb.add_argument("--max", type=int, default=6)
    tb.add_argument("--format", choices=["plain", "json", "csv", "markdown"], default="plain")
    tb.add_argument(
        "--diff-golden",
        nargs="?",
        const="",
        default=None,
        help="path to a golden fixture (no value: packaged fixture)",
    )
    tb.add_argument("--trunc", type=int, default=None)
    tb.add_argument("--v", default="0")
    tb.add_argument("--method", choices=["sym", "birkhoff", "ev12", "ev21"], default="birkhoff")
    tb.add_argument("--convention", choices=[RIEMANN, ZERO_INCLUSIVE], default=RIEMANN)
    tb.set_defaults(fn=_cmd_table)

    cp = sub.add_parser("compare", help="agreement report between the two schemes")
    cp.add_argument("pair", choices=["gz-mp"])
    cp.add_argument("--max", type=int, default=6)
    cp.add_argument("--format", choices=["plain", "json"], default="plain")
    cp.set_defaults(fn=_cmd_compare)

    ev = sub.add_parser("eval", help="numeric evaluation with error bounds")
    ev.add_argument("kind", choices=["mzv", "star", "qmzv"])
    ev.add_argument("--args", required=True)
    ev.add_argument("--q", default="1/2")
    ev.add_argument("--star", action="store_true", help="qmzv: non-strict variant")
    ev.add_argument("--target", default="1e-10")
    ev.add_argument("--digits", type=int, default=20)
    ev.add_argument("--format", choices=["plain", "json"], default="plain")
    ev.set_defaults(fn=_cmd_eval)

    vf = sub.add_parser("verify", help="run identity verification suites")
    vf.add_argument("suite", help='suite name or "all"')
    vf.add_argument("--params", default=None, help='overrides, e.g. "n_max=5"')
    vf.add_argument("--json", action="store_true")
    vf.set_defaults(fn=_cmd_verify)

    return p


_VALUE_FLAGS = {"--args", "--direction", "--q", "--v", "--target", "--weight", "--params"}


def _merge_value_flags(argv):
    """Join "--args -1,-2" into "--args=-1,-2" so argparse does not mistake
    negative arguments for option names."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_value_flags(list(argv)))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (PrecisionError, PrecisionUnreachableError) as err:
        print(f"precision error: {err}", file=sys.stderr)
        return EXIT_PRECISION
    except (DomainError, MixedAlphabetError, UnsupportedMergeError, PoleAtZeroError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
