"""Command-line front end.  Output is canonical JSON unless ``--format table``.

Exit status: 0 success, 1 invalid input or usage, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .curve_model import CurveError, enumerate_places, parse_curve, place_counts
from .density import BetaSequence, asymptotic_A_estimate, asymptotic_h_estimate, doubledivspec_margin, draw_probability
from .divisor_counts import effective_count_series, oracle_counts
from .existence import ConsistencyError, kmin, l_q, verdict
from .harness import load_corpus, run_corpus
from .hyperelliptic import dimension_class_table, h_gk0_closed, outside_stated_range
from .surd import Surd
from .zeta_core import LPolynomial, lpoly_from_counts, summarize, validate_lpoly

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    command: str
    curve: str | None = None
    lpoly: str | None = None
    fmt: str = "json"
    precision: int = 12
    hyperelliptic: bool = False
    b1: int | None = None
    oracle_depth: int | None = None

    def __post_init__(self):
        if self.curve is not None and self.lpoly is not None:
            raise UsageError("give either --curve or --lpoly, not both")


@dataclass
class Source:
    L: LPolynomial
    curve: object | None = None

    def b1(self, override: int | None) -> int | None:
        if override is not None:
            return override
        if self.curve is None:
            return None
        return place_counts(self.curve, 1).B[0]


def _load_source(cfg: CliConfig) -> Source:
    if cfg.curve is None and cfg.lpoly is None:
        raise UsageError("this command needs --curve FILE or --lpoly JSON")
    if cfg.curve is not None:
        try:
            text = Path(cfg.curve).read_text()
        except OSError as exc:
            raise CurveError(f"cannot read curve file: {exc}") from exc
        curve = parse_curve(text)
        N = place_counts(curve, 2 * curve.genus).N
        return Source(lpoly_from_counts(curve.q, curve.genus, list(N)), curve)
    try:
        data = json.loads(cfg.lpoly)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed --lpoly JSON: {exc}") from exc
    L = LPolynomial.from_json(data)
    failed = [name for name, ok in validate_lpoly(L).items() if not ok]
    if failed:
        raise ValueError(f"not the L-polynomial of a curve: fails {', '.join(failed)}")
    return Source(L)


def _surd_fields(x: Surd, precision: int) -> dict:
    return {"value": str(x), "decimal": str(x.to_decimal(precision)), "precision": precision}


def cmd_lpoly(cfg, args) -> dict:
    src = _load_source(cfg)
    s = summarize(src.L)
    out = {
        "q": src.L.q,
        "g": src.L.g,
        "a": list(src.L.a),
        "L": str(src.L),
        "h": s.h,
        "p_rank": s.p_rank,
        "ordinary": s.ordinary,
        "lmd_floor": s.lmd_floor,
    }
    if src.curve is not None:
        out["curve"] = src.curve.describe()
        out["infinity"] = src.curve.infinity
    return out


def cmd_places(cfg, args) -> dict:
    src = _load_source(cfg)
    if src.curve is None:
        raise UsageError("places needs a curve (--curve)")
    table = enumerate_places(src.curve, args.max_degree)
    return {
        "q": table.q,
        "max_degree": table.max_degree,
        "N": list(table.N),
        "B": list(table.B),
        "places": [{"degree": d + 1, "points": n, "places": b}
                   for d, (n, b) in enumerate(zip(table.N, table.B))],
    }


def cmd_counts(cfg, args) -> dict:
    src = _load_source(cfg)
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    series = [effective_count_series(src.L, n) for n in range(args.n + 1)]
    out = {"q": src.L.q, "g": src.L.g, "n": args.n, "A": series}
    if args.oracle:
        if src.curve is None:
            raise UsageError("--oracle needs a curve (--curve)")
        depth = max(args.n, 1) if cfg.oracle_depth is None else cfg.oracle_depth
        if depth < args.n:
            raise ValueError("--oracle-depth must be >= --n")
        B = place_counts(src.curve, depth).B
        oracle = oracle_counts(list(B), depth)[: args.n + 1]
        out["oracle"] = oracle
        out["agree"] = oracle == series
        if oracle != series:
            raise ConsistencyError(f"oracle A-series {oracle} differs from series {series}")
    return out


def cmd_exists(cfg, args) -> dict:
    src = _load_source(cfg)
    hyper = cfg.hyperelliptic or src.curve is not None
    return verdict(src.L, args.k, B1=src.b1(cfg.b1), hyperelliptic=hyper).to_json()


def cmd_exact(cfg, args) -> dict:
    src = _load_source(cfg)
    if src.curve is None and not cfg.hyperelliptic:
        raise UsageError("exact counts need a hyperelliptic curve (--curve, or --lpoly with --hyperelliptic)")
    L, k = src.L, args.k
    if not 1 <= k <= L.g:
        raise ValueError(f"need 1 <= k <= g = {L.g}")
    n = L.g - k
    table = dimension_class_table(L, n)
    out = {
        "q": L.q,
        "g": L.g,
        "k": k,
        "degree": n,
        "exact": h_gk0_closed(L, k),
        "h_n": {str(i): v for i, v in sorted(table.h_ni.items())},
        "notes": [],
    }
    if out["exact"] != table.h_ni.get(0, 0):
        raise ConsistencyError("closed form and Pellikaan sum disagree")
    if outside_stated_range(L):
        out["notes"].append("g <= 2: hyperelliptic closed form used outside its classical g > 2 hypothesis")
    return out


def cmd_density(cfg, args) -> dict:
    bound = draw_probability(args.q, args.k)
    f = _surd_fields(bound, cfg.precision)
    return {"q": args.q, "k": args.k, "bound": f["value"], "decimal": f["decimal"], "precision": cfg.precision}


def cmd_asymptotic(cfg, args) -> dict:
    beta = BetaSequence.parse(args.q, args.beta)
    out = {
        "q": args.q,
        "g": args.g,
        "beta": {str(m): str(b) for m, b in sorted(beta.entries.items())},
        "admissible": beta.admissible(),
        "log_h_estimate": str(asymptotic_h_estimate(beta, args.g)),
        "label": "leading-term heuristic (o(g) terms not modelled)",
    }
    if args.a is not None:
        out["A_estimate"] = asymptotic_A_estimate(beta, args.a, args.g)
    if args.epsilon is not None:
        out["margin"] = doubledivspec_margin(beta, Fraction(args.epsilon), Fraction(args.l), args.g)
    return out


def cmd_verify(cfg, args) -> dict:
    report = run_corpus(load_corpus(args.corpus))
    if report["failures"]:
        args._status = EXIT_CONSISTENCY
    return report


def cmd_kmin(cfg, args) -> dict:
    k = kmin(args.q)
    f = _surd_fields(l_q(args.q, k), cfg.precision)
    return {"q": args.q, "kmin": k, "l": f["value"], "l_decimal": f["decimal"], "precision": cfg.precision}


COMMANDS = {
    "lpoly": cmd_lpoly,
    "places": cmd_places,
    "counts": cmd_counts,
    "exists": cmd_exists,
    "exact": cmd_exact,
    "density": cmd_density,
    "asymptotic": cmd_asymptotic,
    "verify": cmd_verify,
    "kmin": cmd_kmin,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["json", "table"], default="json")
    common.add_argument("--precision", type=int, default=12, help="digits in decimal renderings")

    source = _Parser(add_help=False)
    group = source.add_mutually_exclusive_group()
    group.add_argument("--curve", metavar="FILE", help="curve description (JSON)")
    group.add_argument("--lpoly", metavar="JSON", help='inline L-polynomial, e.g. \'{"q":2,"g":1,"a":[1,0,2]}\'')
    source.add_argument("--hyperelliptic", action="store_true", help="treat an inline L as hyperelliptic")

    parser = _Parser(prog="dimzero", description="Dimension-zero divisor classes on curves over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("lpoly", parents=[common, source], help="L-polynomial, h, p-rank, LMD floor")
    p = sub.add_parser("places", parents=[common, source], help="places by degree")
    p.add_argument("--max-degree", type=int, required=True)
    p = sub.add_parser("counts", parents=[common, source], help="effective divisor counts A_0..A_N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against place enumeration")
    p.add_argument("--oracle-depth", type=int)
    p = sub.add_parser("exists", parents=[common, source], help="existence verdict at degree g-k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b1", type=int, help="override the number of rational places")
    p = sub.add_parser("exact", parents=[common, source], help="exact hyperelliptic h_{g-k,0}")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("density", parents=[common], help="exact lower bound 1 - 1/l_q(k)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("asymptotic", parents=[common], help="leading-term asymptotic estimates")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--beta", default="", help='"m:r,..." with exact values, e.g. "1:sqrt(2)-1"')
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--a", type=int, help="degree for the A_a estimate")
    p.add_argument("--epsilon", help="exact rational, e.g. 1/4")
    p.add_argument("--l", default="1", help="exact rational l >= 1")
    p = sub.add_parser("verify", parents=[common], help="run the verification corpus")
    p.add_argument("--corpus", metavar="PATH", help="corpus JSON (default: bundled)")
    p = sub.add_parser("kmin", parents=[common], help="least k with l_q(k) >= 1")
    p.add_argument("--q", type=int, required=True)
    return parser


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def render_table(obj, indent: int = 0) -> str:
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return pad + "{}"
        width = max(len(str(k)) for k in obj)
        lines = []
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, dict) or (isinstance(val, list) and val and isinstance(val[0], dict)):
                lines.append(f"{pad}{key}:")
                lines.append(render_table(val, indent + 2))
            else:
                lines.append(f"{pad}{str(key).ljust(width)}  {_cell(val)}")
        return "\n".join(lines)
    if isinstance(obj, list) and obj and all(isinstance(r, dict) for r in obj):
        cols = sorted({k for r in obj for k in r if not isinstance(r[k], (dict, list))})
        rows = [[_cell(r.get(c)) for c in cols] for r in obj]
        widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
        out = [pad + "  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        out += [pad + "  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
        return "\n".join(out)
    return pad + _cell(obj)


def _cell(val) -> str:
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, list):
        return " ".join(_cell(v) for v in val)
    return str(val)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = CliConfig(
            command=args.command,
            curve=getattr(args, "curve", None),
            lpoly=getattr(args, "lpoly", None),
            fmt=args.fmt,
            precision=args.precision,
            hyperelliptic=getattr(args, "hyperelliptic", False),
            b1=getattr(args, "b1", None),
            oracle_depth=getattr(args, "oracle_depth", None),
        )
        if cfg.precision < 1:
            raise UsageError("--precision must be >= 1")
        args._status = EXIT_OK
        result = COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"dimzero: usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConsistencyError, AssertionError) as exc:
        print(f"dimzero: consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (CurveError, ValueError, KeyError, TypeError) as exc:
        print(f"dimzero: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render_table(result) if cfg.fmt == "table" else dumps(result))
    return args._status


if __name__ == "__main__":
    sys.exit(main())
