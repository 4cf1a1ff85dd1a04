"""Command-line front end.

    z4trace ring-info --m 3
    z4trace build --m 4 --kind support --f affine:a=1,b=1
    z4trace verify thm-skew --m 2..5

Exit status: 0 success, 1 a verified claim failed, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field as dc_field

from . import binary_codes as bc
from . import trace_codes as tc
from . import verify
from .boolfun import parse_function_spec
from .errors import BudgetExceeded, EmptySupport, NotPrimitive
from .gf2m import MAX_M, poly_to_str
from .gr4m import GaloisRing, z4_poly_to_str

SCHEMA = "z4trace.report/1"
KINDS = {"support": "support", "support-plus": "support_plus", "skew": "skew"}
CSV_MAX_M = 3


@dataclass
class RunConfig:
    m: int
    kind: str = "skew"
    function: str | None = None
    fmt: str = "json"
    seed: int | None = None
    budget: int | None = None
    extras: dict = dc_field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> RunConfig:
        return cls(**json.loads(text))


def parse_m_range(text: str) -> list[int]:
    """'4', '2..8' (inclusive) or '2,3,5'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError("empty m range")
    return out


def _m_arg(text: str) -> int:
    m = int(text)
    if not 1 <= m <= MAX_M:
        raise argparse.ArgumentTypeError(f"m must be in 1..{MAX_M}")
    return m


def _emit(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# -- ring-info -----------------------------------------------------------------------


def ring_info(m: int) -> dict:
    ring = GaloisRing(m)
    q = ring.field.order
    return {
        "schema": SCHEMA,
        "m": m,
        "field_poly": poly_to_str(ring.field.poly),
        "basic_poly": z4_poly_to_str(ring.basic_poly),
        "basic_poly_coeffs": list(ring.basic_poly),
        "teichmuller_size": len(ring.teichmuller),
        "units": (q - 1) * q,
        "ideal": q,
        "ring_size": ring.size,
    }


def cmd_ring_info(args) -> int:
    info = ring_info(args.m)
    if args.format == "json":
        print(_emit(info))
    else:
        for key in ("m", "field_poly", "basic_poly", "teichmuller_size", "units", "ideal"):
            print(f"{key}: {info[key]}")
    return 0


# -- build ---------------------------------------------------------------------------------


def _griesmer_view(summary: dict) -> dict | None:
    m_words, d = summary["M"], summary["d"]
    if not d or m_words & (m_words - 1):
        return None
    k = int(math.log2(m_words))
    bound = bc.griesmer_bound(k, d, 2)
    return {"k": k, "bound": bound, "meets": summary["n"] == bound}


def gray_summary(code: tc.TraceCode, enumerator: tc.LeeWeightEnumerator) -> dict:
    image = bc.gray_image(code, check_linearity=True)
    summary = {"n": image.length, "M": image.size, "words": code.ring.size,
               "linear": image.is_linear}
    if image.size <= 1024:
        summary["d"] = bc.min_distance(image)
    else:
        # the Gray map is an isometry and C is Z4-linear, so d = min nonzero Lee weight
        summary["d"] = enumerator.min_nonzero
    return summary


@contextmanager
def _budget(value: int | None):
    """Apply a budget override for the duration of one build."""
    if value is None:
        yield
        return
    saved = os.environ.get(tc.BUDGET_ENV)
    os.environ[tc.BUDGET_ENV] = str(value)
    try:
        yield
    finally:
        if saved is None:
            del os.environ[tc.BUDGET_ENV]
        else:
            os.environ[tc.BUDGET_ENV] = saved


def build_report(cfg: RunConfig) -> dict:
    with _budget(cfg.budget):
        return _build_report(cfg)


def _build_report(cfg: RunConfig) -> dict:
    ring = GaloisRing(cfg.m)
    kind = KINDS[cfg.kind]
    f = None
    if kind != "skew":
        if not cfg.function:
            raise ValueError(f"--f is required for kind {cfg.kind}")
        f = parse_function_spec(ring.field, cfg.function)
    code = tc.build_code(ring, kind, f, seed=cfg.seed)
    enumerator = tc.enumerate_weights(code)
    analytic = tc.analytic_enumerator(code)
    report = {
        "schema": SCHEMA,
        "config": json.loads(cfg.to_json()),
        "m": cfg.m,
        "kind": cfg.kind,
        "n": code.n,
        "enumerator": enumerator.as_list(),
        "analytic_enumerator": analytic.as_list(),
        "analytic_match": enumerator == analytic,
    }
    if f is not None:
        report["function"] = {"label": f.label, "hex": f.to_hex(), "n_f": f.weight}
    gray = gray_summary(code, enumerator)
    residue = bc.residue_code(code).summary()
    torsion = bc.torsion_code(code).summary()
    report["gray"] = gray
    report["residue"] = residue
    report["torsion"] = torsion
    report["griesmer"] = {
        "gray": _griesmer_view(gray),
        "residue": _griesmer_view(residue),
        "torsion": _griesmer_view(torsion),
    }
    return report


def _listing_csv(cfg: RunConfig) -> str:
    ring = GaloisRing(cfg.m)
    kind = KINDS[cfg.kind]
    f = parse_function_spec(ring.field, cfg.function) if kind != "skew" else None
    code = tc.build_code(ring, kind, f, seed=cfg.seed)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "codeword", "lee_weight"])
    for a in range(ring.size):
        word = tc.codeword(a, code)
        writer.writerow([ring.format(a), "".join(map(str, word)), tc.lee_weight(word)])
    return buf.getvalue()


def _text_report(rep: dict) -> str:
    lines = [f"m={rep['m']} kind={rep['kind']} n={rep['n']}"]
    if "function" in rep:
        fn = rep["function"]
        lines.append(f"function {fn['label']} n_f={fn['n_f']} table={fn['hex']}")
    lines.append("Lee weight distribution: " + ", ".join(f"{w}:{c}" for w, c in rep["enumerator"]))
    lines.append(f"closed form matches enumeration: {rep['analytic_match']}")
    for name in ("gray", "residue", "torsion"):
        s = rep[name]
        g = rep["griesmer"][name]
        extra = f" griesmer={g['bound']} meets={g['meets']}" if g else ""
        words = f" ({s['words']} with multiplicity)" if "words" in s else ""
        lines.append(f"{name}: n={s['n']} M={s['M']}{words} d={s['d']} "
                     f"linear={s['linear']}{extra}")
    return "\n".join(lines)


def cmd_build(args) -> int:
    cfg = RunConfig(m=args.m, kind=args.kind, function=args.f, fmt=args.format,
                    seed=args.seed, budget=args.budget)
    if cfg.fmt == "csv":
        if cfg.m > CSV_MAX_M:
            print(f"error: csv listings are limited to m <= {CSV_MAX_M}", file=sys.stderr)
            return 2
        with _budget(cfg.budget):
            sys.stdout.write(_listing_csv(cfg))
        return 0
    rep = build_report(cfg)
    print(_emit(rep) if cfg.fmt == "json" else _text_report(rep))
    return 0


# -- verify --------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    ms = parse_m_range(args.m) if args.m else None
    records = verify.run(args.target, ms)
    ok = verify.passed(records)
    report = {"schema": SCHEMA, "target": args.target, "passed": ok, "records": records}
    print(_emit(report))
    for rec in records:
        print(f"[{rec['status'].upper():10s}] {rec['target']} m={rec['m']}: {rec['claim']}",
              file=sys.stderr)
    return 0 if ok else 1


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="z4trace", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ri = sub.add_parser("ring-info", help="polynomials and sizes of GR(4, m)")
    ri.add_argument("--m", type=_m_arg, required=True)
    ri.add_argument("--format", choices=("json", "text"), default="text")
    ri.set_defaults(func=cmd_ring_info)

    b = sub.add_parser("build", help="construct a trace code and report its weights")
    b.add_argument("--m", type=_m_arg, required=True)
    b.add_argument("--kind", choices=tuple(KINDS), default="skew")
    b.add_argument("--f", help="function spec, e.g. affine:a=1,b=1 or bent:auto")
    b.add_argument("--seed", type=int, help="draw a random skew set")
    b.add_argument("--format", choices=("json", "csv", "text"), default="json")
    b.add_argument("--budget", type=int, help=f"override {tc.BUDGET_ENV}")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check the published claims")
    v.add_argument("target", choices=verify.TARGETS + ("all",))
    v.add_argument("--m", help="range such as 2..8 or 2,3,5 (default per target)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, EmptySupport, NotPrimitive, ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
