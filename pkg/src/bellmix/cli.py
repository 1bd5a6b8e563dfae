"""Command-line entry point: ``bellmix {verify,sweep,teleport,channel}``.

Exit codes: 0 success, 1 claim failure or I/O error, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import json
import math
import sys

import numpy as np

from bellmix.channel import (
    closed_form_max_entangled_output,
    closed_form_schmidt_output,
    lambdas_from_weights,
)
from bellmix.claims import all_passed, run_all, simplex_grid
from bellmix.criteria import (
    DECISION_TOL,
    concurrence,
    criteria_report,
    horodecki_m,
    ppt_min_eigenvalue,
    two_e_deficit,
)
from bellmix.qlinalg import max_abs_diff
from bellmix.states import BellWeights, SchmidtState, bell_mixture, mef_bell_diagonal, schmidt_density
from bellmix.teleport import teleport_2q

SWEEP_HEADER = (
    "w1", "w2", "w3", "w4", "lx", "ly", "lz", "sum_l2", "mef", "m_bell",
    "s2_deficit", "out_ppt_min_eig", "out_concurrence", "teleports",
)
RENORMALIZE_TOL = 1e-9


def fmt(x: float) -> str:
    """Locale-independent float text with at most 12 significant digits."""
    x = float(x)
    if x == 0.0:
        return "0"
    return format(x, ".12g")


@dataclasses.dataclass(frozen=True)
class SweepRow:
    w1: float
    w2: float
    w3: float
    w4: float
    lx: float
    ly: float
    lz: float
    sum_l2: float
    mef: float
    m_bell: float
    s2_deficit: float
    out_ppt_min_eig: float
    out_concurrence: float
    teleports: int

    def csv(self) -> str:
        vals = dataclasses.astuple(self)
        return ",".join([fmt(v) for v in vals[:-1]] + [str(self.teleports)])


def sweep_row(w: BellWeights, tol: float = DECISION_TOL) -> SweepRow:
    l = lambdas_from_weights(w)
    ch = bell_mixture(w)
    out = closed_form_max_entangled_output(l)
    ppt = ppt_min_eigenvalue(out)
    return SweepRow(
        *w,
        *l,
        sum_l2=l.sum_sq,
        mef=mef_bell_diagonal(w),
        m_bell=horodecki_m(ch),
        s2_deficit=two_e_deficit(ch),
        out_ppt_min_eig=ppt,
        out_concurrence=concurrence(out),
        teleports=int(ppt < -tol),
    )


def sweep_csv(grid_n: int, tol: float = DECISION_TOL) -> str:
    buf = io.StringIO()
    buf.write(",".join(SWEEP_HEADER) + "\n")
    for w in simplex_grid(grid_n):
        buf.write(sweep_row(w, tol).csv() + "\n")
    return buf.getvalue()


def parse_weights(text: str) -> BellWeights:
    try:
        ws = [float(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be four comma-separated numbers, got {text!r}")
    if len(ws) != 4 or any(not math.isfinite(w) for w in ws):
        raise argparse.ArgumentTypeError(f"weights must be four comma-separated numbers, got {text!r}")
    try:
        return BellWeights.from_sequence(ws, renormalize_tol=RENORMALIZE_TOL)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg_float(text: str) -> float:
    v = float(text)
    if not v >= 0 or not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return v


def _pos_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _unit_float(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a number in [0, 1], got {text}")
    return v


def format_matrix(m: np.ndarray) -> str:
    def cell(z: complex) -> str:
        re, im = z.real, z.imag
        if abs(im) < 1e-15:
            return fmt(re)
        return fmt(re) + ("+" if im >= 0 else "-") + fmt(abs(im)) + "j"

    cells = [[cell(z) for z in row] for row in np.asarray(m)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def cmd_verify(args) -> int:
    results = run_all(args.grid, args.seed, args.tol)
    for r in results:
        print(r.line())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in results], fh, indent=2, default=str)
    ok = all_passed(results)
    print("all claims pass" if ok else "claim failure")
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    text = sweep_csv(args.grid, args.tol)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {text.count(chr(10)) - 1} rows to {args.out}")
    return 0


def cmd_teleport(args) -> int:
    w = args.weights
    s = SchmidtState.from_alpha2(args.alpha2, args.phase)
    l = lambdas_from_weights(w)
    out = closed_form_schmidt_output(s, l)
    print(f"channel weights  {', '.join(fmt(x) for x in w)}")
    print(f"lambdas          {', '.join(fmt(x) for x in l)}")
    print(f"input            alpha={s.alpha:.6g} beta={s.beta:.6g} concurrence={fmt(s.concurrence)}")
    print("output (closed form):")
    print(format_matrix(out))
    if args.full_sim:
        sim = teleport_2q(schmidt_density(s), w)
        print("output (6-qubit simulation):")
        print(format_matrix(sim))
        print(f"max entrywise difference  {max_abs_diff(out, sim):.3e}")
    print("criteria of output:")
    for line in criteria_report(out, args.tol).lines():
        print("  " + line)
    return 0


def cmd_channel(args) -> int:
    w = args.weights
    tol = args.tol
    l = lambdas_from_weights(w)
    rep = criteria_report(bell_mixture(w), tol)
    yn = {True: "YES", False: "NO"}
    print(f"weights          {', '.join(fmt(x) for x in w)}")
    print(f"lambdas          {', '.join(fmt(x) for x in l)}")
    print(f"sum_l2           {fmt(l.sum_sq)}")
    print(f"mef              {fmt(mef_bell_diagonal(w))}")
    print(f"horodecki_m      {fmt(rep.horodecki_m)}")
    print(f"s2_deficit       {fmt(rep.s2_deficit)}")
    print(f"channel state    {'entangled' if rep.entangled else 'separable'} (ppt_min_eig {fmt(rep.ppt_min_eig)})")
    print(f"threshold        {yn[l.sum_sq > 1 + tol]}")
    print(f"bell             {yn[rep.bell_violating]}")
    print(f"2-E              {yn[rep.two_e_violating]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_nonneg_float, default=DECISION_TOL, help="decision tolerance")

    parser = argparse.ArgumentParser(prog="bellmix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run every claim check")
    p.add_argument("--grid", type=_pos_int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH", help="also write results as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="tabulate the weight simplex to CSV")
    p.add_argument("--grid", type=_pos_int, default=12)
    p.add_argument("--out", metavar="PATH", help="output file (stdout if omitted)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("teleport", parents=[common], help="teleport alpha|00>+beta|11> once")
    p.add_argument("--weights", type=parse_weights, required=True, help="w1,w2,w3,w4")
    p.add_argument("--alpha2", type=_unit_float, default=0.5)
    p.add_argument("--phase", type=float, default=0.0)
    p.add_argument("--full-sim", action="store_true", help="also run the 6-qubit simulation")
    p.set_defaults(func=cmd_teleport)

    p = sub.add_parser("channel", parents=[common], help="diagnose a Bell-mixture channel")
    p.add_argument("--weights", type=parse_weights, required=True, help="w1,w2,w3,w4")
    p.set_defaults(func=cmd_channel)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
