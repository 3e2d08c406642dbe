"""Command line entry point.

Exit codes: 0 success, 1 domain error (bad field, zero vector, ...), 2 node
budget exhausted, 3 I/O or parse error.  Errors print one line to stderr:

    error: code=<n> kind=<domain|budget|io> message="..."
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from fractions import Fraction

from . import __version__
from .bounds import LB_PAPER_NOTE, bounds_report, epsilon_bounds, eps_M
from .construct import build_random_kakeya, monte_carlo, theta_closed
from .exact import BUDGET_EXCEEDED, BudgetExceeded, exact_min_kakeya, search_space_size
from .field import FieldError, make_field
from .instance import (InstanceError, format_points, load_instance, make_instance,
                       read_points, write_points)
from .rng import derive_seed, parse_seed
from .space import PointSet, SpaceError
from .verify import is_kakeya

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_IO = 0, 1, 2, 3
SEARCH_WARN = 10**8

SWEEP_COLUMNS = [
    "p", "m", "q", "n", "M_exact", "M_paper", "lb_paper", "lb_integer", "theta_M",
    "ub_existence", "ub_paper", "eps", "Delta", "ub_eps", "mc_mean", "mc_stderr",
    "exact_min", "exact_status",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _int_list(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _seed(text):
    try:
        return parse_seed(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def parse_eps_grid(text) -> list[Fraction]:
    try:
        a, b, step = (Fraction(s) for s in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--eps-grid expects A:B:STEP, got {text!r}")
    if step <= 0 or a > b:
        raise argparse.ArgumentTypeError("--eps-grid needs A <= B and STEP > 0")
    out, k = [], 0
    while a + k * step <= b:
        out.append(a + k * step)
        k += 1
    return out


def _instance_args(p, single=True):
    p.add_argument("--p", type=int if single else _int_list, help="field characteristic")
    p.add_argument("--m", type=int if single else _int_list, default=1 if single else [1],
                   help="extension degree (default 1)")
    p.add_argument("--n", type=int if single else _int_list, help="dimension")
    if single:
        p.add_argument("--full", action="store_true", help="T = all nonzero vectors")
        p.add_argument("--instance", metavar="FILE", help="JSON instance file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kakeya", description="Local finite-field Kakeya sets.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("field-info", help="field parameters and operation tables")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)

    p = sub.add_parser("extract", help="direction classes of T")
    _instance_args(p)

    p = sub.add_parser("bounds", help="lower and upper bounds for an instance")
    _instance_args(p)
    p.add_argument("--eps", type=Fraction, help="also evaluate the eps-corollary")

    p = sub.add_parser("exact", help="exact minimum Kakeya set")
    _instance_args(p)
    p.add_argument("--node-budget", type=_positive)
    p.add_argument("--no-fix-translation", action="store_true")
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("construct", help="one random line-union construction")
    _instance_args(p)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--out", metavar="FILE", help="write the point set here")

    p = sub.add_parser("mc", help="Monte Carlo mean of the random construction")
    _instance_args(p)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("verify", help="check a point-set file against an instance")
    _instance_args(p)
    p.add_argument("--points", metavar="FILE", required=True)

    p = sub.add_parser("sweep", help="CSV table of bounds over a parameter grid")
    _instance_args(p, single=False)
    p.add_argument("--eps-grid", type=parse_eps_grid, metavar="A:B:STEP")
    p.add_argument("--seed", type=_seed)
    p.add_argument("--trials", type=_positive)
    p.add_argument("--node-budget", type=_positive)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--csv", metavar="FILE")
    return parser


def get_instance(args):
    if args.instance:
        return load_instance(args.instance)
    if args.p is None or args.n is None:
        raise UsageError("give --instance FILE or --p, --n and --full")
    if not args.full:
        raise UsageError("without --instance, pass --full to use all nonzero vectors")
    return make_instance(args.p, args.m, args.n)


def _header(out, inst, ext):
    f = inst.space.field
    out.append(f"p={f.p}")
    out.append(f"m={f.m}")
    out.append(f"q={f.q}")
    out.append(f"n={inst.n}")
    out.append(f"T_size={len(inst.T)}")
    out.append(f"M_exact={ext.M_exact}")
    out.append(f"M_paper={fmt(ext.M_paper)}")
    out.append(f"exact_flag={fmt(ext.exact_flag)}")
    if not ext.exact_flag:
        out.append("M_note=T is not a union of whole direction classes; using M=M_exact")


# -- subcommands ----------------------------------------------------------

def cmd_field_info(args, out, err):
    f = make_field(args.p, args.m)
    out.append(f"p={f.p}")
    out.append(f"m={f.m}")
    out.append(f"q={f.q}")
    out.append(f"modulus={','.join(map(str, f.modulus))}")
    out.append(f"modulus_poly={f.modulus_str()}")
    if f.add_table is None:
        out.append("tables=omitted (q > 256)")
        return EXIT_OK
    for name, table in (("add", f.add_table), ("mul", f.mul_table)):
        out.append(f"[{name}]")
        out.extend(" ".join(map(str, row)) for row in table)
    out.append("[inv]")
    out.append(" ".join(["-"] + [str(x) for x in f.inv_table[1:]]))
    return EXIT_OK


def cmd_extract(args, out, err):
    inst = get_instance(args)
    ext = inst.extraction()
    _header(out, inst, ext)
    for d in ext.classes:
        out.append(f"class={vec(d.rep)} code={d.code} members={ext.class_sizes[d]}")
    return EXIT_OK


def cmd_bounds(args, out, err):
    inst = get_instance(args)
    ext = inst.extraction()
    _header(out, inst, ext)
    q, n, M = inst.space.q, inst.n, ext.M_exact
    rep = bounds_report(q, n, M)
    out.append(f"M={M}")
    out.append(f"lb_paper={fmt(rep.lb_paper)}")
    if rep.lb_paper_unsound:
        out.append(f"lb_paper_note={LB_PAPER_NOTE}")
    out.append(f"lb_integer={rep.lb_integer}")
    out.append(f"theta_M={fmt(rep.theta_M)}")
    out.append(f"theta_M_float={fmt(float(rep.theta_M))}")
    out.append(f"ub_existence={rep.ub_existence}")
    out.append(f"ub_paper={fmt(rep.ub_paper)}")
    if args.eps is not None:
        e = epsilon_bounds(q, n, args.eps)
        out.append(f"eps={fmt(e.eps)}")
        out.append(f"eps_M={fmt(e.M)}")
        out.append(f"Delta={fmt(e.Delta)}")
        out.append(f"ub_eps={fmt(e.ub_eps)}")
    return EXIT_OK


def cmd_exact(args, out, err):
    inst = get_instance(args)
    ext = inst.extraction()
    fix = not args.no_fix_translation
    size = search_space_size(inst.space, ext.M_exact, fix)
    if size > SEARCH_WARN:
        err.append(f"warning: search space {size} exceeds {SEARCH_WARN} coset tuples")
    res = exact_min_kakeya(inst.space, ext.classes, node_budget=args.node_budget,
                           fix_translation=fix, threads=args.threads)
    _header(out, inst, ext)
    q, n, M = inst.space.q, inst.n, ext.M_exact
    rep = bounds_report(q, n, M)
    out.append(f"status={res.status}")
    out.append(f"min_size={res.min_size}")
    out.append(f"lb_integer={rep.lb_integer}")
    out.append(f"ub_existence={rep.ub_existence}")
    if res.optimal:
        out.append(f"sandwich={fmt(rep.lb_integer <= res.min_size <= rep.ub_existence)}")
    for line in res.witness:
        out.append(f"line direction={vec(line.direction.rep)} base={line.base} "
                   f"points={','.join(map(str, line.points))}")
    out.append(f"kakeya_set={','.join(map(str, res.kakeya_set.codes()))}")
    # node counts depend on --threads; keep stdout identical across thread counts
    err.append(f"nodes_explored={res.nodes_explored}")
    if res.status == BUDGET_EXCEEDED:
        raise BudgetExceeded(res)
    return EXIT_OK


def cmd_construct(args, out, err):
    inst = get_instance(args)
    ext = inst.extraction()
    res = build_random_kakeya(inst.space, ext.classes, args.seed)
    out.insert(0, f"# seed={args.seed}")
    _header(out, inst, ext)
    out.append(f"size={res.size}")
    out.append(f"trajectory={','.join(map(str, res.trajectory))}")
    for d, y in zip(res.classes, res.witnesses):
        out.append(f"line direction={vec(d.rep)} through={y}")
    out.append(f"kakeya={fmt(is_kakeya(inst.space, res.kakeya_set, ext.classes).ok)}")
    if args.out:
        write_points(args.out, res.kakeya_set.codes())
    else:
        out.append("points=" + ",".join(map(str, res.kakeya_set.codes())))
    return EXIT_OK


def cmd_mc(args, out, err):
    inst = get_instance(args)
    ext = inst.extraction()
    res = monte_carlo(inst.space, ext.classes, args.trials, args.seed, threads=args.threads)
    theta = theta_closed(inst.space.q, inst.n, ext.M_exact)
    out.append(f"# seed={args.seed}")
    _header(out, inst, ext)
    out.append(f"trials={res.trials}")
    out.append(f"mean={fmt(res.mean)}")
    out.append(f"sample_variance={fmt(res.sample_variance)}")
    out.append(f"std_error={fmt(res.std_error)}")
    out.append(f"theta_M={fmt(theta)}")
    out.append(f"theta_M_float={fmt(float(theta))}")
    se = res.std_error
    if se:
        out.append(f"z={fmt((res.mean - float(theta)) / se)}")
    for size, count in res.histogram.items():
        out.append(f"hist size={size} count={count}")
    return EXIT_OK


def cmd_verify(args, out, err):
    inst = get_instance(args)
    codes = read_points(args.points)
    K = PointSet(inst.space.size, codes)
    res = is_kakeya(inst.space, K, inst.T)
    out.append(f"size={len(K)}")
    out.append(f"ok={fmt(res.ok)}")
    out.append("missing=" + ";".join(vec(d.rep) for d in res.missing))
    for d, line in res.witness.items():
        if line is not None:
            out.append(f"line direction={vec(d.rep)} base={line.base} "
                       f"points={','.join(map(str, line.points))}")
    return EXIT_OK


def sweep_rows(args, err):
    """Yield one dict per (p, m, n[, eps]) cell."""
    if not args.p or not args.n:
        raise UsageError("sweep needs --p and --n (comma-separated lists allowed)")
    if args.trials and args.seed is None:
        raise UsageError("--trials requires --seed")
    row_index = 0
    for p in args.p:
        for m in args.m:
            for n in args.n:
                inst = make_instance(p, m, n)
                space = inst.space
                q = space.q
                dirs = space.enumerate_directions()
                grid = args.eps_grid or [None]
                for eps in grid:
                    if eps is None:
                        M, eb = len(dirs), None
                    else:
                        M = eps_M(q, n, eps)
                        eb = epsilon_bounds(q, n, eps) if q ** (n - 1) >= 2 else None
                    classes = dirs[:M]
                    rep = bounds_report(q, n, M)
                    row = dict.fromkeys(SWEEP_COLUMNS)
                    row.update(p=p, m=m, q=q, n=n, M_exact=M, M_paper=M,
                               lb_paper=rep.lb_paper, lb_integer=rep.lb_integer,
                               theta_M=float(rep.theta_M), ub_existence=rep.ub_existence,
                               ub_paper=rep.ub_paper)
                    if eps is not None:
                        row["eps"] = float(eps)
                    if eb is not None:
                        row.update(Delta=eb.Delta, ub_eps=eb.ub_eps)
                    if args.trials:
                        mc = monte_carlo(space, classes, args.trials,
                                         derive_seed(args.seed, row_index), threads=args.threads)
                        row.update(mc_mean=mc.mean, mc_stderr=mc.std_error)
                    if args.node_budget:
                        ex = exact_min_kakeya(space, classes, node_budget=args.node_budget,
                                              threads=args.threads)
                        row.update(exact_min=ex.min_size, exact_status=ex.status)
                    row_index += 1
                    yield row


def cmd_sweep(args, out, err):
    buf = io.StringIO()
    if args.seed is not None:
        buf.write(f"# seed={args.seed}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    exceeded = False
    for row in sweep_rows(args, err):
        exceeded |= row["exact_status"] == BUDGET_EXCEEDED
        w.writerow([fmt(row[c]) for c in SWEEP_COLUMNS])
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
        if args.seed is not None:
            out.append(f"# seed={args.seed}")
        out.append(f"wrote {args.csv}")
    else:
        out.append(buf.getvalue().rstrip("\n"))
    if exceeded:
        err.append("warning: node budget exhausted for at least one row")
        return EXIT_BUDGET
    return EXIT_OK


COMMANDS = {
    "field-info": cmd_field_info,
    "extract": cmd_extract,
    "bounds": cmd_bounds,
    "exact": cmd_exact,
    "construct": cmd_construct,
    "mc": cmd_mc,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def _diag(code, kind, message):
    message = str(message).replace("\n", " ").replace('"', "'")
    return f'error: code={code} kind={kind} message="{message}"'


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out, err = [], []
    code = EXIT_OK
    try:
        args = build_parser().parse_args(argv)
        code = COMMANDS[args.command](args, out, err)
    except UsageError as e:
        err.append(_diag(EXIT_IO, "usage", e))
        code = EXIT_IO
    except (InstanceError, OSError) as e:
        err.append(_diag(EXIT_IO, "io", e))
        code = EXIT_IO
    except BudgetExceeded as e:
        err.append(_diag(EXIT_BUDGET, "budget", e))
        code = EXIT_BUDGET
    except (FieldError, SpaceError, ValueError) as e:
        err.append(_diag(EXIT_DOMAIN, "domain", e))
        code = EXIT_DOMAIN
    if out:
        stdout.write("\n".join(out) + "\n")
    if err:
        stderr.write("\n".join(err) + "\n")
    return code


def entry():
    sys.exit(main())
