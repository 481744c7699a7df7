"""Command-line surface: every module reachable with reproducible output.

Output formats: text (default), json (sorted keys, deterministic byte
stream for identical argv+config), csv (header row).  Exit codes: 0 ok /
all checks pass, 1 numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import asymcount, counting, detkit, partition, polytope, quadrature
from .acceptance import SUITES, run_acceptance
from .config import RunConfig, load_config
from .orthopoly import quartic_r_sequence, u_coefficients


def _emit(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = sorted(payload)
        writer.writerow(keys)
        writer.writerow([payload[k] for k in keys])
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"{k} = {payload[k]}" for k in sorted(payload))


def _parse_floats(raw: str) -> tuple[float, ...]:
    return tuple(float(v) for v in raw.split(","))


def _parse_ints(raw: str) -> tuple[int, ...]:
    return tuple(int(v) for v in raw.split(","))


def cmd_count(args, cfg: RunConfig) -> tuple[int, str]:
    spec = counting.RowSumSpec(args.n, _parse_ints(args.t))
    value = counting.count_row_sums(spec, state_cap=cfg.state_cap)
    if args.total:
        value = counting.count_total(args.n, spec.x)
    if cfg.output_format == "text":
        return 0, str(value)
    return 0, _emit({"n": args.n, "t": args.t, "count": str(value)}, cfg.output_format)


def cmd_asym(args, cfg: RunConfig) -> tuple[int, str]:
    spec = counting.RowSumSpec(args.n, _parse_ints(args.t))
    res = asymcount.asymptotic_count(spec, lam=args.lam, omega=args.omega)
    payload = {
        "log_value": res.value.log_abs,
        "value": res.value.value,
        "lambda": res.lam,
        "flagged": res.flagged,
    }
    if args.exact:
        exact = counting.count_row_sums(spec, state_cap=cfg.state_cap)
        payload["exact"] = str(exact)
        payload["ratio"] = math.exp(res.value.log_abs - math.log(exact))
    return 0, _emit(payload, cfg.output_format)


def cmd_volume(args, cfg: RunConfig) -> tuple[int, str]:
    h = _parse_floats(args.h)
    spec = polytope.DiagonalSpec(len(h), h)
    if args.sweep:
        # Fig-style sweep data: diagonal (c,...,c,x,1-x); columns x, exact, asymptotic, mc
        rows = ["x,exact,asymptotic,mc"]
        for i in range(args.sweep_points):
            x = 0.30 + 0.40 * i / max(args.sweep_points - 1, 1)
            hh = h[:-2] + (x, 1.0 - x)
            sp = polytope.DiagonalSpec(len(hh), hh)
            exact = (
                polytope.exact_volume_n4(sp)
                if sp.n == 4
                else (polytope.exact_volume_n3(sp) if sp.n == 3 else float("nan"))
            )
            asym = polytope.asymptotic_volume(sp).value
            mc, _ = (
                polytope.mc_volume(sp, cfg.mc_samples, cfg.seed)
                if sp.n >= 4
                else (exact, 0.0)
            )
            rows.append(f"{x:.6f},{exact:.6e},{asym:.6e},{mc:.6e}")
        return 0, "\n".join(rows)
    payload: dict = {"n": spec.n, "chi": spec.chi}
    if spec.n == 3:
        payload["exact"] = polytope.exact_volume_n3(spec)
    elif spec.n == 4:
        payload["exact"] = polytope.exact_volume_n4(spec)
    if spec.chi < spec.n:
        payload["asymptotic"] = polytope.asymptotic_volume(spec).value
        payload["applicability_margin"] = polytope.applicability_margin(spec)
    if args.mc and spec.n >= 4:
        est, se = polytope.mc_volume(spec, cfg.mc_samples, cfg.seed)
        payload["mc"] = est
        payload["mc_std_error"] = se
    return 0, _emit(payload, cfg.output_format)


def cmd_orthopoly(args, cfg: RunConfig) -> tuple[int, str]:
    table = quartic_r_sequence(args.n)
    payload = {f"R_{m}": table.r[m] for m in range(1, args.n + 1)}
    payload.update({f"h_{m}": table.h[m] for m in range(0, min(args.n, 6) + 1)})
    if args.u:
        umat = u_coefficients(args.n)
        for m in range(args.n + 1):
            for k in range(m + 1):
                payload[f"U_{m}_{k}"] = umat[m, k]
    return 0, _emit(payload, cfg.output_format)


def cmd_det(args, cfg: RunConfig) -> tuple[int, str]:
    if args.kind == "beta":
        val = detkit.beta_det(args.n)
        return 0, _emit({"n": args.n, "det": str(val)}, cfg.output_format)
    if args.kind == "shifted-factorial":
        val = detkit.shifted_factorial_det(args.n)
        return 0, _emit({"n": args.n, "det": str(val)}, cfg.output_format)
    if args.kind == "exp-kernel":
        nodes = detkit.NodeSet(tuple((k + 1) * args.n**-1.75 for k in range(args.n)))
        exact, fact, window = detkit.exp_det_factorization(nodes, nodes, 1.0)
        return 0, _emit(
            {"n": args.n, "exact": exact, "factored": fact, "ratio": exact / fact,
             "in_window": window},
            cfg.output_format,
        )
    return 2, "unknown determinant kind"


def cmd_pearcey(args, cfg: RunConfig) -> tuple[int, str]:
    direct, saddle = quadrature.pearcey_eval(args.a, args.b, args.k)
    region = quadrature.pearcey_region(args.a, args.b)
    payload = {
        "direct": abs(direct),
        "saddle": abs(saddle) if saddle is not None else None,
        "ratio": (abs(saddle) / abs(direct)) if saddle is not None else None,
        "region": region.region,
    }
    return 0, _emit(payload, cfg.output_format)


def cmd_partition(args, cfg: RunConfig) -> tuple[int, str]:
    spec = partition.KineticSpectrum(len(_parse_floats(args.e)), _parse_floats(args.e), args.g)
    payload = {
        "log_z_free": partition.z_free(spec).log_abs,
        "z_free": partition.z_free(spec).value,
    }
    if spec.n >= 2:
        payload["log_z_weak"] = partition.z_weak(spec).log_abs
    if args.zero_kinetic and spec.g > 0:
        payload["log_z_zero_kinetic"] = partition.z_zero_kinetic(spec.n, spec.g).log_abs
    if args.mc:
        est, se = partition.z_mc_matrix(spec, cfg.mc_samples, cfg.seed)
        payload["mc"] = est
        payload["mc_std_error"] = se
    return 0, _emit(payload, cfg.output_format)


def cmd_verify(args, cfg: RunConfig) -> tuple[int, str]:
    results = run_acceptance(cfg, suite=args.suite)
    lines = []
    width = max(len(r.clause) for r in results)
    for r in results:
        status = "PASS" if r.passed else ("FAIL (documented)" if r.known_issue else "FAIL")
        lines.append(f"[{r.criterion:>2}] {r.clause:<{width}}  {status:<17} "
                     f"reference: {r.reference} | {r.detail}")
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} clauses passed")
    code = 0 if n_pass == len(results) else 1
    if cfg.output_format == "json":
        payload = [r.__dict__ for r in results]
        return code, json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return code, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmm",
        description="exact/asymptotic enumeration, polytope volumes, orthogonal "
        "polynomials, saddle quadrature and matrix-model partition functions",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value config file")
    common.add_argument("--seed", type=int, help="override RNG seed (default 42)")
    common.add_argument("--samples", type=int, help="override MC sample count")
    common.add_argument("--format", choices=("text", "json", "csv"), help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("count", help="exact matrix count for given row sums")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True, help="comma-separated row sums")
    p.add_argument("--total", action="store_true", help="total count at this entry sum")

    p = add_parser("asym", help="asymptotic count and validity diagnostics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--lam", type=float, default=None)
    p.add_argument("--omega", type=float, default=asymcount.DEFAULT_OMEGA)
    p.add_argument("--exact", action="store_true", help="also run the exact oracle")

    p = add_parser("volume", help="diagonal subpolytope volumes")
    p.add_argument("--h", required=True, help="comma-separated diagonal entries")
    p.add_argument("--mc", action="store_true")
    p.add_argument("--sweep", action="store_true", help="emit (x, exact, asymptotic, mc) CSV")
    p.add_argument("--sweep-points", type=int, default=9)

    p = add_parser("orthopoly", help="quartic-weight recursion tables")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--u", action="store_true", help="include coefficient table")

    p = add_parser("det", help="determinant identities")
    p.add_argument("--kind", choices=("beta", "shifted-factorial", "exp-kernel"),
                   required=True)
    p.add_argument("--n", type=int, required=True)

    p = add_parser("pearcey", help="quartic-phase integral, direct vs saddle")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--k", type=int, default=0)

    p = add_parser("partition", help="matrix-model partition functions")
    p.add_argument("--e", required=True, help="comma-separated kinetic eigenvalues")
    p.add_argument("--g", type=float, default=0.0)
    p.add_argument("--mc", action="store_true")
    p.add_argument("--zero-kinetic", action="store_true")

    p = add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", choices=sorted(SUITES), default=None)

    return parser


COMMANDS = {
    "count": cmd_count,
    "asym": cmd_asym,
    "volume": cmd_volume,
    "orthopoly": cmd_orthopoly,
    "det": cmd_det,
    "pearcey": cmd_pearcey,
    "partition": cmd_partition,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    cfg = load_config(args.config).override(
        seed=args.seed, mc_samples=args.samples, output_format=args.format
    )
    try:
        code, text = COMMANDS[args.command](args, cfg)
    except (ValueError, ArithmeticError, counting.InstanceTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
