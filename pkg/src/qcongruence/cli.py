"""
Command-line front end.

Two subcommands:

  show    print one construct: phi, lambda, sset, A, B, C, N
  verify  run claim sweeps over parameter grids and emit a report

Claims: binomsum, central, qcong, lemmas, identities, 2adic, sun, all.
`all` runs every proven claim and deliberately leaves out `sun`, which is an
open conjecture: request it explicitly, and a counterexample exits with
code 3 as data, not as a suite failure.

Grid flags --r --m --rho --n take a single integer or an inclusive range
`a..b`. Instances whose (r, m) is not coprime, or whose parameters fall
outside a claim's domain (for example alpha = r/m integral), are skipped
and counted, never errored. Exit codes: 0 all pass, 1 a proven claim
failed, 2 usage error, 3 conjecture counterexample.

Reports are deterministic for a fixed spec: iteration is in sorted
parameter order, results are emitted in task order regardless of worker
completion, and --no-timestamp removes the only wall-clock field.
"""
from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cycmodfield, verifier
from .constructs import (a_poly, b_poly, c_poly, expand_product,
                         lambda_residue, n_alpha, s_set)
from .cyclotomic import phi, phi_at_one
from .exceptions import DomainError
from .verifier import Verdict

CLAIMS = ("binomsum", "central", "qcong", "lemmas", "identities",
          "2adic", "sun", "all")
PROVEN = ("binomsum", "central", "qcong", "lemmas", "identities", "2adic")

_NEEDS = {
    "binomsum": ("r", "m", "rho", "n"),
    "central": ("rho", "n"),
    "qcong": ("r", "m", "rho", "n"),
    "lemmas": ("r", "m", "rho"),
    "identities": ("r", "m", "n"),
    "2adic": ("rho", "n"),
    "sun": ("n",),
    "all": ("r", "m", "rho", "n"),
}

_PARAM_ORDER = ("r", "m", "rho", "n", "d", "s", "t", "h")


def _parse_range(text):
    """'7' or '-3..4' to an inclusive list."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValueError(f"empty range {text}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _params_ok(r, m):
    return m >= 2 and math.gcd(r, m) == 1 and r % m != 0


# ---------------------------------------------------------------------------
# task construction and execution

def _tasks_for(claim, grid, d_max, full_polys=False):
    """Expand one claim over the grid into (kind, args) tasks plus a skip
    count. Deterministic: nested sorted loops, no sets."""
    tasks = []
    skipped = 0
    rs = grid.get("r", [None])
    ms = grid.get("m", [None])
    rhos = grid.get("rho", [None])
    ns = grid.get("n", [None])

    if claim in ("binomsum", "qcong"):
        for r in rs:
            for m in ms:
                if not _params_ok(r, m):
                    skipped += len(rhos) * len(ns)
                    continue
                for rho in rhos:
                    for n in ns:
                        if rho < 1 or n < 1:
                            skipped += 1
                        elif claim == "qcong":
                            tasks.append((claim, (r, m, rho, n, full_polys)))
                        else:
                            tasks.append((claim, (r, m, rho, n)))
    elif claim in ("central", "2adic"):
        for rho in rhos:
            for n in ns:
                bad = n < 2 or (claim == "central" and rho < 2) or rho < 1
                if bad:
                    skipped += 1
                else:
                    tasks.append((claim, (rho, n)))
    elif claim == "identities":
        for r in rs:
            for m in ms:
                if not _params_ok(r, m):
                    skipped += len(ns)
                    continue
                for n in ns:
                    if n < 1:
                        skipped += 1
                    else:
                        tasks.append(("structure", (r, m, n)))
                        tasks.append(("value_at_one", (r, m, n)))
    elif claim == "lemmas":
        for r in rs:
            for m in ms:
                if not _params_ok(r, m):
                    skipped += 1
                    continue
                for d in range(2, d_max + 1):
                    if math.gcd(d, m) != 1:
                        continue
                    tasks.append(("block_constant", (r, m, d)))
                    for rho in rhos:
                        if rho >= 1:
                            tasks.append(("block_sum", (r, m, rho, d)))
                    for s in (1, 2):
                        for t in range(0, min(3, d)):
                            tasks.append(("block_decomposition",
                                          (r, m, d, s, t)))
                    for rho in rhos:
                        if rho >= 1:
                            tasks.append(("mu_consistency",
                                          (r, m, rho, d, 1, 0)))
        for m in ms:
            if m < 2:
                continue
            for d in range(2, d_max + 1):
                if math.gcd(d, m) != 1:
                    continue
                for s in (1, 2):
                    tasks.append(("sign_reduction", (m, d, s, 1)))
    elif claim == "sun":
        for n in ns:
            if n < 2:
                skipped += 1
            else:
                tasks.append(("sun", (n,)))
    else:
        raise ValueError(claim)
    return tasks, skipped


def _check_to_verdict(kind, args, outcome):
    names = {
        "block_constant": ("r", "m", "d"),
        "block_sum": ("r", "m", "rho", "d"),
        "block_decomposition": ("r", "m", "d", "s", "t"),
        "mu_consistency": ("r", "m", "rho", "d", "s", "t"),
        "sign_reduction": ("m", "d", "s", "h"),
    }[kind]
    params = dict(zip(names, args))
    witness = None if outcome.ok else {"detail": outcome.detail}
    return Verdict(kind, params, outcome.ok, outcome.lhs, outcome.rhs,
                   witness)


def _run_task(task):
    """One task to a list of Verdicts. Top level so process pools can
    pickle it."""
    kind, args = task
    if kind == "binomsum":
        return [verifier.verify_binomial_sum(*args)]
    if kind == "central":
        return [verifier.verify_central_binomial(*args)]
    if kind == "qcong":
        r, m, rho, n, full_polys = args
        return [verifier.verify_q_congruence(r, m, rho, n, full_polys),
                verifier.verify_specialization_at_one(r, m, rho, n)]
    if kind == "structure":
        return [verifier.verify_structure_identity(*args)]
    if kind == "value_at_one":
        return [verifier.verify_value_identity(*args)]
    if kind == "2adic":
        return [verifier.verify_two_adic_bounds(*args)]
    if kind == "sun":
        return [verifier.verify_sun_conjecture(*args)]
    check = getattr(cycmodfield, f"check_{kind}")
    return [_check_to_verdict(kind, args, check(*args))]


def _run_all(tasks, jobs, fail_fast):
    """Evaluate tasks, preserving task order in the output."""
    out = []
    stopped = False
    if jobs <= 1:
        for task in tasks:
            batch = _run_task(task)
            out.extend(batch)
            if fail_fast and any(not v.passed for v in batch):
                stopped = True
                break
        return out, stopped
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_task, t) for t in tasks]
        for fut in futures:
            batch = fut.result()
            out.extend(batch)
            if fail_fast and any(not v.passed for v in batch):
                stopped = True
                for rest in futures:
                    rest.cancel()
                break
    return out, stopped


# ---------------------------------------------------------------------------
# report rendering

def _params_str(params):
    return " ".join(f"{k}={params[k]}" for k in _PARAM_ORDER if k in params)


def _render_text(spec, verdicts, counts, stopped, timestamp):
    buf = io.StringIO()
    buf.write(f"claim sweep: {spec['claim']}\n")
    if timestamp:
        buf.write(f"generated: {timestamp}\n")
    for v in verdicts:
        mark = "PASS" if v.passed else "FAIL"
        buf.write(f"{mark} {v.claim} {_params_str(v.params)} | "
                  f"{v.lhs} | {v.rhs}\n")
        if v.witness:
            buf.write(f"     witness: {json.dumps(v.witness, default=str)}\n")
    if stopped:
        buf.write("stopped at first failure (--fail-fast)\n")
    buf.write(f"pass {counts['pass']}  fail {counts['fail']}  "
              f"skip {counts['skip']}\n")
    return buf.getvalue()


def _verdict_dict(v):
    d = {"claim": v.claim, "params": v.params, "pass": v.passed,
         "lhs": v.lhs, "rhs": v.rhs}
    if v.witness is not None:
        d["witness"] = v.witness
    return d


def _render_json(spec, verdicts, counts, stopped, timestamp):
    doc = {"spec": spec, "counts": counts,
           "verdicts": [_verdict_dict(v) for v in verdicts]}
    if stopped:
        doc["stopped_early"] = True
    if timestamp:
        doc["timestamp"] = timestamp
    return json.dumps(doc, indent=2, default=str) + "\n"


def _render_csv(spec, verdicts, counts, stopped, timestamp):
    buf = io.StringIO()
    if timestamp:
        buf.write(f"# generated: {timestamp}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["claim", *_PARAM_ORDER, "pass", "lhs", "rhs", "witness"])
    for v in verdicts:
        row = [v.claim]
        row += [v.params.get(k, "") for k in _PARAM_ORDER]
        row += [str(v.passed).lower(), v.lhs, v.rhs,
                json.dumps(v.witness, default=str) if v.witness else ""]
        w.writerow(row)
    w.writerow(["counts", counts["pass"], counts["fail"], counts["skip"],
                "", "", "", "", "", "stopped" if stopped else "", "", ""])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands

def _poly_lines(name, factored, at_one=True):
    lines = [f"{name} = {factored!r}"]
    expanded = expand_product(factored)
    lines.append(f"{name} = {expanded!r}")
    if at_one:
        val = factored.value_at_one()
        lines.append(f"{name}(1) = {val.numerator if val.denominator == 1 else val}")
    return lines


def cmd_show(args):
    obj = args.object
    need = {"phi": ("d",), "lambda": ("r", "m", "d"),
            "sset": ("r", "m", "n"), "A": ("r", "m", "n"),
            "B": ("r", "m", "n"), "C": ("m", "n"), "N": ("r", "m", "n")}[obj]
    for flag in need:
        if getattr(args, flag) is None:
            raise SystemExit(f"show {obj} needs --{flag}")
    out = []
    if obj == "phi":
        d = args.d
        out.append(f"Phi_{d} = {phi(d)!r}")
        if d >= 2:
            out.append(f"Phi_{d}(1) = {phi_at_one(d)}")
    elif obj == "lambda":
        out.append(str(lambda_residue(args.r, args.m, args.d)))
    elif obj == "sset":
        members = s_set(args.r, args.m, args.n)
        out.append("{" + ", ".join(map(str, members)) + "}")
    elif obj == "A":
        out += _poly_lines("A", a_poly(args.r, args.m, args.n))
    elif obj == "B":
        out += _poly_lines("B", b_poly(args.r, args.m, args.n))
    elif obj == "C":
        out += _poly_lines("C", c_poly(args.m, args.n))
    elif obj == "N":
        out.append(str(n_alpha(args.r, args.m, args.n)))
    print("\n".join(out))
    return 0


def cmd_verify(args, parser):
    claims = list(PROVEN) if args.claim == "all" else [args.claim]
    needed = _NEEDS[args.claim]
    grid = {}
    for flag in ("r", "m", "rho", "n"):
        raw = getattr(args, flag)
        if raw is None:
            if flag in needed:
                parser.error(f"claim {args.claim} needs --{flag}")
            continue
        try:
            grid[flag] = _parse_range(raw)
        except ValueError as exc:
            parser.error(str(exc))

    tasks = []
    skipped = 0
    for claim in claims:
        if any(f not in grid for f in _NEEDS[claim]):
            continue  # `all` with partial flags still runs what it can
        t, s = _tasks_for(claim, grid, args.d_max, args.full_polys)
        tasks += t
        skipped += s

    verdicts, stopped = _run_all(tasks, args.jobs, args.fail_fast)
    counts = {
        "pass": sum(1 for v in verdicts if v.passed),
        "fail": sum(1 for v in verdicts if not v.passed),
        "skip": skipped,
    }
    timestamp = None
    if not args.no_timestamp:
        timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    spec = {
        "command": "verify", "claim": args.claim,
        "r": args.r, "m": args.m, "rho": args.rho, "n": args.n,
        "d_max": args.d_max, "format": args.format,
        "full_polys": args.full_polys,
    }
    render = {"text": _render_text, "json": _render_json,
              "csv": _render_csv}[args.format]
    report = render(spec, verdicts, counts, stopped, timestamp)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)

    proven_failed = any(
        not v.passed for v in verdicts if v.claim != "sun")
    sun_failed = any(not v.passed for v in verdicts if v.claim == "sun")
    if proven_failed:
        return 1
    if sun_failed:
        return 3
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qcongruence",
        description="exact verification of cyclotomic binomial-sum "
                    "divisibility claims")
    sub = parser.add_subparsers(dest="command", required=True)

    p_show = sub.add_parser("show", help="print one construct")
    p_show.add_argument("object",
                        choices=["phi", "lambda", "sset", "A", "B", "C", "N"])
    p_show.add_argument("--r", type=int)
    p_show.add_argument("--m", type=int)
    p_show.add_argument("--n", type=int)
    p_show.add_argument("--d", type=int)
    p_show.add_argument("--full-polys", action="store_true")

    p_ver = sub.add_parser("verify", help="run claim sweeps")
    p_ver.add_argument("claim", choices=CLAIMS)
    p_ver.add_argument("--r", help="integer or inclusive range a..b")
    p_ver.add_argument("--m", help="integer or inclusive range a..b")
    p_ver.add_argument("--rho", help="integer or inclusive range a..b")
    p_ver.add_argument("--n", help="integer or inclusive range a..b")
    p_ver.add_argument("--d-max", type=int, default=20,
                       help="bound for per-modulus checks (default 20)")
    p_ver.add_argument("--format", choices=["text", "json", "csv"],
                       default="text")
    p_ver.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_ver.add_argument("--fail-fast", action="store_true")
    p_ver.add_argument("--full-polys", action="store_true",
                       help="full coefficient lists instead of digests")
    p_ver.add_argument("--no-timestamp", action="store_true")
    p_ver.add_argument("--out", help="write the report to a file")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "show":
            return cmd_show(args)
        return cmd_verify(args, parser)
    except DomainError as exc:
        parser.exit(2, f"domain error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
