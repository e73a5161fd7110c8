"""Command-line surface for every pipeline stage.

JSON mode emits one object per result; integer payloads are decimal strings
so consumers that parse numbers into 53-bit floats cannot corrupt them.

Exit codes: 0 ok, 1 verification mismatch, 2 argument or range error,
3 evaluator cross-check mismatch, 4 arithmetic overflow, 5 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import report as report_mod
from .congruence import Congruence, solve_chain
from .criteria import BRUTE_CAP_DEFAULT, is_perm_brute, is_perm_v, is_perm_w, profile
from .dickson import DicksonParams, eval_fast, eval_recurrence
from .errors import CapExceededError
from .group import (
    ORACLE_CAP_DEFAULT,
    enumerate_kernel,
    group_order_oracle,
    kernel_oracle,
    order_report,
)
from .numth import factorize

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_CHECK_MISMATCH = 3
EXIT_OVERFLOW = 4
EXIT_CAP = 5


def _s(x) -> str:
    return str(int(x))


def _emit(args, command: str, inputs: dict, result: dict, method: str, t0: float) -> None:
    elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    if args.json:
        record = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "method": method,
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(record, sort_keys=True))
    else:
        args._text_printer(result, method, elapsed_ms)


def _order_result(rep) -> dict:
    return {
        "n": _s(rep.n),
        "w": _s(rep.w),
        "phi_w": _s(rep.phi_w),
        "kernel_size": _s(rep.kernel_size),
        "order": _s(rep.order),
    }


def cmd_eval(args) -> int:
    t0 = time.perf_counter()
    p = DicksonParams(args.k, args.a, args.n)
    inputs = {"k": _s(args.k), "a": _s(args.a), "n": _s(args.n), "u": _s(args.u)}
    if args.check:
        fast = eval_fast(p, args.u)
        slow = eval_recurrence(p, args.u)
        if fast != slow:
            print(f"MISMATCH: fast={fast} recurrence={slow}", file=sys.stderr)
            return EXIT_CHECK_MISMATCH
        result, method = {"value": _s(fast)}, "check"
    elif args.recurrence:
        result, method = {"value": _s(eval_recurrence(p, args.u))}, "recurrence"
    else:
        result, method = {"value": _s(eval_fast(p, args.u))}, "fast"
    args._text_printer = lambda r, m, ms: print(r["value"])
    _emit(args, "eval", inputs, result, method, t0)
    return EXIT_OK


def cmd_is_perm(args) -> int:
    t0 = time.perf_counter()
    inputs = {"k": _s(args.k), "n": _s(args.n), "a": _s(args.a), "method": args.method}
    if args.method == "brute":
        ok = is_perm_brute(args.k, args.a, args.n, cap=args.cap)
        method = "brute"
    else:
        f = factorize(args.n)
        ok = is_perm_w(args.k, f) if args.method == "w" else is_perm_v(args.k, f)
        method = f"gcd_{args.method}"
    result = {"is_permutation": ok}
    args._text_printer = lambda r, m, ms: print("yes" if r["is_permutation"] else "no")
    _emit(args, "is-perm", inputs, result, method, t0)
    return EXIT_OK


def cmd_profile(args) -> int:
    t0 = time.perf_counter()
    prof = profile(factorize(args.n))
    result = {
        "n": _s(prof.n),
        "e": _s(prof.e),
        "l0": None if prof.l0 is None else _s(prof.l0),
        "ls": [_s(x) for x in prof.ls],
        "w": _s(prof.w),
        "v": _s(prof.v),
    }

    def show(r, m, ms):
        l0 = "-" if r["l0"] is None else r["l0"]
        print(f"n={r['n']} e={r['e']} l0={l0} ls=[{', '.join(r['ls'])}] w={r['w']} v={r['v']}")

    args._text_printer = show
    _emit(args, "profile", {"n": _s(args.n)}, result, "formula", t0)
    return EXIT_OK


def cmd_solve(args) -> int:
    t0 = time.perf_counter()
    if len(args.terms) % 2 or not args.terms:
        raise ValueError("solve needs residue/modulus pairs, e.g. solve 2 6 5 9")
    pairs = list(zip(args.terms[::2], args.terms[1::2]))
    system = [Congruence(a, m) for a, m in pairs]
    sol = solve_chain(system)
    inputs = {"congruences": [[_s(a), _s(m)] for a, m in pairs]}
    if sol is None:
        result = {"solvable": False}
    else:
        result = {"solvable": True, "residue": _s(sol.residue), "modulus": _s(sol.modulus)}

    def show(r, m, ms):
        if r["solvable"]:
            print(f"x = {r['residue']} (mod {r['modulus']})")
        else:
            print("no solution")

    args._text_printer = show
    _emit(args, "solve", inputs, result, "fold", t0)
    return EXIT_OK


def cmd_kernel(args) -> int:
    t0 = time.perf_counter()
    kr = enumerate_kernel(factorize(args.n))
    ks = sorted(kr.kernel)
    result = {
        "n": _s(args.n),
        "w": _s(kr.profile.w),
        "kernel": [_s(k) for k in ks],
        "size": _s(len(ks)),
    }
    moduli = ([kr.profile.l0] if kr.profile.l0 is not None else []) + list(kr.profile.ls)
    if args.witnesses:
        result["moduli"] = [_s(m) for m in moduli]
        result["witnesses"] = {_s(k): [_s(a) for a in kr.witnesses[k]] for k in ks}

    def show(r, m, ms):
        print(f"kernel mod {r['w']}: {{{', '.join(r['kernel'])}}} (size {r['size']})")
        if args.witnesses:
            mods = r["moduli"]
            for k in r["kernel"]:
                parts = ", ".join(f"{a} mod {mm}" for a, mm in zip(r["witnesses"][k], mods))
                print(f"  {k} <- ({parts})")

    args._text_printer = show
    _emit(args, "kernel", {"n": _s(args.n)}, result, "kernel_enum", t0)
    return EXIT_OK


def cmd_order(args) -> int:
    t0 = time.perf_counter()
    rep = order_report(args.n, method=args.method, cap=args.cap)

    def show(r, m, ms):
        print(f"order {r['order']} (n={r['n']}, w={r['w']}, phi_w={r['phi_w']}, "
              f"kernel_size={r['kernel_size']}, method={m})")

    args._text_printer = show
    _emit(args, "order", {"n": _s(args.n), "method": args.method}, _order_result(rep), rep.method, t0)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.input:
        ns = [int(tok) for tok in Path(args.input).read_text().split()]
    else:
        if args.max is None:
            raise ValueError("table needs --input FILE or --min/--max bounds")
        if args.max < args.min:
            raise ValueError("--max must be >= --min")
        ns = list(range(args.min, args.max + 1))
    reports = []
    timings = []
    for n in ns:
        t0 = time.perf_counter()
        reports.append(order_report(n, method=args.method, cap=args.cap))
        timings.append(round((time.perf_counter() - t0) * 1000.0, 3))
    # batch input defaults to JSON lines; range sweeps default to CSV
    as_json = args.json or (args.input is not None and args.out is None)
    if as_json:
        for rep, ms in zip(reports, timings):
            record = {
                "command": "table",
                "inputs": {"n": _s(rep.n), "method": args.method},
                "result": _order_result(rep),
                "method": rep.method,
                "elapsed_ms": ms,
            }
            print(json.dumps(record, sort_keys=True))
    elif args.out:
        with open(args.out, "w", newline="") as fh:
            report_mod.write_delimited(reports, fh)
    else:
        report_mod.write_delimited(reports, sys.stdout)
    if args.figures:
        for path in report_mod.render_figures(reports, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.max_n > args.cap:
        raise CapExceededError(f"--max-n {args.max_n} exceeds the oracle cap {args.cap}")
    if args.max_n < 2:
        raise ValueError("--max-n must be >= 2")
    checked = 0
    for n in range(2, args.max_n + 1):
        enum = enumerate_kernel(factorize(n))
        brute = kernel_oracle(n, cap=args.cap)
        if enum.kernel != brute:
            print(f"FAIL n={n}: kernel mismatch: enumerated {sorted(enum.kernel)}, "
                  f"oracle {sorted(brute)}")
            return EXIT_VERIFY_FAILED
        rep = order_report(n, method="enum")
        oracle_order = group_order_oracle(n, cap=args.cap)
        if rep.order != oracle_order:
            print(f"FAIL n={n}: order mismatch: enumerated {rep.order}, oracle {oracle_order}")
            return EXIT_VERIFY_FAILED
        checked += 1
    rng = random.Random(args.seed)
    for _ in range(args.eval_samples):
        k = rng.randint(1, 2000)
        n = rng.randint(1, 500)
        u = rng.randint(0, n - 1)
        a = rng.choice([0, 1, n - 1, rng.randint(0, n - 1)])
        p = DicksonParams(k, a, n)
        fast, slow = eval_fast(p, u), eval_recurrence(p, u)
        if fast != slow:
            print(f"FAIL eval k={k} a={a} n={n} u={u}: fast={fast} recurrence={slow}")
            return EXIT_VERIFY_FAILED
    elapsed = time.perf_counter() - t0
    result = {
        "max_n": _s(args.max_n),
        "moduli_checked": _s(checked),
        "eval_samples": _s(args.eval_samples),
        "status": "pass",
    }
    if args.json:
        record = {
            "command": "verify",
            "inputs": {"max_n": _s(args.max_n), "seed": _s(args.seed)},
            "result": result,
            "method": "oracle_sweep",
            "elapsed_ms": round(elapsed * 1000.0, 3),
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"verify n=2..{args.max_n}: PASS "
              f"({checked} moduli, {args.eval_samples} evaluator samples, {elapsed:.1f}s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicksonperm",
        description="Dickson permutation maps on Z_n: evaluation, permutation "
                    "criteria, congruence solving, kernels and group orders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit one JSON object per result")

    p = sub.add_parser("eval", help="evaluate the degree-k map at one point")
    p.add_argument("k", type=int)
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)
    p.add_argument("u", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_true", help="doubling evaluation (default)")
    mode.add_argument("--recurrence", action="store_true", help="O(k) reference evaluation")
    p.add_argument("--check", action="store_true", help="run both evaluators, fail on mismatch")
    add_json(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("is-perm", help="does the degree-k map permute Z_n?")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--a", type=int, default=1, help="polynomial parameter (default 1)")
    p.add_argument("--method", choices=("w", "v", "brute"), default="w")
    p.add_argument("--cap", type=int, default=BRUTE_CAP_DEFAULT, help="brute-force modulus cap")
    add_json(p)
    p.set_defaults(func=cmd_is_perm)

    p = sub.add_parser("profile", help="per-prime-power moduli and the w/v criteria")
    p.add_argument("n", type=int)
    add_json(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("solve", help="solve x=a1 (mod m1), x=a2 (mod m2), ...")
    p.add_argument("terms", type=int, nargs="+", metavar="RES MOD",
                   help="residue/modulus pairs; prefix negatives with --")
    add_json(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernel", help="degrees mod w(n) acting as the identity")
    p.add_argument("n", type=int)
    p.add_argument("--witnesses", action="store_true",
                   help="also print each element's residue tuple")
    add_json(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("order", help="number of distinct permutations induced on Z_n")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("auto", "closed", "enum", "oracle"), default="auto")
    p.add_argument("--cap", type=int, default=ORACLE_CAP_DEFAULT, help="oracle modulus cap")
    add_json(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("table", help="group-order rows for many moduli (CSV or JSON lines)")
    p.add_argument("--input", help="file with one modulus per line")
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int)
    p.add_argument("--method", choices=("auto", "closed", "enum", "oracle"), default="auto")
    p.add_argument("--cap", type=int, default=ORACLE_CAP_DEFAULT)
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.add_argument("--figures", metavar="DIR", help="also render figures into DIR")
    add_json(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="kernel/order oracle sweep plus evaluator samples")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--cap", type=int, default=ORACLE_CAP_DEFAULT)
    p.add_argument("--seed", type=int, default=0, help="seed for the evaluator samples")
    p.add_argument("--eval-samples", type=int, default=1000)
    p.set_defaults(func=cmd_verify, json=False)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    raise SystemExit(main())
