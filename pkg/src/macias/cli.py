"""Command-line surface: parse expressions and residue sets, run every
decision procedure, replay the two worked discontinuity examples, and run
the oracle-agreement suites.

Every subcommand supports --json, emitting one object per invocation with
the shape {"command": ..., "status": ..., "result": ...}.  Exit codes:
0 ok, 1 domain or parse error, 2 inconclusive verdict, 3 oracle
disagreement.  Output is deterministic: identical argv, identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import oracle, topology
from .functions import (
    ContinuityVerdict,
    ExpFunction,
    Polynomial,
    exp_continuity,
    exp_preimage_sigma,
    golomb_poly_is_continuous,
    parse_exp_function,
    parse_polynomial,
    poly_continuity,
    poly_preimage_sigma,
    schur_prime_divisors,
)
from .numtheory import gcd, primes_in_progression
from .residues import ResidueSet
from .residues import parse as parse_set

STATUS_OK = "ok"
STATUS_DOMAIN_ERROR = "domain-error"
STATUS_INCONCLUSIVE = "inconclusive"
STATUS_DISAGREEMENT = "disagreement"

_EXIT_CODES = {
    STATUS_OK: 0,
    STATUS_DOMAIN_ERROR: 1,
    STATUS_INCONCLUSIVE: 2,
    STATUS_DISAGREEMENT: 3,
}

VERIFY_SEED = 20260810

_VERIFY_LEVELS = {
    "quick": dict(exhaustive_mod=8, random_count=100, random_mod=36,
                  closure_n=30, closure_window=300, closure_k=120,
                  preimage_n=20, preimage_window=400),
    "full": dict(exhaustive_mod=12, random_count=500, random_mod=60,
                 closure_n=100, closure_window=1000, closure_k=200,
                 preimage_n=50, preimage_window=1000),
}

# Fixed polynomial corpus for the preimage-agreement suite.
_VERIFY_POLYS = ("x^2+x", "x^2+4x+2", "x^3", "5x^3", "7", "x^2+1", "3x+2",
                 "x^4+x^2+2")


class UsageError(ValueError):
    """Bad argv; carries the usage text."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


@dataclass(frozen=True)
class CommandResult:
    command: str
    status: str
    payload: dict = field(default_factory=dict)
    text: str = ""
    json_mode: bool = False

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "status": self.status, "result": self.payload})

    def rendered(self) -> str:
        return self.to_json() if self.json_mode else self.text


def _set_payload(s: ResidueSet) -> dict:
    return {"modulus": s.modulus, "residues": sorted(s.residues), "text": str(s)}


def _monomial_text(a: int, k: int) -> str:
    if k == 0:
        return str(a)
    power = "x" if k == 1 else f"x^{k}"
    return power if a == 1 else f"{a}·{power}"


def _verdict_payload(v: ContinuityVerdict) -> dict:
    return {
        "status": v.status,
        "reason": v.reason,
        "monomial": list(v.monomial) if v.monomial else None,
        "witness_prime": v.witness_prime,
        "preimage": _set_payload(v.preimage) if v.preimage else None,
        "failing_class": v.failing_class,
        "primes_checked_up_to": v.primes_checked_up_to,
    }


def _verdict_text(v: ContinuityVerdict) -> str:
    if v.status == "continuous":
        if v.monomial:
            return f"continuous (monomial {_monomial_text(*v.monomial)})"
        return f"continuous ({v.reason})"
    if v.status == "discontinuous":
        return (f"discontinuous (witness prime {v.witness_prime}, "
                f"preimage {v.preimage}, failing class {v.failing_class})")
    return f"inconclusive (no witness prime <= {v.primes_checked_up_to})"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a JSON object instead of text")

    parser = _Parser(prog="macias",
                     description="decision procedures for the Macias topology")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", parents=[common],
                       help="basic open: the naturals coprime to N")
    p.add_argument("n", type=int)

    p = sub.add_parser("preimage", parents=[common],
                       help="preimage of a basic open under a function")
    p.add_argument("--poly", help="polynomial expression, e.g. x^2+4x+2")
    p.add_argument("--exp", help="exponential expression, e.g. 2^x+3")
    p.add_argument("--n", type=int, help="index of the basic open (with --poly)")
    p.add_argument("--p", type=int, help="prime index of the basic open (with --exp)")

    p = sub.add_parser("continuity", parents=[common],
                       help="continuity verdict with witness prime")
    p.add_argument("--poly")
    p.add_argument("--exp")
    p.add_argument("--prime-bound", type=int, default=10_000)

    p = sub.add_parser("open", parents=[common], help="openness of a residue set")
    p.add_argument("--set", required=True, metavar="m:{r,...}")

    p = sub.add_parser("dense", parents=[common], help="density of a residue set")
    p.add_argument("--set", required=True, metavar="m:{r,...}")

    p = sub.add_parser("closure", parents=[common],
                       help="closure of a finite set of points")
    p.add_argument("points", type=int, nargs="+")

    p = sub.add_parser("golomb", parents=[common],
                       help="polynomial continuity in the Golomb topology")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("schur", parents=[common],
                       help="distinct primes dividing f(1..N)")
    p.add_argument("--poly", required=True)
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("dirichlet", parents=[common],
                       help="primes in an arithmetic progression")
    p.add_argument("--step", type=int, required=True)
    p.add_argument("--offset", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)

    sub.add_parser("examples", parents=[common],
                   help="replay the two worked discontinuity examples")

    p = sub.add_parser("verify", parents=[common],
                       help="run the oracle-agreement suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")

    return parser


def _cmd_sigma(args) -> tuple[str, dict, str]:
    s = topology.sigma(args.n)
    return STATUS_OK, {"n": args.n, "set": _set_payload(s)}, str(s)


def _pick_function(args, need_index: bool = False):
    if (args.poly is None) == (args.exp is None):
        raise ValueError("provide exactly one of --poly or --exp")
    if args.poly is not None:
        if need_index and args.n is None:
            raise ValueError("--n is required with --poly")
        return "polynomial", parse_polynomial(args.poly)
    if need_index and args.p is None:
        raise ValueError("--p is required with --exp")
    return "exponential", parse_exp_function(args.exp)


def _cmd_preimage(args) -> tuple[str, dict, str]:
    kind, f = _pick_function(args, need_index=True)
    if kind == "polynomial":
        index = args.n
        s = poly_preimage_sigma(f, index)
    else:
        index = args.p
        s = exp_preimage_sigma(f, index)
    payload = {"kind": kind, "function": str(f), "n": index,
               "preimage": _set_payload(s)}
    return STATUS_OK, payload, str(s)


def _cmd_continuity(args) -> tuple[str, dict, str]:
    kind, f = _pick_function(args)
    if args.prime_bound < 2:
        raise ValueError("--prime-bound must be >= 2")
    verdict = (poly_continuity if kind == "polynomial" else exp_continuity)(
        f, args.prime_bound)
    payload = {"kind": kind, "function": str(f), "prime_bound": args.prime_bound,
               "verdict": _verdict_payload(verdict)}
    status = STATUS_INCONCLUSIVE if verdict.status == "inconclusive" else STATUS_OK
    return status, payload, _verdict_text(verdict)


def _cmd_open(args) -> tuple[str, dict, str]:
    s = parse_set(args.set)
    ok, failing = topology.is_open(s)
    payload = {"set": _set_payload(s), "open": ok, "failing_class": failing}
    if ok:
        text = "open"
    else:
        text = (f"not open (residue class {failing} mod {s.modulus} has no "
                f"basic neighborhood inside the set)")
    return STATUS_OK, payload, text


def _cmd_dense(args) -> tuple[str, dict, str]:
    s = parse_set(args.set)
    dense = topology.is_dense(s)
    payload = {"set": _set_payload(s), "dense": dense}
    return STATUS_OK, payload, "dense" if dense else "not dense"


def _cmd_closure(args) -> tuple[str, dict, str]:
    s = topology.closure_finite(args.points)
    payload = {"points": sorted(set(args.points)), "closure": _set_payload(s)}
    return STATUS_OK, payload, str(s)


def _cmd_golomb(args) -> tuple[str, dict, str]:
    f = parse_polynomial(args.poly)
    ok = golomb_poly_is_continuous(f)
    a0 = f.coefficients[0]
    payload = {"function": str(f), "continuous": ok, "constant_term": a0}
    if f.degree == 0:
        text = "continuous in the Golomb topology (constant)"
    elif ok:
        text = "continuous in the Golomb topology (constant term 0)"
    else:
        text = f"discontinuous in the Golomb topology (constant term {a0} != 0)"
    return STATUS_OK, payload, text


def _cmd_schur(args) -> tuple[str, dict, str]:
    f = parse_polynomial(args.poly)
    primes = schur_prime_divisors(f, args.max)
    payload = {"function": str(f), "max": args.max, "primes": primes}
    return STATUS_OK, payload, ",".join(map(str, primes))


def _cmd_dirichlet(args) -> tuple[str, dict, str]:
    primes = primes_in_progression(args.step, args.offset, args.limit)
    # Infinitude is only guaranteed for coprime step/offset; flag the rest.
    coprime = gcd(args.step, args.offset) == 1
    payload = {"step": args.step, "offset": args.offset, "limit": args.limit,
               "coprime": coprime, "primes": primes}
    return STATUS_OK, payload, ",".join(map(str, primes))


def _example_block(expr: str) -> tuple[dict, list[str]]:
    f = parse_polynomial(expr)
    pre = poly_preimage_sigma(f, 7)
    roots = [r for r in range(7) if f.eval_mod(r, 7) == 0]
    piece = pre.complement().intersect(topology.sigma(7))
    piece_dense = topology.is_dense(piece)
    ok, failing = topology.is_open(pre)
    verdict = poly_continuity(f)
    payload = {
        "function": str(f),
        "roots_mod_7": roots,
        "preimage": _set_payload(pre),
        "dense_piece": _set_payload(piece),
        "dense_piece_is_dense": piece_dense,
        "preimage_open": ok,
        "failing_class": failing,
        "verdict": _verdict_payload(verdict),
    }
    lines = [
        f"f(x) = {f}",
        f"  roots of f mod 7: {', '.join(map(str, roots))}",
        f"  preimage of σ_7: {pre}",
        f"  disjoint piece {piece} is {'dense' if piece_dense else 'not dense'}",
        f"  the preimage is {'open' if ok else 'not open'}"
        + ("" if ok else
           f" (class {failing} has no basic neighborhood inside it;"
           f" every candidate meets the dense piece)"),
        f"  continuity: {_verdict_text(verdict)}",
    ]
    return payload, lines


def _cmd_examples(args) -> tuple[str, dict, str]:
    blocks = []
    lines = []
    for i, expr in enumerate(("x^2+x", "x^2+4x+2"), start=1):
        payload, block_lines = _example_block(expr)
        blocks.append(payload)
        lines.append(f"example {i}:")
        lines.extend(block_lines)
        if i == 1:
            lines.append("")
    return STATUS_OK, {"examples": blocks}, "\n".join(lines)


def _cmd_verify(args) -> tuple[str, dict, str]:
    cfg = _VERIFY_LEVELS[args.level]
    suites = []

    sets = list(oracle.exhaustive_residue_sets(cfg["exhaustive_mod"]))
    sets += oracle.random_residue_sets(cfg["random_count"], cfg["random_mod"],
                                       VERIFY_SEED)
    cases, notes = oracle.openness_density_agreement(sets)
    suites.append({"name": "openness-density", "cases": cases,
                   "disagreements": notes})

    closure_notes = []
    for n in range(1, cfg["closure_n"] + 1):
        fast = topology.closure_singleton(n).enumerate(1, cfg["closure_window"])
        slow = oracle.brute_closure_singleton(n, cfg["closure_window"],
                                              cfg["closure_k"])
        if fast != slow:
            closure_notes.append(f"closure mismatch at n={n}")
    suites.append({"name": "closure", "cases": cfg["closure_n"],
                   "disagreements": closure_notes})

    preimage_notes = []
    preimage_cases = 0
    for expr in _VERIFY_POLYS:
        f = parse_polynomial(expr)
        for n in range(1, cfg["preimage_n"] + 1):
            preimage_cases += 1
            if not oracle.brute_preimage_check(f, n, cfg["preimage_window"]):
                preimage_notes.append(f"preimage mismatch for {f} at n={n}")
    suites.append({"name": "preimage", "cases": preimage_cases,
                   "disagreements": preimage_notes})

    all_notes = [note for s in suites for note in s["disagreements"]]
    payload = {"level": args.level, "suites": suites, "agreed": not all_notes}
    lines = [
        f"{s['name']} agreement: {s['cases']} cases, "
        f"{len(s['disagreements'])} disagreements" for s in suites
    ]
    for note in all_notes:
        lines.append(f"  !! {note}")
    lines.append("verify: OK" if not all_notes else "verify: DISAGREEMENT")
    status = STATUS_OK if not all_notes else STATUS_DISAGREEMENT
    return status, payload, "\n".join(lines)


_HANDLERS = {
    "sigma": _cmd_sigma,
    "preimage": _cmd_preimage,
    "continuity": _cmd_continuity,
    "open": _cmd_open,
    "dense": _cmd_dense,
    "closure": _cmd_closure,
    "golomb": _cmd_golomb,
    "schur": _cmd_schur,
    "dirichlet": _cmd_dirichlet,
    "examples": _cmd_examples,
    "verify": _cmd_verify,
}


def run(argv) -> CommandResult:
    """Dispatch argv and return the structured result (never raises for
    domain or usage errors; those become domain-error results)."""
    command = argv[0] if argv else ""
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        status, payload, text = _HANDLERS[args.command](args)
        return CommandResult(command, status, payload, text,
                             json_mode=getattr(args, "json", False))
    except UsageError as e:
        return CommandResult(command, STATUS_DOMAIN_ERROR, {"error": str(e)},
                             f"error: {e}")
    except ValueError as e:
        return CommandResult(command, STATUS_DOMAIN_ERROR, {"error": str(e)},
                             f"error: {e}")


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    print(result.rendered())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
