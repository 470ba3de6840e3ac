"""Command-line surface: cosets, factor, classify, table, enumerate, verify.

Exit codes: 0 success, 1 usage error, 2 budget or cap exceeded,
3 verification mismatch.  All output is deterministic: rerunning a
command with the same flags produces byte-identical bytes.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .cosets import (count_selfdual, cyclotomic_cosets, find_splitting,
                     split_length)
from .cyclic_codes import (DEFAULT_DISTANCE_BUDGET, SelfDualEnumeration,
                           best_min_distance, minimum_distance)
from .finite_field import Field, build_field
from .gf2x import is_irreducible
from .oracle import (DEFAULT_CAP, OracleCapExceeded, brute_force_self_dual)
from .polynomial import EUCLIDEAN, HERMITIAN, factor_cyclotomic

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    """Bad flags or flag combinations; rendered to stderr, exit 1."""


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is exit 1."""

    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="sdcyclic",
        description=(
            "Construct, count, enumerate, and verify Euclidean and "
            "Hermitian self-dual cyclic codes of even length over "
            "characteristic-2 fields."
        ),
        epilog="exit codes: 0 ok, 1 usage, 2 budget exceeded, 3 mismatch",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field_flags(p, with_kind=True):
        p.add_argument("--q", type=int, default=None,
                       help="field size 2^r (e.g. 2, 4, 8)")
        p.add_argument("--ell", type=int, default=None,
                       help="half the field degree: field GF(2^(2*ell))")
        p.add_argument("--defpoly", default=None, metavar="0xHEX",
                       help="defining polynomial bits, e.g. 0x7 for x^2+x+1")
        if with_kind:
            p.add_argument("--kind", choices=[EUCLIDEAN, HERMITIAN],
                           default=HERMITIAN,
                           help="duality form (default: hermitian)")

    p = sub.add_parser("cosets", help="cyclotomic cosets mod nbar")
    p.add_argument("--nbar", type=int, required=True,
                   help="odd modulus coprime to q")
    p.add_argument("--q", type=int, default=2, help="coset base (default 2)")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("factor",
                       help="factor x^nbar - 1 and pair the factors")
    p.add_argument("--nbar", type=int, required=True, help="odd exponent")
    add_field_flags(p)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("classify",
                       help="existence, count, and best distance for one n")
    p.add_argument("--n", type=int, required=True, help="even code length")
    add_field_flags(p)
    p.add_argument("--mindist-budget", type=int, default=None,
                   metavar="CODEWORDS",
                   help=f"codeword cap for the exhaustive distance search "
                        f"(default {DEFAULT_DISTANCE_BUDGET}); exit 2 if an "
                        f"explicit budget proves insufficient")
    p.add_argument("--format", choices=["json", "csv", "text"],
                   default="json")

    p = sub.add_parser("table",
                       help="one row per even length where codes exist")
    p.add_argument("--n-max", type=int, default=286,
                   help="largest length to include (default 286)")
    add_field_flags(p)
    p.add_argument("--with-distances-up-to", type=int, default=0,
                   metavar="N",
                   help="fill the hmind column for n up to N (default 0)")
    p.add_argument("--mindist-budget", type=int,
                   default=DEFAULT_DISTANCE_BUDGET, metavar="CODEWORDS",
                   help="per-row codeword cap; cells over budget stay blank")
    p.add_argument("--include-empty", action="store_true",
                   help="also list lengths whose only self-dual code is "
                        "the trivial one (t = 0 rows)")
    p.add_argument("--format", choices=["json", "csv", "text"],
                   default="csv")

    p = sub.add_parser("enumerate",
                       help="stream every self-dual code of one length")
    p.add_argument("--n", type=int, required=True, help="even code length")
    add_field_flags(p)
    p.add_argument("--limit", type=int, default=None,
                   help="stop after this many codes")
    p.add_argument("--mindist-budget", type=int, default=None,
                   metavar="CODEWORDS",
                   help="compute each code's distance when q^(n/2) fits "
                        "this budget (default: omit distances)")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("verify",
                       help="brute-force oracle vs structured enumeration")
    p.add_argument("--n-max", type=int, default=14,
                   help="check every even length up to this (default 14)")
    add_field_flags(p)
    p.add_argument("--verify-cap", type=int, default=DEFAULT_CAP,
                   metavar="DIVISORS",
                   help=f"oracle stream cap (default {DEFAULT_CAP})")
    p.add_argument("--format", choices=["json", "text"], default="text")

    return parser


def _resolve_field(args) -> Field:
    """Build the working field from --q/--ell/--defpoly, or kind defaults."""
    kind = getattr(args, "kind", None)
    q, ell, defpoly = args.q, args.ell, args.defpoly

    degree = None
    if defpoly is not None:
        try:
            bits = int(defpoly, 16)
        except ValueError:
            raise UsageError(f"--defpoly wants hex bits, got {defpoly!r}")
        if bits < 2 or not is_irreducible(bits):
            raise UsageError(f"--defpoly {defpoly} is not irreducible "
                             "over GF(2)")
        degree = bits.bit_length() - 1
    if q is not None:
        if q < 2 or q & (q - 1):
            raise UsageError(f"--q must be a power of 2, got {q}")
        qdeg = q.bit_length() - 1
        if degree is not None and degree != qdeg:
            raise UsageError(f"--q {q} conflicts with --defpoly of degree "
                             f"{degree}")
        degree = qdeg
    if ell is not None:
        if ell < 1:
            raise UsageError(f"--ell must be positive, got {ell}")
        if degree is not None and degree != 2 * ell:
            raise UsageError(f"--ell {ell} wants degree {2 * ell}, but other "
                             f"flags fixed degree {degree}")
        degree = 2 * ell
    if degree is None:
        degree = 2 if kind == HERMITIAN else 1
    if kind == HERMITIAN and degree % 2:
        raise UsageError(
            f"hermitian duality needs a field of square order GF(2^(2l)); "
            f"GF(2^{degree}) has no conjugation"
        )
    if defpoly is not None:
        return build_field(degree, int(defpoly, 16))
    return build_field(degree)


def _splitting_for(nbar: int, field: Field, kind: str):
    b = -1 if kind == EUCLIDEAN else -(1 << (field.degree // 2))
    return find_splitting(nbar, field.order, b)


def _print(text: str):
    sys.stdout.write(text + "\n")


# ---------------------------------------------------------------- commands


def _cmd_cosets(args) -> int:
    part = cyclotomic_cosets(args.nbar, args.q)
    if args.format == "json":
        _print(json.dumps(part.to_json()))
    else:
        _print(f"cyclotomic cosets mod {part.nbar} under multiplication "
               f"by {part.q}:")
        for c in part.cosets:
            _print(f"  C({c.rep}) = {{{', '.join(map(str, c.members))}}}")
    return EXIT_OK


def _cmd_factor(args) -> int:
    field = _resolve_field(args)
    pattern = factor_cyclotomic(args.nbar, field, args.kind)
    if args.format == "json":
        _print(json.dumps(pattern.to_json()))
        return EXIT_OK
    _print(f"x^{pattern.nbar} - 1 over {field.descriptor()}, "
           f"{pattern.pairing} pairing: s={pattern.s}, t={pattern.t}")
    for c, f in pattern.self_paired:
        _print(f"  fixed   C({c.rep}): {f}")
    for c, f, pc, pf in pattern.swapped_pairs:
        _print(f"  swapped C({c.rep}): {f}  <->  C({pc.rep}): {pf}")
    return EXIT_OK


@dataclass(frozen=True)
class ClassificationReport:
    """Everything known about one length: structure, count, distance."""

    n: int
    nbar: int
    nu: int
    field: str
    kind: str
    t: int
    exists: bool
    count: int
    best_min_distance: int | None
    mindist_budget: int
    witness_generator: list | None

    def to_json(self) -> dict:
        return {
            "n": self.n, "nbar": self.nbar, "nu": self.nu,
            "field": self.field, "kind": self.kind, "t": self.t,
            "exists": self.exists, "count": self.count,
            "best_min_distance": self.best_min_distance,
            "mindist_budget": self.mindist_budget,
            "witness_generator": self.witness_generator,
        }

    def to_text(self) -> str:
        d = (str(self.best_min_distance) if self.best_min_distance is not None
             else f"unknown(budget={self.mindist_budget})")
        lines = [
            f"n = {self.n} = 2^{self.nu} * {self.nbar} over {self.field}, "
            f"{self.kind}",
            f"  nontrivial coset pairs t = {self.t}; "
            f"self-dual codes exist: {'yes' if self.exists else 'no'}",
            f"  number of self-dual cyclic codes: {self.count}",
            f"  best minimum distance: {d}",
        ]
        if self.witness_generator is not None:
            lines.append(f"  achieved by g = {self.witness_generator}")
        return "\n".join(lines)


def _classify(n: int, field: Field, kind: str, budget: int
              ) -> ClassificationReport:
    nu, nbar = split_length(n)
    t = _splitting_for(nbar, field, kind).t
    count = count_selfdual(nu, t)
    best = None
    witness = None
    if field.order ** (n // 2) <= budget:
        best, code = best_min_distance(n, field, kind, budget=budget)
        witness = code.generator.to_list()
    return ClassificationReport(
        n=n, nbar=nbar, nu=nu, field=field.descriptor(), kind=kind,
        t=t, exists=t >= 1, count=count, best_min_distance=best,
        mindist_budget=budget, witness_generator=witness,
    )


def _csv_row(report_or_cells) -> str:
    n, nbar, nu, t, count, hmind = report_or_cells
    cell = "" if hmind is None else str(hmind)
    return f"{n},{nbar},{nu},{t},{count},{cell}"


def _cmd_classify(args) -> int:
    field = _resolve_field(args)
    explicit = args.mindist_budget is not None
    budget = args.mindist_budget if explicit else DEFAULT_DISTANCE_BUDGET
    if explicit and budget < 1:
        raise UsageError("--mindist-budget must be positive")
    report = _classify(args.n, field, args.kind, budget)
    if args.format == "json":
        _print(json.dumps(report.to_json()))
    elif args.format == "csv":
        _print("n,nbar,nu,t,count,hmind")
        _print(_csv_row((report.n, report.nbar, report.nu, report.t,
                         report.count, report.best_min_distance)))
    else:
        _print(report.to_text())
    if explicit and report.best_min_distance is None:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_table(args) -> int:
    field = _resolve_field(args)
    kind = args.kind
    rows = []
    for n in range(2, args.n_max + 1, 2):
        nu, nbar = split_length(n)
        t = _splitting_for(nbar, field, kind).t
        if t == 0 and not args.include_empty:
            continue
        count = count_selfdual(nu, t)
        hmind = None
        if (n <= args.with_distances_up_to
                and field.order ** (n // 2) <= args.mindist_budget):
            hmind, _ = best_min_distance(n, field, kind,
                                         budget=args.mindist_budget)
        rows.append((n, nbar, nu, t, count, hmind))
    if args.format == "json":
        _print(json.dumps([
            {"n": n, "nbar": nbar, "nu": nu, "t": t, "count": count,
             "hmind": hmind}
            for n, nbar, nu, t, count, hmind in rows
        ]))
    elif args.format == "csv":
        _print("n,nbar,nu,t,count,hmind")
        for row in rows:
            _print(_csv_row(row))
    else:
        _print(f"self-dual cyclic codes over {field.descriptor()}, "
               f"{kind} duality")
        _print(f"{'n':>5} {'nbar':>5} {'nu':>3} {'t':>3} "
               f"{'count':>14} {'hmind':>6}")
        for n, nbar, nu, t, count, hmind in rows:
            cell = "-" if hmind is None else str(hmind)
            _print(f"{n:>5} {nbar:>5} {nu:>3} {t:>3} {count:>14} {cell:>6}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    field = _resolve_field(args)
    explicit = args.mindist_budget is not None
    if explicit and args.mindist_budget < 1:
        raise UsageError("--mindist-budget must be positive")
    try:
        enum = SelfDualEnumeration(args.n, field, args.kind)
    except ValueError as exc:
        raise UsageError(str(exc))
    with_distance = (explicit
                     and field.order ** (args.n // 2) <= args.mindist_budget)
    skipped_distance = explicit and not with_distance
    for code in enum.codes(args.limit):
        d = minimum_distance(code, args.mindist_budget) if with_distance \
            else None
        if args.format == "json":
            _print(json.dumps(code.to_record(args.kind, d)))
        else:
            cell = "?" if d is None else str(d)
            _print(f"[n={code.n}, k={code.k}, d={cell}] "
                   f"g = {code.generator}")
    return EXIT_BUDGET if skipped_distance else EXIT_OK


def _cmd_verify(args) -> int:
    field = _resolve_field(args)
    kind = args.kind
    results = []
    status = EXIT_OK
    for n in range(2, args.n_max + 1, 2):
        enum_set = {c.generator
                    for c in SelfDualEnumeration(n, field, kind)}
        try:
            brute = brute_force_self_dual(n, field, kind,
                                          cap=args.verify_cap)
        except OracleCapExceeded as exc:
            if args.format == "text":
                _print(f"n={n}: {exc}")
            results.append({"n": n, "status": "cap-exceeded",
                            "detail": str(exc)})
            status = EXIT_BUDGET
            break
        agree = brute == enum_set
        if args.format == "text":
            verdict = "ok" if agree else "MISMATCH"
            _print(f"n={n}: enumerated={len(enum_set)} "
                   f"brute-force={len(brute)} {verdict}")
        results.append({"n": n, "enumerated": len(enum_set),
                        "brute_force": len(brute),
                        "status": "ok" if agree else "mismatch"})
        if not agree:
            only_enum = sorted(g.to_list() for g in enum_set - brute)
            only_brute = sorted(g.to_list() for g in brute - enum_set)
            if args.format == "text":
                _print(f"  only in enumeration: {only_enum}")
                _print(f"  only in brute force: {only_brute}")
            results[-1]["only_in_enumeration"] = only_enum
            results[-1]["only_in_brute_force"] = only_brute
            status = EXIT_MISMATCH
            break
    if args.format == "json":
        _print(json.dumps({
            "field": field.descriptor(), "kind": kind,
            "n_max": args.n_max, "results": results,
            "verdict": {EXIT_OK: "pass", EXIT_BUDGET: "cap-exceeded",
                        EXIT_MISMATCH: "fail"}[status],
        }))
    elif status == EXIT_OK:
        _print(f"all even lengths up to {args.n_max} agree")
    return status


_COMMANDS = {
    "cosets": _cmd_cosets,
    "factor": _cmd_factor,
    "classify": _cmd_classify,
    "table": _cmd_table,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"sdcyclic: error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"sdcyclic: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        # argparse --help and friends land here; keep 0, map 2 -> 1
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return EXIT_USAGE if code == 2 else code
    except BrokenPipeError:
        return EXIT_OK


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
