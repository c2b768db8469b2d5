"""Command-line front end.

    pierimonoid young --from 1 --to 2,2 --basis s
    pierimonoid schubert --u 1,4,2,6,3,5 --w 3,5,6,1,2,4 --r 3 --emit-chains
    pierimonoid affine --k 5 --u -6,8,3,-1,4,13 --w 8,-6,-2,9,13,-1 --basis s
    pierimonoid kschur --k 3 --partition 2,1
    pierimonoid verify --suite involutions --samples 1000 --seed 1

Output is JSON unless ``--pretty`` is given. ``--report DIR`` also writes CSV
tables and a figure (Hasse diagram or verification bar chart) into DIR.
Exit codes: 0 success, 1 verification failures, 2 malformed input,
3 violated precondition.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import affine, schubert, young
from .permgroup import IntegerPermutation, PermutationError
from .symcore import Expansion, SymError, convert, is_partition
from .verify import SUITES, run_suite

EXIT_FAILURES, EXIT_PARSE, EXIT_DOMAIN = 1, 2, 3

# options whose values may start with a minus sign
_VALUE_FLAGS = {"--u", "--w", "--from", "--to", "--partition", "--seed"}


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if not is_partition(parts):
        raise UsageError(f"{text!r} is not a partition (weakly decreasing positive parts)")
    return parts


def _permutation(text: str) -> IntegerPermutation:
    try:
        return IntegerPermutation.parse(text)
    except PermutationError as exc:
        raise UsageError(str(exc)) from None


def _window(k: int, text: str) -> affine.AffinePermutation:
    try:
        return affine.AffinePermutation.parse(k, text)
    except affine.WindowError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# report files


def _write_expansion_csv(path: Path, e: Expansion):
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["basis", "index", "coeff"])
        for idx, c in e.items():
            out.writerow([e.basis, " ".join(map(str, idx)), c])


def _write_chains_csv(path: Path, chains):
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["chain", "step", "label"])
        for i, chain in enumerate(chains):
            for j, lab in enumerate(chain):
                out.writerow([i, j, " ".join(map(str, lab)) if isinstance(lab, tuple) else lab])


def _report(args, e: Expansion | None, hasse=None, chains=None, reports=None, title=None):
    if not args.report:
        return
    from . import plots

    folder = Path(args.report)
    folder.mkdir(parents=True, exist_ok=True)
    if e is not None:
        _write_expansion_csv(folder / "expansion.csv", e)
    if chains is not None:
        _write_chains_csv(folder / "chains.csv", chains)
    if hasse is not None:
        ranks, edges, names = hasse
        plots.hasse_diagram(ranks, edges, folder / "hasse.png", names, title)
    if reports is not None:
        with open(folder / "report.csv", "w", newline="") as fh:
            out = csv.writer(fh)
            out.writerow(["relation", "samples", "failures"])
            for rep in reports:
                out.writerow([rep["relation"], rep["samples"], rep["failure_count"]])
        plots.verify_bars(reports, folder / "verify.png", title)


def _emit(args, payload: dict, pretty: str):
    if args.pretty:
        print(pretty)
    else:
        print(json.dumps(payload, sort_keys=False))


# ---------------------------------------------------------------------------
# subcommands


def run_young(args) -> int:
    lam, nu = _partition(args.lam), _partition(args.nu)
    try:
        k = young.young_K(lam, nu)
    except young.ContainmentError as exc:
        raise DomainError(str(exc)) from None
    e = convert(k, args.basis)
    chains = list(young.saturated_chains(lam, nu))
    payload = {"from": list(lam), "to": list(nu), "expansion": e.to_dict()}
    if args.emit_chains:
        payload["chains"] = [list(ch) for ch in chains]
    pretty = e.pretty() + ("".join("\n" + " ".join(map(str, ch)) for ch in chains) if args.emit_chains else "")
    _emit(args, payload, pretty)
    if args.report:
        ranks, edges = {}, set()
        for ch in chains:
            cur = lam
            ranks[cur] = 0
            for step, c in enumerate(ch, start=1):
                nxt = young.apply_u(c, cur)
                ranks[nxt] = step
                edges.add((cur, nxt, str(c)))
                cur = nxt
        names = {p: ",".join(map(str, p)) or "()" for p in ranks}
        _report(args, e, (ranks, sorted(edges), names), chains,
                title=f"[{names[lam]}, {names[nu]}]")
    return 0


def run_schubert(args) -> int:
    u, w = _permutation(args.u), _permutation(args.w)
    if len(args.u.split(",")) != len(args.w.split(",")):
        raise UsageError("--u and --w must have the same length")
    if args.r < 1:
        raise UsageError("--r must be positive")
    e = convert(schubert.schubert_K(u, w, args.r), args.basis)
    chains = schubert.enumerate_chains(u, w, args.r)
    n = len(args.u.split(","))
    payload = {"u": list(u.one_line(n)), "w": list(w.one_line(n)), "r": args.r, "expansion": e.to_dict()}
    if args.emit_chains:
        payload["chains"] = [[list(lab) for lab in ch] for ch in chains]
    pretty = e.pretty()
    if args.emit_chains:
        pretty += "".join("\n" + " ".join(f"u{a},{b}" for a, b in ch) for ch in chains)
    _emit(args, payload, pretty)
    if args.report:
        ranks, edges = {}, set()
        for ch in chains:
            x = u
            ranks[x] = 0
            for step, (a, b) in enumerate(ch, start=1):
                y = schubert.monk_cover(x, a, b, args.r)
                ranks[y] = step
                edges.add((x, y, f"{a}{b}" if max(a, b) < 10 else f"{a},{b}"))
                x = y
        names = {p: "".join(map(str, p.one_line(n))) if n < 10 else p.to_string() for p in ranks}
        _report(args, e, (ranks, sorted(edges, key=str), names), chains,
                title=f"[{names[u]}, {names[w]}] r={args.r}")
    return 0


def _weak_interval(u, w):
    rank = affine.affine_length(w) - affine.affine_length(u)
    levels = [{u}]
    edges = []
    for _ in range(max(rank, 0)):
        nxt = set()
        for x in levels[-1]:
            for i in range(u.k + 1):
                y = affine.weak_cover(x, i)
                if y is not affine.ZERO:
                    nxt.add(y)
                    edges.append((x, y, f"s{i}"))
        levels.append(nxt)
    # keep what lies below w
    keep = {w}
    for level in reversed(levels[:-1]):
        keep |= {x for x in level if any(lo == x and hi in keep for lo, hi, _ in edges)}
    ranks = {x: r for r, level in enumerate(levels) for x in level if x in keep}
    return ranks, [(x, y, s) for x, y, s in edges if x in keep and y in keep]


def run_affine(args) -> int:
    if args.k is None or args.k < 1:
        raise UsageError("--k must be a positive integer")
    u = _window(args.k, args.u)
    if args.core:
        if not affine.is_0_grassmannian(u):
            raise DomainError(f"{u.to_string()} is not 0-grassmannian")
        core = affine.core_from_grassmannian(u)
        _emit(args, {"k": args.k, "window": list(u.window), "core": list(core)}, ",".join(map(str, core)))
        return 0
    if args.w is None:
        raise UsageError("--w is required unless --core is given")
    w = _window(args.k, args.w)
    for x in (u, w):
        if not affine.is_0_grassmannian(x):
            raise DomainError(f"{x.to_string()} is not 0-grassmannian")
    if args.order == "weak":
        k = affine.weak_K(u, w)
    else:
        k = affine.affine_K(u, w)
    e = convert(k, args.basis)
    payload = {"k": args.k, "u": list(u.window), "w": list(w.window), "order": args.order, "expansion": e.to_dict()}
    words = affine.enumerate_operator_words(u, w) if args.order == "zero-bruhat" else None
    if args.emit_chains and words is not None:
        payload["words"] = [[list(lab) for lab in word] for word in words]
    pretty = e.pretty()
    if args.emit_chains and words is not None:
        pretty += "".join("\n" + " ".join(f"t{a},{b}" for a, b in word) for word in words)
    _emit(args, payload, pretty)
    if args.report:
        if args.order == "weak":
            ranks, edges = _weak_interval(u, w)
        else:
            base = affine.affine_length(u)
            ranks = {x: affine.affine_length(x) - base for x in affine.interval_elements(u, w)}
            labels: dict = {}
            for x in ranks:
                for (a, b), y in affine.zero_bruhat_labels(x):
                    if y in ranks:
                        labels.setdefault((x, y), []).append(str(b))
            edges = [(x, y, "t" + "/".join(bs)) for (x, y), bs in labels.items()]
        names = {x: "|" + ",".join(map(str, x.window)) + "|" for x in ranks}
        _report(args, e, (ranks, edges, names), words, title=f"k={args.k} {args.order}")
    return 0


def run_kschur(args) -> int:
    lam = _partition(args.partition)
    if args.k is None or args.k < 1:
        raise UsageError("--k must be a positive integer")
    if lam and lam[0] > args.k:
        raise DomainError(f"{args.partition} is not {args.k}-bounded")
    e = affine.kschur_in_h(args.k, lam)
    _emit(args, {"k": args.k, "partition": list(lam), "expansion": e.to_dict()}, e.pretty())
    if args.report:
        _report(args, e)
    return 0


def run_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}")
    reports = run_suite(args.suite, args.samples, args.seed)
    ok = all(rep["failure_count"] == 0 for rep in reports)
    payload = {"suite": args.suite, "samples": args.samples, "seed": args.seed, "ok": ok, "reports": reports}
    pretty = "\n".join(
        f"{rep['relation']}: {rep['samples']} instances, {rep['failure_count']} failures" for rep in reports
    )
    _emit(args, payload, pretty)
    _report(args, None, reports=reports, title=f"{args.suite} seed={args.seed}")
    return 0 if ok else EXIT_FAILURES


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--basis", choices=["F", "M", "m", "s"], default="F")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable sums")
    common.set_defaults(pretty=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--report", metavar="DIR", help="write CSV tables and a figure into DIR")
    common.add_argument("--emit-chains", action="store_true")

    parser = argparse.ArgumentParser(prog="pierimonoid", description="Pieri operators on graded posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("young", parents=[common], help="interval of the Young lattice")
    p.add_argument("--from", dest="lam", required=True)
    p.add_argument("--to", dest="nu", required=True)
    p.set_defaults(func=run_young)

    p = sub.add_parser("schubert", parents=[common], help="interval of the r-Bruhat order")
    p.add_argument("--u", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=run_schubert)

    p = sub.add_parser("affine", parents=[common], help="interval of affine grassmannians")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--w")
    p.add_argument("--order", choices=["zero-bruhat", "weak"], default="zero-bruhat")
    p.add_argument("--core", action="store_true", help="print the core of --u and stop")
    p.set_defaults(func=run_affine)

    p = sub.add_parser("kschur", parents=[common], help="h-expansion of a k-Schur function")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=run_kschur)

    p = sub.add_parser("verify", parents=[common], help="run a relation or identity suite")
    p.add_argument("--suite", required=True)
    p.set_defaults(func=run_verify)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, SymError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
