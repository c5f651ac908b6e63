"""Command-line interface.

Exit codes: 0 success, 1 an applicable claim failed, 2 parse or usage
error, 3 a resource cutoff was hit.
"""
from __future__ import annotations

import argparse
import os
import sys

from .complexes import hochster_betti_table
from .decomposability import C5_READINGS
from .errors import DomainError, InputError, ResourceError
from .generators import FAMILIES, GeneratorSpec, builtin_corpus, generate
from .graph import format_edge_list, read_graph
from .ideals import ideal_of_graph
from .linalg import check_field_char
from .verify import classify, dumps, invariant_bundle, search_d_question, verify_theorems

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _chars(values) -> tuple[int, ...]:
    chars = tuple(values) if values else (0,)
    for p in chars:
        check_field_char(p)
    return chars


def _emit(text: str, out=None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_invariants(args) -> int:
    g = read_graph(args.file)
    _emit(dumps(invariant_bundle(g)), args.out)
    return EXIT_OK


def cmd_betti(args) -> int:
    g = read_graph(args.file)
    chars = _chars(args.char)
    if args.json:
        payload = {str(p): hochster_betti_table(ideal_of_graph(g), p).to_json() for p in chars}
        _emit(dumps(payload), args.out)
        return EXIT_OK
    blocks = []
    for p in chars:
        table = hochster_betti_table(ideal_of_graph(g), p)
        header = f"# char {p}\n" if len(chars) > 1 else ""
        blocks.append(header + table.to_text())
    _emit("".join(blocks), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = read_graph(args.file)
    _emit(dumps(classify(g)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.file)
    report = verify_theorems(g, _chars(args.char), c5_reading=args.c5)
    _emit(dumps(report.to_json()), args.out)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_gen(args) -> int:
    spec = GeneratorSpec(args.family, args.n, args.seed, args.base)
    _emit(format_edge_list(generate(spec)), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    result = search_d_question(args.max_n, args.budget, args.seed, args.exhaustive_n, args.c5)
    _emit(dumps(result.to_json()), args.out)
    return EXIT_OK


def _corpus(source: str, seed: int):
    if source == "builtin":
        yield from builtin_corpus(seed)
        return
    if not os.path.isdir(source):
        raise InputError(f"corpus {source!r} is neither 'builtin' nor a directory")
    for name in sorted(os.listdir(source)):
        if name.endswith(".edges"):
            yield name, read_graph(os.path.join(source, name))


def cmd_suite(args) -> int:
    chars = _chars(args.char)
    rows = []
    for gid, g in _corpus(args.corpus, args.seed):
        report = verify_theorems(g, chars, seed=args.seed, c5_reading=args.c5)
        applicable = [v for v in report.verdicts if v.applicable]
        skipped = sum(v.passed is None for v in applicable)
        failed = [v.claim for v in report.failures]
        rows.append((gid, g.n, g.m, len(applicable), skipped, failed))
    width = max([len(r[0]) for r in rows] + [5])
    lines = [f"{'graph':<{width}}  {'n':>2}  {'m':>3}  {'applicable':>10}  {'skipped':>7}  failed"]
    for gid, n, m, app, skipped, failed in rows:
        lines.append(f"{gid:<{width}}  {n:>2}  {m:>3}  {app:>10}  {skipped:>7}  {','.join(failed) or '-'}")
    bad = sum(1 for r in rows if r[5])
    lines.append(f"# {len(rows)} graphs, {bad} with failures")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAILED if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgeideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph in edge-list format")
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    def with_c5(p):
        p.add_argument("--c5", choices=C5_READINGS, default="induced",
                       help="C5-free means no induced 5-cycle (default) or no 5-cycle subgraph")

    def with_char(p):
        p.add_argument("--char", type=int, action="append", metavar="P",
                       help="field characteristic, 0 or a prime (repeatable; default 0)")

    p = with_file("invariants", "combinatorial invariants with witnesses")
    p.set_defaults(func=cmd_invariants)

    p = with_file("betti", "graded Betti table of R/I(G)")
    with_char(p)
    p.add_argument("--json", action="store_true", help="JSON instead of 'i j beta' lines")
    p.set_defaults(func=cmd_betti)

    p = with_file("classify", "class flags and decomposition certificate")
    p.set_defaults(func=cmd_classify)

    p = with_file("verify", "verification report (exit 1 on a failed applicable claim)")
    with_char(p)
    with_c5(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", help="base family for 'whisker'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="counterexample searches")
    p.add_argument("question", choices=["dq"], help="dq: d_G = d'_G on C5-free vertex decomposable graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--budget", type=int, required=True, help="hypothesis-satisfying random candidates")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-n", type=int, default=6, help="labelled graphs up to this size first")
    with_c5(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("suite", help="batch verification")
    p.add_argument("--corpus", required=True, help="'builtin' or a directory of .edges files")
    p.add_argument("--seed", type=int, default=0)
    with_char(p)
    with_c5(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"edgeideal: resource cutoff: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, DomainError, OSError) as exc:
        print(f"edgeideal: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
