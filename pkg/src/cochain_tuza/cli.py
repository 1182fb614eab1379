"""Command-line front end: generate, certify, search, audit, fuzz.

Exit codes partition the failure modes: 0 success, 2 usage/parse error,
3 precondition violation, 4 verification or mathematical failure, 5 oracle
budget exhaustion, 6 I/O error.  All randomness flows from the --seed flag
through one generator, so identical invocations produce identical output;
the oracle node budget can be overridden with COCHAIN_TUZA_ORACLE_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import fileio
from .casesearch import (
    ALL_STRATEGIES,
    DEFAULT_STRATEGY,
    EXPECTED_EXCEPTIONAL,
    BoundStrategy,
    audit_inequalities,
    evaluate_case_functions,
    search_exceptional,
)
from .certify import CertificationFailure, PreconditionError, certify
from .generators import complete_join, disjoint_cliques, fuzz_instances, random_cochain
from .graphs import CoChainGraph, build_cochain, profile, verify_hitting, verify_packing
from .oracles import exact_nu, exact_tau
from .recognition import RecognitionFailure, recognize_cochain

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4
EXIT_BUDGET = 5
EXIT_IO = 6


def _write_text(out: str, text: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args: argparse.Namespace) -> int:
    import random

    l_size, m_size = args.l_size, args.m_size
    if l_size < 0 or m_size < 0:
        print("gen: side sizes must be nonnegative", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        if args.thresholds is not None:
            thresholds = [int(x) for x in args.thresholds.split(",")] if args.thresholds else []
            g = build_cochain(l_size, m_size, thresholds)
        elif args.complete:
            g = complete_join(l_size, m_size)
        elif args.disjoint:
            g = disjoint_cliques(l_size, m_size)
        else:  # --random
            g = random_cochain(random.Random(args.seed), l_size, m_size)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        if args.out == "-":
            doc = {
                "l_size": g.l_size,
                "m_size": g.m_size,
                "thresholds": list(g.thresholds),
            }
            sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        else:
            fileio.write_cochain(args.out, g)
    except OSError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    try:
        g = fileio.read_graph(args.graph)
    except OSError as exc:
        print(f"certify: {exc}", file=sys.stderr)
        return EXIT_IO
    except fileio.GraphFormatError as exc:
        print(f"certify: {exc}", file=sys.stderr)
        return EXIT_PARSE

    order = None
    if not isinstance(g, CoChainGraph):
        recognized = recognize_cochain(g)
        if isinstance(recognized, RecognitionFailure):
            print(
                f"certify: input is not a co-chain graph ({recognized.reason}; "
                f"witness {recognized.witness})",
                file=sys.stderr,
            )
            return EXIT_PRECONDITION
        g, order = recognized.graph, recognized.vertex_order

    try:
        cert = certify(g, args.mode)
    except PreconditionError as exc:
        print(f"certify: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CertificationFailure as exc:
        code = EXIT_BUDGET if "budget" in str(exc) else EXIT_VERIFY
        print(f"certify: {exc}", file=sys.stderr)
        return code

    if order is not None:
        # express the certificate in the input file's vertex labels
        from .certify import make_certificate
        from .graphs import GeneralGraph, HittingSet, TrianglePacking

        host = fileio.read_graph(args.graph)
        assert isinstance(host, GeneralGraph)
        hitting = HittingSet.of((order[u], order[v]) for u, v in cert.hitting.edges)
        packing = TrianglePacking.of(
            (order[a], order[b], order[c]) for a, b, c in cert.packing.triangles
        )
        cert = make_certificate(host, hitting, packing, cert.method)

    try:
        if args.out:
            fileio.write_certificate(args.out, cert)
        else:
            sys.stdout.write(json.dumps(fileio.certificate_document(cert), indent=2) + "\n")
    except OSError as exc:
        print(f"certify: {exc}", file=sys.stderr)
        return EXIT_IO
    print(
        f"certify: method={cert.method} h_size={cert.h_size} "
        f"p_size={cert.p_size} ratio_ok={cert.ratio_ok}",
        file=sys.stderr,
    )
    return EXIT_OK if cert.ratio_ok else EXIT_VERIFY


def _strategy_from_name(name: str) -> BoundStrategy:
    for s in ALL_STRATEGIES:
        if s.describe() == name:
            return s
    for s in ALL_STRATEGIES:
        if s.clique_variant == name:
            return s
    raise ValueError(f"unknown bound strategy {name!r}")


def cmd_search(args: argparse.Namespace) -> int:
    strategies = ALL_STRATEGIES if args.all_variants else (
        _strategy_from_name(args.variant),
    )
    status = EXIT_OK
    for strategy in strategies:
        found = sorted(p.as_tuple() for p in search_exceptional(args.limit, strategy))
        print(f"strategy {strategy.describe()}")
        for tup in found:
            from .graphs import CaseProfile

            rep = evaluate_case_functions(CaseProfile(*tup), strategy)
            fs = ",".join(str(v) for v in rep.f_values)
            passing = ",".join(str(i + 1) for i in sorted(rep.passing))
            print(
                f"tuple=({tup[0]},{tup[1]},{tup[2]},{tup[3]}) f=({fs}) "
                f"passing=({passing}) exceptional={rep.exceptional}"
            )
        print(f"exceptional-count={len(found)}")
        if args.limit >= 10 and strategy == DEFAULT_STRATEGY:
            match = set(found) == set(EXPECTED_EXCEPTIONAL)
            print(f"matches-published-list={match}")
            if not match:
                status = EXIT_VERIFY
    return status


def cmd_audit(args: argparse.Namespace) -> int:
    report = audit_inequalities(args.max_half)
    for chain in report.chains:
        print(
            f"chain={chain.chain!r} checked={chain.checked} "
            f"violations={len(chain.violations)}"
        )
        for v in chain.violations:
            print(
                f"violation chain={v.chain!r} step={v.step!r} "
                f"params={v.params} lhs={v.lhs} rhs={v.rhs}"
            )
    print(
        f"summary chains={len(report.chains)} "
        f"violations={len(report.violations)}"
    )
    return EXIT_OK


def _fuzz_one(task: tuple[int, int, int, tuple[int, ...], int]) -> tuple[int, str]:
    """Certify one instance; returns (index, report line).  Raises nothing:
    failures are encoded in the line so the pool survives them."""
    idx, l_size, m_size, thresholds, oracle_max = task
    g = build_cochain(l_size, m_size, thresholds)
    prof = profile(g).as_tuple()
    try:
        cert = certify(g, "guided")
    except (PreconditionError, CertificationFailure) as exc:
        return idx, f"instance={idx} profile={prof} FAIL reason={exc}"
    G = g.to_general()
    if not (verify_hitting(G, cert.hitting) and verify_packing(G, cert.packing)):
        return idx, f"instance={idx} profile={prof} FAIL reason=verification"
    if not cert.ratio_ok:
        return idx, (
            f"instance={idx} profile={prof} FAIL reason=ratio "
            f"h={cert.h_size} p={cert.p_size}"
        )
    oracle_note = "skipped"
    if G.n <= oracle_max:
        from .certify import oracle_budget

        budget = oracle_budget()
        r_tau, r_nu = exact_tau(G, budget), exact_nu(G, budget)
        if r_tau.proven and r_nu.proven:
            sound = (
                r_tau.value <= cert.h_size
                and cert.p_size <= r_nu.value
                and r_tau.value <= 2 * r_nu.value
            )
            if not sound:
                return idx, (
                    f"instance={idx} profile={prof} FAIL reason=oracle "
                    f"tau={r_tau.value} nu={r_nu.value} h={cert.h_size} p={cert.p_size}"
                )
            oracle_note = f"tau={r_tau.value},nu={r_nu.value}"
        else:
            oracle_note = "budget"
    return idx, (
        f"instance={idx} profile={prof} method={cert.method} "
        f"h={cert.h_size} p={cert.p_size} oracle={oracle_note}"
    )


def cmd_fuzz(args: argparse.Namespace) -> int:
    if args.count < 1 or args.max_half < 1:
        print("fuzz: count and max half-size must be positive", file=sys.stderr)
        return EXIT_PRECONDITION
    tasks = [
        (i, g.l_size, g.m_size, g.thresholds, args.oracle_max)
        for i, g in enumerate(fuzz_instances(args.seed, args.count, args.max_half))
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_fuzz_one, tasks, chunksize=64))
    else:
        results = [_fuzz_one(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    failures = 0
    checked = 0
    for _idx, line in results:
        failed = " FAIL " in f" {line} "
        if "oracle=tau" in line:
            checked += 1
        if failed:
            failures += 1
        if args.verbose or failed:
            print(line)
    print(
        f"summary count={args.count} max_half={args.max_half} seed={args.seed} "
        f"failures={failures} oracle_checked={checked}"
    )
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cochain-tuza",
        description="Constructive tau <= 2*nu certificates on co-chain graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="write a co-chain graph file")
    p_gen.add_argument("--l-size", type=int, required=True)
    p_gen.add_argument("--m-size", type=int, required=True)
    kind = p_gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--thresholds", help="comma-separated nonincreasing values")
    kind.add_argument("--random", action="store_true")
    kind.add_argument("--complete", action="store_true")
    kind.add_argument("--disjoint", action="store_true")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default="-")
    p_gen.set_defaults(func=cmd_gen)

    p_cert = sub.add_parser("certify", help="certify a graph file")
    p_cert.add_argument("graph")
    p_cert.add_argument(
        "--mode", choices=("guided", "portfolio", "exact"), default="guided"
    )
    p_cert.add_argument("--out", default="")
    p_cert.set_defaults(func=cmd_certify)

    p_search = sub.add_parser("search", help="exceptional-tuple search")
    p_search.add_argument("--limit", type=int, default=10)
    p_search.add_argument("--variant", default=DEFAULT_STRATEGY.describe())
    p_search.add_argument("--all-variants", action="store_true")
    p_search.set_defaults(func=cmd_search)

    p_audit = sub.add_parser("audit", help="numeric audit of the inequality chains")
    p_audit.add_argument("--max-half", type=int, default=25)
    p_audit.set_defaults(func=cmd_audit)

    p_fuzz = sub.add_parser("fuzz", help="certify random instances, cross-check oracles")
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument("--max", dest="max_half", type=int, default=4)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--workers", type=int, default=1)
    p_fuzz.add_argument("--oracle-max", type=int, default=10)
    p_fuzz.add_argument("--verbose", action="store_true")
    p_fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
