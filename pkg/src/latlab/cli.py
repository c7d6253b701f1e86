"""Command-line front door: build graph families, run labeling constructions,
verify certificates, run the exact solvers, and print regression tables.

Machine-readable output (key=value lines or JSON) goes to stdout; human
prose goes to stderr. Exit codes are part of the interface: 0 for a proven
result, 1 for a verification failure, 2 for a budget-exceeded/unknown
outcome, and 64 for usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import sp2_two_color_bound, spider_h, set_A_membership
from .certio import (
    certificate_payload,
    check_certificate,
    certificate_labeling,
    export_dot,
    make_certificate,
    read_certificate,
    read_graph_text,
    write_certificate,
    write_graph_text,
)
from .constructions import CONSTRUCTIONS
from .graphs import SpiderSpec, build_cycle, build_path, build_spider, build_tadpole, build_two_cycles
from .labeling import verify, weight_profile
from .solver import (
    SearchBudget,
    SearchStatus,
    exact_chi_lat,
    find_labeling_with_colors,
    spider_two_labeling,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64

ENV_MAX_TIME = "LATLAB_MAX_TIME"
ENV_MAX_NODES = "LATLAB_MAX_NODES"


class CliError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; route through CliError so the
    # documented usage exit code (64) applies everywhere.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(message)


def _parse_params(raw: list[str] | None, expected: tuple[str, ...], what: str) -> dict[str, int]:
    tokens: list[str] = []
    for chunk in raw or []:
        tokens.extend(t for t in chunk.replace(",", " ").split() if t)
    params: dict[str, int] = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep or not key:
            raise CliError(f"bad parameter {token!r}, expected key=value")
        if key not in expected:
            raise CliError(f"{what} takes parameters {', '.join(expected)}, not {key!r}")
        if key in params:
            raise CliError(f"duplicate parameter {key!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise CliError(f"parameter {key!r} must be an integer, got {value!r}") from None
    missing = [key for key in expected if key not in params]
    if missing:
        raise CliError(f"{what} needs parameters {', '.join(missing)}")
    return params


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _env_number(name: str, parse, what: str):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return parse(raw)
    except ValueError:
        raise CliError(f"environment variable {name} must be {what}, got {raw!r}") from None


def _budget_from(args) -> SearchBudget:
    max_time = args.max_time
    if max_time is None:
        max_time = _env_number(ENV_MAX_TIME, float, "a number of seconds")
    if max_time is None:
        max_time = 60.0
    max_nodes = args.max_nodes
    if max_nodes is None:
        max_nodes = _env_number(ENV_MAX_NODES, int, "an integer")
    if max_nodes is None:
        max_nodes = 10**9
    if max_time <= 0 or max_nodes <= 0:
        raise CliError("budget limits must be positive")
    return SearchBudget(max_nodes=max_nodes, max_time=max_time)


def _bool_word(flag: bool) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args) -> int:
    family = args.family
    if family == "path":
        params = _parse_params(args.params, ("n",), "family path")
        graph = build_path(params["n"])
    elif family == "cycle":
        params = _parse_params(args.params, ("n",), "family cycle")
        graph = build_cycle(params["n"])
    elif family == "spider":
        params = _parse_params(args.params, ("m", "n"), "family spider")
        graph = build_spider(SpiderSpec.of(params["m"], params["n"]))
    elif family == "tadpole":
        params = _parse_params(args.params, ("a", "b"), "family tadpole")
        graph = build_tadpole(params["a"], params["b"])
    else:
        params = _parse_params(args.params, ("a", "b"), "family twocycles")
        graph = build_two_cycles(params["a"], params["b"])
    sys.stdout.write(write_graph_text(graph))
    return EXIT_OK


def cmd_construct(args) -> int:
    expected, fn = CONSTRUCTIONS[args.name]
    params = _parse_params(args.params, expected, f"construction {args.name}")
    graph, labeling = fn(**params)
    report = verify(graph, labeling)
    provenance = args.name + " " + " ".join(f"{k}={params[k]}" for k in expected)
    cert = make_certificate(graph, labeling, provenance=provenance)
    sys.stdout.write(write_certificate(cert))
    if report.ok:
        print(f"{provenance}: verified, {report.color_count} colors", file=sys.stderr)
        return EXIT_OK
    print(f"{provenance}: VERIFY FAILED {report.violations}", file=sys.stderr)
    return EXIT_VERIFY_FAIL


def cmd_verify(args) -> int:
    cert = read_certificate(_read_input(args.certificate))
    report, claims_match = check_certificate(cert)
    profile = weight_profile(cert.graph, certificate_labeling(cert))
    print(f"bijective={_bool_word(report.bijective)}")
    print(f"proper={_bool_word(report.proper)}")
    print(f"color_count={report.color_count}")
    print("colors=" + ",".join(str(c) for c in profile.colors))
    print(f"claims_match={_bool_word(claims_match)}")
    ok = report.ok and claims_match
    if ok:
        print(f"certificate ({cert.provenance}) verifies", file=sys.stderr)
    else:
        print(f"certificate ({cert.provenance}) FAILS verification", file=sys.stderr)
        for violation in report.violations:
            print(f"  violation: {violation}", file=sys.stderr)
        if not claims_match:
            print("  claimed weights/color count do not match recomputation", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_solve(args) -> int:
    graph = read_graph_text(_read_input(args.graph))
    budget = _budget_from(args)
    threads = args.threads if args.threads is not None else (os.cpu_count() or 1)
    if threads < 1:
        raise CliError("--threads must be >= 1")
    if args.colors is not None:
        result = find_labeling_with_colors(graph, args.colors, budget, threads=threads)
        status = {
            SearchStatus.FOUND: "found",
            SearchStatus.EXHAUSTED: "none",
            SearchStatus.BUDGET_EXCEEDED: "budget_exceeded",
        }[result.status]
        payload = {
            "mode": "fixed-colors",
            "colors": args.colors,
            "status": status,
            "nodes_explored": result.nodes_explored,
            "elapsed": round(result.elapsed, 6),
            "certificate": certificate_payload(result.certificate) if result.certificate else None,
        }
        print(json.dumps(payload))
        return EXIT_OK if status in ("found", "none") else EXIT_BUDGET
    result = exact_chi_lat(graph, budget, threads=threads)
    payload = {
        "mode": "chi-lat",
        "chi_lat": result.chi_lat,
        "exhausted": result.exhausted,
        "nodes_explored": result.nodes_explored,
        "elapsed": round(result.elapsed, 6),
        "certificate": certificate_payload(result.witness) if result.witness else None,
    }
    print(json.dumps(payload))
    return EXIT_OK if result.chi_lat is not None else EXIT_BUDGET


def cmd_spider2(args) -> int:
    budget = _budget_from(args)
    resume = None
    if args.resume:
        try:
            resume = json.loads(_read_input(args.resume))
        except json.JSONDecodeError as exc:
            raise CliError(f"resume file is not valid JSON: {exc}") from None
    result = spider_two_labeling(args.m, args.n, budget, resume=resume)
    lo, hi = result.w1_range
    print(
        f"spider2 m={args.m} n={args.n}: W1 candidates [{lo}, {hi}], "
        f"nodes={result.nodes_explored}",
        file=sys.stderr,
    )
    if result.status is SearchStatus.FOUND:
        sys.stdout.write(write_certificate(result.certificate))
        return EXIT_OK
    if result.status is SearchStatus.EXHAUSTED:
        print("NONEXISTENT")
        return EXIT_OK
    print(json.dumps({"status": "budget_exceeded", "resume": result.resume_state}))
    return EXIT_BUDGET


def cmd_bound(args) -> int:
    if args.name == "sp2":
        params = _parse_params(args.params, ("n",), "bound sp2")
        report = sp2_two_color_bound(params["n"])
    else:
        params = _parse_params(args.params, ("m", "n"), "bound spider-h")
        report = spider_h(params["m"], params["n"])
    print(f"h={report.value_h} verdict={report.verdict}")
    return EXIT_OK


def _table_line(prefix: str, graph, labeling) -> tuple[str, bool]:
    report = verify(graph, labeling)
    colors = ",".join(str(c) for c in weight_profile(graph, labeling).colors)
    verdict = "pass" if report.ok else "fail"
    return f"{prefix} colors={colors} verify={verdict}", report.ok

def cmd_table(args) -> int:
    from .constructions import (
        label_sp2_even,
        label_spider_case1,
        label_spider_case2,
        label_unicyclic,
        label_bicyclic,
    )

    all_ok = True
    if args.suite == "sp2-even":
        for k in range(5, 31):
            line, ok = _table_line(f"k={k}", *label_sp2_even(k))
            all_ok &= ok
            print(line)
    elif args.suite == "case1":
        for m in range(1, 13):
            for k in range(0, 11):
                if m + (2 * k + 1) < 3:
                    continue
                line, ok = _table_line(f"m={m} k={k} n={2 * k + 1}", *label_spider_case1(m, k))
                all_ok &= ok
                print(line)
    elif args.suite == "case2":
        for m in range(1, 13):
            for k in range(1, 11):
                line, ok = _table_line(f"m={m} k={k} n={2 * k}", *label_spider_case2(m, k))
                all_ok &= ok
                print(line)
    elif args.suite == "merges":
        for a in range(3, 16, 2):
            for b in range(2, 17, 2):
                n = a + b + 1
                line, ok = _table_line(
                    f"construction=unicyclic a={a} b={b} n={n}", *label_unicyclic(a, n)
                )
                all_ok &= ok
                print(line)
        for a in range(3, 16, 2):
            for b in range(4, 17, 2):
                n = a + b + 1
                line, ok = _table_line(
                    f"construction=bicyclic a={a} b={b} n={n}", *label_bicyclic(a, n)
                )
                all_ok &= ok
                print(line)
    else:  # set-A
        for m, n in set_A_membership():
            print(f"m={m} n={n} h={spider_h(m, n).value_h}")
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


def cmd_export_dot(args) -> int:
    cert = read_certificate(_read_input(args.certificate))
    sys.stdout.write(export_dot(cert.graph, certificate_labeling(cert)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_budget_flags(parser) -> None:
    parser.add_argument("--max-time", type=float, default=None, help="time budget in seconds")
    parser.add_argument("--max-nodes", type=int, default=None, help="search node budget")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="latlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("build", help="emit a graph in the text edge format")
    p.add_argument("--family", required=True, choices=["path", "cycle", "spider", "tadpole", "twocycles"])
    p.add_argument("--params", action="append", help="key=value[,key=value...]")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("construct", help="run a labeling construction, emit a certificate")
    p.add_argument("--name", required=True, choices=sorted(CONSTRUCTIONS))
    p.add_argument("--params", action="append", help="key=value[,key=value...]")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify a certificate file ('-' for stdin)")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact search on a graph file ('-' for stdin)")
    p.add_argument("--graph", required=True)
    p.add_argument("--colors", type=int, default=None, help="fixed distinct-weight budget")
    p.add_argument("--threads", type=int, default=None, help="top-level search parallelism")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("spider2", help="structured 2-weight search on Sp(1^[m],2^[n])")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--resume", default=None, help="resume-state file from a budget-exceeded run")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_spider2)

    p = sub.add_parser("bound", help="counting-bound feasibility verdicts")
    p.add_argument("--name", required=True, choices=["sp2", "spider-h"])
    p.add_argument("--params", action="append", help="key=value[,key=value...]")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="machine-readable regression grids")
    p.add_argument("--suite", required=True, choices=["sp2-even", "case1", "case2", "merges", "set-A"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export-dot", help="DOT drawing of a certificate ('-' for stdin)")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # Invalid parameters or malformed input files.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
