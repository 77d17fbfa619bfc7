"""
Command-line front end: ``psi formula | exact | check | worst | verify | proptest | bench``.

Results go to stdout as JSON carrying the tool version and seed; logs go to
stderr. Exit codes: 0 success, 1 disagreement or property failure, 2 usage or
parse error, 3 solver budget exhausted.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from . import __version__
from .graphs.graph_core import (
    FAMILY_ALIASES,
    Family,
    FamilySpec,
    Graph,
    ParameterBoundError,
    build,
    emit_dot,
    parse_edge_list,
)
from .harness.bench import run_bench
from .harness.proptests import DEFAULT_TRIALS, SUITES, run_suite
from .harness.verification import VerifyMode, parse_range, verify_family
from .pebbles.pebble_state import Configuration, ConfigurationFormatError
from .psi.exact import (
    DEFAULT_MAX_CONFIGS,
    DEFAULT_SAMPLE_TRIALS,
    BudgetExhaustedError,
    ExactOptions,
    formula_result,
    psi_exact,
)
from .psi.extremal import worst_configuration
from .psi.formulas import decompose
from .search.reach_solver import (
    DEFAULT_MAX_NODES,
    Outcome,
    SolverOptions,
    solvable,
    verify_strategy,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


# ────────────────────────────────────────────────────────────────────────────────
# Input helpers
# ────────────────────────────────────────────────────────────────────────────────


def load_graph(args: argparse.Namespace) -> Graph:
    if args.family:
        return build(FamilySpec.parse(args.family))
    if args.graph:
        return parse_edge_list(Path(args.graph).read_text())
    raise ConfigurationFormatError("a graph is required: pass --family or --graph")


def load_config(source: str, g: Graph) -> Configuration:
    """``--config`` accepts a JSON file, inline JSON or the compact ``v:count`` form."""
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:
        # inline text longer than any file name
        is_file = False
    text = (path.read_text() if is_file else source).strip()
    if text.startswith("{"):
        config = Configuration.from_json(text)
    elif text.startswith("["):
        config = Configuration.from_json(f'{{"counts": {text}}}')
    else:
        config = Configuration.from_compact(text, g.n)
    config.require_size(g)
    return config


def solver_options(args: argparse.Namespace) -> SolverOptions:
    return SolverOptions(
        max_nodes=args.max_nodes,
        prune_dominance=not args.no_prune_dominance,
        prune_potential=not args.no_prune_potential,
        prune_acyclic=not args.no_prune_acyclic,
    )


def exact_options(args: argparse.Namespace, **overrides: Any) -> ExactOptions:
    opts = ExactOptions(
        max_configs=args.max_configs,
        seed=args.seed,
        workers=args.threads,
        solver=solver_options(args),
    )
    for key, value in overrides.items():
        setattr(opts, key, value)
    return opts


def emit(args: argparse.Namespace, payload: Dict[str, Any], status: str = "success") -> None:
    document = {
        "status": status,
        "version": __version__,
        "seed": args.seed,
        "command": args.command,
        **payload,
    }
    print(json.dumps(document, indent=2 if args.json else None))


# ────────────────────────────────────────────────────────────────────────────────
# Commands
# ────────────────────────────────────────────────────────────────────────────────


def cmd_formula(args: argparse.Namespace) -> int:
    spec = FamilySpec.parse(args.family)
    result = formula_result(spec)
    payload: Dict[str, Any] = {"psi": result.value, "result": result.model_dump(mode="json")}
    if args.show_terms and spec.family in (Family.PATH, Family.CYCLE) and spec.n >= 2:
        d = decompose(spec.n)
        payload["decomposition"] = {"n": d.n, "alpha": d.alpha, "k": d.k}
    emit(args, payload)
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    g = load_graph(args)
    overrides: Dict[str, Any] = {"symmetry": not args.no_symmetry}
    if args.hint is not None:
        overrides["hint"] = args.hint
    if args.sample is not None:
        overrides.update(sample_trials=args.sample, max_configs=0)
    result = psi_exact(g, exact_options(args, **overrides))
    emit(args, {"psi": result.value, "result": result.model_dump(mode="json")})
    return EXIT_UNKNOWN if result.budget_limited else EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = load_graph(args)
    config = load_config(args.config, g)
    decision = solvable(g, config, solver_options(args))
    payload = {"graph": g.describe(), "config": config.to_dict(), "decision": decision.to_dict()}
    if decision.witness is not None:
        payload["witness_verified"] = verify_strategy(g, config, decision.witness)
        if args.emit_witness:
            Path(args.emit_witness).write_text(decision.witness.to_json() + "\n")
            logger.info(f"Witness written to {args.emit_witness}")
    emit(args, payload)
    return EXIT_UNKNOWN if decision.outcome is Outcome.UNKNOWN else EXIT_OK


def cmd_worst(args: argparse.Namespace) -> int:
    spec = FamilySpec.parse(args.family)
    worst = worst_configuration(spec)
    payload: Dict[str, Any] = {"family": str(spec), "worst": worst.to_dict()}
    if args.emit:
        Path(args.emit).write_text(worst.config.to_json() + "\n")
        logger.info(f"Worst configuration written to {args.emit}")
    if args.dot:
        Path(args.dot).write_text(emit_dot(build(spec)) + "\n")
    code = EXIT_OK
    if args.certify:
        decision = solvable(build(spec), worst.config, solver_options(args))
        payload["certification"] = decision.to_dict()
        if decision.outcome is Outcome.UNKNOWN:
            code = EXIT_UNKNOWN
        elif decision.solvable:
            code = EXIT_FAILED
    emit(args, payload)
    return code


def cmd_verify(args: argparse.Namespace) -> int:
    family = FAMILY_ALIASES.get(args.family.strip().lower())
    if family is None:
        raise ParameterBoundError(f"unknown family {args.family!r}")
    low, high = parse_range(args.range)
    if args.lower_bound_only:
        mode = VerifyMode.LOWER_BOUND_ONLY
    elif args.sample is not None:
        mode = VerifyMode.SAMPLED
    else:
        mode = VerifyMode.EXHAUSTIVE
    overrides = {"sample_trials": args.sample} if args.sample is not None else {}
    report = verify_family(
        family,
        low,
        high,
        mode=mode,
        opts=exact_options(args, workers=1, **overrides),
        threads=args.threads,
        version=__version__,
    )
    emit(args, {"report": report.model_dump(mode="json")})
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_proptest(args: argparse.Namespace) -> int:
    names: List[str] = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, trials=args.trials, seed=args.seed) for name in names]
    passed = all(r.passed for r in results)
    emit(args, {"passed": passed, "suites": [r.model_dump(mode="json") for r in results]})
    return EXIT_OK if passed else EXIT_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_bench(exact_options(args))
    emit(args, {"rows": [r.model_dump(mode="json") for r in rows]})
    return EXIT_OK


# ────────────────────────────────────────────────────────────────────────────────
# Parser
# ────────────────────────────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="pretty-print the JSON output")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling and property suites")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    common.add_argument("--max-configs", type=int, default=DEFAULT_MAX_CONFIGS)
    common.add_argument("--no-prune-dominance", action="store_true")
    common.add_argument("--no-prune-potential", action="store_true")
    common.add_argument("--no-prune-acyclic", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    graph_source = argparse.ArgumentParser(add_help=False)
    source = graph_source.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", help="family spec such as path:6, cycle:5, multipartite:3,2")
    source.add_argument("--graph", help="edge-list file, one 'u v' pair per line")

    parser = argparse.ArgumentParser(
        prog="psi", description="Domination cover pebbling workbench"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", parents=[common], help="evaluate the closed-form psi")
    p.add_argument("--family", required=True)
    p.add_argument("--show-terms", action="store_true", help="include the path decomposition")
    p.set_defaults(handler=cmd_formula)

    p = sub.add_parser("exact", parents=[common, graph_source], help="compute psi exactly")
    p.add_argument("--hint", type=int)
    p.add_argument("--sample", type=int, metavar="N", help="sample N configurations per layer")
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(handler=cmd_exact)

    p = sub.add_parser("check", parents=[common, graph_source], help="decide one configuration")
    p.add_argument("--config", required=True, help="JSON file, inline JSON or 'v:count,...'")
    p.add_argument("--emit-witness", metavar="PATH")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("worst", parents=[common], help="print the worst-case configuration")
    p.add_argument("--family", required=True)
    p.add_argument("--emit", metavar="PATH", help="write the configuration JSON to PATH")
    p.add_argument("--dot", metavar="PATH", help="write the graph as DOT to PATH")
    p.add_argument("--certify", action="store_true", help="confirm unsolvability with the solver")
    p.set_defaults(handler=cmd_worst)

    p = sub.add_parser("verify", parents=[common], help="formula versus oracle sweep")
    p.add_argument("--family", required=True, help="family name, e.g. cycle")
    p.add_argument("--range", required=True, help="inclusive range such as 3..7")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--sample", type=int, nargs="?", const=DEFAULT_SAMPLE_TRIALS, metavar="N")
    mode.add_argument("--lower-bound-only", action="store_true")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("proptest", parents=[common], help="run property suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.set_defaults(handler=cmd_proptest)

    p = sub.add_parser("bench", parents=[common], help="time the solver on standard instances")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except BudgetExhaustedError as e:
        logger.error(str(e))
        emit(args, {"message": str(e)}, status="unknown")
        return EXIT_UNKNOWN
    except (ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        emit(args, {"message": str(e)}, status="error")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
