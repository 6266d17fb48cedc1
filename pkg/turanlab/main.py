"""Command-line interface for turanlab."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from turanlab.certify import (
    auto_gadget_pool,
    certificate_bound_at,
    certificate_identity,
    find_certificate,
    verify_certificate,
)
from turanlab.config import LOG_FORMAT, TOOL_NAME, TOOL_VERSION, settings
from turanlab.counting import count_copies, count_induced_copies
from turanlab.enumeration import enumerate_kfree, enumerate_kfree_maximal, enumerate_types
from turanlab.errors import TuranLabError
from turanlab.extremal import brute_force_ex
from turanlab.graph import format_edge_list, graph6_encode
from turanlab.models import Certificate, CommandConfig, InfeasibilityWitness, Verdict
from turanlab.multipartite import PartVector, count_copies_in_multipartite, turan_parts
from turanlab.registry import registry
from turanlab.tables import build_type_table, render_table
from turanlab.utils import load_graph, load_graphs

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _require(config: CommandConfig, name: str) -> str:
    value = config.inputs.get(name)
    if value is None:
        raise TuranLabError(f"{config.subcommand} needs --{name.replace('_', '-')}")
    return value


def _require_k(config: CommandConfig) -> int:
    if config.k is None:
        raise TuranLabError(f"{config.subcommand} needs --k")
    return config.k


def _count(config: CommandConfig) -> tuple[int, str]:
    h = load_graph(_require(config, "h"))
    g = load_graph(_require(config, "g"))
    value = count_induced_copies(h, g) if config.induced else count_copies(h, g)
    return EXIT_OK, f"{value}\n"


def _induced(config: CommandConfig) -> tuple[int, str]:
    return _count(config.model_copy(update={"induced": True}))


def _turan(config: CommandConfig) -> tuple[int, str]:
    h = load_graph(_require(config, "h"))
    if config.parts is not None:
        parts = PartVector.parse(config.parts)
    elif config.n is not None:
        parts = turan_parts(_require_k(config) - 1, config.n)
    else:
        raise TuranLabError("turan needs --parts or --n with --k")
    return EXIT_OK, f"{count_copies_in_multipartite(h, parts)}\n"


def _table(config: CommandConfig) -> tuple[int, str]:
    h = load_graph(_require(config, "h"))
    gadgets = [g for argument in config.gadgets for g in load_graphs(argument)]
    table = build_type_table(h, config.k, gadgets, max_order=config.max_order)
    return EXIT_OK, render_table(table, "json" if config.format == "json" else "csv")


def _load_certificate(argument: str) -> Certificate:
    source = Path(argument)
    text = source.read_text(encoding="utf-8") if source.is_file() else argument
    return Certificate.model_validate_json(text)


def _certify(config: CommandConfig) -> tuple[int, str]:
    certificate = _load_certificate(_require(config, "cert"))
    report = verify_certificate(certificate)
    payload = report.model_dump(mode="json")
    if report.verdict == Verdict.PASS:
        if config.bound_at:
            payload["bounds"] = [
                dict(zip(("n", "lhs", "rhs"), (n, *certificate_bound_at(certificate, n))))
                for n in config.bound_at
            ]
        payload["identity"] = certificate_identity(certificate).model_dump(mode="json")
    if config.format == "text":
        return (EXIT_OK if report.verdict == Verdict.PASS else EXIT_FAILED), f"{report.verdict.value}: {report.statement}\n"
    return (EXIT_OK if report.verdict == Verdict.PASS else EXIT_FAILED), _dump(payload)


def _find_cert(config: CommandConfig) -> tuple[int, str]:
    h = load_graph(_require(config, "h"))
    k = _require_k(config)
    pool = [g for argument in config.gadgets for g in load_graphs(argument)]
    if config.auto_pool:
        pool += auto_gadget_pool(h.n, k, exclude=h)
    result = find_certificate(h, k, pool)
    code = EXIT_FAILED if isinstance(result, InfeasibilityWitness) else EXIT_OK
    return code, _dump(result.model_dump(mode="json"))


def _extremal(config: CommandConfig) -> tuple[int, str]:
    h = load_graph(_require(config, "h"))
    if config.n is None:
        raise TuranLabError("extremal needs --n")
    report = brute_force_ex(config.n, h, _require_k(config), config.maximal_only)
    return EXIT_OK, _dump(report.model_dump(mode="json"))


def _registry(config: CommandConfig) -> tuple[int, str]:
    if config.inputs.get("load"):
        registry.load_from(Path(config.inputs["load"]))
    action = config.action or "list"
    if action == "list":
        output = registry.dump()
    elif action == "check":
        entry = registry.is_known_good(load_graph(_require(config, "h")), _require_k(config))
        output = _dump(entry.model_dump(mode="json") if entry else None)
    elif action == "axiom":
        entry = registry.register_axiom(
            load_graph(_require(config, "h")), _require(config, "k_condition"), config.inputs.get("note") or ""
        )
        output = _dump(entry.model_dump(mode="json"))
    elif action == "attach":
        x = [int(v) for v in (config.inputs.get("x") or "").split(",") if v.strip()]
        joins = [
            tuple(int(part) for part in pair.split("-"))
            for pair in (config.inputs.get("join") or "").split(",") if pair.strip()
        ]
        graph, entry = registry.extend_by_attachment(
            load_graph(_require(config, "h")), x, joins, _require_k(config), config.inputs.get("note")
        )
        output = _dump({"graph": graph6_encode(graph), "entry": entry.model_dump(mode="json")})
    else:
        raise TuranLabError(f"unknown registry action '{action}'")
    if config.inputs.get("save"):
        registry.dump_to(Path(config.inputs["save"]))
    return EXIT_OK, output


def _gen(config: CommandConfig) -> tuple[int, str]:
    if config.n is None:
        raise TuranLabError("gen needs --n")
    if config.inputs.get("contains"):
        graphs = enumerate_types(config.n, config.k, load_graph(config.inputs["contains"]))
    elif config.maximal_only and config.k is not None:
        graphs = enumerate_kfree_maximal(config.n, config.k)
    else:
        graphs = enumerate_kfree(config.n, config.k)
    if config.format == "json":
        records = [{"graph6": graph6_encode(g), "n": g.n, "edges": [[u, v] for u, v in g.edges()]} for g in graphs]
        return EXIT_OK, _dump(records)
    render = format_edge_list if config.format == "text" else graph6_encode
    return EXIT_OK, "".join(f"{render(g)}\n" for g in graphs)


HANDLERS: dict[str, Callable[[CommandConfig], tuple[int, str]]] = {
    "count": _count,
    "induced": _induced,
    "turan": _turan,
    "table": _table,
    "certify": _certify,
    "find-cert": _find_cert,
    "extremal": _extremal,
    "registry": _registry,
    "gen": _gen,
}


def run(config: CommandConfig) -> tuple[int, str]:
    """Dispatch one command; the output text is a pure function of config."""
    logger.info(f"Running {config.subcommand}")
    return HANDLERS[config.subcommand](config)


def _k_value(text: str) -> Optional[int]:
    if text.lower() in ("unbounded", "none", "inf"):
        return None
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL_NAME, description="Exact toolkit for generalized Turan problems")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level")
    parser.add_argument("--debug", action="store_true", help="Log solver and column details")
    parser.add_argument("--threads", type=int, help="Worker process cap (overrides TURANLAB_THREADS)")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def graph_args(sub, *names):
        for name in names:
            sub.add_argument(f"--{name}", help="graph6, edge list 'n; u-v,...', catalog name or file")

    count = subparsers.add_parser("count", help="Copies of H in G")
    graph_args(count, "h", "g")
    count.add_argument("--induced", action="store_true")

    induced = subparsers.add_parser("induced", help="Induced copies of H in G")
    graph_args(induced, "h", "g")

    turan = subparsers.add_parser("turan", help="Copies of H in a complete multipartite graph")
    graph_args(turan, "h")
    turan.add_argument("--parts", help="Part sizes, e.g. 3,2,2")
    turan.add_argument("--n", type=int)
    turan.add_argument("--k", type=int)

    table = subparsers.add_parser("table", help="Induced-type table for H")
    graph_args(table, "h")
    table.add_argument("--k", type=_k_value, help="Forbidden clique size or 'unbounded'")
    table.add_argument("--gadget", action="append", default=[], dest="gadgets")
    table.add_argument("--max-order", type=int)
    table.add_argument("--format", choices=["csv", "json"])

    certify = subparsers.add_parser("certify", help="Verify a certificate JSON file")
    certify.add_argument("--cert", required=True)
    certify.add_argument("--bound-at", type=int, action="append", default=[])
    certify.add_argument("--format", choices=["json", "text"])

    find_cert = subparsers.add_parser("find-cert", help="Search for a certificate")
    graph_args(find_cert, "h")
    find_cert.add_argument("--k", type=int, required=True)
    find_cert.add_argument("--gadget", action="append", default=[], dest="gadgets")
    find_cert.add_argument("--auto-pool", action="store_true", help="Add every registered k-good class")

    extremal = subparsers.add_parser("extremal", help="Exhaustive ex(n, H, K_k)")
    graph_args(extremal, "h")
    extremal.add_argument("--n", type=int, required=True)
    extremal.add_argument("--k", type=int, required=True)
    extremal.add_argument("--all", action="store_true", help="Search every class, not only edge-maximal ones")

    registry_parser = subparsers.add_parser("registry", help="Query or extend the goodness registry")
    registry_parser.add_argument("action", nargs="?", choices=["list", "check", "axiom", "attach"], default="list")
    graph_args(registry_parser, "h")
    registry_parser.add_argument("--k", type=int)
    registry_parser.add_argument("--k-condition")
    registry_parser.add_argument("--note")
    registry_parser.add_argument("--x", help="Attachment clique, e.g. 0,1")
    registry_parser.add_argument("--join", help="Join edges vertex-cliqueindex, e.g. 0-0,0-1")
    registry_parser.add_argument("--load", help="JSON lines file merged before the action")
    registry_parser.add_argument("--save", help="JSON lines file written after the action")

    gen = subparsers.add_parser("gen", help="Emit isomorphism classes as graph6 lines")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int)
    gen.add_argument("--maximal", action="store_true")
    graph_args(gen, "contains")
    gen.add_argument("--format", choices=["json", "text"])
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    names = ("h", "g", "cert", "k_condition", "note", "x", "join", "load", "save", "contains")
    inputs = {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}
    if args.subcommand == "extremal":
        maximal_only = not args.all and settings.extremal_maximal_only
    else:
        maximal_only = getattr(args, "maximal", False)
    return CommandConfig(
        subcommand=args.subcommand,
        action=getattr(args, "action", None),
        inputs=inputs,
        gadgets=getattr(args, "gadgets", []),
        k=getattr(args, "k", None),
        n=getattr(args, "n", None),
        parts=getattr(args, "parts", None),
        format=getattr(args, "format", None),
        maximal_only=maximal_only,
        induced=getattr(args, "induced", False),
        auto_pool=getattr(args, "auto_pool", False),
        max_order=getattr(args, "max_order", None),
        bound_at=getattr(args, "bound_at", []),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else settings.log_level
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=[logging.StreamHandler(sys.stderr)], force=True)
    if args.threads:
        settings.threads = max(1, args.threads)

    try:
        code, output = run(config_from_args(args))
    except (ValueError, OSError) as e:
        logger.error(f"{args.subcommand} failed: {e}")
        return EXIT_USAGE
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
