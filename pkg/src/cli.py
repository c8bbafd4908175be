"""
Grammar Workbench Command Line

Commands:
- check: parse and lint theory files
- query / trace: evaluate a node at a path
- tree / listing: extract and render the tree description of an entry
- derive / family: apply lexical rule chains
- hierarchy: show the default-inheritance hierarchy
- pretty: canonical pretty-print of a theory

Results go to standard out; diagnostics and logs go to standard error.
The first positional argument of every command except ``check`` names the
theory: ``corpus`` for the shipped corpus, or a file path. ``--with`` adds
further files, merged in order.
"""

import argparse
import sys
from typing import List, Optional, Sequence

import structlog

from config import settings
from datr.engine import InferenceEngine, format_trace
from datr.errors import DatrError, UnknownNodeError
from datr.graph import format_hierarchy, hierarchy, hierarchy_dot
from datr.lint import Severity, lint_theory
from datr.model import Path, Theory
from datr.parser import load_theory
from datr.printer import format_theory
from logging_config import configure_logging
from ltag.errors import ReconstructionError
from ltag.features import extract_features, flat_listing
from ltag.render import RenderFormat, render
from ltag.rules import CANONICAL_ORDER, derive_word, enumerate_family
from ltag.trees import reconstruct_tree

log = structlog.get_logger()

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDEFINED = 2
EXIT_RECONSTRUCTION = 3

CORPUS = "corpus"


def _theory_files(names: Sequence[str]) -> List[str]:
    files: List[str] = []
    for name in names:
        if name == CORPUS:
            files.extend(str(p) for p in settings.corpus_paths)
        else:
            files.append(name)
    return files


def _load(args: argparse.Namespace) -> Theory:
    return load_theory(_theory_files([args.theory, *args.extra]))


def _require_node(theory: Theory, node: str) -> None:
    if node not in theory:
        raise UnknownNodeError(node)


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _err(text: str) -> None:
    sys.stderr.write(text if text.endswith("\n") else text + "\n")


# ============================================================================
# Commands
# ============================================================================

def cmd_check(args: argparse.Namespace) -> int:
    theory = load_theory(_theory_files(args.files))
    diagnostics = lint_theory(theory, strict=args.strict)
    errors = 0
    for diagnostic in diagnostics:
        _err(str(diagnostic))
        if diagnostic.severity == Severity.ERROR:
            errors += 1
        elif diagnostic.severity == Severity.WARNING and args.strict:
            errors += 1
    warnings = sum(1 for d in diagnostics if d.severity == Severity.WARNING)
    _out(f"{len(theory)} nodes, {errors} errors, {warnings} warnings")
    return EXIT_ERROR if errors else EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    theory = _load(args)
    outcome = InferenceEngine(theory, args.max_depth).evaluate(args.node, Path(tuple(args.path)))
    _out(str(outcome))
    return EXIT_OK if outcome.is_defined else EXIT_UNDEFINED


def cmd_trace(args: argparse.Namespace) -> int:
    theory = _load(args)
    engine = InferenceEngine(theory, args.max_depth)
    outcome, steps = engine.evaluate_traced(args.node, Path(tuple(args.path)))
    trace = format_trace(steps)
    if trace:
        sys.stdout.write(trace)
    _out(f"=> {outcome}")
    return EXIT_OK if outcome.is_defined else EXIT_UNDEFINED


def cmd_tree(args: argparse.Namespace) -> int:
    theory = _load(args)
    _require_node(theory, args.node)
    features = extract_features(theory, args.node, Path(tuple(args.prefix)), depth=args.depth)
    if features.is_empty:
        _out("UNDEFINED(no-tree)")
        return EXIT_UNDEFINED
    _out(render(reconstruct_tree(features), args.format, args.unicode or None))
    return EXIT_OK


def cmd_listing(args: argparse.Namespace) -> int:
    theory = _load(args)
    _require_node(theory, args.node)
    features = extract_features(theory, args.node, Path(tuple(args.prefix)), depth=args.depth)
    if features.is_empty:
        _out("UNDEFINED(no-tree)")
        return EXIT_UNDEFINED
    sys.stdout.write(flat_listing(features, args.node))
    return EXIT_OK


def cmd_derive(args: argparse.Namespace) -> int:
    theory = _load(args)
    derivation = derive_word(theory, args.word, depth=args.depth)
    if derivation.violation is not None:
        _out(f"UNDEFINED({derivation.violation})")
        return EXIT_UNDEFINED
    if derivation.surface is None:
        _out("UNDEFINED(no-surface)")
        return EXIT_UNDEFINED
    _out(render(derivation.surface, args.format, args.unicode or None))
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    theory = _load(args)
    rules = [r for r in args.rules.split(",") if r] if args.rules else list(CANONICAL_ORDER)
    family = enumerate_family(theory, args.lexeme, rules, depth=args.depth)
    for subset, tree in family.items():
        applied = ",".join(r for r in CANONICAL_ORDER if r in subset)
        shown = "UNDEFINED" if tree is None else render(tree, RenderFormat.BRACKET, args.unicode or None)
        _out(f"{applied}\t{shown}")
    return EXIT_OK


def cmd_hierarchy(args: argparse.Namespace) -> int:
    graph = hierarchy(_load(args))
    if args.format == "dot":
        _out(hierarchy_dot(graph))
    else:
        sys.stdout.write(format_hierarchy(graph))
    return EXIT_OK


def cmd_pretty(args: argparse.Namespace) -> int:
    sys.stdout.write(format_theory(_load(args)))
    return EXIT_OK


# ============================================================================
# Argument parsing
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="datrtag",
        description="DATR inference engine and LTAG lexicon workbench",
    )
    parser.add_argument("--log-level", default=None,
                        help=f"logging level (default {settings.LOG_LEVEL})")
    commands = parser.add_subparsers(dest="command", required=True)

    theory = argparse.ArgumentParser(add_help=False)
    theory.add_argument("theory", help="'corpus' or a theory file")
    theory.add_argument("--with", dest="extra", action="append", default=[], metavar="FILE",
                        help="further theory file, merged after the first (repeatable)")

    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--depth", type=int, default=None,
                       help=f"probe depth (default {settings.PROBE_DEPTH})")

    rendering = argparse.ArgumentParser(add_help=False)
    rendering.add_argument("--unicode", action="store_true", help="use unicode node markers")

    formats = argparse.ArgumentParser(add_help=False)
    formats.add_argument("--format", choices=[f.value for f in RenderFormat],
                         default=RenderFormat.BRACKET.value)

    check = commands.add_parser("check", help="parse and lint theory files")
    check.add_argument("files", nargs="+", help="theory files ('corpus' for the shipped corpus)")
    check.add_argument("--strict", action="store_true", help="treat warnings as errors")
    check.set_defaults(handler=cmd_check)

    for name, handler, text in (("query", cmd_query, "evaluate a node at a path"),
                                ("trace", cmd_trace, "evaluate and show the inheritance chain")):
        sub = commands.add_parser(name, parents=[theory], help=text)
        sub.add_argument("node")
        sub.add_argument("path", nargs="*", help="path atoms, without angle brackets")
        sub.add_argument("--max-depth", type=int, default=None,
                         help=f"evaluation depth bound (default {settings.MAX_EVAL_DEPTH})")
        sub.set_defaults(handler=handler)

    tree = commands.add_parser("tree", parents=[theory, probe, rendering, formats],
                               help="render the elementary tree of an entry")
    tree.add_argument("node")
    tree.add_argument("--prefix", nargs="*", default=[], help="path atoms housing the description")
    tree.set_defaults(handler=cmd_tree)

    listing = commands.add_parser("listing", parents=[theory, probe],
                                  help="flat listing of an entry's description")
    listing.add_argument("node")
    listing.add_argument("--prefix", nargs="*", default=[])
    listing.set_defaults(handler=cmd_listing)

    derive = commands.add_parser("derive", parents=[theory, probe, rendering, formats],
                                 help="surface tree of a word from its alt flags")
    derive.add_argument("word")
    derive.set_defaults(handler=cmd_derive)

    family = commands.add_parser("family", parents=[theory, probe, rendering],
                                 help="surface trees for every admissible rule subset")
    family.add_argument("lexeme")
    family.add_argument("--rules", default=None,
                        help="comma separated rule names (default: all known rules)")
    family.set_defaults(handler=cmd_family)

    graph = commands.add_parser("hierarchy", parents=[theory], help="default-inheritance hierarchy")
    graph.add_argument("--format", choices=["text", "dot"], default="text")
    graph.set_defaults(handler=cmd_hierarchy)

    pretty = commands.add_parser("pretty", parents=[theory], help="canonical pretty-print")
    pretty.set_defaults(handler=cmd_pretty)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_JSON)
    log.debug("command_started", command=args.command)
    try:
        return args.handler(args)
    except ReconstructionError as e:
        _err(f"error: {e}")
        return EXIT_RECONSTRUCTION
    except DatrError as e:
        _err(str(e) if e.location is not None else f"error: {e}")
        return EXIT_ERROR
    except OSError as e:
        _err(f"error: {e}")
        return EXIT_ERROR
    except ValueError as e:
        _err(f"error: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
