"""
DATR Theory Parser

Parses the concrete theory syntax into validated ``Theory`` values:
- Node blocks ``Name: <path> == rvalue ... .``
- Local and quoted (global) descriptors
- ``%`` comments to end of line

Several sources are merged in order; a later source may extend nodes
defined by an earlier one.
"""

from functools import lru_cache
from pathlib import Path as FilePath
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import structlog
from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from datr.errors import (
    DatrError, DuplicateNodeError, DuplicatePathError, SourceLocation, TheorySyntaxError,
)
from datr.model import (
    AtomValue, GlobalNode, GlobalNodePath, GlobalPath, LocalNode, LocalNodePath,
    LocalPath, Path, Rvalue, Sentence, Theory,
)

log = structlog.get_logger()

GRAMMAR_FILE = FilePath(__file__).resolve().parent / "datr.lark"


@lru_cache(maxsize=1)
def get_parser() -> Lark:
    """Earley parser: clause boundaries need lookahead past a whole path"""
    with open(GRAMMAR_FILE, "r", encoding="utf-8") as grammar_file:
        grammar = grammar_file.read()
    return Lark(grammar, parser="earley", lexer="basic", propagate_positions=True)


class TheoryTransformer(Transformer):
    """Builds node blocks from the parse tree"""

    def __init__(self, source: str):
        super().__init__()
        self.source = source

    def _loc(self, meta) -> SourceLocation:
        return SourceLocation(self.source, meta.line, meta.column)

    def path(self, children) -> Path:
        return Path(tuple(str(token) for token in children))

    def atom_value(self, children):
        return AtomValue(str(children[0]))

    def local_path(self, children):
        return LocalPath(children[0])

    def local_node(self, children):
        return LocalNode(str(children[0]))

    def local_node_path(self, children):
        return LocalNodePath(str(children[0]), children[1])

    def global_path(self, children):
        return GlobalPath(children[0])

    def global_node(self, children):
        return GlobalNode(str(children[0]))

    def global_node_path(self, children):
        return GlobalNodePath(str(children[0]), children[1])

    def rvalue(self, children) -> Rvalue:
        return Rvalue(tuple(children))

    @v_args(meta=True)
    def sentence(self, meta, children):
        path, token, rvalue = children
        return path, token.type == "DEFINITIONAL", rvalue, self._loc(meta)

    @v_args(meta=True)
    def block(self, meta, children):
        name = str(children[0])
        definitions: Dict[Path, Sentence] = {}
        for path, definitional, rvalue, location in children[1:]:
            if path in definitions:
                raise DuplicatePathError(name, str(path), location, definitions[path].location)
            definitions[path] = Sentence(name, path, rvalue, definitional, location)
        return name, definitions, self._loc(meta)

    def start(self, children) -> Theory:
        nodes: Dict[str, Dict[Path, Sentence]] = {}
        locations: Dict[str, SourceLocation] = {}
        for name, definitions, location in children:
            if name in nodes:
                raise DuplicateNodeError(name, location, locations[name])
            nodes[name] = definitions
            locations[name] = location
        return Theory(nodes, list(nodes), locations)


def parse_theory(source_text: str, source: str = "<string>") -> Theory:
    """
    Parse one theory source

    Args:
        source_text: DATR text
        source: name used in diagnostics (usually the file path)

    Returns:
        Parsed theory

    Raises:
        TheorySyntaxError, DuplicatePathError, DuplicateNodeError
    """
    try:
        tree = get_parser().parse(source_text)
    except UnexpectedInput as e:
        raise _syntax_error(e, source_text, source) from None

    try:
        theory = TheoryTransformer(source).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, DatrError):
            raise e.orig_exc from None
        raise

    log.debug("theory_parsed", source=source, nodes=len(theory))
    return theory


def _syntax_error(e: UnexpectedInput, text: str, source: str) -> TheorySyntaxError:
    line = getattr(e, "line", -1)
    column = getattr(e, "column", -1)
    if isinstance(e, UnexpectedEOF) or line is None or line < 0:
        lines = text.splitlines() or [""]
        line, column = len(lines), len(lines[-1]) + 1
        message = "unexpected end of input (missing '.'?)"
    elif isinstance(e, UnexpectedCharacters):
        message = f"unexpected character {text[e.pos_in_stream]!r}"
    else:
        token = getattr(e, "token", None)
        message = f"unexpected token {str(token)!r}" if token is not None else "syntax error"
    return TheorySyntaxError(message, SourceLocation(source, line, column))


def parse_theories(sources: Sequence[Tuple[str, str]]) -> Theory:
    """Parse ``(name, text)`` sources in order and merge them into one theory"""
    theory = Theory()
    for name, text in sources:
        theory = theory.merge(parse_theory(text, name))
    return theory


def load_theory(paths: Iterable[Union[str, FilePath]]) -> Theory:
    """Read and merge theory files in argument order"""
    sources: List[Tuple[str, str]] = []
    for path in paths:
        with open(path, "r", encoding="utf-8") as handle:
            sources.append((str(path), handle.read()))
    return parse_theories(sources)
