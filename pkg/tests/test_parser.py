import sys
from pathlib import Path as FilePath

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

# Ensure src is importable
ROOT = FilePath(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from datr.errors import DuplicateNodeError, DuplicatePathError, TheorySyntaxError
from datr.model import (
    EMPTY_PATH, AtomValue, GlobalNode, GlobalNodePath, GlobalPath, LocalNode,
    LocalNodePath, LocalPath, Path, Rvalue, Sentence, Theory, is_atom, is_node_name,
)
from datr.parser import load_theory, parse_theories, parse_theory
from datr.printer import format_theory

CORPUS = [ROOT / "corpus" / name for name in ("hierarchy.dtr", "rules.dtr", "words.dtr")]


def test_single_sentence():
    theory = parse_theory("Give:\n <cat> = v.")
    assert theory.node_names == ("Give",)
    sentences = theory.sentences("Give")
    assert len(sentences) == 1
    assert sentences[0].path == Path.of("cat")
    assert sentences[0].rvalue.items == (AtomValue("v"),)
    assert sentences[0].definitional is False


def test_empty_input():
    assert len(parse_theory("")) == 0
    assert len(parse_theory("  % only a comment\n")) == 0


def test_verb_block():
    theory = parse_theory(
        "VERB:\n <> == TREENODE\n <cat> == v\n <type> == anchor\n <parent> == VPTREE:<>."
    )
    assert len(theory.sentences("VERB")) == 4
    parent = theory.lookup("VERB", Path.of("parent"))
    assert parent.rvalue.items == (LocalNodePath("VPTREE", EMPTY_PATH),)
    assert theory.lookup("VERB", EMPTY_PATH).rvalue.items == (LocalNode("TREENODE"),)


def test_descriptor_forms():
    theory = parse_theory(
        'X:\n'
        ' <a> == <b c>\n'
        ' <b> == "<input>"\n'
        ' <c> == "VERB"\n'
        ' <d> == "VERB:<x y>"\n'
        ' <e> == one <f> Y:<g> two.\n'
    )
    assert theory.lookup("X", Path.of("a")).rvalue.items == (LocalPath(Path.of("b", "c")),)
    assert theory.lookup("X", Path.of("b")).rvalue.items == (GlobalPath(Path.of("input")),)
    assert theory.lookup("X", Path.of("c")).rvalue.items == (GlobalNode("VERB"),)
    assert theory.lookup("X", Path.of("d")).rvalue.items == (
        GlobalNodePath("VERB", Path.of("x", "y")),)
    assert theory.lookup("X", Path.of("e")).rvalue.items == (
        AtomValue("one"), LocalPath(Path.of("f")),
        LocalNodePath("Y", Path.of("g")), AtomValue("two"),
    )


def test_comments_and_layout():
    text = "% header\nA: <x> == y % trailing\n  <z> == B.   B: <> == A.\n"
    theory = parse_theory(text)
    assert theory.node_names == ("A", "B")
    assert theory.lookup("A", Path.of("z")).rvalue.items == (LocalNode("B"),)


def test_duplicate_path_rejected():
    with pytest.raises(DuplicatePathError) as exc:
        parse_theory("X:\n <a> == 1\n <a> == 2.", source="x.dtr")
    assert exc.value.node == "X"
    assert exc.value.path == "<a>"
    assert exc.value.location.line == 3
    assert exc.value.previous.line == 2


def test_duplicate_node_rejected():
    with pytest.raises(DuplicateNodeError) as exc:
        parse_theory("X: <a> == 1.\nX: <b> == 2.", source="x.dtr")
    assert exc.value.location.line == 2
    assert exc.value.previous.line == 1


def test_later_source_extends_node():
    theory = parse_theories([("a.dtr", "X: <a> == 1."), ("b.dtr", "X: <b> == 2.")])
    assert len(theory.sentences("X")) == 2
    with pytest.raises(DuplicatePathError):
        parse_theories([("a.dtr", "X: <a> == 1."), ("b.dtr", "X: <a> == 2.")])


def test_syntax_error_location():
    with pytest.raises(TheorySyntaxError) as exc:
        parse_theory("X: <a> == b$.", source="bad.dtr")
    assert exc.value.location.source == "bad.dtr"
    assert exc.value.location.line == 1
    assert exc.value.location.column == 12
    assert str(exc.value).startswith("bad.dtr:1:12:")


def test_missing_terminator():
    with pytest.raises(TheorySyntaxError) as exc:
        parse_theory("X:\n <a> == b\n")
    assert exc.value.location is not None


@pytest.mark.parametrize("text", [
    "x: <a> == b.",      # lowercase node name
    "X: <A> == b.",      # uppercase attribute
    "X: <a> == .",       # empty right-hand side
    "X: .",              # no sentences
])
def test_lexical_space_violations(text):
    with pytest.raises(TheorySyntaxError):
        parse_theory(text)


def test_corpus_loads():
    theory = load_theory(CORPUS)
    for name in ("TREENODE", "VERB", "Give", "AUXVERB", "RELCLAUSE", "Word3"):
        assert name in theory
    # rules.dtr extends hierarchy nodes
    assert theory.lookup("TREENODE", Path.of("output")).rvalue.items == (
        GlobalPath(Path.of("input")),)
    assert theory.lookup("VERB", Path.of("cat")) is not None


def test_corpus_round_trip():
    theory = load_theory(CORPUS)
    assert parse_theory(format_theory(theory)) == theory


def test_pretty_print_format():
    theory = parse_theory("X: <b> = B:<c> <> == \"<a>\".")
    assert format_theory(theory) == 'X:\n  <> == "<a>"\n  <b> == B:<c>\n.\n'


# ============================================================================
# Properties
# ============================================================================

NODES = ["A", "B", "Node1", "VERB+NP", "Give-dat"]
ATOMS = ["a", "b", "cat", "x1", "finite-inv", "0"]

paths = st.lists(st.sampled_from(ATOMS), max_size=3).map(lambda atoms: Path(tuple(atoms)))
nodes = st.sampled_from(NODES)
descriptors = st.one_of(
    st.sampled_from(ATOMS).map(AtomValue),
    paths.map(LocalPath),
    nodes.map(LocalNode),
    st.builds(LocalNodePath, nodes, paths),
    paths.map(GlobalPath),
    nodes.map(GlobalNode),
    st.builds(GlobalNodePath, nodes, paths),
)
rvalues = st.lists(descriptors, min_size=1, max_size=3).map(lambda items: Rvalue(tuple(items)))


@st.composite
def theories(draw):
    names = draw(st.lists(nodes, min_size=1, max_size=4, unique=True))
    defined = {}
    for name in names:
        definitions = draw(st.dictionaries(paths, rvalues, min_size=1, max_size=4))
        defined[name] = {path: Sentence(name, path, rvalue) for path, rvalue in definitions.items()}
    return Theory(defined, names)


@hyp_settings(max_examples=100, deadline=None)
@given(theories())
def test_print_parse_round_trip(theory):
    assert parse_theory(format_theory(theory)) == theory


@hyp_settings(max_examples=100, deadline=None)
@given(theories())
def test_parsed_tokens_respect_lexical_space(theory):
    parsed = parse_theory(format_theory(theory))
    for sentence in parsed.all_sentences():
        assert is_node_name(sentence.node)
        assert all(is_atom(a) for a in sentence.path)
        for item in sentence.rvalue.items:
            if item.node is not None:
                assert is_node_name(item.node)
            if isinstance(item, AtomValue):
                assert is_atom(item.atom)


@hyp_settings(max_examples=50, deadline=None)
@given(theories(), st.data())
def test_duplicate_path_always_rejected(theory, data):
    name = data.draw(st.sampled_from(theory.node_names))
    sentence = data.draw(st.sampled_from(theory.sentences(name)))
    text = format_theory(theory).replace(
        f"{name}:\n", f"{name}:\n  {sentence.path} == {sentence.rvalue}\n", 1)
    with pytest.raises(DuplicatePathError):
        parse_theory(text)
