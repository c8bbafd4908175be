import sys
from pathlib import Path as FilePath

import pytest

# Ensure src is importable
ROOT = FilePath(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cli import EXIT_ERROR, EXIT_OK, EXIT_RECONSTRUCTION, EXIT_UNDEFINED, main

GOLDEN = ROOT / "tests" / "golden"


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("golden,argv", [
    ("query_give_cat.txt", ["query", "corpus", "Give", "cat"]),
    ("trace_give_cat.txt", ["trace", "corpus", "Give", "cat"]),
    ("tree_give.txt", ["tree", "corpus", "Give"]),
    ("tree_auxverb.txt", ["tree", "corpus", "AUXVERB"]),
    ("listing_give.txt", ["listing", "corpus", "Give"]),
    ("derive_word1.txt", ["derive", "corpus", "Word1"]),
    ("derive_word2.txt", ["derive", "corpus", "Word2"]),
    ("family_give.txt", ["family", "corpus", "Give", "--rules", "dative,passive"]),
    ("hierarchy.txt", ["hierarchy", "corpus"]),
])
def test_golden_outputs(capsys, golden, argv):
    code, out, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_output_is_stable_across_runs(capsys):
    first = _run(capsys, "family", "corpus", "Give", "--rules", "dative,passive")
    second = _run(capsys, "family", "corpus", "Give", "--rules", "dative,passive")
    assert first[:2] == second[:2]


def test_query_second_complement(capsys):
    code, out, _ = _run(capsys, "query", "corpus", "Give", "right", "right", "parent", "cat")
    assert (code, out) == (EXIT_OK, "pp\n")


def test_query_unknown_node(capsys):
    code, out, _ = _run(capsys, "query", "corpus", "Nonesuch", "cat")
    assert code == EXIT_UNDEFINED
    assert out == "UNDEFINED(no-matching-sentence)\n"


def test_derive_constraint_violation(capsys):
    code, out, _ = _run(capsys, "derive", "corpus", "Word3")
    assert code == EXIT_UNDEFINED
    assert out == (GOLDEN / "derive_word3.txt").read_text(encoding="utf-8")


def test_derive_unknown_word(capsys):
    code, out, err = _run(capsys, "derive", "corpus", "Nonesuch")
    assert code == EXIT_ERROR
    assert out == ""
    assert "unknown node Nonesuch" in err


def test_family_unknown_rule(capsys):
    code, _, err = _run(capsys, "family", "corpus", "Give", "--rules", "causative")
    assert code == EXIT_ERROR
    assert "causative" in err


def test_tree_with_surface_prefix(capsys):
    code, out, _ = _run(capsys, "tree", "corpus", "Give-dat", "--prefix", "surface")
    assert code == EXIT_OK
    assert out == (GOLDEN / "derive_word1.txt").read_text(encoding="utf-8")


def test_tree_unicode(capsys):
    code, out, _ = _run(capsys, "tree", "corpus", "AUXVERB", "--unicode")
    assert (code, out) == (EXIT_OK, "(vp (v⋄) (vp*))\n")


def test_tree_dot(capsys):
    code, out, _ = _run(capsys, "tree", "corpus", "Give", "--format", "dot")
    assert code == EXIT_OK
    assert out.count("->") == 7
    assert out.count("[label=") == 8
    assert out.count("doublecircle") == 2


def test_tree_json(capsys):
    code, out, _ = _run(capsys, "tree", "corpus", "AUXVERB", "--format", "json")
    assert code == EXIT_OK
    assert out.startswith('{"cat":"vp","children":[')


def test_tree_reconstruction_error(capsys, tmp_path):
    theory = tmp_path / "bad.dtr"
    theory.write_text("X: <cat> == v <parent cat> == vp <parent type> == anchor.\n")
    code, out, err = _run(capsys, "tree", str(theory), "X")
    assert code == EXIT_RECONSTRUCTION
    assert out == ""
    assert "<parent>" in err


def test_tree_without_description(capsys, tmp_path):
    theory = tmp_path / "empty.dtr"
    theory.write_text("X: <cat> == undef.\n")
    code, out, _ = _run(capsys, "tree", str(theory), "X")
    assert (code, out) == (EXIT_UNDEFINED, "UNDEFINED(no-tree)\n")


def test_check_corpus(capsys):
    code, out, err = _run(capsys, "check", "corpus")
    assert code == EXIT_OK
    assert out == "20 nodes, 0 errors, 0 warnings\n"
    assert err == ""


def test_check_duplicate_path(capsys, tmp_path):
    theory = tmp_path / "dup.dtr"
    theory.write_text("X:\n  <a> == b\n  <a> == c.\n")
    code, _, err = _run(capsys, "check", str(theory))
    assert code == EXIT_ERROR
    assert err.count("\n") == 1
    assert err.startswith(f"{theory}:3:3:")


def test_check_syntax_error(capsys, tmp_path):
    theory = tmp_path / "bad.dtr"
    theory.write_text("X: <a> == b$.\n")
    code, _, err = _run(capsys, "check", str(theory))
    assert code == EXIT_ERROR
    assert err.startswith(f"{theory}:1:12:")


def test_check_honours_file_order(capsys, tmp_path):
    base = tmp_path / "base.dtr"
    base.write_text("A: <cat> == v.\n")
    child = tmp_path / "child.dtr"
    child.write_text("B: <> == A.\nA: <type> == anchor.\n")
    code, out, _ = _run(capsys, "check", str(base), str(child))
    assert code == EXIT_OK
    assert out == "2 nodes, 0 errors, 0 warnings\n"


def test_check_strict_promotes_warnings(capsys, tmp_path):
    theory = tmp_path / "dangling.dtr"
    theory.write_text("A: <> == MISSING.\n")
    assert _run(capsys, "check", str(theory))[0] == EXIT_OK
    code, out, err = _run(capsys, "check", "--strict", str(theory))
    assert code == EXIT_ERROR
    assert out == "1 nodes, 1 errors, 1 warnings\n"
    assert "undefined-node" in err


def test_with_adds_files(capsys, tmp_path):
    extra = tmp_path / "extra.dtr"
    extra.write_text("Lend: <> == Give <root> == lend.\n")
    code, out, _ = _run(capsys, "tree", "corpus", "Lend", "--with", str(extra))
    assert code == EXIT_OK
    assert out == "(s (np!) (vp (v^ lend) (np!) (pp (p^ to) (np!))))\n"


def test_hierarchy_dot(capsys):
    code, out, _ = _run(capsys, "hierarchy", "corpus", "--format", "dot")
    assert code == EXIT_OK
    assert out.startswith("digraph hierarchy {")
    assert '"VERB+NP" -> Eat' in out


def test_pretty_round_trips(capsys, tmp_path):
    code, out, _ = _run(capsys, "pretty", "corpus")
    assert code == EXIT_OK
    printed = tmp_path / "printed.dtr"
    printed.write_text(out)
    assert _run(capsys, "check", str(printed))[:2] == (EXIT_OK, "20 nodes, 0 errors, 0 warnings\n")
