"""End-to-end smoke tests for the python bindings."""

import os
from fractions import Fraction

import pytest

posslog = pytest.importorskip("posslog")

FIXTURES = os.environ.get("POSSLOG_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "fixtures"))


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_parse_and_render():
    f = posslog.parse("p & !p")
    assert str(f) == "(p & !p)"
    assert posslog.atoms(f) == {"p"}
    assert posslog.parse("p^") == posslog.expand_circ(posslog.parse("p"))
    with pytest.raises(posslog.FormulaParseError):
        posslog.parse("p &")


def test_validity_and_countermodels():
    assert posslog.c1_valid("p | !p")
    assert not posslog.c1_valid("!(p & !p)")
    assert posslog.c1_valid("p -> !!p")
    assert not posslog.c1_valid("p -> !!p", weak_neg=True)

    cm = posslog.find_countermodel(["p -> q", "!q"], "!p")
    assert cm is not None
    assert cm["p"] == 1 and cm["!p"] == 0

    assert posslog.c1_entails(["p", "p -> q"], "q")
    assert posslog.classical_entails(["p", "p -> q"], "q")
    assert posslog.classical_satisfiable(["p", "!p"]) is None


def test_witness_base():
    kb = posslog.KB.load(fixture("witness.pkb"), max_evalset=512)
    assert kb.logic == "c1"
    assert len(kb) == 9
    assert kb.closure_value("female") == 1
    assert kb.closure_value("glasses") == Fraction(1, 2)
    assert kb.entails("!glasses")
    assert not kb.entails("BMW")
    detail = kb.entail_detail("!glasses")
    assert detail["n"] == 1
    assert detail["n_badly"] == Fraction(1, 2)
    rows = kb.closure_report(["brown"])
    assert rows[0]["n"] == 1 and rows[0]["n_neg"] == 1


def test_fusion_matches_stored_base():
    w1 = posslog.KB.load(fixture("witness_w1.pkb"), max_evalset=512)
    w2 = posslog.KB.load(fixture("witness_w2.pkb"), max_evalset=512)
    fused = posslog.fuse(w1, w2)
    assert len(fused) == 9
    assert fused.entails("female")


def test_classical_mode():
    kb = posslog.KB.load(fixture("drowning.pkb"))
    assert kb.inconsistency_degree() == Fraction(1, 3)
    assert kb.classical_entails_graded("!fly")
    assert not kb.classical_entails_graded("wings")


def test_defaults():
    d = posslog.Defaults.load(fixture("penguin.dft"), max_evalset=512)
    assert d.entails("!fly")
    assert d.entails("wings")
    assert not d.entails("!live-in-Antarctica")
    survivors = d.fixpoint_rules()
    assert len(survivors) == 4
    assert "fly => !live-in-Antarctica" not in survivors

    ranks = posslog.z_rank([("penguin", "bird"), ("penguin", "!fly"), ("bird", "fly"),
                            ("bird", "wings")])
    assert ranks == [[2, 3], [0, 1]]


def test_hilbert():
    trace = posslog.hilbert_derive("p -> (q -> p)", depth=1)
    assert trace is not None and "axiom 1" in trace
    assert posslog.hilbert_derive("q", depth=3) is None
