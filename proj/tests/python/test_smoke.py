"""Smoke tests for the python bindings."""

import pytest

import freebraid as fb


def test_family_graph():
    g = fb.CoxeterGraph.family("A", 3)
    assert g.rank == 3
    assert g.family_name == "A"
    assert g.edges() == [(1, 2), (2, 3)]
    assert g.bond(1, 2) == 3
    assert g.bond(1, 3) == 2


def test_invalid_rank_raises():
    with pytest.raises(ValueError):
        fb.CoxeterGraph.family("D", 2)


def test_custom_graph_from_text():
    g = fb.CoxeterGraph.from_text("rank 3\nedge 1 2\nedge 2 3\n")
    assert g.edges() == [(1, 2), (2, 3)]
    with pytest.raises(ValueError):
        fb.CoxeterGraph.from_text("rank 3\nedge 1 2\nedge 2 1\n")


def test_classify_longest_element_of_a2():
    g = fb.CoxeterGraph.family("A", 2)
    rec = fb.classify(g, [1, 2, 1])
    assert rec["length"] == 3
    assert rec["N"] == 1
    assert rec["freely_braided"]
    assert rec["content_maximal"]
    assert not rec["fully_commutative"]
    assert rec["poincare"] == [1, 2, 2, 1]
    assert rec["smooth"]


def test_classify_3412():
    g = fb.CoxeterGraph.family("A", 3)
    rec = fb.classify(g, [2, 1, 3, 2])
    assert rec["N"] == 0
    assert rec["fully_commutative"]
    assert not rec["content_maximal"]
    assert not rec["smooth"]
    assert fb.one_line(g, [2, 1, 3, 2]) == [3, 4, 1, 2]
    assert not fb.ls_smooth([3, 4, 1, 2])


def test_root_sequence_and_words():
    g = fb.CoxeterGraph.family("A", 2)
    assert fb.root_sequence(g, [1, 2, 1]) == [[1, 0], [1, 1], [0, 1]]
    assert fb.all_reduced_words(g, [1, 2, 1]) == [[1, 2, 1], [2, 1, 2]]
    assert fb.canonical_word(g, [2, 2, 1]) == [1]
    assert not fb.is_reduced(g, [1, 1])


def test_contracted_expression():
    g = fb.CoxeterGraph.family("A", 2)
    word, braids = fb.contracted_expression(g, [2, 1, 2])
    assert word == [1, 2, 1]
    assert braids == [(0, 1, 2)]


def test_deletion_positions():
    g = fb.CoxeterGraph.family("A", 2)
    word, positions = fb.deletion_reduced_positions(g, [1, 2, 1])
    assert word == [1, 2, 1]
    assert positions == [0, 2]
    assert fb.content_maximal_length_bound(8) == 12


def test_counts_and_series():
    assert fb.count_content_maximal(fb.CoxeterGraph.family("A", 3)) == 19
    assert fb.count_content_maximal(fb.CoxeterGraph.family("D", 4)) == 62
    assert fb.series("A", 5) == [0, 2, 6, 19, 61, 196]
    assert fb.series("E", 8)[6:] == [652, 2096, 6739]
    assert fb.recurrence(2, 6, 19, 2) == [61, 196]


def test_census_report():
    rep = fb.census(fb.CoxeterGraph.family("A", 2), max_length=3)
    assert rep["total"] == 6
    assert rep["content_maximal"] == 6
    assert rep["fully_commutative"] == 5


def test_bruhat():
    g = fb.CoxeterGraph.family("A", 2)
    assert fb.bruhat_leq(g, [1, 2], [1, 2, 1])
    assert not fb.bruhat_leq(g, [1], [2])
    assert fb.poincare_polynomial(g, [1]) == [1, 1]


def test_verify_suite():
    out = fb.verify("theorem32", fb.CoxeterGraph.family("A", 3))
    assert out["passed"]
