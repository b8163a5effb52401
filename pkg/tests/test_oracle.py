from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from freeduals import dpr, dsig, homs, oracle
from freeduals.dpr import DiagMorphism, MarkedWord
from freeduals.oracle import COD, DOM, Matching

from _corpus import composable_pairs, dpr_chains, dpr_corpus, sig_corpus

W = MarkedWord.parse


def test_identity_matching():
    mt = oracle.to_matching(dpr.identity(W("-+")))
    assert mt.pairs == {((DOM, 1), (COD, 1)), ((DOM, 2), (COD, 2))}


def test_counit_matching():
    assert oracle.to_matching(dpr.counit()).pairs == {((DOM, 1), (DOM, 2))}


def test_eight_letter_example_matching():
    m = DiagMorphism(W("--+++-+-"), W("+++---"), {5, 8}, {1, 6})
    mt = oracle.to_matching(m)
    assert set(mt.cups()) == {((DOM, 1), (DOM, 4)), ((DOM, 2), (DOM, 3)), ((DOM, 6), (DOM, 7))}
    assert set(mt.caps()) == {((COD, 2), (COD, 5)), ((COD, 3), (COD, 4))}
    assert mt.through() == [((DOM, 5), (COD, 1)), ((DOM, 8), (COD, 6))]
    assert oracle.from_matching(mt) == m


def test_glue_eleven_letter_example():
    f = DiagMorphism(W("-++---+--++"), W("+--+---++-+"), {3, 4, 5, 8, 9, 10, 11}, {1, 2, 3, 6, 7, 8, 11})
    g = DiagMorphism(W("+--+---++-+"), W("+-++---"), {1, 2, 5}, {1, 2, 7})
    glued = oracle.glue_compose(oracle.to_matching(f), oracle.to_matching(g))
    h = oracle.from_matching(glued)
    assert (h.A, h.B) == ({3, 4, 5}, {1, 2, 7})


def test_glue_snake():
    f = DiagMorphism(W("-"), W("-+-"), {1}, {1})
    g = DiagMorphism(W("-+-"), W("-"), {3}, {1})
    glued = oracle.glue_compose(oracle.to_matching(f), oracle.to_matching(g))
    assert glued == oracle.to_matching(dpr.identity(W("-")))


def test_glue_identity_is_neutral():
    for g in dpr_corpus(3):
        assert oracle.glue_compose(oracle.to_matching(dpr.identity(g.dom)), oracle.to_matching(g)) == oracle.to_matching(g)


def test_glue_detects_loop():
    # oriented diagrams never close a loop, so these two ignore orientation
    up = Matching(dsig.DPR, (), ("-", "+"), {((COD, 1), (COD, 2))})
    down = Matching(dsig.DPR, ("-", "+"), (), {((DOM, 1), (DOM, 2))})
    with pytest.raises(oracle.InconsistencyError, match="loop"):
        oracle.glue_compose(up, down)


def test_glue_boundary_mismatch():
    with pytest.raises(oracle.CompositionError):
        oracle.glue_compose(oracle.to_matching(dpr.counit()), oracle.to_matching(dpr.counit()))


def test_planarity():
    crossing = Matching(dsig.DPR, ("-", "-"), ("-", "-"), {((DOM, 1), (COD, 2)), ((DOM, 2), (COD, 1))})
    assert not oracle.is_planar(crossing)
    assert oracle.is_perfect(crossing) and oracle.is_oriented(crossing)
    with pytest.raises(oracle.ContractError):
        oracle.from_matching(crossing)


def test_orientation():
    wrong_cup = Matching(dsig.DPR, ("+", "-"), (), {((DOM, 1), (DOM, 2))})
    assert oracle.is_planar(wrong_cup) and not oracle.is_oriented(wrong_cup)


def test_equivalence_exhaustive():
    for f, g in composable_pairs(dpr_corpus(4)):
        glued = oracle.glue_compose(oracle.to_matching(f), oracle.to_matching(g))
        assert oracle.is_planar(glued)
        assert oracle.from_matching(glued) == dpr.compose(f, g)


def test_equivalence_other_signatures():
    cjv = dsig.cjv_signature(["x", "y"], "x")
    corpus = [m for ms in sig_corpus(cjv, ("x", "y", "x^"), 4).values() for m in ms]
    for f, g in composable_pairs(corpus):
        glued = oracle.glue_compose(oracle.to_matching(f), oracle.to_matching(g))
        assert oracle.from_matching(glued) == dsig.sig_compose(f, g)


@given(dpr_chains(2, max_len=8))
def test_equivalence_random(chain):
    f, g = chain
    glued = oracle.glue_compose(oracle.to_matching(f), oracle.to_matching(g))
    assert oracle.from_matching(glued) == dpr.compose(f, g)


def test_enumerator_agrees_with_subset_homs():
    grouped = sig_corpus(dsig.DPR, ("-", "+"), 4)
    words = homs.words("-+", 4)
    for d in words:
        for c in words:
            expected = {oracle.to_matching(m) for m in grouped.get((d, c), [])}
            assert set(oracle.enumerate_matchings(dsig.DPR, d, c)) == expected


def test_render_ascii_mentions_endpoints():
    text = oracle.render_ascii(oracle.to_matching(dpr.counit()))
    assert "dom  -   +" in text and "-+ -> ε" in text


def test_render_svg_is_wellformed():
    m = DiagMorphism(W("--+++-+-"), W("+++---"), {5, 8}, {1, 6})
    root = ET.fromstring(oracle.render_svg(oracle.to_matching(m)))
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}path")) == 5
    assert len(root.findall(f"{ns}line")) == 2
    assert len(root.findall(f"{ns}text")) == 14
