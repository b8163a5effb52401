from __future__ import annotations

import pytest
from hypothesis import given

from freeduals import dpr
from freeduals.dpr import DiagMorphism, MarkedWord

from _corpus import composable_pairs, composable_triples, dpr_chains, dpr_corpus

W = MarkedWord.parse


def test_marked_word_parse_and_print():
    w = W("-+-")
    assert w.length == 3 and w.plus == {2}
    assert str(W("")) == "ε" and W("e") == dpr.UNIT
    assert W("−+") == W("-+")
    with pytest.raises(dpr.ContractError, match="position 2"):
        W("-x")


def test_marked_word_rejects_bad_marks():
    with pytest.raises(dpr.core.BoundsError):
        MarkedWord(2, {3})


@pytest.mark.parametrize("dom, cod, A, B, ok, condition", [
    ("-+", "", (), (), True, None),
    ("", "+-", (), (), True, None),
    ("-", "+", (1,), (1,), False, "(ii)"),
    ("-", "-+-", (1,), (), False, "(i)"),
    ("+-", "", (), (), False, "(iii)"),
    ("", "-+", (), (), False, "(iv)"),
])
def test_check(dom, cod, A, B, ok, condition):
    verdict = dpr.check(W(dom), W(cod), A, B)
    assert verdict.ok is ok
    if condition:
        assert condition in verdict.reason


def test_constructor_is_eager():
    with pytest.raises(dpr.InvalidMorphism):
        DiagMorphism(W("-"), W("+"), {1}, {1})


@pytest.mark.parametrize("w, expected", [("", set()), ("-+", {1, 2}), ("+", {1})])
def test_identity(w, expected):
    m = dpr.identity(W(w))
    assert m.A == expected and m.B == expected


def snake_factors():
    X, Y = W("-"), W("+")
    x_eta = DiagMorphism(X, W("-+-"), {1}, {1})
    eps_x = DiagMorphism(W("-+-"), X, {3}, {1})
    eta_y = DiagMorphism(Y, W("+-+"), {1}, {3})
    y_eps = DiagMorphism(W("+-+"), Y, {1}, {1})
    return x_eta, eps_x, eta_y, y_eps


def test_snake_identities():
    x_eta, eps_x, eta_y, y_eps = snake_factors()
    assert dpr.compose(x_eta, eps_x) == dpr.identity(W("-"))
    assert dpr.compose(eta_y, y_eps) == dpr.identity(W("+"))


def test_snake_factors_are_tensors_of_generators():
    x_eta, eps_x, eta_y, y_eps = snake_factors()
    idx, idy = dpr.identity(W("-")), dpr.identity(W("+"))
    assert dpr.tensor(idx, dpr.unit()) == x_eta
    assert dpr.tensor(dpr.counit(), idx) == eps_x
    assert dpr.tensor(dpr.unit(), idy) == eta_y
    assert dpr.tensor(idy, dpr.counit()) == y_eps


def test_nested_snakes():
    for h in range(1, 4):
        X = W("-" * h)
        a = dpr.tensor(dpr.identity(X), dpr.nested_cap(h))
        b = dpr.tensor(dpr.nested_cup(h), dpr.identity(X))
        assert dpr.compose(a, b) == dpr.identity(X)


def test_composite_of_eleven_letter_example():
    f = DiagMorphism(W("-++---+--++"), W("+--+---++-+"), {3, 4, 5, 8, 9, 10, 11}, {1, 2, 3, 6, 7, 8, 11})
    g = DiagMorphism(W("+--+---++-+"), W("+-++---"), {1, 2, 5}, {1, 2, 7})
    h = dpr.compose(f, g)
    assert (h.A, h.B) == ({3, 4, 5}, {1, 2, 7})


def test_compose_boundary_mismatch():
    with pytest.raises(dpr.CompositionError):
        dpr.compose(dpr.counit(), dpr.counit())


def test_tensor_examples():
    f = dpr.tensor(dpr.counit(), dpr.identity(W("-")))
    assert (f.dom, f.cod, f.A, f.B) == (W("-+-"), W("-"), {3}, {1})
    e = dpr.identity(dpr.UNIT)
    assert dpr.tensor(f, e) == f == dpr.tensor(e, f)
    assert dpr.tensor(dpr.identity(W("-+")), dpr.identity(W("+"))) == dpr.identity(W("-++"))


def test_is_invertible():
    assert dpr.is_invertible(dpr.identity(W("-+-")))
    assert not dpr.is_invertible(dpr.counit())
    assert not dpr.is_invertible(DiagMorphism(W("--+"), W("-"), {1}, {1}))


def test_nested_generators():
    assert dpr.nested_cup(1) == dpr.counit()
    assert dpr.nested_cap(1) == dpr.unit()
    assert dpr.nested_cup(0) == dpr.identity(dpr.UNIT)
    assert dpr.nested_cup(2).dom == W("--++")
    assert dpr.nested_cap(2).cod == W("++--")


def test_decompose_examples():
    assert dpr.decompose(dpr.identity(W("-+"))) == [dpr.identity(W("-+"))]
    e = dpr.identity(dpr.UNIT)
    assert dpr.decompose(dpr.counit()) == [e, dpr.counit(), e]


def test_decompose_eight_letter_example():
    m = DiagMorphism(W("--+++-+-"), W("+++---"), {5, 8}, {1, 6})
    assert m.cups() == {1: 4, 4: 1, 2: 3, 3: 2, 6: 7, 7: 6}
    assert m.caps() == {2: 5, 5: 2, 3: 4, 4: 3}
    factors = dpr.decompose(m)
    shapes = [(str(f.dom), str(f.cod), dpr.is_invertible(f)) for f in factors]
    assert shapes == [("ε", "ε", True), ("--++", "ε", False), ("+", "+", True),
                      ("-+", "++--", False), ("-", "-", True)]
    assert dpr.tensor_all(factors) == m


def test_closure_and_unit_laws_exhaustive():
    ms = dpr_corpus(4)
    for f in ms:
        assert dpr.validate(f)
        assert dpr.compose(dpr.identity(f.dom), f) == f
        assert dpr.compose(f, dpr.identity(f.cod)) == f
    for f, g in composable_pairs(ms):
        assert dpr.validate(dpr.compose(f, g))


def test_associativity_exhaustive_small():
    for f, g, h in composable_triples(dpr_corpus(3)):
        assert dpr.compose(dpr.compose(f, g), h) == dpr.compose(f, dpr.compose(g, h))


@given(dpr_chains(3, max_len=8))
def test_associativity_random(chain):
    f, g, h = chain
    assert dpr.compose(dpr.compose(f, g), h) == dpr.compose(f, dpr.compose(g, h))


@given(dpr_chains(2), dpr_chains(2))
def test_interchange_random(fs, gs):
    (f, f2), (g, g2) = fs, gs
    lhs = dpr.tensor(dpr.compose(f, f2), dpr.compose(g, g2))
    rhs = dpr.compose(dpr.tensor(f, g), dpr.tensor(f2, g2))
    assert lhs == rhs


@given(dpr_chains(1, max_len=8))
def test_decompose_roundtrip_random(chain):
    m, = chain
    factors = dpr.decompose(m)
    assert dpr.tensor_all(factors) == m
    kinds = [dpr.is_invertible(f) for f in factors]
    assert kinds[0] and kinds[-1]
    assert all(kinds[i] != kinds[i + 1] for i in range(len(kinds) - 1))
