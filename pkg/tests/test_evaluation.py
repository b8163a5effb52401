from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given

from freeduals import dpr, dsig, evaluation
from freeduals.evaluation import IntMatrix

from _corpus import composable_pairs, dpr_chains, dpr_corpus


def test_counit_and_unit_at_two():
    phi = evaluation.matrix_dual_pair(2)
    assert evaluation.evaluate(phi, dpr.counit()).tolist() == [[1, 0, 0, 1]]
    assert evaluation.evaluate(phi, dpr.unit()).tolist() == [[1], [0], [0], [1]]


def test_identity_goes_to_identity():
    phi = evaluation.matrix_dual_pair(2)
    m = evaluation.evaluate(phi, dpr.identity(dpr.MarkedWord.parse("-+-")))
    assert m == IntMatrix.identity(8)
    assert evaluation.evaluate(phi, dpr.identity(dpr.UNIT)) == IntMatrix.identity(1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_registration_snake_check(d):
    phi = evaluation.matrix_dual_pair(d)
    eps, eta = phi.counit("-"), phi.unit("-")
    I = IntMatrix.identity(d)
    assert phi.then(I.kron(eta), eps.kron(I)) == I
    if d == 1:
        assert eps.tolist() == [[1]] and eta.tolist() == [[1]]


def test_bad_duality_rejected():
    phi = evaluation.MatrixTarget(dsig.DPR, 2, ())
    phi.letters = frozenset("-+")
    with pytest.raises(evaluation.ConfigurationError, match="snake"):
        phi.register("-", IntMatrix([[1, 0, 0, 0]]), IntMatrix([[1], [0], [0], [1]]))


def test_unregistered_letter():
    phi = evaluation.MatrixTarget(dsig.DSEQ, 2, (0, 1))
    with pytest.raises(evaluation.ConfigurationError):
        evaluation.evaluate(phi, dsig.counit(dsig.DSEQ, 1))


def test_signature_mismatch():
    phi = evaluation.matrix_dual_pair(2)
    with pytest.raises(evaluation.ConfigurationError):
        evaluation.evaluate(phi, dsig.counit(dsig.DSEQ, 0))


def test_int_matrix_basics():
    a = IntMatrix([[1, 2], [3, 4]])
    assert (a @ IntMatrix.identity(2)) == a
    assert a.kron(IntMatrix.identity(1)) == a
    assert IntMatrix.zeros(0, 3).kron(a).data.shape == (0, 6)
    assert (IntMatrix.zeros(2, 0) @ IntMatrix.zeros(0, 3)) == IntMatrix.zeros(2, 3)
    with pytest.raises(evaluation.ContractError):
        a @ IntMatrix.zeros(3, 1)


def test_exact_big_entries():
    big = IntMatrix([[2 ** 70]])
    assert (big @ big).tolist() == [[2 ** 140]]


def test_functoriality_exhaustive_small():
    phi = evaluation.matrix_dual_pair(2)
    for f, g in composable_pairs(dpr_corpus(3)):
        lhs = evaluation.evaluate(phi, dpr.compose(f, g))
        assert lhs == phi.then(evaluation.evaluate(phi, f), evaluation.evaluate(phi, g))


@given(dpr_chains(2, max_len=5))
def test_functoriality_random(chain):
    phi = evaluation.matrix_dual_pair(2)
    f, g = chain
    assert evaluation.evaluate(phi, dpr.compose(f, g)) == phi.then(evaluation.evaluate(phi, f),
                                                                   evaluation.evaluate(phi, g))


@given(dpr_chains(1, max_len=4), dpr_chains(1, max_len=4))
def test_monoidality_random(fs, gs):
    phi = evaluation.matrix_dual_pair(2)
    (f,), (g,) = fs, gs
    assert evaluation.evaluate(phi, dpr.tensor(f, g)) == evaluation.evaluate(phi, f).kron(evaluation.evaluate(phi, g))


def test_kron_reassociation():
    rng = np.random.default_rng(0)
    a, b, c = (IntMatrix(rng.integers(-3, 4, size=(2, 3)).tolist()) for _ in range(3))
    assert a.kron(b).kron(c) == a.kron(b.kron(c))


def test_sequence_target():
    sig = dsig.DSEQ
    phi = evaluation.matrix_target(sig, 2, (0, 1, 2))
    ida = dsig.sig_identity(sig, (1,))
    snake = dsig.sig_compose(dsig.sig_tensor(ida, dsig.unit(sig, 1)), dsig.sig_tensor(dsig.counit(sig, 1), ida))
    assert evaluation.evaluate(phi, snake) == IntMatrix.identity(2)
