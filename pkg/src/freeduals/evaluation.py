"""Strict monoidal functors out of Dpr and D(Λ, σ).

A morphism is sent to the target by way of its unique factorisation: identity
blocks go to identities, an elementary block goes to its nested caps after its
nested cups, and the images are tensored in order.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, Sequence

import numpy as np

from . import dsig
from .core import ContractError, DiagramError
from .dsig import Signature, SigMorphism


class ConfigurationError(DiagramError, KeyError):
    pass


class IntMatrix:
    """Exact integer matrix; ``@`` is the matrix product, ``kron`` the tensor."""

    __slots__ = ("data",)

    def __init__(self, rows):
        data = np.array(rows, dtype=object)
        if data.ndim != 2:
            raise ContractError(f"expected a 2-d grid, got shape {data.shape}")
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls._wrap(np.zeros((rows, cols), dtype=object) + 0)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        out = np.zeros((n, n), dtype=object)
        for i in range(n):
            out[i, i] = 1
        return cls._wrap(out)

    @classmethod
    def _wrap(cls, data) -> "IntMatrix":
        obj = cls.__new__(cls)
        obj.data = data
        return obj

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ContractError(f"shape mismatch {self.data.shape} @ {other.data.shape}")
        if self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix._wrap(self.data.dot(other.data))

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        r, c = self.rows * other.rows, self.cols * other.cols
        if r == 0 or c == 0:
            return IntMatrix.zeros(r, c)
        return IntMatrix._wrap(np.kron(self.data, other.data))

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntMatrix) and self.data.shape == other.data.shape
                and all(int(a) == int(b) for a, b in zip(self.data.flat, other.data.flat)))

    def __hash__(self):
        return hash((self.data.shape, tuple(int(x) for x in self.data.flat)))

    def tolist(self):
        return [[int(x) for x in row] for row in self.data]

    def to_text(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<{self.rows}x{self.cols} empty>"
        return "\n".join(" ".join(str(int(x)) for x in row) for row in self.data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


class DualPairTarget:
    """A strict monoidal target with chosen dualities ``X_a -| X_{σa}``.

    Subclasses supply objects and the strict monoidal structure; duality data
    is added with :meth:`register`, which checks both snake equations.
    """

    def __init__(self, sig: Signature):
        self.sig = sig
        self._counits: Dict[Hashable, object] = {}
        self._units: Dict[Hashable, object] = {}

    # strict monoidal structure, supplied by subclasses
    def identity(self, word: Sequence[Hashable]):
        raise NotImplementedError

    def then(self, f, g):
        """Composite: first ``f``, then ``g``."""
        raise NotImplementedError

    def tensor(self, f, g):
        raise NotImplementedError

    def register(self, a: Hashable, counit, unit) -> None:
        b = self.sig.succ(a)
        if b is None:
            raise ConfigurationError(f"σ is undefined at {a!r}")
        left = self.then(self.tensor(self.identity((a,)), unit),
                         self.tensor(counit, self.identity((a,))))
        right = self.then(self.tensor(unit, self.identity((b,))),
                          self.tensor(self.identity((b,)), counit))
        if left != self.identity((a,)):
            raise ConfigurationError(f"snake equation fails on {a!r}")
        if right != self.identity((b,)):
            raise ConfigurationError(f"snake equation fails on {b!r}")
        self._counits[a] = counit
        self._units[a] = unit

    def counit(self, a: Hashable):
        try:
            return self._counits[a]
        except KeyError:
            raise ConfigurationError(f"no duality registered for letter {a!r}") from None

    def unit(self, a: Hashable):
        try:
            return self._units[a]
        except KeyError:
            raise ConfigurationError(f"no duality registered for letter {a!r}") from None


class MatrixTarget(DualPairTarget):
    """Integer matrices; every letter is a ``d``-dimensional space."""

    def __init__(self, sig: Signature, d: int, letters: Iterable[Hashable]):
        if d < 1:
            raise ContractError("dimension must be at least 1")
        super().__init__(sig)
        self.d = d
        self.letters = frozenset(letters)
        vec = IntMatrix([[1 if i == j else 0] for i in range(d) for j in range(d)])
        cov = IntMatrix([[1 if i == j else 0 for i in range(d) for j in range(d)]])
        for a in sorted(self.letters, key=repr):
            b = sig.succ(a)
            if b is not None and b in self.letters:
                self.register(a, cov, vec)

    def dim(self, word: Sequence[Hashable]) -> int:
        for s in word:
            if s not in self.letters:
                raise ConfigurationError(f"letter {s!r} has no assigned object")
        return self.d ** len(word)

    def identity(self, word):
        return IntMatrix.identity(self.dim(word))

    def then(self, f: IntMatrix, g: IntMatrix) -> IntMatrix:
        return g @ f

    def tensor(self, f: IntMatrix, g: IntMatrix) -> IntMatrix:
        return f.kron(g)


def matrix_dual_pair(d: int) -> MatrixTarget:
    """``- -| +`` sent to a ``d``-dimensional space and its dual."""
    return MatrixTarget(dsig.DPR, d, ("-", "+"))


def matrix_target(sig: Signature, d: int, letters: Iterable[Hashable]) -> MatrixTarget:
    return MatrixTarget(sig, d, letters)


def _cups_image(phi: DualPairTarget, word, partner, lo: int, hi: int):
    """Image of the nested cups on positions ``lo..hi`` (all paired)."""
    out = phi.identity(())
    p = lo
    while p <= hi:
        q = partner[p]
        inner = _cups_image(phi, word, partner, p + 1, q - 1)
        a = word[p - 1]
        piece = phi.then(
            phi.tensor(phi.tensor(phi.identity((a,)), inner), phi.identity((word[q - 1],))),
            phi.counit(a))
        out = phi.tensor(out, piece)
        p = q + 1
    return out


def _caps_image(phi: DualPairTarget, word, partner, lo: int, hi: int):
    out = phi.identity(())
    p = lo
    while p <= hi:
        q = partner[p]
        inner = _caps_image(phi, word, partner, p + 1, q - 1)
        a = word[q - 1]
        piece = phi.then(
            phi.unit(a),
            phi.tensor(phi.tensor(phi.identity((word[p - 1],)), inner), phi.identity((a,))))
        out = phi.tensor(out, piece)
        p = q + 1
    return out


def evaluate(phi: DualPairTarget, m) -> object:
    """Image of a Dpr or D(Λ, σ) morphism under the functor fixed by ``phi``."""
    m = dsig.as_sig(m)
    if m.sig != phi.sig:
        raise ConfigurationError(f"target is for {phi.sig.name}, morphism lives in {m.sig.name}")
    out = phi.identity(())
    for factor in dsig.sig_decompose(m):
        if factor.A:
            image = phi.identity(factor.dom)
        else:
            down = _cups_image(phi, factor.dom, factor.cups(), 1, len(factor.dom))
            up = _caps_image(phi, factor.cod, factor.caps(), 1, len(factor.cod))
            image = phi.then(down, up)
        out = phi.tensor(out, image)
    return out
