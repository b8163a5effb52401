"""The simplicial category Δ inside Dpr.

Ordinals are 0-based here (``n = {0, ..., n-1}``); the translation to the
1-based positions used by :mod:`freeduals.dpr` happens only in
:func:`theta_map` and :func:`theta_inverse`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Tuple

from .core import ContractError
from .dpr import DiagMorphism, MarkedWord


class DomainError(ContractError):
    pass


@dataclass(frozen=True)
class SimplicialMap:
    """Order-preserving ``xi : m -> n`` stored as its value list."""

    m: int
    n: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.m < 0 or self.n < 0 or len(self.values) != self.m:
            raise ContractError(f"need {self.m} values in range {self.n}, got {self.values}")
        if any(not 0 <= v < self.n for v in self.values):
            raise ContractError(f"values {self.values} not inside {self.n}")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ContractError(f"values {self.values} are not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    @property
    def ell(self) -> frozenset:
        """Positions ``i`` with ``xi(i) = xi(i+1)``."""
        return frozenset(i for i in range(self.m - 1) if self.values[i] == self.values[i + 1])

    @property
    def r(self) -> frozenset:
        """Targets missed by ``xi``."""
        return frozenset(range(self.n)) - frozenset(self.values)

    @classmethod
    def from_encoding(cls, m: int, n: int, ell, r) -> "SimplicialMap":
        image = [j for j in range(n) if j not in set(r)]
        values, k = [], -1
        for i in range(m):
            if i == 0 or (i - 1) not in set(ell):
                k += 1
            if k >= len(image):
                raise ContractError(f"encoding ({sorted(ell)}, {sorted(r)}) does not fit {m} -> {n}")
            values.append(image[k])
        if k + 1 != len(image):
            raise ContractError(f"encoding ({sorted(ell)}, {sorted(r)}) does not fit {m} -> {n}")
        return cls(m, n, tuple(values))


def identity_map(n: int) -> SimplicialMap:
    return SimplicialMap(n, n, tuple(range(n)))


def face(n: int, i: int) -> SimplicialMap:
    """``∂_i : n -> n+1``, missing ``i``."""
    return SimplicialMap(n, n + 1, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy(n: int, i: int) -> SimplicialMap:
    """``σ_i : n+1 -> n``, identifying ``i`` and ``i+1``."""
    return SimplicialMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 1)))


def delta_compose(xi: SimplicialMap, psi: SimplicialMap) -> SimplicialMap:
    """``xi ∘ psi`` (apply ``psi`` first)."""
    if psi.n != xi.m:
        raise ContractError(f"cannot compose {psi.m}->{psi.n} with {xi.m}->{xi.n}")
    return SimplicialMap(psi.m, xi.n, tuple(xi(v) for v in psi.values))


def ordinal_sum(xi: SimplicialMap, psi: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(xi.m + psi.m, xi.n + psi.n,
                         xi.values + tuple(xi.n + v for v in psi.values))


def monotone_maps(m: int, n: int) -> Iterator[SimplicialMap]:
    for vals in itertools.combinations_with_replacement(range(n), m):
        yield SimplicialMap(m, n, vals)


def theta_obj(n: int) -> MarkedWord:
    """Alternating word ``(+-)^n``: even 0-based positions carry ``+``."""
    return MarkedWord(2 * n, frozenset(range(1, 2 * n, 2)))


def is_alternating(w: MarkedWord) -> bool:
    return all((i in w.plus) != (i + 1 in w.plus) for i in range(1, w.length))


def theta_map(xi: SimplicialMap) -> DiagMorphism:
    # 0-based complements {2i+1, 2i+2} and {2j, 2j+1}, shifted by one
    a_drop = {p for i in xi.ell for p in (2 * i + 2, 2 * i + 3)}
    b_drop = {p for j in xi.r for p in (2 * j + 1, 2 * j + 2)}
    dom, cod = theta_obj(xi.m), theta_obj(xi.n)
    return DiagMorphism(dom, cod, dom.positions() - a_drop, cod.positions() - b_drop)


def theta_inverse(f: DiagMorphism) -> SimplicialMap:
    """The unique ``xi`` with ``theta_map(xi) == f``."""
    if f.dom.length % 2 or f.cod.length % 2:
        raise DomainError("endpoints of odd length are not in the image of Θ")
    m, n = f.dom.length // 2, f.cod.length // 2
    if f.dom != theta_obj(m) or f.cod != theta_obj(n):
        raise DomainError(f"endpoints {f.dom} -> {f.cod} are not (+-)^m -> (+-)^n")
    ell, r = set(), set()
    for a, b in f.cups().items():
        if a < b:
            if b != a + 1:
                raise DomainError(f"cup ({a},{b}) on an alternating word must be adjacent")
            ell.add((a - 2) // 2)
    for a, b in f.caps().items():
        if a < b:
            if b != a + 1:
                raise DomainError(f"cap ({a},{b}) on an alternating word must be adjacent")
            r.add((a - 1) // 2)
    return SimplicialMap.from_encoding(m, n, ell, r)


def hom_count(m: int, n: int) -> int:
    """Number of monotone maps ``m -> n``, counted by brute force."""
    return sum(1 for _ in monotone_maps(m, n))

