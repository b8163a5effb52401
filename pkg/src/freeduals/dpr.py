"""The free monoidal category Dpr containing a dual pair ``- -| +``.

Objects are marked words (a length plus the set of ``+`` positions); a
morphism ``(A, B)`` retains the positions joined by through-strands, the
complements carrying nested cups (domain) and caps (codomain).

>>> f = DiagMorphism(MarkedWord.parse("-"), MarkedWord.parse("-+-"), {1}, {1})
>>> g = DiagMorphism(MarkedWord.parse("-+-"), MarkedWord.parse("-"), {3}, {1})
>>> (f >> g) == identity(MarkedWord.parse("-"))
True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional

from . import core
from .core import CompositionError, ContractError

MINUS = "-"
PLUS = "+"
_ALIASES = {"-": MINUS, "−": MINUS, "+": PLUS}


class InvalidMorphism(ContractError):
    pass


@dataclass(frozen=True)
class MarkedWord:
    length: int
    plus: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        if self.length < 0:
            raise ContractError("negative word length")
        bad = [p for p in self.plus if not 1 <= p <= self.length]
        if bad:
            raise core.BoundsError(f"marks {sorted(bad)} outside <{self.length}>")

    @classmethod
    def parse(cls, text: str) -> "MarkedWord":
        """Read ``"-+-"`` (spaces ignored; ``""`` or ``"e"`` is the unit)."""
        letters = [ch for ch in text if not ch.isspace()]
        if letters in (["e"], ["ε"]):
            letters = []
        plus = set()
        for i, ch in enumerate(letters, 1):
            if ch not in _ALIASES:
                raise ContractError(f"position {i}: expected '-' or '+', got {ch!r}")
            if _ALIASES[ch] == PLUS:
                plus.add(i)
        return cls(len(letters), frozenset(plus))

    def letters(self) -> str:
        return "".join(PLUS if i in self.plus else MINUS for i in range(1, self.length + 1))

    def __str__(self) -> str:
        return self.letters() or "ε"

    def __add__(self, other: "MarkedWord") -> "MarkedWord":
        return MarkedWord(self.length + other.length,
                          self.plus | {p + self.length for p in other.plus})

    def positions(self) -> frozenset:
        return frozenset(range(1, self.length + 1))


UNIT = MarkedWord(0)


class Validation(NamedTuple):
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def check(dom: MarkedWord, cod: MarkedWord, A: Iterable[int], B: Iterable[int]) -> Validation:
    """Check the four morphism conditions, reporting the first that fails."""
    A, B = frozenset(A), frozenset(B)
    if not A <= dom.positions() or not B <= cod.positions():
        return Validation(False, "positions out of range")
    if len(A) != len(B):
        return Validation(False, f"condition (i): #A={len(A)} but #B={len(B)}")
    for a, b in zip(sorted(A), sorted(B)):
        if (a in dom.plus) != (b in cod.plus):
            return Validation(False, f"condition (ii): cobbers {a} and {b} carry different signs")
    if core.cup_pairs(dom.positions() - A, dom.plus) is None:
        return Validation(False, "condition (iii): A' is not a union of cups")
    if core.cap_pairs(cod.positions() - B, cod.plus) is None:
        return Validation(False, "condition (iv): B' is not a union of caps")
    return Validation(True)


@dataclass(frozen=True)
class DiagMorphism:
    dom: MarkedWord
    cod: MarkedWord
    A: frozenset
    B: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        verdict = check(self.dom, self.cod, self.A, self.B)
        if not verdict:
            raise InvalidMorphism(verdict.reason)

    def cups(self) -> core.PartnerMap:
        return core.cup_pairs(self.dom.positions() - self.A, self.dom.plus)

    def caps(self) -> core.PartnerMap:
        return core.cap_pairs(self.cod.positions() - self.B, self.cod.plus)

    def __rshift__(self, other: "DiagMorphism") -> "DiagMorphism":
        return compose(self, other)

    def __matmul__(self, other: "DiagMorphism") -> "DiagMorphism":
        return tensor(self, other)

    def __str__(self) -> str:
        return f"({sorted(self.A)}, {sorted(self.B)}) : {self.dom} -> {self.cod}"


def validate(m: DiagMorphism) -> Validation:
    return check(m.dom, m.cod, m.A, m.B)


def identity(w: MarkedWord) -> DiagMorphism:
    return DiagMorphism(w, w, w.positions(), w.positions())


def compose(f: DiagMorphism, g: DiagMorphism) -> DiagMorphism:
    """Diagrammatic composite: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose: codomain {f.cod} vs domain {g.dom}")
    E, F = core.compose_subsets(f.A, f.B, g.A, g.B, cup=g.cups(), cap=f.caps())
    return DiagMorphism(f.dom, g.cod, E, F)


def tensor(f: DiagMorphism, g: DiagMorphism) -> DiagMorphism:
    m, n = f.dom.length, f.cod.length
    return DiagMorphism(f.dom + g.dom, f.cod + g.cod,
                        f.A | {a + m for a in g.A}, f.B | {b + n for b in g.B})


def is_invertible(m: DiagMorphism) -> bool:
    return m.A == m.dom.positions() and m.B == m.cod.positions()


def nested_cup(h: int) -> DiagMorphism:
    """Counit of ``-^h -| +^h``: ``-^h +^h -> unit``."""
    return DiagMorphism(MarkedWord.parse(MINUS * h + PLUS * h), UNIT, (), ())


def nested_cap(k: int) -> DiagMorphism:
    """Unit of ``-^k -| +^k``: ``unit -> +^k -^k``."""
    return DiagMorphism(UNIT, MarkedWord.parse(PLUS * k + MINUS * k), (), ())


def counit() -> DiagMorphism:
    return nested_cup(1)


def unit() -> DiagMorphism:
    return nested_cap(1)


def _restrict(w: MarkedWord, positions) -> MarkedWord:
    return MarkedWord(len(positions), {i for i, p in enumerate(positions, 1) if p in w.plus})


def decompose(m: DiagMorphism) -> List[DiagMorphism]:
    """Unique factorisation ``f1 (x) e1 (x) f2 (x) ... (x) fk``.

    The ``f`` factors are identities on maximal through-strand blocks (the
    first and last may sit on the empty word); the ``e`` factors are
    elementary ``(empty, empty)`` morphisms.
    """
    verdict = validate(m)
    if not verdict:
        raise InvalidMorphism(verdict.reason)
    out = []
    for kind, dpos, cpos in core.factor_segments(m.A, m.B, m.dom.length, m.cod.length):
        d, c = _restrict(m.dom, dpos), _restrict(m.cod, cpos)
        if kind == "id":
            out.append(identity(d))
        else:
            out.append(DiagMorphism(d, c, (), ()))
    return out


def tensor_all(factors: Iterable[DiagMorphism]) -> DiagMorphism:
    result = identity(UNIT)
    for f in factors:
        result = tensor(result, f)
    return result
