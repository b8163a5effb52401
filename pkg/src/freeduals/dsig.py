"""Diagram categories D(Λ, σ) over an alphabet with a partial successor.

A letter ``s`` with ``σ(s)`` defined gets a duality ``s -| σ(s)``.  Words are
tuples of symbols.  Built-in signatures:

* :data:`DPR` -- ``{-, +}`` with ``σ(-) = +``;
* :data:`DSEQ` -- the naturals with ``σ(n) = n + 1``;
* :data:`DZ` -- the integers with ``σ(n) = n + 1``;
* :func:`cjv_signature` -- a free monoidal category on a set with a right
  dual adjoined to one generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from . import core, dpr
from .core import AmbiguousMatchingError, CompositionError, ContractError, Interval

Symbol = Hashable
Word = Tuple[Symbol, ...]


class SignatureError(ContractError):
    pass


@dataclass(frozen=True, eq=False)
class Signature:
    """An alphabet with an injective, acyclic partial successor ``σ``.

    Finite signatures keep ``σ`` in ``table``; infinite ones supply ``rule``
    and ``member`` and are only ever checked on the letters actually used.
    """

    name: str
    table: Mapping[Symbol, Symbol] = field(default_factory=dict)
    alphabet: Optional[frozenset] = None
    rule: Optional[Callable[[Symbol], Optional[Symbol]]] = None
    member: Optional[Callable[[Symbol], bool]] = None

    def succ(self, s: Symbol) -> Optional[Symbol]:
        if self.rule is not None:
            return self.rule(s)
        return self.table.get(s)

    def __contains__(self, s: Symbol) -> bool:
        if self.member is not None:
            return self.member(s)
        return s in self.alphabet

    def __eq__(self, other) -> bool:
        return isinstance(other, Signature) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"Signature({self.name!r})"

    def check_word(self, w: Sequence[Symbol]) -> None:
        for i, s in enumerate(w, 1):
            if s not in self:
                raise SignatureError(f"position {i}: {s!r} is not a letter of {self.name}")

    def check_fragment(self, letters: Iterable[Symbol]) -> None:
        """Verify injectivity and acyclicity of σ restricted to ``letters``."""
        letters = set(letters)
        seen = {}
        for s in letters:
            t = self.succ(s)
            if t is None:
                continue
            if t in seen and seen[t] != s:
                raise SignatureError(f"σ({seen[t]!r}) = σ({s!r}) = {t!r} violates injectivity")
            seen[t] = s
        for s in letters:
            t, steps = self.succ(s), 1
            while t is not None and t in letters and steps <= len(letters):
                if t == s:
                    raise SignatureError(f"σ^{steps}({s!r}) = {s!r} violates acyclicity")
                t, steps = self.succ(t), steps + 1

    def format_word(self, w: Sequence[Symbol]) -> str:
        if not w:
            return "ε"
        if self.name == "dpr":
            return "".join(w)
        return " ".join(str(s) for s in w)


def make_signature(pairs: Iterable[Tuple[Symbol, Symbol]], alphabet: Iterable[Symbol] = (),
                   name: Optional[str] = None) -> Signature:
    """Build a finite signature from ``(s, σ(s))`` pairs, rejecting bad ``σ``."""
    table = {}
    for s, t in pairs:
        if s in table and table[s] != t:
            raise SignatureError(f"σ({s!r}) given twice")
        table[s] = t
    letters = frozenset(alphabet) | frozenset(table) | frozenset(table.values())
    sig = Signature(name or "sig:" + ",".join(f"{s}>{t}" for s, t in sorted(table.items(), key=repr)),
                    table=dict(table), alphabet=letters)
    sig.check_fragment(letters)
    return sig


DPR = make_signature([(dpr.MINUS, dpr.PLUS)], name="dpr")
DSEQ = Signature("dseq", rule=lambda n: n + 1,
                 member=lambda n: isinstance(n, int) and not isinstance(n, bool) and n >= 0)
DZ = Signature("dz", rule=lambda n: n + 1,
               member=lambda n: isinstance(n, int) and not isinstance(n, bool))


def free_signature(alphabet: Iterable[Symbol], name: Optional[str] = None) -> Signature:
    """σ with empty domain: the free monoidal category on ``alphabet``."""
    alphabet = frozenset(alphabet)
    return Signature(name or "free:" + ",".join(sorted(map(str, alphabet))), alphabet=alphabet)


def dual_symbol(J: Symbol) -> str:
    return f"{J}^"


def cjv_signature(pi: Iterable[Symbol], J: Symbol) -> Signature:
    """Signature whose D(Λ, σ) is the free monoidal category on ``pi`` with a
    right dual ``J^`` adjoined to the generator ``J``."""
    pi = frozenset(pi)
    if J not in pi:
        raise SignatureError(f"{J!r} is not among the generators {sorted(pi)}")
    Jv = dual_symbol(J)
    if Jv in pi:
        raise SignatureError(f"dual symbol {Jv!r} clashes with a generator")
    name = "cjv:" + ",".join(sorted(map(str, pi))) + f":{J}"
    return Signature(name, table={J: Jv}, alphabet=pi | {Jv})


def signature_from_name(name: str) -> Signature:
    """``dpr``, ``dseq``, ``dz``, or ``cjv:<letters>:<J>`` (letters comma separated
    or run together as single characters)."""
    if name == "dpr":
        return DPR
    if name == "dseq":
        return DSEQ
    if name == "dz":
        return DZ
    if name.startswith("cjv:"):
        parts = name.split(":")
        if len(parts) != 3 or not parts[1] or not parts[2]:
            raise SignatureError(f"expected cjv:<letters>:<J>, got {name!r}")
        letters = parts[1].split(",") if "," in parts[1] else list(parts[1])
        return cjv_signature(letters, parts[2])
    raise SignatureError(f"unknown signature {name!r}")


def base_letters(sig: Signature) -> Optional[frozenset]:
    """Generators of the base category for a ``cjv`` signature (no ``J^``)."""
    if sig.alphabet is None:
        return None
    return frozenset(s for s in sig.alphabet if s not in set(sig.table.values()))


# -- cups and caps ---------------------------------------------------------

def cup_pairable(sig: Signature, w: Sequence[Symbol]):
    return lambda m, n: sig.succ(w[m - 1]) == w[n - 1]


def cap_pairable(sig: Signature, w: Sequence[Symbol]):
    return lambda m, n: sig.succ(w[n - 1]) == w[m - 1]


def sig_is_cup(iv: Interval, w: Sequence[Symbol], sig: Signature) -> bool:
    """``iv`` is a ``w``-cup: even size, ``w[n] = σ w[m]`` at matching depths."""
    core._check_interval(Interval(*iv), len(w))
    return core.is_rainbow(Interval(*iv), cup_pairable(sig, w))


def sig_is_cap(iv: Interval, w: Sequence[Symbol], sig: Signature) -> bool:
    core._check_interval(Interval(*iv), len(w))
    return core.is_rainbow(Interval(*iv), cap_pairable(sig, w))


def _positions(w) -> frozenset:
    return frozenset(range(1, len(w) + 1))


def cup_matching(sig: Signature, w: Sequence[Symbol], region) -> Optional[core.PartnerMap]:
    return core.matching_pairs(region, cup_pairable(sig, w))


def cap_matching(sig: Signature, w: Sequence[Symbol], region) -> Optional[core.PartnerMap]:
    return core.matching_pairs(region, cap_pairable(sig, w))


# -- morphisms -------------------------------------------------------------

class InvalidSigMorphism(ContractError):
    pass


class Validation(NamedTuple):
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def sig_check(sig: Signature, dom: Sequence[Symbol], cod: Sequence[Symbol],
              A: Iterable[int], B: Iterable[int]) -> Validation:
    A, B = frozenset(A), frozenset(B)
    for w in (dom, cod):
        for i, s in enumerate(w, 1):
            if s not in sig:
                return Validation(False, f"letter {s!r} at position {i} not in {sig.name}")
    if not A <= _positions(dom) or not B <= _positions(cod):
        return Validation(False, "positions out of range")
    if len(A) != len(B):
        return Validation(False, f"condition (i): #A={len(A)} but #B={len(B)}")
    for a, b in zip(sorted(A), sorted(B)):
        if dom[a - 1] != cod[b - 1]:
            return Validation(False, f"condition (ii): cobbers {a}, {b} carry "
                                     f"{dom[a - 1]!r} and {cod[b - 1]!r}")
    try:
        if cup_matching(sig, dom, _positions(dom) - A) is None:
            return Validation(False, "condition (iii): A' is not a union of cups")
        if cap_matching(sig, cod, _positions(cod) - B) is None:
            return Validation(False, "condition (iv): B' is not a union of caps")
    except AmbiguousMatchingError as exc:
        return Validation(False, f"ambiguous: {exc}")
    return Validation(True)


@dataclass(frozen=True)
class SigMorphism:
    sig: Signature
    dom: Word
    cod: Word
    A: frozenset
    B: frozenset

    def __post_init__(self):
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "cod", tuple(self.cod))
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        verdict = sig_check(self.sig, self.dom, self.cod, self.A, self.B)
        if not verdict:
            raise InvalidSigMorphism(verdict.reason)

    def cups(self) -> core.PartnerMap:
        return cup_matching(self.sig, self.dom, _positions(self.dom) - self.A)

    def caps(self) -> core.PartnerMap:
        return cap_matching(self.sig, self.cod, _positions(self.cod) - self.B)

    def __rshift__(self, other: "SigMorphism") -> "SigMorphism":
        return sig_compose(self, other)

    def __matmul__(self, other: "SigMorphism") -> "SigMorphism":
        return sig_tensor(self, other)

    def __str__(self) -> str:
        return (f"({sorted(self.A)}, {sorted(self.B)}) : "
                f"{self.sig.format_word(self.dom)} -> {self.sig.format_word(self.cod)}")


def sig_validate(m: SigMorphism) -> Validation:
    return sig_check(m.sig, m.dom, m.cod, m.A, m.B)


def sig_identity(sig: Signature, w: Sequence[Symbol]) -> SigMorphism:
    return SigMorphism(sig, w, w, _positions(w), _positions(w))


def sig_compose(f: SigMorphism, g: SigMorphism) -> SigMorphism:
    """Diagrammatic composite: first ``f``, then ``g``."""
    if f.sig != g.sig:
        raise CompositionError(f"signatures differ: {f.sig.name} vs {g.sig.name}")
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose: codomain {f.sig.format_word(f.cod)} "
                               f"vs domain {g.sig.format_word(g.dom)}")
    E, F = core.compose_subsets(f.A, f.B, g.A, g.B, cup=g.cups(), cap=f.caps())
    return SigMorphism(f.sig, f.dom, g.cod, E, F)


def sig_tensor(f: SigMorphism, g: SigMorphism) -> SigMorphism:
    if f.sig != g.sig:
        raise ContractError(f"signatures differ: {f.sig.name} vs {g.sig.name}")
    m, n = len(f.dom), len(f.cod)
    return SigMorphism(f.sig, f.dom + g.dom, f.cod + g.cod,
                       f.A | {a + m for a in g.A}, f.B | {b + n for b in g.B})


def sig_tensor_all(sig: Signature, factors: Iterable[SigMorphism]) -> SigMorphism:
    result = sig_identity(sig, ())
    for f in factors:
        result = sig_tensor(result, f)
    return result


def sig_compose_all(first: SigMorphism, *rest: SigMorphism) -> SigMorphism:
    result = first
    for g in rest:
        result = sig_compose(result, g)
    return result


def is_identity(m: SigMorphism) -> bool:
    return m.A == _positions(m.dom) and m.B == _positions(m.cod)


def elementary(sig: Signature, dom: Sequence[Symbol], cod: Sequence[Symbol]) -> SigMorphism:
    return SigMorphism(sig, dom, cod, (), ())


def counit(sig: Signature, a: Symbol) -> SigMorphism:
    """``a σa -> ε``."""
    b = sig.succ(a)
    if b is None:
        raise SignatureError(f"σ is undefined at {a!r}")
    return elementary(sig, (a, b), ())


def unit(sig: Signature, a: Symbol) -> SigMorphism:
    """``ε -> σa a``."""
    b = sig.succ(a)
    if b is None:
        raise SignatureError(f"σ is undefined at {a!r}")
    return elementary(sig, (), (b, a))


def sig_decompose(m: SigMorphism) -> List[SigMorphism]:
    """Alternating identity / elementary factors whose tensor is ``m``."""
    out = []
    for kind, dpos, cpos in core.factor_segments(m.A, m.B, len(m.dom), len(m.cod)):
        d = tuple(m.dom[p - 1] for p in dpos)
        c = tuple(m.cod[p - 1] for p in cpos)
        out.append(sig_identity(m.sig, d) if kind == "id" else elementary(m.sig, d, c))
    return out


# -- Dpr translation -------------------------------------------------------

def from_marked(w: dpr.MarkedWord) -> Word:
    return tuple(w.letters())


def to_marked(w: Sequence[Symbol]) -> dpr.MarkedWord:
    return dpr.MarkedWord.parse("".join(w))


def from_dpr(m: dpr.DiagMorphism) -> SigMorphism:
    return SigMorphism(DPR, from_marked(m.dom), from_marked(m.cod), m.A, m.B)


def to_dpr(m: SigMorphism) -> dpr.DiagMorphism:
    if m.sig != DPR:
        raise ContractError(f"{m.sig.name} morphism is not a Dpr morphism")
    return dpr.DiagMorphism(to_marked(m.dom), to_marked(m.cod), m.A, m.B)


def as_sig(m) -> SigMorphism:
    return from_dpr(m) if isinstance(m, dpr.DiagMorphism) else m


# -- objects of N[1^] as height-two trees ------------------------------------

def tree_tensor(u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    """Glue ``(u0..um) (x) (v0..vn) = (u0..u(m-1), um+v0, v1..vn)``."""
    u, v = tuple(u), tuple(v)
    return u[:-1] + (u[-1] + v[0],) + v[1:]


def word_to_tree(w: Iterable[str]) -> Tuple[int, ...]:
    """``-`` goes to ``(1)``, ``+`` to ``(0, 0)``; extended multiplicatively."""
    code: Tuple[int, ...] = (0,)
    for ch in w:
        if ch == dpr.MINUS:
            code = tree_tensor(code, (1,))
        elif ch == dpr.PLUS:
            code = tree_tensor(code, (0, 0))
        else:
            raise ContractError(f"expected '-' or '+', got {ch!r}")
    return code


def tree_to_word(code: Sequence[int]) -> str:
    if not code or any(c < 0 for c in code):
        raise ContractError(f"tree code must be a non-empty sequence of naturals, got {code!r}")
    return dpr.PLUS.join(dpr.MINUS * c for c in code)
