"""Hom-set enumeration and desk-scale checks of the coend descriptions.

Throughout, ``sig`` is a :func:`~freeduals.dsig.cjv_signature`: a free
monoidal category on a finite set with a right dual ``J^`` adjoined to ``J``.
Because the base category is discrete, every coend below is a plain disjoint
union over middle words, and ``C(P, Q)`` is ``{id}`` when ``P == Q`` and empty
otherwise (which is itself checked, by :func:`check_omega_ff`).
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import core, dpr, dsig
from .core import AmbiguousMatchingError, ContractError, DiagramError
from .dsig import Signature, SigMorphism, Word

DEFAULT_BOUND = 16


class ResourceError(DiagramError):
    pass


@dataclass(frozen=True)
class HomSet:
    sig: Signature
    dom: Word
    cod: Word
    morphisms: Tuple[SigMorphism, ...]

    @property
    def count(self) -> int:
        return len(self.morphisms)

    def __len__(self) -> int:
        return len(self.morphisms)

    def __iter__(self):
        return iter(self.morphisms)

    def keys(self) -> frozenset:
        return frozenset(_key(m) for m in self.morphisms)


def _key(m: SigMorphism) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    return tuple(sorted(m.A)), tuple(sorted(m.B))


def _run_ok(run: Tuple[int, ...], pairable) -> bool:
    try:
        return core.matching_pairs(run, pairable) is not None
    except AmbiguousMatchingError:
        return False


def _retained_sets(word: Word, pairable, prefix: Tuple[bool, ...] = ()) -> List[Tuple[int, ...]]:
    """Subsets ``A`` whose complement splits into matchable runs.

    Positions are decided left to right; a run of dropped positions is checked
    as soon as it closes, so dead prefixes are cut early.  ``prefix`` fixes the
    membership of the first few positions (used to split work).
    """
    n = len(word)
    ok = lru_cache(maxsize=None)(lambda lo, hi: _run_ok(tuple(range(lo, hi + 1)), pairable))
    out: List[Tuple[int, ...]] = []

    def go(p: int, kept: Tuple[int, ...], run_start: int) -> None:
        if p > n:
            if run_start <= n and not ok(run_start, n):
                return
            out.append(kept)
            return
        choices = (prefix[p - 1],) if p <= len(prefix) else (False, True)
        for keep in choices:
            if keep:
                if run_start < p and not ok(run_start, p - 1):
                    continue
                go(p + 1, kept + (p,), p + 1)
            else:
                go(p + 1, kept, run_start)

    go(1, (), 1)
    return out


def enumerate_homs(sig: Signature, dom: Sequence, cod: Sequence, bound: int = DEFAULT_BOUND,
                   workers: int = 1) -> HomSet:
    """Every valid ``(A, B) : dom -> cod``, in ascending ``(A, B)`` order.

    ``workers > 1`` splits the domain-side search over membership prefixes of
    the first positions; the merged result is identical to the serial one.
    """
    dom, cod = tuple(dom), tuple(cod)
    sig.check_word(dom)
    sig.check_word(cod)
    if len(dom) + len(cod) > bound:
        raise ResourceError(f"{len(dom)} + {len(cod)} positions exceed the bound {bound}")

    cup_ok = dsig.cup_pairable(sig, dom)
    if workers > 1 and len(dom) > 0:
        depth = min(len(dom), max(1, (workers - 1).bit_length()))
        prefixes = list(itertools.product((False, True), repeat=depth))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda pre: _retained_sets(dom, cup_ok, pre), prefixes))
        dom_sets = [a for part in parts for a in part]
    else:
        dom_sets = _retained_sets(dom, cup_ok)
    cod_sets = _retained_sets(cod, dsig.cap_pairable(sig, cod))

    by_letters: Dict[Tuple, List[Tuple[int, ...]]] = {}
    for B in cod_sets:
        by_letters.setdefault(tuple(cod[b - 1] for b in B), []).append(B)
    keys = sorted((A, B) for A in dom_sets
                  for B in by_letters.get(tuple(dom[a - 1] for a in A), ()))
    return HomSet(sig, dom, cod, tuple(SigMorphism(sig, dom, cod, A, B) for A, B in keys))


def hom_count(sig: Signature, dom: Sequence, cod: Sequence, bound: int = DEFAULT_BOUND) -> int:
    return enumerate_homs(sig, dom, cod, bound).count


def dpr_homs(dom: dpr.MarkedWord, cod: dpr.MarkedWord, bound: int = DEFAULT_BOUND) -> List[dpr.DiagMorphism]:
    hs = enumerate_homs(dsig.DPR, dsig.from_marked(dom), dsig.from_marked(cod), bound)
    return [dsig.to_dpr(m) for m in hs]


def all_morphisms(sig: Signature, dom_words: Iterable[Word],
                  cod_words: Optional[Iterable[Word]] = None) -> Dict[Tuple[Word, Word], List[SigMorphism]]:
    """Nonempty hom-sets between every pair of the given words.

    Retained-set candidates are computed once per word and then joined on
    their letter sequences, so this is much cheaper than calling
    :func:`enumerate_homs` pair by pair.
    """
    dom_words = [tuple(w) for w in dom_words]
    cod_words = dom_words if cod_words is None else [tuple(w) for w in cod_words]
    cod_index: Dict[Tuple, List[Tuple[Word, Tuple[int, ...]]]] = {}
    for c in cod_words:
        for B in _retained_sets(c, dsig.cap_pairable(sig, c)):
            cod_index.setdefault(tuple(c[b - 1] for b in B), []).append((c, B))
    out: Dict[Tuple[Word, Word], List[SigMorphism]] = {}
    for d in dom_words:
        for A in _retained_sets(d, dsig.cup_pairable(sig, d)):
            for c, B in cod_index.get(tuple(d[a - 1] for a in A), ()):
                out.setdefault((d, c), []).append(SigMorphism(sig, d, c, A, B))
    for key in out:
        out[key].sort(key=_key)
    return out


def words(letters: Iterable, max_len: int, min_len: int = 0) -> List[Word]:
    letters = sorted(letters, key=str)
    return [w for k in range(min_len, max_len + 1) for w in itertools.product(letters, repeat=k)]


def marked_words(max_len: int) -> List[dpr.MarkedWord]:
    return [dsig.to_marked(w) for w in words((dpr.MINUS, dpr.PLUS), max_len)]


# -- reports --------------------------------------------------------------------

@dataclass
class Report:
    claim: str
    instance: str
    expected: object
    actual: object
    passed: bool

    def to_dict(self) -> dict:
        return {"claim": self.claim, "instance": self.instance, "expected": self.expected,
                "actual": self.actual, "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"[{verdict}] {self.claim}\n  instance: {self.instance}\n"
                f"  expected: {self.expected}\n  actual:   {self.actual}")


def _dual_parts(sig: Signature) -> Tuple[object, object]:
    if len(sig.table) != 1:
        raise ContractError(f"{sig.name} is not a signature with one adjoined dual")
    (J, Jv), = sig.table.items()
    return J, Jv


def check_omega_ff(sig: Signature, bound: int = 5) -> Report:
    """Count homs between all pure-base words of length ``<= bound``."""
    base = dsig.base_letters(sig)
    if base is None:
        raise ContractError("signature has no finite base alphabet")
    ws = words(base, bound)
    failures = []
    for u in ws:
        for v in ws:
            want = 1 if u == v else 0
            got = hom_count(sig, u, v, bound=2 * bound)
            if got != want:
                failures.append({"dom": sig.format_word(u), "cod": sig.format_word(v),
                                 "expected": want, "actual": got})
    return Report("inclusion of the base category is fully faithful",
                  f"{sig.name}, words of length <= {bound}",
                  f"{len(ws) ** 2} pairs with count 1 on the diagonal and 0 elsewhere",
                  {"pairs": len(ws) ** 2, "failures": failures[:10], "failure_count": len(failures)},
                  not failures)


# -- coends ---------------------------------------------------------------------

def split_at_dual(sig: Signature, w: Sequence) -> List[Word]:
    """``U0 J^ U1 ... J^ Um`` as the list ``[U0, ..., Um]``."""
    _, Jv = _dual_parts(sig)
    parts: List[List] = [[]]
    for s in w:
        if s == Jv:
            parts.append([])
        else:
            parts[-1].append(s)
    return [tuple(p) for p in parts]


def _head_tail(sig: Signature, w: Sequence) -> Tuple[Word, Word]:
    """``(U∂m, Um)``: everything before the last ``J^``, and after it."""
    _, Jv = _dual_parts(sig)
    w = tuple(w)
    k = max(i for i, s in enumerate(w) if s == Jv)
    return w[:k], w[k + 1:]


def _first_split(sig: Signature, w: Sequence) -> Tuple[Word, Word]:
    """``(V0, V∂0)``: everything before the first ``J^``, and after it."""
    _, Jv = _dual_parts(sig)
    w = tuple(w)
    k = w.index(Jv)
    return w[:k], w[k + 1:]


@dataclass(frozen=True)
class CoendElement:
    """A representative ``(f, g)`` or ``(f, g, h)`` with its middle words.

    Over a discrete base the coend relation is trivial, so representatives
    are the elements themselves.
    """

    X: Optional[Word]
    Y: Optional[Word]
    f: SigMorphism
    g: SigMorphism
    h: Optional[SigMorphism] = None


def _id(sig, w):
    return dsig.sig_identity(sig, w)


def _t(sig, *ms):
    return dsig.sig_tensor_all(sig, ms)


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise ContractError(msg)


def zeta_m0(sig: Signature, U: Sequence, V: Sequence, el: CoendElement) -> SigMorphism:
    """``(f (x) 1 (x) 1) ; (1 (x) ε (x) 1) ; g``."""
    J, Jv = _dual_parts(sig)
    head, Um = _head_tail(sig, U)
    X, f, g = el.X, el.f, el.g
    _expect(f.dom == head and f.cod == X + (J,), "f must map U∂m to X J")
    _expect(g.dom == X + Um and g.cod == tuple(V), "g must map X Um to V0")
    return dsig.sig_compose_all(
        _t(sig, f, _id(sig, (Jv,)), _id(sig, Um)),
        _t(sig, _id(sig, X), dsig.counit(sig, J), _id(sig, Um)),
        g)


def zeta_0n(sig: Signature, U: Sequence, V: Sequence, el: CoendElement) -> SigMorphism:
    """``f ; (1 (x) η (x) 1) ; (1 (x) 1 (x) g)``."""
    J, Jv = _dual_parts(sig)
    V0, tail = _first_split(sig, V)
    Y, f, g = el.Y, el.f, el.g
    _expect(f.dom == tuple(U) and f.cod == V0 + Y, "f must map U0 to V0 Y")
    _expect(g.dom == (J,) + Y and g.cod == tail, "g must map J Y to V∂0")
    return dsig.sig_compose_all(
        f,
        _t(sig, _id(sig, V0), dsig.unit(sig, J), _id(sig, Y)),
        _t(sig, _id(sig, V0), _id(sig, (Jv,)), g))


def zeta_mn(sig: Signature, U: Sequence, V: Sequence, el: CoendElement) -> SigMorphism:
    J, Jv = _dual_parts(sig)
    head, Um = _head_tail(sig, U)
    V0, tail = _first_split(sig, V)
    X, Y, f, g, h = el.X, el.Y, el.f, el.g, el.h
    _expect(h is not None, "zeta_mn needs three components")
    _expect(f.dom == head and f.cod == X + (J,), "f must map U∂m to X J")
    _expect(g.dom == X + Um and g.cod == V0 + Y, "g must map X Um to V0 Y")
    _expect(h.dom == (J,) + Y and h.cod == tail, "h must map J Y to V∂0")
    return dsig.sig_compose_all(
        _t(sig, f, _id(sig, (Jv,)), _id(sig, Um)),
        _t(sig, _id(sig, X), dsig.counit(sig, J), _id(sig, Um)),
        g,
        _t(sig, _id(sig, V0), dsig.unit(sig, J), _id(sig, Y)),
        _t(sig, _id(sig, V0), _id(sig, (Jv,)), h))


def coend_bound(U: Sequence, V: Sequence) -> int:
    return len(U) + len(V) + 2


def _homs(sig, d, c) -> Tuple[SigMorphism, ...]:
    return enumerate_homs(sig, d, c, bound=max(DEFAULT_BOUND, len(d) + len(c))).morphisms


def coend_m0(sig: Signature, U: Sequence, V: Sequence, bound: int) -> List[CoendElement]:
    J, _ = _dual_parts(sig)
    head, Um = _head_tail(sig, U)
    out = []
    for X in words(dsig.base_letters(sig), bound):
        for g in _homs(sig, X + Um, V):
            for f in _homs(sig, head, X + (J,)):
                out.append(CoendElement(X, None, f, g))
    return out


def coend_0n(sig: Signature, U: Sequence, V: Sequence, bound: int) -> List[CoendElement]:
    J, _ = _dual_parts(sig)
    V0, tail = _first_split(sig, V)
    out = []
    for Y in words(dsig.base_letters(sig), bound):
        for f in _homs(sig, U, V0 + Y):
            for g in _homs(sig, (J,) + Y, tail):
                out.append(CoendElement(None, Y, f, g))
    return out


def coend_mn(sig: Signature, U: Sequence, V: Sequence, bound: int) -> List[CoendElement]:
    J, _ = _dual_parts(sig)
    head, Um = _head_tail(sig, U)
    V0, tail = _first_split(sig, V)
    base = dsig.base_letters(sig)
    out = []
    for X in words(base, bound):
        fs = _homs(sig, head, X + (J,))
        if not fs:
            continue
        for Y in words(base, bound):
            for g in _homs(sig, X + Um, V0 + Y):
                for h in _homs(sig, (J,) + Y, tail):
                    out.extend(CoendElement(X, Y, f, g, h) for f in fs)
    return out


def zeta_for(sig: Signature, U: Sequence, V: Sequence) -> Tuple[str, Callable, Callable]:
    """Pick the ζ map and coend enumerator matching the shape of ``(U, V)``."""
    m = len(split_at_dual(sig, U)) - 1
    n = len(split_at_dual(sig, V)) - 1
    if m > 0 and n == 0:
        return "m0", zeta_m0, coend_m0
    if m == 0 and n > 0:
        return "0n", zeta_0n, coend_0n
    if m > 0 and n > 0:
        return "mn", zeta_mn, coend_mn
    return "00", None, None


def check_zeta_bijective(sig: Signature, U: Sequence, V: Sequence, bound: Optional[int] = None) -> Report:
    """Compare the image of ζ with the enumerated hom-set ``hom(U, V)``.

    The middle words range over base words of length ``<= bound`` (default
    ``|U| + |V| + 2``); the image is recomputed at ``bound + 2`` to check that
    the truncation lost nothing.
    """
    U, V = tuple(U), tuple(V)
    bound = coend_bound(U, V) if bound is None else bound
    shape, zeta, coend = zeta_for(sig, U, V)
    homs = enumerate_homs(sig, U, V, bound=max(DEFAULT_BOUND, len(U) + len(V)))
    target = homs.keys()
    instance = f"{sig.name}: {sig.format_word(U)} -> {sig.format_word(V)}"

    if shape == "00":
        want = 1 if U == V else 0
        return Report("hom between base words is the base hom", instance,
                      {"shape": shape, "hom": want}, {"shape": shape, "hom": homs.count},
                      homs.count == want)

    def images(b):
        return [_key(zeta(sig, U, V, el)) for el in coend(sig, U, V, b)]

    img = images(bound)
    stable = set(images(bound + 2)) == set(img)
    injective = len(set(img)) == len(img)
    surjective = set(img) == target
    actual = {"shape": shape, "domain": len(img), "hom": homs.count, "injective": injective,
              "surjective": surjective, "stable": stable}
    if shape == "mn":
        return Report("zeta_mn image inside hom(U, V) (no bijectivity claimed)", instance,
                      "image within hom", actual, set(img) <= target and stable)
    return Report(f"zeta_{shape} is a bijection", instance, "bijection", actual,
                  injective and surjective and stable)


def dual_counterexample(sig: Optional[Signature] = None) -> Report:
    """``U = V = J^``: the ζ_mn coend is empty though ``hom(J^, J^)`` is not."""
    sig = sig or dsig.cjv_signature(["x"], "x")
    _, Jv = _dual_parts(sig)
    U = V = (Jv,)
    dom_size = len(coend_mn(sig, U, V, coend_bound(U, V)))
    homs = enumerate_homs(sig, U, V).count
    return Report("zeta_mn fails to be surjective at U = V = J^", f"{sig.name}",
                  {"domain": 0, "hom": 1}, {"domain": dom_size, "hom": homs},
                  dom_size == 0 and homs == 1)
