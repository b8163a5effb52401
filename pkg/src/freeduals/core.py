"""Ordinal combinatorics shared by every diagram category in the package.

Positions are 1-based integers in ``<k> = {1, ..., k}``; position sets are
``frozenset`` values.  A *partner map* is a symmetric ``dict`` pairing the
points of a region into cups (or caps); it is what the composition walk and
the factorisation routines consume.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

PosSet = frozenset
PartnerMap = Dict[int, int]


class DiagramError(Exception):
    """Base class for every error raised by this package."""


class BoundsError(DiagramError, IndexError):
    pass


class ContractError(DiagramError, ValueError):
    """A precondition of an operation was violated by the caller."""


class CompositionError(DiagramError, ValueError):
    """Codomain of the first morphism does not match domain of the second."""


class InconsistencyError(DiagramError, RuntimeError):
    """Internal invariant broken; cannot happen for valid inputs."""


class AmbiguousMatchingError(DiagramError, ValueError):
    """A region admits more than one cup (or cap) matching.

    For signatures where some letter has ``sigma(sigma(s))`` defined, the
    subsets ``(A, B)`` no longer determine a unique planar diagram, e.g. the
    word ``0 1 0 1 2 1`` over the natural-number signature.
    """


class Interval(NamedTuple):
    lo: int
    hi: int

    def size(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def members(self) -> Tuple[int, ...]:
        return tuple(range(self.lo, self.hi + 1))


def _check_interval(iv: Interval, length: int) -> None:
    lo, hi = iv
    if lo < 1 or hi > length or lo > hi:
        raise BoundsError(f"interval [{lo},{hi}] not inside <{length}>")


def is_rainbow(iv: Interval, pairable: Callable[[int, int], bool]) -> bool:
    """True when ``iv`` has even size and every symmetric pair ``m < n`` of it
    (same depth from either end) satisfies ``pairable(m, n)``."""
    pts = iv.members()
    if len(pts) % 2:
        return False
    return all(pairable(pts[i], pts[-1 - i]) for i in range(len(pts) // 2))


def is_cup(iv: Interval, marks: Iterable[int], length: int) -> bool:
    """``iv`` is an S-cup: even size, marked elements exactly its final half."""
    _check_interval(iv, length)
    marks = frozenset(marks)
    return is_rainbow(iv, lambda m, n: m not in marks and n in marks)


def is_cap(iv: Interval, marks: Iterable[int], length: int) -> bool:
    """``iv`` is an S-cap: even size, marked elements exactly its initial half."""
    _check_interval(iv, length)
    marks = frozenset(marks)
    return is_rainbow(iv, lambda m, n: m in marks and n not in marks)


def runs(region: Iterable[int]) -> List[Tuple[int, ...]]:
    """Split a position set into its maximal intervals, in order."""
    out: List[List[int]] = []
    for p in sorted(region):
        if out and out[-1][-1] == p - 1:
            out[-1].append(p)
        else:
            out.append([p])
    return [tuple(r) for r in out]


def bracket_pairs(region: Iterable[int], opens: Callable[[int], bool]) -> Optional[PartnerMap]:
    """Stack matching over each maximal interval of ``region``.

    Openers push, closers pop.  Returns the symmetric partner map, or ``None``
    when some interval is unbalanced (so the region is not a union of cups).
    Pairs never straddle a gap of the region, since a cup cannot enclose a
    through-strand.
    """
    partner: PartnerMap = {}
    for run in runs(region):
        stack: List[int] = []
        for p in run:
            if opens(p):
                stack.append(p)
            elif stack:
                q = stack.pop()
                partner[q] = p
                partner[p] = q
            else:
                return None
        if stack:
            return None
    return partner


def cup_pairs(region: Iterable[int], marks: Iterable[int]) -> Optional[PartnerMap]:
    marks = frozenset(marks)
    return bracket_pairs(region, lambda p: p not in marks)


def cap_pairs(region: Iterable[int], marks: Iterable[int]) -> Optional[PartnerMap]:
    marks = frozenset(marks)
    return bracket_pairs(region, lambda p: p in marks)


def cup_partner(a: int, region: Iterable[int], marks: Iterable[int]) -> Optional[int]:
    """``a^cup``: the right end of the cup opening at ``a``, if any."""
    marks = frozenset(marks)
    if a in marks:
        return None
    pairs = cup_pairs(region, marks)
    if pairs is None or a not in pairs or pairs[a] < a:
        return None
    return pairs[a]


def cap_partner(a: int, region: Iterable[int], marks: Iterable[int]) -> Optional[int]:
    """``a^cap``: the right end of the cap opening at ``a``, if any."""
    marks = frozenset(marks)
    if a not in marks:
        return None
    pairs = cap_pairs(region, marks)
    if pairs is None or a not in pairs or pairs[a] < a:
        return None
    return pairs[a]


def matching_pairs(region: Iterable[int], pairable: Callable[[int, int], bool]) -> Optional[PartnerMap]:
    """General noncrossing matching of ``region`` by interval dynamic programming.

    ``pairable(m, n)`` (``m < n``) says whether ``m`` and ``n`` may be joined.
    Greedy stack matching is not enough once a letter can both close one cup
    and open another (``0 1 2 1`` over the naturals), hence the search.

    Raises :class:`AmbiguousMatchingError` if a run has two matchings.
    """
    partner: PartnerMap = {}
    for run in runs(region):
        found = _run_matchings(run, pairable)
        if not found:
            return None
        if len(found) > 1:
            raise AmbiguousMatchingError(
                f"positions {list(run)} admit {len(found)} distinct matchings")
        for p, q in found[0]:
            partner[p] = q
            partner[q] = p
    return partner


def _run_matchings(run: Sequence[int], pairable) -> List[Tuple[Tuple[int, int], ...]]:
    # at most two matchings are kept; two already proves ambiguity
    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        if i > j:
            return ((),)
        out = []
        for k in range(i + 1, j + 1, 2):
            if not pairable(run[i], run[k]):
                continue
            for inner in go(i + 1, k - 1):
                for rest in go(k + 1, j):
                    out.append(((run[i], run[k]),) + inner + rest)
                    if len(out) > 1:
                        return tuple(out)
        return tuple(out)

    return list(go(0, len(run) - 1))


def cobber(a: int, A: Iterable[int], B: Iterable[int]) -> int:
    """Image of ``a`` under the order-preserving bijection ``A -> B``."""
    A, B = sorted(A), sorted(B)
    if len(A) != len(B):
        raise ContractError(f"#A={len(A)} differs from #B={len(B)}")
    try:
        return B[A.index(a)]
    except ValueError:
        raise ContractError(f"{a} is not in A") from None


def _walk(x: int, H: frozenset, cup: PartnerMap, cap: PartnerMap) -> Tuple[Optional[int], List[int]]:
    if x in H:
        raise ContractError(f"snake must start outside H, got {x}")
    if x in cup and x in cap:
        raise ContractError(f"start point {x} has both a cup and a cap partner")
    move = cup if x in cup else cap if x in cap else None
    path = [x]
    if move is None:
        return None, path
    seen = {x}
    cur = x
    while True:
        nxt = move.get(cur)
        if nxt is None:
            return None, path
        path.append(nxt)
        if nxt not in H:
            return nxt, path
        if nxt in seen:
            raise InconsistencyError(f"snaking from {x} cycles through {nxt}")
        seen.add(nxt)
        cur = nxt
        move = cap if move is cup else cup


def snake(x: int, H: Iterable[int], cup: PartnerMap, cap: PartnerMap) -> Optional[int]:
    """Follow the alternating cup/cap partner path out of ``x`` through ``H``.

    ``cup`` and ``cap`` are partner maps on the middle word.  Returns the first
    point reached outside ``H``; ``None`` if the path stops inside ``H`` or
    ``x`` has no partner at all.
    """
    return _walk(x, frozenset(H), cup, cap)[0]


def compose_subsets(A, B, C, D, cup: PartnerMap, cap: PartnerMap) -> Tuple[frozenset, frozenset]:
    """Retained subsets ``(E, F)`` of the composite of ``(A, B)`` then ``(C, D)``.

    ``cap`` pairs ``B'`` (caps of the first codomain) and ``cup`` pairs ``C'``
    (cups of the second domain), both on the shared middle word.
    """
    A, B, C, D = (sorted(s) for s in (A, B, C, D))
    if len(A) != len(B) or len(C) != len(D):
        raise ContractError("retained subsets of unequal size")
    H = frozenset(cup) & frozenset(cap)
    a_of_b = dict(zip(B, A))
    b_of_a = dict(zip(A, B))
    c_of_d = dict(zip(D, C))
    d_of_c = dict(zip(C, D))
    Cset, Bset = frozenset(C), frozenset(B)

    through: List[Tuple[int, int]] = []
    visited = set()
    for x in A:
        y = b_of_a[x]
        if y in Cset:
            through.append((x, d_of_c[y]))
            continue
        end, path = _walk(y, H, cup, cap)
        visited.update(path)
        if end is None:
            raise InconsistencyError(f"strand from domain point {x} dies in the middle")
        if end in Cset:
            through.append((x, d_of_c[end]))
        elif end not in Bset:
            raise InconsistencyError(f"strand from {x} ends at stray point {end}")
    for z in D:
        y = c_of_d[z]
        if y in Bset:
            continue
        end, path = _walk(y, H, cup, cap)
        visited.update(path)
        if end is None:
            raise InconsistencyError(f"strand from codomain point {z} dies in the middle")
        if end not in Cset and end not in Bset:
            raise InconsistencyError(f"strand from {z} ends at stray point {end}")
    if not H <= visited:
        raise InconsistencyError(f"closed loop through middle points {sorted(H - visited)}")

    E = frozenset(x for x, _ in through)
    F = frozenset(z for _, z in through)
    if sorted(through) != list(zip(sorted(E), sorted(F))):
        raise InconsistencyError("through-strands of the composite cross")
    return E, F


Segment = Tuple[str, Tuple[int, ...], Tuple[int, ...]]


def factor_segments(A, B, m: int, n: int) -> List[Segment]:
    """Cut ``(A, B): <m> -> <n>`` into alternating identity / elementary blocks.

    Each segment is ``(kind, dom_positions, cod_positions)`` with kind ``"id"``
    or ``"el"``.  The list starts and ends with ``"id"`` (possibly on empty
    position tuples) and alternates, mirroring ``f1 (x) e1 (x) ... (x) fk``.
    """
    pairs = list(zip(sorted(A), sorted(B)))
    blocks: List[List[Tuple[int, int]]] = []
    for a, b in pairs:
        if blocks and blocks[-1][-1] == (a - 1, b - 1):
            blocks[-1].append((a, b))
        else:
            blocks.append([(a, b)])

    segs: List[Segment] = []
    next_a = next_b = 1
    for blk in blocks:
        gap_a = tuple(range(next_a, blk[0][0]))
        gap_b = tuple(range(next_b, blk[0][1]))
        if gap_a or gap_b:
            if not segs:
                segs.append(("id", (), ()))
            segs.append(("el", gap_a, gap_b))
        elif segs:
            raise InconsistencyError("adjacent through-strand blocks were not merged")
        segs.append(("id", tuple(a for a, _ in blk), tuple(b for _, b in blk)))
        next_a, next_b = blk[-1][0] + 1, blk[-1][1] + 1
    gap_a = tuple(range(next_a, m + 1))
    gap_b = tuple(range(next_b, n + 1))
    if gap_a or gap_b:
        if not segs:
            segs.append(("id", (), ()))
        segs.append(("el", gap_a, gap_b))
        segs.append(("id", (), ()))
    if not segs:
        segs.append(("id", (), ()))
    return segs
