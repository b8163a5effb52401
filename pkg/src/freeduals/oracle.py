"""Geometric model of diagram morphisms, used as an independent check.

A morphism is drawn as an oriented planar perfect matching on the points of
its domain (top) and codomain (bottom).  Composition stacks two drawings and
contracts the paths through the shared middle row with a union-find, which is
a mechanism unrelated to the snaking walk in :mod:`freeduals.core`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple, Union

from . import dpr, dsig
from .core import CompositionError, ContractError, InconsistencyError
from .dsig import Signature, SigMorphism

Endpoint = Tuple[str, int]  # ("d", i) on the domain, ("c", j) on the codomain
Pair = Tuple[Endpoint, Endpoint]
DOM, COD = "d", "c"


def _ordered(p: Endpoint, q: Endpoint) -> Pair:
    key = lambda e: (0 if e[0] == DOM else 1, e[1])
    return (p, q) if key(p) <= key(q) else (q, p)


@dataclass(frozen=True)
class Matching:
    sig: Signature
    dom: Tuple
    cod: Tuple
    pairs: FrozenSet[Pair]

    def __post_init__(self):
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "cod", tuple(self.cod))
        object.__setattr__(self, "pairs", frozenset(_ordered(p, q) for p, q in self.pairs))

    def through(self) -> List[Pair]:
        return sorted(p for p in self.pairs if p[0][0] != p[1][0])

    def cups(self) -> List[Pair]:
        return sorted(p for p in self.pairs if p[0][0] == p[1][0] == DOM)

    def caps(self) -> List[Pair]:
        return sorted(p for p in self.pairs if p[0][0] == p[1][0] == COD)


def _letter(mt: Matching, e: Endpoint):
    return (mt.dom if e[0] == DOM else mt.cod)[e[1] - 1]


def is_perfect(mt: Matching) -> bool:
    pts = [e for pair in mt.pairs for e in pair]
    want = {(DOM, i) for i in range(1, len(mt.dom) + 1)} | {(COD, j) for j in range(1, len(mt.cod) + 1)}
    return len(pts) == len(set(pts)) and set(pts) == want


def is_oriented(mt: Matching) -> bool:
    """Through-strands join equal letters; cups read ``a σa``, caps ``σa a``."""
    for p, q in mt.pairs:
        a, b = _letter(mt, p), _letter(mt, q)
        if p[0] != q[0]:
            ok = a == b
        elif p[0] == DOM:
            ok = mt.sig.succ(a) == b
        else:
            ok = mt.sig.succ(b) == a
        if not ok:
            return False
    return True


def _circle_index(mt: Matching, e: Endpoint) -> int:
    # domain left to right, then codomain right to left
    if e[0] == DOM:
        return e[1] - 1
    return len(mt.dom) + len(mt.cod) - e[1]


def is_planar(mt: Matching) -> bool:
    """No two chords interleave on the boundary circle (single stack scan)."""
    ends: Dict[int, int] = {}
    for p, q in mt.pairs:
        i, j = sorted((_circle_index(mt, p), _circle_index(mt, q)))
        ends[i] = j
        ends[j] = i
    stack: List[int] = []
    for k in sorted(ends):
        if ends[k] > k:
            stack.append(k)
        elif not stack or stack.pop() != ends[k]:
            return False
    return not stack


def is_valid(mt: Matching) -> bool:
    return is_perfect(mt) and is_oriented(mt) and is_planar(mt)


def to_matching(m: Union[dpr.DiagMorphism, SigMorphism]) -> Matching:
    m = dsig.as_sig(m)
    pairs = [((DOM, a), (COD, b)) for a, b in zip(sorted(m.A), sorted(m.B))]
    pairs += [((DOM, p), (DOM, q)) for p, q in m.cups().items() if p < q]
    pairs += [((COD, p), (COD, q)) for p, q in m.caps().items() if p < q]
    return Matching(m.sig, m.dom, m.cod, frozenset(pairs))


def from_matching(mt: Matching) -> Union[dpr.DiagMorphism, SigMorphism]:
    """Read off ``(A, B)``; Dpr matchings give a :class:`~freeduals.dpr.DiagMorphism`."""
    if not is_valid(mt):
        raise ContractError("not a perfect oriented planar matching")
    thr = mt.through()
    m = SigMorphism(mt.sig, mt.dom, mt.cod, {p[1] for p, _ in thr}, {q[1] for _, q in thr})
    if to_matching(m) != mt:
        raise InconsistencyError("matching is not the normal form of its retained subsets")
    return dsig.to_dpr(m) if mt.sig == dsig.DPR else m


class _UnionFind:
    def __init__(self):
        self.parent: Dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        self.parent[self.find(x)] = self.find(y)


def glue_compose(f: Matching, g: Matching) -> Matching:
    """Stack ``f`` over ``g`` and contract every path through the middle row."""
    if f.sig != g.sig or f.cod != g.dom:
        raise CompositionError("codomain of the upper diagram differs from domain of the lower")
    uf = _UnionFind()

    def upper(e):
        return ("top", e[1]) if e[0] == DOM else ("mid", e[1])

    def lower(e):
        return ("mid", e[1]) if e[0] == DOM else ("bot", e[1])

    for p, q in f.pairs:
        uf.union(upper(p), upper(q))
    for p, q in g.pairs:
        uf.union(lower(p), lower(q))
    outer = [("top", i) for i in range(1, len(f.dom) + 1)] + [("bot", j) for j in range(1, len(g.cod) + 1)]
    for j in range(1, len(f.cod) + 1):
        uf.find(("mid", j))

    groups: Dict = {}
    for node in uf.parent:
        groups.setdefault(uf.find(node), []).append(node)
    for members in groups.values():
        if not any(tag != "mid" for tag, _ in members):
            raise InconsistencyError(f"closed loop through middle points {sorted(i for _, i in members)}")

    comp: Dict = {}
    for node in outer:
        comp.setdefault(uf.find(node), []).append(node)
    rename = {"top": DOM, "bot": COD}
    pairs = []
    for ends in comp.values():
        if len(ends) != 2:
            raise InconsistencyError(f"component with {len(ends)} outer endpoints")
        (t1, i1), (t2, i2) = ends
        pairs.append(((rename[t1], i1), (rename[t2], i2)))
    return Matching(f.sig, f.dom, g.cod, frozenset(pairs))


# -- independent enumeration ----------------------------------------------------

def _noncrossing(points: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        for inside in _noncrossing(points[1:k]):
            for outside in _noncrossing(points[k + 1:]):
                yield [(first, points[k])] + inside + outside


def enumerate_matchings(sig: Signature, dom: Sequence, cod: Sequence) -> List[Matching]:
    """All oriented planar matchings ``dom -> cod``, found without any use of
    the ``(A, B)`` description: every noncrossing perfect matching on the
    boundary circle is generated and filtered by orientation."""
    dom, cod = tuple(dom), tuple(cod)
    circle = [(DOM, i) for i in range(1, len(dom) + 1)] + [(COD, j) for j in range(len(cod), 0, -1)]
    out = []
    for chords in _noncrossing(list(range(len(circle)))):
        mt = Matching(sig, dom, cod, frozenset((circle[i], circle[j]) for i, j in chords))
        if is_oriented(mt):
            out.append(mt)
    return out


def count_matchings(sig: Signature, dom: Sequence, cod: Sequence) -> int:
    return len(enumerate_matchings(sig, dom, cod))


# -- rendering ------------------------------------------------------------------

def _depths(pairs: List[Pair]) -> Dict[Pair, int]:
    """Nesting depth of each arc among arcs on the same side (innermost 0)."""
    out = {}
    for p in pairs:
        lo, hi = p[0][1], p[1][1]
        out[p] = sum(1 for q in pairs if q != p and lo < q[0][1] and q[1][1] < hi)
    return out


def render_ascii(mt: Matching) -> str:
    width = 4
    fmt = mt.sig.format_word
    cols = lambda i: (i - 1) * width

    def letters(w) -> str:
        if not w:
            return "ε"
        return "".join(str(s).ljust(width) for s in w).rstrip()

    def arc_rows(pairs, down: bool) -> List[str]:
        depth = _depths(pairs)
        levels = max(depth.values(), default=-1) + 1
        rows = []
        for lvl in range(levels):
            row = [" "] * (max(len(mt.dom), len(mt.cod)) * width + 1)
            for p, d in depth.items():
                if d != lvl:
                    continue
                a, b = cols(p[0][1]), cols(p[1][1])
                row[a], row[b] = ("\\", "/") if down else ("/", "\\")
                for x in range(a + 1, b):
                    row[x] = "_" if down else "-"
            rows.append("".join(row).rstrip())
        return rows if down else rows[::-1]

    strands = ", ".join(f"{p[1]}->{q[1]}" for p, q in mt.through()) or "none"
    lines = [f"dom  {letters(mt.dom)}"]
    lines += ["     " + r for r in arc_rows(mt.cups(), True)]
    lines.append(f"     through: {strands}")
    lines += ["     " + r for r in arc_rows(mt.caps(), False)]
    lines.append(f"cod  {letters(mt.cod)}")
    lines.append(f"     {fmt(mt.dom)} -> {fmt(mt.cod)}")
    return "\n".join(lines)


def _arrow(x: float, y: float, dx: float, dy: float, size: float = 5.0) -> str:
    norm = math.hypot(dx, dy) or 1.0
    ux, uy = dx / norm, dy / norm
    px, py = -uy, ux
    tip = (x + ux * size, y + uy * size)
    left = (x - ux * size + px * size * 0.7, y - uy * size + py * size * 0.7)
    right = (x - ux * size - px * size * 0.7, y - uy * size - py * size * 0.7)
    pts = " ".join(f"{a:.1f},{b:.1f}" for a, b in (tip, left, right))
    return f'<polygon points="{pts}" fill="black"/>'


def render_svg(mt: Matching, spacing: int = 40) -> str:
    """Standalone SVG: domain on top, codomain below, semicircular arcs."""
    n = max(len(mt.dom), len(mt.cod), 1)
    cup_r = max((q[1] - p[1] for p, q in mt.cups()), default=0) * spacing / 2
    cap_r = max((q[1] - p[1] for p, q in mt.caps()), default=0) * spacing / 2
    top = 30
    bottom = top + cup_r + cap_r + 3 * spacing
    width = n * spacing + spacing
    height = bottom + 30
    x = lambda i: spacing * i
    body = []
    for i, s in enumerate(mt.dom, 1):
        body.append(f'<text x="{x(i)}" y="{top - 10}" text-anchor="middle">{s}</text>')
    for j, s in enumerate(mt.cod, 1):
        body.append(f'<text x="{x(j)}" y="{bottom + 22}" text-anchor="middle">{s}</text>')
    for p, q in mt.cups():
        a, b = x(p[1]), x(q[1])
        r = (b - a) / 2
        body.append(f'<path d="M {a} {top} A {r} {r} 0 0 0 {b} {top}" fill="none" stroke="black"/>')
        body.append(_arrow((a + b) / 2, top + r, 1, 0))
    for p, q in mt.caps():
        a, b = x(p[1]), x(q[1])
        r = (b - a) / 2
        body.append(f'<path d="M {a} {bottom} A {r} {r} 0 0 1 {b} {bottom}" fill="none" stroke="black"/>')
        body.append(_arrow((a + b) / 2, bottom - r, 1, 0))
    for p, q in mt.through():
        a, b = x(p[1]), x(q[1])
        body.append(f'<line x1="{a}" y1="{top}" x2="{b}" y2="{bottom}" stroke="black"/>')
        # letters in the domain of σ run downward, the others upward
        down = mt.sig.succ(mt.dom[p[1] - 1]) is not None
        dx, dy = (b - a, bottom - top) if down else (a - b, top - bottom)
        body.append(_arrow((a + b) / 2, (top + bottom) / 2, dx, dy))
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height:.0f}" '
            f'viewBox="0 0 {width} {height:.0f}">\n  ' + "\n  ".join(body) + "\n</svg>\n")
