"""Text and JSON forms of words and morphisms, plus seeded random morphisms.

Dpr morphisms use::

    {"dom": {"len": 3, "plus": [2]}, "cod": {...}, "A": [...], "B": [...]}

Other signatures add ``"sig"`` and store letters instead of marks::

    {"sig": "dseq", "dom": {"len": 2, "letters": [0, 1]}, "cod": {...}, "A": [...], "B": [...]}
"""

from __future__ import annotations

import json
import random
from typing import Sequence, Union

from . import dpr, dsig
from .core import DiagramError
from .dsig import Signature, SigMorphism, Word

Morphism = Union[dpr.DiagMorphism, SigMorphism]


class ParseError(DiagramError, ValueError):
    pass


_EMPTY = {"", "e", "ε"}


def parse_word(sig: Signature, text: str) -> Word:
    """Parse a word literal; errors name the offending position."""
    stripped = text.strip()
    if stripped in _EMPTY:
        return ()
    if sig == dsig.DPR:
        letters = [ch for ch in stripped if not ch.isspace()]
        out = []
        for i, ch in enumerate(letters, 1):
            if ch in ("-", "−"):
                out.append(dpr.MINUS)
            elif ch == "+":
                out.append(dpr.PLUS)
            else:
                raise ParseError(f"position {i}: expected '-' or '+', got {ch!r}")
        return tuple(out)
    out = []
    for i, tok in enumerate(stripped.split(), 1):
        if sig in (dsig.DSEQ, dsig.DZ):
            try:
                sym = int(tok)
            except ValueError:
                raise ParseError(f"token {i}: expected an integer, got {tok!r}") from None
        else:
            sym = tok
        if sym not in sig:
            raise ParseError(f"token {i}: {tok!r} is not a letter of {sig.name}")
        out.append(sym)
    return tuple(out)


def format_word(sig: Signature, w: Sequence) -> str:
    return sig.format_word(w)


def parse_positions(text: str) -> frozenset:
    out = set()
    for i, tok in enumerate(text.replace(",", " ").split(), 1):
        try:
            out.add(int(tok))
        except ValueError:
            raise ParseError(f"token {i}: expected a position, got {tok!r}") from None
    return frozenset(out)


def morphism_to_dict(m: Morphism) -> dict:
    if isinstance(m, dpr.DiagMorphism):
        return {"dom": {"len": m.dom.length, "plus": sorted(m.dom.plus)},
                "cod": {"len": m.cod.length, "plus": sorted(m.cod.plus)},
                "A": sorted(m.A), "B": sorted(m.B)}
    if m.sig == dsig.DPR:
        return morphism_to_dict(dsig.to_dpr(m))
    return {"sig": m.sig.name,
            "dom": {"len": len(m.dom), "letters": list(m.dom)},
            "cod": {"len": len(m.cod), "letters": list(m.cod)},
            "A": sorted(m.A), "B": sorted(m.B)}


def morphism_to_json(m: Morphism) -> str:
    return json.dumps(morphism_to_dict(m))


def _obj(d, key) -> object:
    try:
        return d[key]
    except (KeyError, TypeError):
        raise ParseError(f"missing field {key!r}") from None


def morphism_from_dict(d: dict, sig: Signature = None) -> Morphism:
    """Inverse of :func:`morphism_to_dict`; invalid data raises a domain error."""
    name = d.get("sig") if isinstance(d, dict) else None
    if name is not None:
        sig = dsig.signature_from_name(name)
    sig = sig or dsig.DPR
    if sig == dsig.DPR and name is None:
        words = []
        for side in ("dom", "cod"):
            obj = _obj(d, side)
            words.append(dpr.MarkedWord(int(_obj(obj, "len")), frozenset(_obj(obj, "plus"))))
        return dpr.DiagMorphism(words[0], words[1], _obj(d, "A"), _obj(d, "B"))
    words = []
    for side in ("dom", "cod"):
        obj = _obj(d, side)
        letters = tuple(_obj(obj, "letters"))
        if "len" in obj and obj["len"] != len(letters):
            raise ParseError(f"{side}: len {obj['len']} disagrees with {len(letters)} letters")
        words.append(letters)
    m = SigMorphism(sig, words[0], words[1], _obj(d, "A"), _obj(d, "B"))
    return dsig.to_dpr(m) if sig == dsig.DPR else m


def morphism_from_json(text: str, sig: Signature = None) -> Morphism:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return morphism_from_dict(data, sig)


# -- random morphisms -----------------------------------------------------------

def random_extend(rng: random.Random, m: SigMorphism, letters: Sequence, steps: int,
                  max_len: int) -> SigMorphism:
    """Post-compose ``m`` with random cap insertions and cup contractions.

    Every morphism is such a composite, so this reaches all of them; ``letters``
    lists the symbols whose caps may be inserted.  A step whose result has no
    unique ``(A, B)`` encoding (possible once ``σσa`` is defined) ends the walk.
    """
    sig = m.sig
    letters = [a for a in letters if sig.succ(a) is not None]
    for _ in range(steps):
        w = m.cod
        cups = [i for i in range(len(w) - 1) if sig.succ(w[i]) == w[i + 1]]
        can_grow = len(w) + 2 <= max_len and letters
        if cups and (not can_grow or rng.random() < 0.5):
            i = rng.choice(cups)
            step = dsig.sig_tensor_all(sig, [dsig.sig_identity(sig, w[:i]), dsig.counit(sig, w[i]),
                                             dsig.sig_identity(sig, w[i + 2:])])
        elif can_grow:
            i = rng.randrange(len(w) + 1)
            step = dsig.sig_tensor_all(sig, [dsig.sig_identity(sig, w[:i]),
                                             dsig.unit(sig, rng.choice(letters)),
                                             dsig.sig_identity(sig, w[i:])])
        else:
            break
        try:
            m = dsig.sig_compose(m, step)
        except dsig.InvalidSigMorphism:
            break
    return m


def random_word(rng: random.Random, letters: Sequence, max_len: int) -> Word:
    return tuple(rng.choice(list(letters)) for _ in range(rng.randint(0, max_len)))


def random_dpr_morphism(rng: random.Random, dom: dpr.MarkedWord, max_len: int,
                        steps: int = 6) -> dpr.DiagMorphism:
    start = dsig.sig_identity(dsig.DPR, dsig.from_marked(dom))
    return dsig.to_dpr(random_extend(rng, start, (dpr.MINUS,), steps, max_len))


def random_chain(rng: random.Random, length: int, max_len: int, steps: int = 6):
    """``length`` composable random Dpr morphisms with words of length ``<= max_len``."""
    dom = dsig.to_marked(random_word(rng, (dpr.MINUS, dpr.PLUS), max_len))
    out = []
    for _ in range(length):
        f = random_dpr_morphism(rng, dom, max_len, steps)
        out.append(f)
        dom = f.cod
    return out
