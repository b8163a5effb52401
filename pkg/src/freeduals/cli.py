"""Command-line front end.

Morphisms are read from JSON files (``-`` for stdin) and written as JSON,
text or SVG.  Exit status: 0 on success, 1 on a domain error (invalid
morphism, mismatched boundaries), 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import delta, dpr, dsig, evaluation, formats, homs, oracle
from .core import DiagramError
from .formats import ParseError


class UsageError(Exception):
    pass


def _read_morphism(path: str, sig: dsig.Signature):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return formats.morphism_from_json(text, sig)


def _emit(args, m) -> None:
    if args.format == "json":
        print(formats.morphism_to_json(m))
    elif args.format == "svg":
        print(oracle.render_svg(oracle.to_matching(m)), end="")
    else:
        print(dsig.as_sig(m))


def _emit_report(args, report: homs.Report) -> int:
    print(report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.passed else 1


def cmd_validate(args) -> int:
    sig = args.sig
    if args.file:
        try:
            data = json.loads(sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        try:
            formats.morphism_from_dict(data, sig)
            verdict = dsig.Validation(True)
        except (dpr.InvalidMorphism, dsig.InvalidSigMorphism) as exc:
            verdict = dsig.Validation(False, str(exc))
    else:
        if args.dom is None or args.cod is None:
            raise UsageError("validate needs a JSON file or --dom/--cod")
        dom, cod = formats.parse_word(sig, args.dom), formats.parse_word(sig, args.cod)
        A, B = formats.parse_positions(args.A or ""), formats.parse_positions(args.B or "")
        verdict = dsig.sig_check(sig, dom, cod, A, B)
    if args.format == "json":
        print(json.dumps({"valid": verdict.ok, "reason": verdict.reason}))
    else:
        print("valid" if verdict.ok else f"invalid: {verdict.reason}")
    return 0 if verdict.ok else 1


def cmd_compose(args) -> int:
    ms = [_read_morphism(p, args.sig) for p in args.files]
    result = ms[0]
    for g in ms[1:]:
        result = (dpr.compose(result, g) if isinstance(result, dpr.DiagMorphism)
                  else dsig.sig_compose(dsig.as_sig(result), dsig.as_sig(g)))
    _emit(args, result)
    return 0


def cmd_tensor(args) -> int:
    ms = [dsig.as_sig(_read_morphism(p, args.sig)) for p in args.files]
    result = dsig.sig_tensor_all(ms[0].sig, ms)
    _emit(args, dsig.to_dpr(result) if result.sig == dsig.DPR else result)
    return 0


def cmd_decompose(args) -> int:
    m = dsig.as_sig(_read_morphism(args.file, args.sig))
    factors = dsig.sig_decompose(m)
    if args.format == "json":
        print(json.dumps([formats.morphism_to_dict(f) for f in factors]))
    else:
        for f in factors:
            kind = "id" if dsig.is_identity(f) else "elementary"
            print(f"{kind:10} {f.sig.format_word(f.dom)} -> {f.sig.format_word(f.cod)}")
    return 0


def cmd_theta(args) -> int:
    try:
        values = [int(t) for t in args.map.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"--map expects integers, got {args.map!r}") from None
    n = args.n if args.n is not None else (max(values) + 1 if values else 0)
    xi = delta.SimplicialMap(len(values), n, tuple(values))
    _emit(args, delta.theta_map(xi))
    return 0


def cmd_eval(args) -> int:
    m = dsig.as_sig(_read_morphism(args.file, args.sig))
    if m.sig == dsig.DPR:
        phi = evaluation.matrix_dual_pair(args.dim)
    else:
        used = set(m.dom) | set(m.cod)
        letters = used | {m.sig.succ(a) for a in used if m.sig.succ(a) is not None}
        phi = evaluation.matrix_target(m.sig, args.dim, letters)
    mat = evaluation.evaluate(phi, m)
    if args.format == "json":
        print(json.dumps({"rows": mat.rows, "cols": mat.cols, "entries": mat.tolist()}))
    else:
        print(mat.to_text())
    return 0


def cmd_count(args) -> int:
    sig = args.sig
    dom, cod = formats.parse_word(sig, args.dom), formats.parse_word(sig, args.cod)
    hs = homs.enumerate_homs(sig, dom, cod, bound=args.bound, workers=args.workers)
    if args.format == "json":
        print(json.dumps({"dom": sig.format_word(dom), "cod": sig.format_word(cod), "count": hs.count}))
    else:
        print(hs.count)
    return 0


def cmd_check(args) -> int:
    sig = args.sig
    if args.claim == "omega":
        return _emit_report(args, homs.check_omega_ff(sig, args.word_len))
    if args.claim == "zeta":
        if args.dom is None or args.cod is None:
            raise UsageError("check zeta needs --dom and --cod")
        U, V = formats.parse_word(sig, args.dom), formats.parse_word(sig, args.cod)
        return _emit_report(args, homs.check_zeta_bijective(sig, U, V))
    if args.claim == "counterexample":
        return _emit_report(args, homs.dual_counterexample(sig))
    if args.claim == "laws":
        rng = random.Random(args.seed)
        bad = 0
        for _ in range(args.samples):
            f, g, h = formats.random_chain(rng, 3, args.max_len)
            if dpr.compose(dpr.compose(f, g), h) != dpr.compose(f, dpr.compose(g, h)):
                bad += 1
        report = homs.Report("composition is associative", f"{args.samples} random triples, seed {args.seed}",
                             0, bad, bad == 0)
        return _emit_report(args, report)
    raise UsageError(f"unknown claim {args.claim!r}")


def cmd_render(args) -> int:
    m = _read_morphism(args.file, args.sig)
    mt = oracle.to_matching(m)
    out = oracle.render_svg(mt) if args.format == "svg" else oracle.render_ascii(mt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        print(out, end="" if out.endswith("\n") else "\n")
    return 0


def cmd_tree(args) -> int:
    if args.word is not None:
        word = "".join(formats.parse_word(dsig.DPR, args.word))
        code = dsig.word_to_tree(word)
        print(json.dumps({"word": word or "ε", "tree": list(code)}) if args.format == "json"
              else " ".join(map(str, code)))
    elif args.code is not None:
        try:
            code = [int(t) for t in args.code.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"expected integers, got {args.code!r}") from None
        word = dsig.tree_to_word(code)
        print(json.dumps({"word": word or "ε", "tree": code}) if args.format == "json" else word or "ε")
    else:
        raise UsageError("tree needs --word or --code")
    return 0


def _signature(text: str) -> dsig.Signature:
    try:
        return dsig.signature_from_name(text)
    except DiagramError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sig", type=_signature, default=dsig.DPR,
                        help="dpr, dseq, dz or cjv:<letters>:<J> (default dpr)")
    common.add_argument("--format", choices=("text", "json", "svg"), default="text")
    common.add_argument("--bound", type=int, default=homs.DEFAULT_BOUND,
                        help="maximum total number of positions for enumeration")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="freeduals", description="Diagram categories with free duals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a morphism")
    p.add_argument("file", nargs="?")
    p.add_argument("--dom")
    p.add_argument("--cod")
    p.add_argument("--A", dest="A")
    p.add_argument("--B", dest="B")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compose", parents=[common], help="compose morphisms, first file first")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("tensor", parents=[common], help="tensor morphisms left to right")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("decompose", parents=[common], help="identity / elementary factorisation")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("theta", parents=[common], help="image of a monotone map")
    p.add_argument("--map", required=True, help='value list, e.g. "0 0 1 2"')
    p.add_argument("--n", type=int, help="codomain size (default: largest value + 1)")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("eval", parents=[common], help="integer matrix of a morphism")
    p.add_argument("file")
    p.add_argument("--dim", type=int, default=2)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("count", parents=[common], help="size of a hom-set")
    p.add_argument("--dom", required=True)
    p.add_argument("--cod", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check", parents=[common], help="run a structural check")
    p.add_argument("claim", choices=("omega", "zeta", "counterexample", "laws"))
    p.add_argument("--dom")
    p.add_argument("--cod")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-len", type=int, default=8, help="word length for random laws")
    p.add_argument("--word-len", type=int, default=5, help="word length for the omega check")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", parents=[common], help="draw a morphism")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("tree", parents=[common], help="words over -,+ versus height-two trees")
    p.add_argument("--word")
    p.add_argument("--code")
    p.set_defaults(func=cmd_tree)
    return parser


# word literals such as "-+-" would otherwise be taken for options
_VALUE_OPTIONS = {"--dom", "--cod", "--word", "--code", "--map", "--A", "--B"}


def _bind_values(argv: List[str]) -> List[str]:
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_bind_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
