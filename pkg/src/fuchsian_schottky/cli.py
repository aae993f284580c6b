"""``schottky`` command-line tool.

Exit codes: 0 pass, 1 verified negative, 2 input error, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import io as sio
from ._tol import DEFAULT_TOL, tolerance
from .classicalize import find_classical_generators
from .constructions import nonclassical_pair_example, standard_group
from .errors import NotSchottky, SchottkyError, TestElementNotHyperbolic
from .moebius import Kind, classify, fixed_points, normalize, translation_length
from .pairs import (
    PairCase,
    commutator_build_circles,
    degenerate_reason,
    intersecting_pair_schottky_test,
    lemma3_build_circles,
    lemma3_classical_test,
    orient_pair_standard,
    pair_case,
    theorem4_separation_certificate,
)
from .render import render_svg
from .system import SchottkySystem, count_quotient_boundaries, limit_set_sample, verify_classical

OK, NEGATIVE, INPUT_ERROR, EXHAUSTED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(args, text: str | bytes) -> None:
    data = text.encode("utf-8") if isinstance(text, str) else text
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _matrix_arg(values) -> dict:
    a, b, c, d = values
    return {"a": a, "b": b, "c": c, "d": d}


def _system_arg(obj: dict, tol) -> SchottkySystem:
    # a pair file carries its certified configuration as "witness"
    if "witness" in obj:
        obj = obj["witness"]
    return sio.system_from_json(obj, tol)


# commands ------------------------------------------------------------------

def cmd_mob_classify(args) -> int:
    raw = json.loads(args.json) if args.json else _matrix_arg(args.entries)
    T = normalize(raw, args.tol)
    kind = classify(T, args.tol)
    out = {"matrix": sio.matrix_to_json(T), "kind": kind.value, "trace": T.trace}
    if kind is Kind.HYPERBOLIC:
        att, rep = fixed_points(T, args.tol)
        out["fixed_points"] = {"attracting": sio.point_to_json(att),
                               "repelling": sio.point_to_json(rep)}
        out["translation_length"] = translation_length(T, args.tol)
    _emit(args, sio.dumps(out))
    return OK


def _pair_from_args(args):
    if args.input:
        obj = _load(args.input)
        gens = sio.generators_from_json(obj, args.tol)
    elif args.a and args.b:
        obj = {}
        gens = (normalize(_matrix_arg(args.a), args.tol), normalize(_matrix_arg(args.b), args.tol))
    else:
        raise InputError("give --in FILE or both --a and --b")
    if len(gens) != 2:
        raise InputError(f"expected 2 generators, got {len(gens)}")
    return gens


def _fps(pts) -> list:
    return [sio.point_to_json(p) for p in pts]


def pair_report(A, B, tol) -> dict:
    """Verdict record used by ``pair test``."""
    case = pair_case(A, B, tol)
    out = {"case": case.value, "schottky": None, "classical_on_pair": None,
           "fixed_points": None, "labeling": None}
    if case is PairCase.DEGENERATE:
        out["schottky"] = False
        out["classical_on_pair"] = False
        out["violation"] = {"reason": degenerate_reason(A, B, tol)}
        return out
    if case is PairCase.INTERSECTING:
        v = intersecting_pair_schottky_test(A, B, tol)
        out["schottky"] = v.schottky
        out["classical_on_pair"] = v.schottky
        out["commutator_trace"] = v.trace
        if v.schottky:
            cfg = commutator_build_circles(A, B, tol)
            out["certificate"] = {"system": sio.system_to_json(cfg, tol),
                                  **verify_classical(cfg, tol).to_dict()}
        else:
            out["violation"] = {"reason": v.reason, "commutator": v.kind.value}
        return out
    op = orient_pair_standard(A, B, tol)
    out["orientation"] = {"inverted_first": op.inverted_first,
                          "inverted_second": op.inverted_second}
    try:
        verdict = lemma3_classical_test(op, tol)
    except TestElementNotHyperbolic as exc:
        out["schottky"] = False
        out["classical_on_pair"] = False
        out["violation"] = {"reason": f"test element is {exc.kind.value}"}
        return out
    out["fixed_points"] = _fps(verdict.fixed_points)
    out["classical_on_pair"] = verdict.classical
    if verdict.classical:
        cfg = lemma3_build_circles(op, tol)
        out["schottky"] = True
        out["certificate"] = {"system": sio.system_to_json(cfg, tol),
                              **verify_classical(cfg, tol).to_dict()}
        return out
    cert = theorem4_separation_certificate(A, B, tol)
    out["violation"] = {"reason": "fixed points of the test element leave the test arc"}
    if cert is not None:
        out["labeling"] = cert.labeling.to_dict()
        out["violation"]["separation_point"] = sio.point_to_json(cert.separation_point)
    return out


def cmd_pair_test(args) -> int:
    A, B = _pair_from_args(args)
    out = pair_report(A, B, args.tol)
    _emit(args, sio.dumps(out))
    return NEGATIVE if out["schottky"] is False or out["classical_on_pair"] is False else OK


def cmd_build(args) -> int:
    t = "auto" if args.tlen in (None, "auto") else float(args.tlen)
    sys_ = standard_group(args.n, args.h, t, args.tol)
    _emit(args, sio.dumps(sio.system_to_json(sys_, args.tol)))
    return OK


def cmd_verify(args) -> int:
    sys_ = _system_arg(_load(args.input), args.tol)
    verdict = verify_classical(sys_, args.tol)
    _emit(args, sio.dumps(verdict.to_dict()))
    return OK if verdict.passed else NEGATIVE


def cmd_boundaries(args) -> int:
    sys_ = _system_arg(_load(args.input), args.tol)
    verdict = verify_classical(sys_, args.tol)
    if not verdict.passed:
        _emit(args, sio.dumps(verdict.to_dict()))
        return NEGATIVE
    bc = count_quotient_boundaries(sys_, args.tol, check=False)
    _emit(args, sio.dumps({"h": bc.h, "n": bc.n, "r": bc.r}))
    return OK


def cmd_limitset(args) -> int:
    sys_ = _system_arg(_load(args.input), args.tol)
    verdict = verify_classical(sys_, args.tol)
    if not verdict.passed:
        print(f"error: system is not certified: {verdict.to_dict()}", file=sys.stderr)
        return NEGATIVE
    samples = limit_set_sample(sys_, args.depth, args.tol, check=False)
    _emit(args, sio.limit_set_csv(samples))
    return OK


def cmd_nonclassical(args) -> int:
    t = None if args.tlen in (None, "auto") else float(args.tlen)
    ex = nonclassical_pair_example(t, args.tol)
    out = {"tol": args.tol, "t": ex.t,
           "pair": [sio.matrix_to_json(ex.A), sio.matrix_to_json(ex.AB)],
           "witness": sio.system_to_json(ex.witness, args.tol)}
    _emit(args, sio.dumps(out))
    return OK


def cmd_classicalize(args) -> int:
    gens = sio.generators_from_json(_load(args.input), args.tol)
    try:
        res = find_classical_generators(gens, args.budget, args.seed, tol=args.tol)
    except NotSchottky as exc:
        _emit(args, sio.dumps({"found": False, "not_schottky": exc.reason}))
        return NEGATIVE
    if not res.found:
        _emit(args, sio.dumps({"found": False, "visited": res.visited,
                               "depth_reached": res.depth_reached}))
        return EXHAUSTED
    out = sio.system_to_json(res.system, args.tol)
    out.update({
        "found": True,
        "distance": res.distance,
        "nielsen_path": [m.to_dict() for m in res.path],
        "words": [".".join(str(s) for s in w) for w in res.words],
        "visited": res.visited,
        "certificate": verify_classical(res.system, args.tol).to_dict(),
    })
    _emit(args, sio.dumps(out))
    return OK


def cmd_render(args) -> int:
    sys_ = _system_arg(_load(args.input), args.tol)
    _emit(args, render_svg(sys_, args.depth, args.width, args.tol))
    return OK


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="numerical tolerance")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    common.add_argument("--out", default=argparse.SUPPRESS, help="output file (default stdout)")

    p = argparse.ArgumentParser(prog="schottky", description="Fuchsian Schottky group toolkit")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out", default=None)
    sub = p.add_subparsers(dest="command", required=True)

    mob = sub.add_parser("mob", help="single Moebius maps")
    mob_sub = mob.add_subparsers(dest="action", required=True)
    c = mob_sub.add_parser("classify", parents=[common], help="normalize and classify a matrix")
    c.add_argument("entries", nargs="*", type=float, metavar="a b c d")
    c.add_argument("--json", help='matrix as JSON, e.g. {"a":1,"b":0,"c":0,"d":1}')
    c.set_defaults(func=cmd_mob_classify)

    pair = sub.add_parser("pair", help="two-generator criteria")
    pair_sub = pair.add_subparsers(dest="action", required=True)
    c = pair_sub.add_parser("test", parents=[common], help="Schottky / classical verdict for a pair")
    c.add_argument("--in", dest="input", help="pair or group JSON file")
    c.add_argument("--a", nargs=4, type=float, metavar="X")
    c.add_argument("--b", nargs=4, type=float, metavar="X")
    c.set_defaults(func=cmd_pair_test)

    c = sub.add_parser("build", parents=[common], help="standard classical group G_{n,h}")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--h", type=int, required=True)
    c.add_argument("--tlen", default="auto", help='translation length or "auto"')
    c.set_defaults(func=cmd_build)

    for name, func, helptext in (("verify", cmd_verify, "check a circle configuration"),
                                 ("boundaries", cmd_boundaries, "count quotient boundaries")):
        c = sub.add_parser(name, parents=[common], help=helptext)
        c.add_argument("--in", dest="input", required=True)
        c.set_defaults(func=func)

    c = sub.add_parser("limitset", parents=[common], help="nested limit-set circles as CSV")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--depth", type=int, default=4)
    c.set_defaults(func=cmd_limitset)

    c = sub.add_parser("nonclassical", parents=[common], help="Schottky pair not classical on itself")
    c.add_argument("--tlen", default="auto")
    c.set_defaults(func=cmd_nonclassical)

    c = sub.add_parser("classicalize", parents=[common], help="Nielsen search for classical generators")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--budget", type=int, default=10000)
    c.set_defaults(func=cmd_classicalize)

    c = sub.add_parser("render", parents=[common], help="SVG picture of a configuration")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--depth", type=int, default=0)
    c.add_argument("--width", type=int, default=800)
    c.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    if not (args.tol > 0 and math.isfinite(args.tol)):
        print("error: --tol must be positive", file=sys.stderr)
        return INPUT_ERROR
    try:
        with tolerance(args.tol):
            return args.func(args)
    except (InputError, SchottkyError, ValueError, KeyError, TypeError, IndexError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
