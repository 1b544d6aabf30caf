"""Command-line interface.

Exit codes: 0 success, 1 a checked property failed, 2 bad input,
3 internal defect (two independent computations disagreed).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import fileformat
from .algebra import ideal_difference, ideal_sum, translate
from .canonical import classify, std_canonical
from .generator import EnumerationTooLarge, GenConfig, GenerationError, enumerate_good, random_good, random_good_ideal
from .lattice import DimensionError, neg_point
from .render import RenderError, render_ascii, render_svg
from .structure import IDENTITIES, UnknownIdentity, decompose, jacobson, multiplicity_vector, verify_identity
from .suite import verify_suite
from .truncated import GoodSemigroup, InternalDefect, NotGoodError, RepresentationError, validate

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_DEFECT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _semigroup(path: str, pad: int) -> GoodSemigroup:
    T = fileformat.read(path)
    return GoodSemigroup(T, pad=pad)


def _findings_text(findings) -> str:
    return "".join(f"{f.axiom}: {f.message}\n" for f in findings)


# -- commands --------------------------------------------------------------


def cmd_validate(args) -> int:
    T = fileformat.read(args.file)
    findings = validate(T.normalize(), as_semigroup=not args.ideal, pad=args.window_pad)
    if args.format == "json":
        _emit(_json({"good": not findings, "findings": [f.to_dict() for f in findings]}), args.out)
    else:
        _emit("good\n" if not findings else _findings_text(findings), args.out)
    return EXIT_OK if not findings else EXIT_PROPERTY


def cmd_analyze(args) -> int:
    T = fileformat.read(args.file)
    try:
        S = GoodSemigroup(T, pad=args.window_pad)
    except NotGoodError as exc:
        sys.stderr.write(_findings_text(exc.findings))
        return EXIT_INPUT
    c = classify(S)
    d = {"version": 1, "dim": S.dim, **c.to_dict()}
    if args.format == "json":
        _emit(_json(d), args.out)
    else:
        lines = [f"dim: {S.dim}", f"conductor: {S.conductor}", f"frobenius: {c.frobenius}"]
        if c.multiplicity is not None:
            lines.append(f"multiplicity: {c.multiplicity}")
        lines += [f"local: {c.local}", f"symmetric: {c.symmetric}", f"almost_symmetric: {c.almost_symmetric}"]
        if c.med is not None:
            lines.append(f"med: {c.med}")
        if c.local:
            lines.append("decomposition: local, one block")
        else:
            lines.append(f"decomposition: {len(c.components)} local factors")
            for s, comp in zip(c.supports, c.components):
                lines.append(f"component on axes {list(s)}: conductor {comp.conductor}, "
                             f"multiplicity {comp.multiplicity}, symmetric {comp.symmetric}, "
                             f"almost_symmetric {comp.almost_symmetric}, med {comp.med}")
        for w in c.warnings:
            lines.append(f"warning: {w}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_canonical(args) -> int:
    S = _semigroup(args.file, args.window_pad)
    _emit(fileformat.serialize(std_canonical(S)), args.out)
    return EXIT_OK


def cmd_dual(args) -> int:
    S = _semigroup(args.file, args.window_pad)
    E = fileformat.read(args.ideal).normalize()
    _emit(fileformat.serialize(ideal_difference(std_canonical(S), E)), args.out)
    return EXIT_OK


def cmd_sum(args) -> int:
    E = fileformat.read(args.first)
    F = fileformat.read(args.second)
    _emit(fileformat.serialize(ideal_sum(E, F)), args.out)
    return EXIT_OK


def cmd_mm(args) -> int:
    S = _semigroup(args.file, args.window_pad)
    dec = decompose(S)
    J = jacobson(S, dec)
    if args.minus_e:
        result = translate(J, neg_point(multiplicity_vector(S, dec)))
    else:
        result = ideal_difference(J, J)
    _emit(fileformat.serialize(result), args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    S = _semigroup(args.file, args.window_pad)
    dec = decompose(S)
    if args.format == "json":
        _emit(_json({"version": 1, **dec.to_dict()}), args.out)
    else:
        _emit(fileformat.serialize_many(dec.components) if args.format == "gsg" else
              "".join(f"axes {list(s)}: conductor {c.conductor}, small {list(c.small)}\n"
                      for s, c in zip(dec.supports, dec.components)), args.out)
    return EXIT_OK


def cmd_jacobson(args) -> int:
    S = _semigroup(args.file, args.window_pad)
    _emit(fileformat.serialize(jacobson(S)), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    base = fileformat.read(args.file)
    overlay = fileformat.read(args.overlay) if args.overlay else None
    fmt = args.format or "ascii"
    if fmt == "svg":
        _emit(render_svg(base, overlay, pad=args.extent_pad), args.out)
    elif fmt == "ascii":
        _emit(render_ascii(base, overlay, pad=args.extent_pad), args.out)
    else:
        raise InputError(f"render supports --format svg or ascii, not {fmt}")
    return EXIT_OK


def cmd_verify(args) -> int:
    S = _semigroup(args.file, args.window_pad)
    ideals = [fileformat.read(p).normalize() for p in args.with_ideal or []]
    r = verify_identity(args.identity, S, ideals=ideals, pad=args.window_pad)
    if args.format == "json":
        _emit(_json(r.to_dict()), args.out)
    else:
        w = f" (witness {r.witness})" if r.witness is not None else ""
        _emit(f"{r.identity}: {r.status}: {r.message}{w}\n", args.out)
    return EXIT_OK if r.ok else EXIT_PROPERTY


def cmd_verify_suite(args) -> int:
    cap = tuple(args.cap)
    if len(cap) != args.h:
        raise InputError(f"--cap needs {args.h} values")
    ids = args.ids or list(IDENTITIES)
    for i in ids:
        if i.upper() not in IDENTITIES:
            raise UnknownIdentity(f"unknown identity {i!r}")
    summary = verify_suite(args.h, cap, args.count, args.seed, ids=ids, ideals=args.ideals, pad=args.window_pad)
    if args.format == "text":
        lines = [f"instances: {summary['instances']} (local {summary['local']}, non-local {summary['nonlocal']})"]
        for ident, t in summary["identities"].items():
            lines.append(f"{ident}: pass {t['pass']}, fail {t['fail']}, hypothesis-not-met {t['hypothesis-not-met']}")
        for f in summary["failures"]:
            lines.append(f"FAILED {f['identity']} on instance {f['instance']} (seed {f['seed']}): {f['message']}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json(summary), args.out)
    return EXIT_OK if summary["ok"] else EXIT_PROPERTY


def cmd_gen(args) -> int:
    if args.ideal_of:
        S = _semigroup(args.ideal_of, args.window_pad)
        cap = tuple(args.cap) if args.cap else S.conductor
        T = random_good_ideal(S, GenConfig(S.dim, cap, seed=args.seed))
    else:
        if not args.cap or len(args.cap) != args.h:
            raise InputError(f"--cap needs {args.h} values")
        T = random_good(GenConfig(args.h, tuple(args.cap), seed=args.seed))
    _emit(fileformat.serialize(T), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if len(args.cap) != args.h:
        raise InputError(f"--cap needs {args.h} values")
    sets = list(enumerate_good(args.h, tuple(args.cap)))
    if args.format == "json":
        _emit(_json({"version": 1, "h": args.h, "cap": list(args.cap), "count": len(sets),
                     "semigroups": [{"conductor": list(S.conductor), "small": [list(p) for p in S.small]}
                                    for S in sets]}), args.out)
    elif args.count_only:
        _emit(f"{len(sets)}\n", args.out)
    else:
        _emit(fileformat.serialize_many(sets), args.out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goodsg", description="Exact computations with good semigroups of N^h.")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, fn, help, formats=("text", "json"), default="text"):
        c = sub.add_parser(name, help=help)
        c.set_defaults(func=fn)
        c.add_argument("--out", default="-", help="output path, '-' for stdout")
        c.add_argument("--window-pad", type=int, default=1, help="widen verification windows by k (default 1)")
        if formats:
            c.add_argument("--format", choices=formats, default=default)
        return c

    c = command("validate", cmd_validate, "check the good-semigroup axioms")
    c.add_argument("file")
    c.add_argument("--ideal", action="store_true", help="check (G1), (G2) only, as for a relative ideal")

    c = command("analyze", cmd_analyze, "conductor, multiplicity and symmetry flags")
    c.add_argument("file")

    c = command("canonical", cmd_canonical, "standard canonical ideal K(S)", formats=None)
    c.add_argument("file")

    c = command("dual", cmd_dual, "K(S) - E", formats=None)
    c.add_argument("file")
    c.add_argument("ideal")

    c = command("sum", cmd_sum, "E + F", formats=None)
    c.add_argument("first")
    c.add_argument("second")

    c = command("mm", cmd_mm, "M - M (J - J for non-local S)", formats=None)
    c.add_argument("file")
    c.add_argument("--minus-e", action="store_true", help="output M - e (J - e) instead")

    c = command("decompose", cmd_decompose, "split into local factors", formats=("text", "json", "gsg"))
    c.add_argument("file")

    c = command("jacobson", cmd_jacobson, "Jacobson ideal J", formats=None)
    c.add_argument("file")

    c = command("render", cmd_render, "dot-grid picture (h = 2)", formats=("svg", "ascii"), default="ascii")
    c.add_argument("file")
    c.add_argument("--overlay", help="set drawn with open markers where it exceeds the base")
    c.add_argument("--extent-pad", type=int, default=2, help="draw this far beyond the conductor")

    c = command("verify", cmd_verify, "check one identity")
    c.add_argument("file")
    c.add_argument("identity", help=", ".join(IDENTITIES))
    c.add_argument("--with-ideal", action="append", help="extra good ideal for the duality checks")

    c = command("verify-suite", cmd_verify_suite, "check identities on seeded random instances",
                formats=("json", "text"), default="json")
    c.add_argument("--h", type=int, default=2)
    c.add_argument("--cap", type=int, nargs="+", required=True)
    c.add_argument("--count", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--ideals", type=int, default=2, help="random good ideals per instance")
    c.add_argument("--ids", nargs="+", help="identities to check (default all)")

    c = command("gen", cmd_gen, "random good semigroup or ideal", formats=None)
    c.add_argument("--h", type=int, default=2)
    c.add_argument("--cap", type=int, nargs="+")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--ideal-of", help="generate a good ideal of this semigroup instead")

    c = command("enumerate", cmd_enumerate, "all good semigroups with conductor <= cap",
                formats=("text", "json"))
    c.add_argument("--h", type=int, default=2)
    c.add_argument("--cap", type=int, nargs="+", required=True)
    c.add_argument("--count-only", action="store_true")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalDefect as exc:
        sys.stderr.write(f"internal defect: {exc}\n")
        return EXIT_DEFECT
    except NotGoodError as exc:
        sys.stderr.write(f"error: {exc}\n" + _findings_text(exc.findings))
        return EXIT_INPUT
    except (fileformat.FormatError, InputError, UnknownIdentity, RenderError, EnumerationTooLarge,
            DimensionError, RepresentationError, GenerationError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
