"""Command-line front end.

Every command is a thin wrapper over a library call; output is
deterministic so text and JSON runs can serve as golden files.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Union

from . import classify as classify_mod
from . import fixtures, grr, resolutions
from .cohomology import UNDETERMINED
from .core_model import (
    FreeResolution,
    NotInCatalog,
    ResolutionFormatError,
    make_cicy,
    parse_degrees,
)

SCHEMA = 1


@dataclass
class CommandResult:
    exit_code: int
    payload: Union[str, dict]

    def render(self) -> str:
        if isinstance(self.payload, dict):
            return json.dumps(self.payload, indent=2, sort_keys=True)
        return self.payload


class UsageError(Exception):
    pass


def _degrees(text):
    try:
        return parse_degrees(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _twist_range(text):
    """``"a..b"`` or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed twist range {text!r}, expected a..b") from None
    if hi < lo:
        raise UsageError(f"empty twist range {text!r}")
    return list(range(lo, hi + 1))


def _fmt(v):
    return "?" if v is UNDETERMINED else str(v)


def _json_value(v):
    return None if v is UNDETERMINED else v


# ------------------------------------------------------------------ commands

def cmd_classify(args) -> CommandResult:
    try:
        X = make_cicy(_degrees(args.type))
    except NotInCatalog as exc:
        return CommandResult(1, f"error: {exc}")
    entries = classify_mod.admissible_chern(X)
    if args.format == "json":
        return CommandResult(0, classify_mod.classification_document(X, entries))
    return CommandResult(0, classify_mod.format_table(X, entries, traces=not args.no_trace))


def cmd_chi(args) -> CommandResult:
    try:
        X = make_cicy(_degrees(args.type))
    except NotInCatalog as exc:
        return CommandResult(1, f"error: {exc}")
    twists = _twist_range(args.twists)
    rows = []
    try:
        for n in twists:
            rows.append((n, grr.chi_twisted(X, args.c1, args.c2, n),
                         grr.acm_h0(X, args.c1, args.c2, n)))
    except (grr.NonIntegralChi, grr.InconsistentAnchor) as exc:
        return CommandResult(1, f"error: {exc}")
    if args.format == "json":
        return CommandResult(0, {
            "schema": SCHEMA,
            "cicy": {"type": list(X.degrees), "r": X.r, "k": X.k},
            "c1": args.c1, "c2": args.c2,
            "rows": [{"twist": n, "chi": chi, "h0": _json_value(h0)} for n, chi, h0 in rows],
        })
    lines = [f"{X}  c1={args.c1} c2={args.c2}", f"{'n':>4} {'chi(E(n))':>10} {'h0(E(n))':>9}"]
    lines += [f"{n:>4} {chi:>10} {_fmt(h0):>9}" for n, chi, h0 in rows]
    return CommandResult(0, "\n".join(lines))


def _fourfold(args):
    """``(Y, d)``: ``Y`` is the fourfold whose degree-``d`` section is ``X``."""
    if args.type is None:
        d = 5 if args.hypersurface is None else args.hypersurface
        return resolutions.P4, d
    X = make_cicy(_degrees(args.type))
    if args.hypersurface is None:
        raise UsageError("--hypersurface is required together with --type")
    try:
        return X.base.drop(args.hypersurface), args.hypersurface
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _resolution_payload(res, fmt, extra_text=(), extra=None):
    if fmt == "json":
        doc = res.to_dict()
        doc.update(extra or {})
        return doc
    return "\n".join([res.arrow_string(), *extra_text])


def cmd_resolve(args) -> CommandResult:
    gens = _degrees(args.gens)
    try:
        Y, d = _fourfold(args)
        if args.kind == "curve":
            res = resolutions.ag_curve_resolution(gens, Y)
            dm = resolutions.degree_matrix(gens)
            text = ["degree matrix of the middle map:", dm.display(clamp=not args.raw)]
            payload = _resolution_payload(res, args.format, text, {"degree_matrix": [list(r) for r in dm.entries]})
        elif args.kind == "bundle":
            res, c1 = resolutions.bundle_resolution(gens, d, Y)
            payload = _resolution_payload(res, args.format, [f"on the degree-{d} section of {Y}: c1 = {c1}"],
                                          {"c1": c1, "hypersurface": d})
        else:
            if args.c1 is None:
                raise UsageError("from-bundle needs --c1")
            res = resolutions.curve_resolution_from_bundle_quintic(args.c1, gens)
            payload = _resolution_payload(res, args.format)
    except (resolutions.GeneratorError, resolutions.InconsistentDegrees, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        return CommandResult(1, f"error: {type(exc).__name__}: {exc}")
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(res.dumps())
    return CommandResult(0, payload)


def cmd_restrict(args) -> CommandResult:
    try:
        with open(args.file) as fh:
            res = FreeResolution.loads(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    except ResolutionFormatError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    try:
        X = make_cicy(_degrees(args.type))
        out = resolutions.restrict_construction(res, args.hypersurface, X)
    except (NotInCatalog, resolutions.ShapeMismatch, LookupError) as exc:
        return CommandResult(1, f"error: {type(exc).__name__}: {exc}")
    if args.format == "json":
        return CommandResult(0, {
            "schema": SCHEMA,
            "cicy": {"type": list(X.degrees), "r": X.r, "k": X.k},
            "four_term": str(out.four_term),
            "new_rank": out.new_rank,
            "normalization_shift": out.normalization_shift,
            "inferred_chern": list(out.inferred_chern) if out.inferred_chern else None,
            "bundle_chern": list(out.bundle_chern) if out.bundle_chern else None,
            "note": out.note,
        })
    lines = [f"on {X}:", str(out.four_term),
             f"restricted bundle E has (c1, c2) = {out.bundle_chern}",
             f"new rank: {out.new_rank}",
             f"normalization: G = F({out.normalization_shift})"]
    if out.inferred_chern is not None:
        lines.append(f"F has (c1, c2) = {out.inferred_chern}")
    if out.note:
        lines.append(out.note)
    return CommandResult(0, "\n".join(lines))


def cmd_verify(args) -> CommandResult:
    try:
        doc = fixtures.load(args.fixtures)
    except OSError as exc:
        raise UsageError(f"cannot read {args.fixtures}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.fixtures}: not a JSON document: {exc}") from None
    try:
        checks = fixtures.run_checks(doc, args.group or None)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed fixture document: {exc!r}") from None
    groups = {}
    for c in checks:
        groups.setdefault(c.group, []).append(c)
    lines = [c.line() for c in checks]
    lines.append("")
    for g in fixtures.GROUPS:
        if g in groups:
            ok = sum(c.ok for c in groups[g])
            lines.append(f"{g:<13} {'PASS' if ok == len(groups[g]) else 'FAIL'} ({ok}/{len(groups[g])})")
    failed = [c for c in checks if not c.ok]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return CommandResult(1 if failed else 0, "\n".join(lines))


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="acmbundles",
                                description="Rank 2 ACM bundles on CICY threefolds: exact numerics.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("classify", help="admissible Chern classes with derivations")
    sp.add_argument("--type", required=True, help="degrees of the CICY, e.g. 2,4")
    sp.add_argument("--no-trace", action="store_true", help="omit derivation traces")
    fmt(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("chi", help="Euler characteristics and sections of twists")
    sp.add_argument("--type", required=True)
    sp.add_argument("--c1", type=int, required=True)
    sp.add_argument("--c2", type=int, required=True)
    sp.add_argument("--twists", default="0..3", help="a..b or a single twist")
    fmt(sp)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("resolve", help="resolution shapes from generator degrees")
    sp.add_argument("kind", choices=("curve", "bundle", "from-bundle"))
    sp.add_argument("--gens", required=True, help="generator degrees r1,r2,...")
    sp.add_argument("--type", help="CICY type; the fourfold is the type minus --hypersurface")
    sp.add_argument("--hypersurface", type=int, help="degree d of X inside the fourfold (default 5 in P^4)")
    sp.add_argument("--c1", type=int, help="first Chern class (from-bundle)")
    sp.add_argument("--raw", action="store_true", help="show negative degree-matrix entries")
    sp.add_argument("--emit", metavar="PATH", help="write the resolution as JSON")
    fmt(sp)
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("restrict", help="restrict a bundle resolution to a CICY")
    sp.add_argument("file", help="bundle resolution JSON (as written by resolve --emit)")
    sp.add_argument("--hypersurface", type=int, required=True)
    sp.add_argument("--type", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_restrict)

    sp = sub.add_parser("verify", help="regenerate and check the bundled fixtures")
    sp.add_argument("--group", action="append", choices=fixtures.GROUPS,
                    help="restrict to a fixture group (repeatable)")
    sp.add_argument("--fixtures", metavar="PATH", help="alternative fixture file")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), "")
    try:
        return args.func(args)
    except UsageError as exc:
        return CommandResult(2, f"usage error: {exc}")


def main(argv=None) -> int:
    result = run(argv)
    text = result.render()
    if text:
        is_error = isinstance(result.payload, str) and text.startswith(("error:", "usage error:"))
        print(text, file=sys.stderr if is_error else sys.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
