"""The bundled corpus of published resolutions and numbers, and its checks.

``fixtures.json`` transcribes every displayed resolution twist by twist;
the checks regenerate each one from generator degrees alone and compare.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional

from . import classify, grr, hilbert, resolutions
from .cohomology import hilbert_function_ci
from .core_model import CompleteIntersection, FreeResolution, GradedFreeModule, make_cicy

GROUPS = ("classification", "chi", "quintic", "x8", "x9", "x12", "quartic",
          "degree_matrix", "serre", "restrict")

# points for the independent Hilbert-function evaluation of curve fixtures
SERRE_SAMPLE_TWISTS = range(20, 28)


@dataclass(frozen=True)
class Check:
    group: str
    id: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.group:<13} {self.id}" + (f"  -- {self.detail}" if self.detail and not self.ok else "")


def load(path: Optional[str] = None) -> dict:
    if path is None:
        text = resources.files("acmbundles").joinpath("data/fixtures.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def _ambient(doc) -> CompleteIntersection:
    return CompleteIntersection(doc["dim"], tuple(doc["degrees"]))


def curve_of(fx) -> FreeResolution:
    return FreeResolution(_ambient(fx["ambient"]), tuple(GradedFreeModule(tuple(t)) for t in fx["curve"]),
                          "curve_ideal")


def bundle_of(fx) -> Optional[FreeResolution]:
    if "bundle" not in fx:
        return None
    return FreeResolution(_ambient(fx["ambient"]), tuple(GradedFreeModule(tuple(t)) for t in fx["bundle"]),
                          "bundle")


def _guard(group, ident, fn) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported by name
        return Check(group, ident, False, f"{type(exc).__name__}: {exc}")
    return Check(group, ident, ok, detail)


def check_resolution_fixture(fx) -> list[Check]:
    group, ident = fx["group"], fx["id"]
    amb = _ambient(fx["ambient"])
    c1, _ = fx["bundle_class"]
    out = []

    def curve():
        got = resolutions.ag_curve_resolution(fx["gens"], amb)
        want = curve_of(fx)
        return got == want, f"regenerated {got.arrow_string()} vs {want.arrow_string()}"

    out.append(_guard(group, ident + " curve", curve))

    if "bundle" in fx:
        def bundle():
            got, got_c1 = resolutions.bundle_resolution(fx["gens"], fx["d"], amb)
            want = bundle_of(fx)
            if got_c1 != c1:
                return False, f"c - d = {got_c1}, class has c1 = {c1}"
            return got == want, f"regenerated {got.arrow_string()} vs {want.arrow_string()}"

        out.append(_guard(group, ident + " bundle", bundle))

    def applicable():
        app = resolutions.theorem_applicable(fx["gens"], fx["d"], c1)
        return app == ("bundle" in fx), f"applicability {app} but bundle display present: {'bundle' in fx}"

    out.append(_guard(group, ident + " applicability", applicable))

    if group == "quintic" and "bundle" in fx:
        def inverse():
            got = resolutions.curve_resolution_from_bundle_resolution(bundle_of(fx), c1)
            return got == curve_of(fx), f"inverse gives {got.arrow_string()}"

        out.append(_guard(group, ident + " curve-from-bundle", inverse))
    return out


def check_serre(fx) -> list[Check]:
    if not fx.get("cy", True):
        return []
    c1, c2 = fx["bundle_class"]
    res = curve_of(fx)
    X = make_cicy(fx["type"])

    def serre():
        rep = hilbert.check_serre_consistency(res, X, c1, c2)
        return rep.consistent, rep.reason

    def sampled():
        expect = grr.serre_invariants(c1, c2)
        for n in SERRE_SAMPLE_TWISTS:
            got = hilbert.resolution_hilbert_function(res, n)
            want = expect.degree * n + 1 - expect.genus
            if got != want:
                return False, f"h0(O_C({n})) = {got}, class predicts {want}"
        return True, ""

    return [_guard("serre", fx["id"] + " hilbert polynomial", serre),
            _guard("serre", fx["id"] + " sampled hilbert function", sampled)]


def check_chi(entry) -> Check:
    X = make_cicy(entry["type"])
    n, want = entry["twist"], entry["value"]

    def run():
        kind = entry["kind"]
        if kind == "chi":
            got = grr.chi_twisted(X, entry["c1"], entry["c2"], n)
        elif kind == "h0":
            got = grr.acm_h0(X, entry["c1"], entry["c2"], n)
        elif kind == "ideal_h0":
            got = grr.curve_ideal_h0(X, entry["c1"], entry["c2"], n)
        elif kind == "h0_O":
            got = hilbert_function_ci(X.base, n)
        else:
            raise ValueError(f"unknown check kind {kind!r}")
        return got == want, f"computed {got!r}, expected {want}"

    return _guard("chi", entry["id"], run)


def check_restriction(entry, by_id) -> Check:
    def run():
        src = by_id[entry["source"]]
        res = bundle_of(src)
        X = make_cicy(entry["type"])
        out = resolutions.restrict_construction(res, entry["d"], X)
        want_chern = tuple(entry["chern"]) if entry["chern"] is not None else None
        got = (out.new_rank, out.normalization_shift, out.inferred_chern)
        want = (entry["new_rank"], entry["shift"], want_chern)
        return got == want, f"(rank, shift, chern) = {got}, expected {want}"

    return _guard("restrict", entry["id"], run)


def check_classification(doc) -> list[Check]:
    out = []
    for X in make_catalog():
        rows = doc["classification"][str(X.r)]

        def run(X=X, rows=rows):
            computed = {e.c1: e.c2_values for e in classify.admissible_chern(X)}
            bad = []
            for c1_text, (lo, hi, step) in rows.items():
                want = classify.C2Values(lo, hi, step)
                if computed.get(int(c1_text)) != want:
                    bad.append(f"c1={c1_text}: computed {computed.get(int(c1_text))}, table {want}")
            stored = classify.verify_against_published(X)
            bad.extend(f"c1={c}: {a} vs stored {b}" for c, a, b in stored.discrepancies)
            return not bad, "; ".join(bad)

        out.append(_guard("classification", f"{X.name} classification", run))
    return out


def make_catalog():
    from .core_model import catalog
    return catalog()


def check_degree_matrix(entry) -> Check:
    def run():
        dm = resolutions.degree_matrix(entry["gens"])
        # figure lists generators ascending; stored rows are descending
        rows = [[max(e, 0) for e in row[::-1]] for row in dm.entries[::-1]]
        return rows == entry["display"], f"clamped matrix {rows}"

    return _guard("degree_matrix", entry["id"], run)


def run_checks(doc: Optional[dict] = None, groups: Optional[Iterable[str]] = None) -> list[Check]:
    doc = load() if doc is None else doc
    wanted = set(GROUPS if groups is None else groups)
    unknown = wanted - set(GROUPS)
    if unknown:
        raise ValueError(f"unknown group(s): {sorted(unknown)}")
    out: list[Check] = []
    by_id = {fx["id"]: fx for fx in doc["resolutions"]}
    if "classification" in wanted:
        out.extend(check_classification(doc))
    if "chi" in wanted:
        out.extend(check_chi(e) for e in doc["chi"])
    for fx in doc["resolutions"]:
        if fx["group"] in wanted:
            out.extend(check_resolution_fixture(fx))
    if "degree_matrix" in wanted:
        out.extend(check_degree_matrix(e) for e in doc["degree_matrices"])
    if "serre" in wanted:
        for fx in doc["resolutions"]:
            out.extend(check_serre(fx))
    if "restrict" in wanted:
        out.extend(check_restriction(e, by_id) for e in doc["restrictions"])
    return out
