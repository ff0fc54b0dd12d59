import json

import pytest

from acmbundles import classify as C
from acmbundles.core_model import catalog, make_cicy

X5, X8, X9, X12, X16 = (make_cicy(d) for d in ([5], [2, 4], [3, 3], [2, 2, 3], [2, 2, 2, 2]))


def rows(X):
    return {e.c1: e.c2_values for e in C.admissible_chern(X)}


def test_splitting_range():
    assert C.splitting_range() == (-2, 4)
    assert not C.in_splitting_range(5)
    assert C.in_splitting_range(-2)


def test_quintic_rows():
    r = rows(X5)
    assert r[0].values() == [3, 4, 5]
    assert r[1].values() == [4, 6, 8]
    assert r[2].hi == 14 and r[2].lo == 11
    assert r[3].values() == [20]
    assert r[4].values() == [30]


def test_x8_rows():
    r = rows(X8)
    assert r[-2].values() == [1] and r[-1].values() == [2]
    assert r[0].values() == [3, 4, 5, 6]
    assert r[1].values() == [4, 6, 8, 10]
    assert r[2].hi == 19 and not r[2].bounded
    assert r[3].values() == [28] and r[4].values() == [44]


def test_x16_top_rows():
    r = rows(X16)
    assert r[3].values() == [48] and r[4].values() == [80]


@pytest.mark.parametrize("X", catalog(), ids=lambda X: X.name)
def test_agrees_with_transcription(X):
    rep = C.verify_against_published(X)
    assert rep.ok, rep.discrepancies
    assert rep.agreements == list(range(-2, 5))


def test_spot_values_from_transcription():
    assert C.published_table(X9)[3].values() == [30]
    assert C.published_table(X9)[4].values() == [48]
    assert C.published_table(X12)[4].values() == [62]


def test_derivations_only_call_library():
    for X in catalog():
        for e in C.admissible_chern(X):
            assert e.derivation
            for step in e.derivation:
                assert step.op.startswith(C.TRACE_MODULES) or step.op in C.RULES, step.op


def test_outside_range():
    with pytest.raises(ValueError):
        C._derive(X5, 5)


def test_c2_values_membership():
    v = C.C2Values(4, 10, 2)
    assert 6 in v and 7 not in v and 12 not in v and 2 not in v
    assert str(v) == "4..10, even"
    u = C.C2Values(None, 19)
    assert -100 in u and str(u) == "?..19"
    with pytest.raises(ValueError):
        u.values()


def test_existence_annotations():
    assert C.existence_annotations(X16)[(0, 3)][0] == "open"
    assert C.existence_annotations(X8)[(1, 6)][0] == "proven"
    status, note = C.existence_annotations(X5)[(2, 14)]
    assert status == "proven" and note.startswith("external")


def test_existence_summary():
    by_c1 = {e.c1: e for e in C.admissible_chern(X16)}
    assert by_c1[0].existence == "proven_except" and by_c1[0].exceptions == (3,)
    assert by_c1[2].existence == "open"
    assert all(e.existence == "proven" for e in C.admissible_chern(X5) if e.c2_values.bounded)


def test_document_is_stable_json():
    doc = C.classification_document(X8, C.classify([2, 4]))
    assert doc["schema"] == 1
    text = json.dumps(doc, sort_keys=True)
    assert text == json.dumps(C.classification_document(X8, C.classify([4, 2])), sort_keys=True)
    assert doc["rows"][-1]["c2"] == {"lo": 44, "hi": 44, "step": 1}


def test_format_table_mentions_rows():
    text = C.format_table(X8, C.classify([2, 4]), traces=False)
    assert text.splitlines()[-1].split()[:2] == ["4", "44"]
