import copy

import pytest

from acmbundles import fixtures

DOC = fixtures.load()


def failing(doc, groups=None):
    return [c for c in fixtures.run_checks(doc, groups) if not c.ok]


def test_corpus_shape():
    groups = [f["group"] for f in DOC["resolutions"]]
    assert groups.count("quintic") == 15
    assert groups.count("x8") == 7
    assert groups.count("x9") == 2
    assert groups.count("x12") == 2
    assert groups.count("quartic") == 1
    assert len({f["id"] for f in DOC["resolutions"]}) == len(groups)


@pytest.mark.parametrize("group", ["classification", "chi", "quintic", "x8", "x9", "x12", "quartic",
                                   "degree_matrix", "restrict"])
def test_group_passes(group):
    checks = fixtures.run_checks(DOC, [group])
    assert checks and all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def test_serre_group_flags_only_the_elliptic_quintic_display():
    bad = failing(DOC, ["serre"])
    assert {c.id.split(" ")[0] for c in bad} == {"x12/elliptic-quintic"}


def test_group_filter():
    assert {c.group for c in fixtures.run_checks(DOC, ["quintic"])} == {"quintic"}
    with pytest.raises(ValueError):
        fixtures.run_checks(DOC, ["nonsense"])


def test_corrupted_twist_is_named():
    doc = copy.deepcopy(DOC)
    fx = next(f for f in doc["resolutions"] if f["id"] == "quintic/c1=1,c2=6")
    fx["curve"][1][0] -= 1
    bad = failing(doc, ["quintic"])
    assert bad and all(c.id.startswith("quintic/c1=1,c2=6") for c in bad)


def test_corrupted_chi_value():
    doc = copy.deepcopy(DOC)
    doc["chi"][0]["value"] += 1
    assert [c.id for c in failing(doc, ["chi"])] == [doc["chi"][0]["id"]]


def test_corrupted_classification_row():
    doc = copy.deepcopy(DOC)
    doc["classification"]["9"]["3"][1] += 2
    assert [c.id for c in failing(doc, ["classification"])] == ["X9 classification"]


def test_check_line_format():
    c = fixtures.Check("chi", "x", False, "why")
    assert c.line().startswith("FAIL") and "why" in c.line()
    assert "why" not in fixtures.Check("chi", "x", True, "why").line()
