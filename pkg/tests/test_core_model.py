import json

import pytest
from hypothesis import given, strategies as st

from acmbundles.core_model import (
    BundleClass,
    CompleteIntersection,
    FreeResolution,
    GradedFreeModule,
    NotCalabiYau,
    NotInCatalog,
    ResolutionFormatError,
    catalog,
    dual_module,
    make_cicy,
    parse_degrees,
    serre_dual_twist,
    twist_module,
)


def test_make_cicy_x8():
    X = make_cicy([2, 4])
    assert (X.r, X.k, X.ambient_dim) == (8, 2, 5)


def test_make_cicy_quintic():
    X = make_cicy([5])
    assert (X.r, X.k, X.ambient_dim) == (5, 1, 4)


def test_make_cicy_order_independent():
    assert make_cicy([3, 2, 2]) == make_cicy([2, 2, 3])


def test_non_calabi_yau_rejected():
    with pytest.raises(NotInCatalog):
        make_cicy([3, 4])
    with pytest.raises(NotCalabiYau):
        make_cicy([3, 4])


def test_catalog_has_five_types():
    assert sorted(X.r for X in catalog()) == [5, 8, 9, 12, 16]
    for X in catalog():
        assert X.k == X.r // 4 == len(X.degrees)
        assert X.base.canonical_twist == 0


def test_parse_degrees():
    assert parse_degrees("2, 2,3") == [2, 2, 3]
    with pytest.raises(ValueError):
        parse_degrees("2,x")


def test_fourfolds_of_x12():
    pairs = make_cicy([2, 2, 3]).fourfolds()
    assert [(Y.degrees, d) for Y, d in pairs] == [((2, 3), 2), ((2, 2), 3)]


def test_drop_missing_degree():
    with pytest.raises(ValueError):
        CompleteIntersection(5, (2, 4)).drop(3)


def test_twist_examples():
    assert twist_module(GradedFreeModule((0, -2, -2)), 1) == GradedFreeModule((1, -1, -1))
    m = GradedFreeModule((-5, -3, -3, -3))
    assert twist_module(m, 0) == m
    assert twist_module(GradedFreeModule((-7, -4, -4, -4)), 7) == GradedFreeModule((0, 3, 3, 3))


def test_dual_examples():
    assert dual_module(GradedFreeModule((0, -2, -2, -2)), -3) == GradedFreeModule((-3, -1, -1, -1))
    assert dual_module(GradedFreeModule((0, -3, -3, -3)), -3) == GradedFreeModule((-3, 0, 0, 0))
    # quintic line bundle: L1 is L0 dualized and twisted by c - 2d = 3 - 10
    assert dual_module(GradedFreeModule((0, -3, -3, -3)), -7) == GradedFreeModule((-7, -4, -4, -4))


def test_serre_dual_twist():
    assert serre_dual_twist(-2, 0) == 2
    assert serre_dual_twist(1, 0) == -1
    assert serre_dual_twist(0, 0) == 0


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=10), st.integers(-30, 30))
def test_dual_is_involution(twists, t):
    m = GradedFreeModule(tuple(twists))
    assert dual_module(dual_module(m, t), t) == m
    assert m.dual(t).rank == m.rank


def test_module_display():
    assert str(GradedFreeModule.of(0, (-1, 3))) == "O + O(-1)^3"
    assert str(GradedFreeModule(())) == "0"


def test_bundle_class_range():
    assert BundleClass(-2, 1).in_classification_range()
    assert not BundleClass(5, 1).in_classification_range()


def test_resolution_rank_checks():
    P4 = CompleteIntersection(4)
    FreeResolution(P4, ((-1, -1, -1), (-2, -2, -2), (-3,)), "curve_ideal")
    with pytest.raises(ValueError):
        FreeResolution(P4, ((-1, -1), (-2,), (-3,)), "curve_ideal")
    with pytest.raises(ValueError):
        FreeResolution(P4, ((0,),), "bundle")


def test_resolution_json_round_trip():
    res = FreeResolution(CompleteIntersection(5, (2,)), ((0, -2, -2, -2), (-5, -3, -3, -3)), "bundle")
    text = res.dumps()
    assert json.loads(text)["schema"] == 1
    assert FreeResolution.loads(text) == res


@pytest.mark.parametrize("text", ["{", "[]", '{"terms": [[0]]}', '{"ambient": {"dim": 4}, "terms": [[0], [1, 2]], "target": "bundle"}'])
def test_resolution_json_malformed(text):
    with pytest.raises(ResolutionFormatError):
        FreeResolution.loads(text)
