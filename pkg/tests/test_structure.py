import json

import pytest

from inversive.structure import (
    ConvergentTree,
    CycleSet,
    GComponent,
    GraphStructure,
    OtherComponent,
    SelfLoop,
    Verdict,
    component_from_dict,
    structure_from_dict,
    structure_text,
    structure_to_dict,
)


def test_sizes():
    assert SelfLoop(3).size == 3
    assert CycleSet(4, 2).size == 8
    assert GComponent(4, 4).size == 20
    assert ConvergentTree(11, {0: 1, 1: 4, 2: 20}).size == 25
    assert GraphStructure((GComponent(4, 4), CycleSet(5, 1))).size == 25


def test_canonical_merges_and_folds():
    S = GraphStructure((SelfLoop(1), CycleSet(4, 1), CycleSet(1, 1), GComponent(3, 0), CycleSet(4, 1)))
    assert S.canonical().components == (CycleSet(3, 1), CycleSet(4, 2), SelfLoop(2))


def test_canonical_order():
    S = GraphStructure((SelfLoop(2), CycleSet(4, 2), GComponent(3, 4)))
    assert S.text() == "G(3,4), cycle(4)×2, self-loop×2"
    assert GraphStructure((CycleSet(4, 2), CycleSet(3, 1), SelfLoop(2))).text() == (
        "cycle(3)×1, cycle(4)×2, self-loop×2"
    )


def test_equality_is_order_free_after_canonical():
    a = GraphStructure((CycleSet(6, 1), CycleSet(7, 1))).canonical()
    b = GraphStructure((CycleSet(7, 1), CycleSet(6, 1))).canonical()
    assert a == b


def test_tree_profile_normalised():
    t = ConvergentTree(11, {2: 20, 0: 1, 1: 4, 3: 0})
    assert t.depth_profile == ((0, 1), (1, 4), (2, 20))
    assert t.text() == "tree(11; 0:1, 1:4, 2:20)"
    assert t.profile == {0: 1, 1: 4, 2: 20}


@pytest.mark.parametrize(
    "comp",
    [SelfLoop(2), CycleSet(10, 4), GComponent(1, 24), ConvergentTree(11, {0: 1, 1: 4, 2: 20}), OtherComponent(9, 3)],
)
def test_component_roundtrip(comp):
    assert component_from_dict(json.loads(json.dumps(comp.to_dict()))) == comp


def test_structure_roundtrip():
    S = GraphStructure((GComponent(1, 4), CycleSet(10, 1), CycleSet(2, 4), SelfLoop(2)))
    d = json.loads(json.dumps(structure_to_dict(S)))
    assert structure_from_dict(d) == S.canonical()
    for v in Verdict:
        assert structure_from_dict(json.loads(json.dumps(structure_to_dict(v)))) is v


def test_unknown_kind():
    with pytest.raises(ValueError):
        component_from_dict({"kind": "blob"})


def test_verdict_text():
    assert structure_text(Verdict.UNSUPPORTED).startswith("unsupported")
    assert structure_text(Verdict.DELEGATED).startswith("delegated")
