import pytest

from placticc import crystal as C
from placticc import ctree as CT
from placticc import insertion as I
from placticc.words import DomainError


WITNESS_LABELS = {(1, 0): 2, (2, 0): 1, (2, 1): 1, (2, 2): 1}


def test_vertex_geometry():
    assert CT.level((1, 0)) == 1
    assert CT.level((2, 0)) == 2
    assert CT.level(CT.outer_vertex(2, 1)) == 3
    assert CT.level(CT.inner_vertex(2, 1)) == 3
    assert CT.is_outer((2, 1)) and CT.is_inner((2, 2))
    # rank-2 truncation: strand 1 up to level 2, strand 2 at its root
    assert CT.vertices(2) == [(1, 0), (1, 1), (1, 2), (2, 0)]


def test_ctree_rejects_out_of_range_vertices():
    with pytest.raises(DomainError):
        CT.CTree(2, 2, {(2, 1): 1})  # level 3 vertex in a rank-2 tree
    with pytest.raises(DomainError):
        CT.CTree(2, 2, {(1, 0): -1})


def test_witness_tree():
    # the (12)(1)(2 2̄) witness is already highest weight; its tree has
    # labels s(1,0)=2, s(2,0)=1, s(2,1)=1, s(2,1)̄=1
    w = ((1, 2), (1,), (2, -2))
    assert C.is_highest_weight(w, 2)
    T = CT.encode(w, 2)
    assert dict(T.labels) == WITNESS_LABELS
    assert (T.rank, T.n) == (3, 2)
    assert CT.reading(T) == w
    assert CT.strand_valuations(T) == (2, 1, 0)
    assert CT.tree_normal_form(T) == ((), (1,), (1, 2))
    assert CT.tree_normal_form(T) == I.normal_form_word(w, 2)


def test_standard_tree():
    S = CT.standard_tree((2, 1), 2)
    assert dict(S.labels) == {(1, 0): 1, (1, 1): 1, (2, 0): 1}
    assert CT.reading(S) == ((1,), (1, 2))
    assert CT.is_valid(S)
    # a standard tree reads the normal form of its own reading
    assert CT.tree_normal_form(S) == CT.reading(S)


def test_standardize_and_fold_witness():
    T = CT.CTree(3, 2, WITNESS_LABELS)
    S = CT.standardize_truncation(T)
    assert dict(S.labels) == {
        (1, 0): 1, (1, 1): 1, (2, 0): 1, (2, 1): 1, (2, 2): 1
    }
    assert CT.strand_valuations(S) == CT.strand_valuations(T)
    F = CT.fold_last_levels(S)
    assert dict(F.labels) == {(1, 0): 1, (1, 1): 1, (2, 1): 1}
    assert CT.reading(F) == ((1,), (2,), (1,))
    assert CT.strand_valuations(F) == CT.strand_valuations(T)


def test_validate_reports_violations():
    inv = CT.CTree(2, 2, {(2, 0): 2})
    assert not CT.is_valid(inv)
    messages = CT.validate(inv)
    assert any("column" in m for m in messages)
    assert any("admissibility" in m for m in messages)
    assert CT.is_valid(CT.CTree(2, 2, {}))  # all-zero tree reads ε…ε


def test_encode_rejects_non_highest_weight():
    with pytest.raises(DomainError):
        CT.encode(((2,),), 2)  # e_1 is defined on (2)


def test_enumerate_valid_trees_counts():
    # frozen exhaustive counts
    assert len(list(CT.enumerate_valid_trees(2, 2))) == 15
    assert len(list(CT.enumerate_valid_trees(3, 2))) == 89
    assert len(list(CT.enumerate_valid_trees(3, 3))) == 425
    assert len(list(CT.enumerate_valid_trees(3, 4))) == 1596


def test_readings_are_highest_weight():
    for T in CT.enumerate_valid_trees(2, 3):
        assert C.is_highest_weight(CT.reading(T), 3)


def test_json_round_trip():
    T = CT.CTree(3, 2, WITNESS_LABELS)
    text = CT.to_json(T)
    assert text == (
        '{"labels": {"1.0": 2, "2.0": 1, "2.1+": 1, "2.1-": 1},'
        ' "n": 2, "rank": 3}'
    )
    assert CT.from_json(text) == T
    for S in CT.enumerate_valid_trees(2, 2):
        assert CT.from_json(CT.to_json(S)) == S
