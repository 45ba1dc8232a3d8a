import pytest
from hypothesis import given
from hypothesis import strategies as st

from rulecover import TidSet

ids = st.lists(st.integers(min_value=1, max_value=500), max_size=60)


def test_construction_sorts_and_deduplicates():
    ts = TidSet([7, 3, 3, 1, 7])
    assert ts.ids == (1, 3, 7)
    assert len(ts) == 3
    assert list(ts) == [1, 3, 7]


def test_rejects_nonpositive_ids():
    with pytest.raises(ValueError):
        TidSet([0, 1])
    with pytest.raises(ValueError):
        TidSet([-3])


def test_membership_and_empty():
    ts = TidSet([2, 4])
    assert 2 in ts and 3 not in ts
    assert "2" not in ts
    assert not TidSet.empty()
    assert len(TidSet.empty()) == 0


@given(ids, ids)
def test_ops_match_python_sets(a, b):
    ta, tb = TidSet(a), TidSet(b)
    sa, sb = set(a), set(b)
    assert set(ta & tb) == sa & sb
    assert set(ta | tb) == sa | sb
    assert set(ta - tb) == sa - sb


@given(ids, ids)
def test_inclusion_exclusion(a, b):
    ta, tb = TidSet(a), TidSet(b)
    assert len(ta | tb) + len(ta & tb) == len(ta) + len(tb)


@given(ids, ids)
def test_results_stay_sorted_and_unique(a, b):
    ta, tb = TidSet(a), TidSet(b)
    for result in (ta & tb, ta | tb, ta - tb):
        seq = result.ids
        assert all(x < y for x, y in zip(seq, seq[1:]))


def test_equality_and_hash():
    assert TidSet([1, 2]) == TidSet([2, 1])
    assert TidSet([1, 2]) != TidSet([1, 3])
    assert hash(TidSet([1, 2])) == hash(TidSet([2, 1]))
    assert TidSet([1]).issubset(TidSet([1, 2]))
    assert not TidSet([1, 3]).issubset(TidSet([1, 2]))
