import pytest

from src.utils.union_find import UnionFind


@pytest.mark.unit
def test_union_and_find():
    union_find = UnionFind([1, 2, 3, 4])
    assert union_find.union(1, 2)
    assert union_find.union(3, 4)
    assert not union_find.union(2, 1)

    assert union_find.find(1) == union_find.find(2)
    assert union_find.find(1) != union_find.find(3)

    assert union_find.union(2, 4)
    assert union_find.find(1) == union_find.find(3)
    assert union_find.find(4) == union_find.find(1)


@pytest.mark.unit
def test_keys_added_on_first_use():
    union_find = UnionFind()
    assert union_find.find('a') == 'a'
    assert union_find.union('b', 'c')
    assert union_find.groups() == [['a'], ['b', 'c']]


@pytest.mark.unit
def test_groups_keep_insertion_order():
    union_find = UnionFind(range(6))
    union_find.union(5, 0)
    union_find.union(3, 1)
    union_find.union(4, 5)
    assert union_find.groups() == [[0, 4, 5], [1, 3], [2]]


@pytest.mark.unit
def test_long_chain():
    union_find = UnionFind(range(10_000))
    for key in range(1, 10_000):
        union_find.union(key - 1, key)
    assert union_find.find(0) == union_find.find(9_999)
    assert len(union_find.groups()) == 1
