import pytest

from src.utils.subsets import mask_items, nonempty_subsets_by_size, to_mask


@pytest.mark.unit
def test_masks():
    assert to_mask([]) == 0
    assert to_mask([0, 3]) == 0b1001
    assert to_mask([2, 2]) == 0b100
    assert mask_items(0) == []
    assert mask_items(0b10110) == [1, 2, 4]
    assert mask_items(to_mask([70, 5])) == [5, 70]


@pytest.mark.unit
def test_nonempty_subsets_by_size():
    assert list(nonempty_subsets_by_size([1, 2, 3])) == [
        (1,), (2,), (3,),
        (1, 2), (1, 3), (2, 3),
        (1, 2, 3),
    ]
    assert list(nonempty_subsets_by_size([])) == []
