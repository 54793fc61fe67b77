import argparse

import pytest

from src.utils.input import comma_list, integer_list, positive_integer_list


@pytest.mark.unit
def test_comma_list():
    assert comma_list('x,y,z') == ['x', 'y', 'z']
    assert comma_list(' x , y,,x ') == ['x', 'y']
    assert comma_list('') == []


@pytest.mark.unit
def test_integer_list():
    assert integer_list('3, 1,2') == [3, 1, 2]
    assert integer_list('0,-4') == [0, -4]
    with pytest.raises(argparse.ArgumentTypeError):
        integer_list('1,two')


@pytest.mark.unit
def test_positive_integer_list():
    assert positive_integer_list('1,5') == [1, 5]
    with pytest.raises(argparse.ArgumentTypeError):
        positive_integer_list('1,0')
