import argparse


def comma_list(text: str) -> list[str]:
    """'x, y,z' -> ['x', 'y', 'z']. Empty items are dropped, first occurrence wins."""
    items = [item.strip() for item in text.split(',')]
    return list(dict.fromkeys(item for item in items if item))


def integer_list(text: str) -> list[int]:
    try:
        return [int(item) for item in comma_list(text)]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f'expected comma separated integers, got {text!r}') from error


def positive_integer_list(text: str) -> list[int]:
    values = integer_list(text)
    if any(value < 1 for value in values):
        raise argparse.ArgumentTypeError(f'expected positive integers, got {text!r}')
    return values
