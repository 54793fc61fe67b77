"""
Instance files.

    hgr <q> <vertex_count>
    e <label> <v1> ... <vq> w <weight>

One record per line, 1-based vertices, '#' starts a comment, blank lines are ignored.
"""
import logging
from pathlib import Path

from src.constants import (
    INSTANCE_COMMENT_CHAR,
    INSTANCE_EDGE_TOKEN,
    INSTANCE_HEADER_TOKEN,
    INSTANCE_WEIGHT_TOKEN,
    WEIGHT_SIGNIFICANT_DIGITS,
)
from src.providers.instance.exceptions import ParseError
from src.services.exceptions import HypergraphError
from src.services.hypergraph import Hypergraph, new_hypergraph


logger = logging.getLogger(__name__)


def _records(text: str) -> list[tuple[int, list[str]]]:
    records = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split(INSTANCE_COMMENT_CHAR, 1)[0].split()
        if tokens:
            records.append((number, tokens))
    return records


def _integer(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError as error:
        raise ParseError(f'{what} must be an integer, got {token!r}.', line) from error


def _header(records: list[tuple[int, list[str]]]) -> tuple[int, int]:
    if not records:
        raise ParseError(f'Missing "{INSTANCE_HEADER_TOKEN} <q> <vertex_count>" header.', 1)

    line, tokens = records[0]
    if len(tokens) != 3 or tokens[0] != INSTANCE_HEADER_TOKEN:
        raise ParseError(f'Expected "{INSTANCE_HEADER_TOKEN} <q> <vertex_count>", got {" ".join(tokens)!r}.', line)
    q, vertex_count = _integer(tokens[1], line, 'q'), _integer(tokens[2], line, 'vertex count')
    try:
        new_hypergraph(q, vertex_count, [], [])
    except HypergraphError as error:
        raise ParseError(str(error), line) from error
    return q, vertex_count


def parse_instance(text: str) -> Hypergraph:
    records = _records(text)
    q, vertex_count = _header(records)

    edges, weights, labels, lines = [], [], [], []
    for line, tokens in records[1:]:
        if tokens[0] != INSTANCE_EDGE_TOKEN:
            raise ParseError(f'Unknown record {tokens[0]!r}.', line)
        if len(tokens) != q + 4 or tokens[q + 2] != INSTANCE_WEIGHT_TOKEN:
            raise ParseError(
                f'Expected "{INSTANCE_EDGE_TOKEN} <label> <{q} vertices> {INSTANCE_WEIGHT_TOKEN} <weight>".', line
            )

        try:
            weight = float(tokens[q + 3])
        except ValueError as error:
            raise ParseError(f'Weight must be a number, got {tokens[q + 3]!r}.', line) from error

        labels.append(tokens[1])
        edges.append([_integer(token, line, 'vertex') - 1 for token in tokens[2:q + 2]])
        weights.append(weight)
        lines.append(line)

    try:
        h = new_hypergraph(q, vertex_count, edges, weights, labels)
    except HypergraphError as error:
        line = lines[error.edge] if error.edge is not None else records[0][0]
        raise ParseError(str(error), line) from error

    logger.debug({'msg': 'Instance parsed.', 'q': q, 'vertices': vertex_count, 'edges': h.edge_count})
    return h


def write_instance(h: Hypergraph) -> str:
    rows = [f'{INSTANCE_HEADER_TOKEN} {h.q} {h.vertex_count}']
    for d in h.edge_ids:
        vertices = ' '.join(str(vertex + 1) for vertex in h.edges[d])
        weight = format(h.weights[d], f'.{WEIGHT_SIGNIFICANT_DIGITS}g')
        rows.append(f'{INSTANCE_EDGE_TOKEN} {h.label(d)} {vertices} {INSTANCE_WEIGHT_TOKEN} {weight}')
    return '\n'.join(rows) + '\n'


def read_instance(path: Path | str) -> Hypergraph:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as error:
        raise ParseError(f'{path} is not UTF-8 text.') from error
    return parse_instance(text)
