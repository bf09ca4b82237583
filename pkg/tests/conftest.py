"""Shared test helpers."""

import pytest

from wiener_roots.graph_core import Graph


def graph6_encode(g: Graph) -> str:
    """Independent graph6 encoder following the published format definition."""
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = value * 2 + b
        chars.append(chr(63 + value))
    return "".join(chars)


@pytest.fixture
def encode_graph6():
    return graph6_encode
