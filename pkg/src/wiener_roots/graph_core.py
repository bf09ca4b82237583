"""Graphs as bitset adjacency rows: parsing, distances, exhaustive enumeration.

Vertices are integers 0..n-1 and each adjacency row is a Python int whose
bit u says whether {u, v} is an edge.  Distances come from frontier-bitset
BFS, which is exact and fast at the desk scales this package sweeps: all
labeled graphs up to order 8 (vectorized over edge masks with numpy) and
all free trees up to order 18 (canonical level-sequence generation).

Graphs must be connected for the distance distribution to exist; single-graph
operations raise DisconnectedGraphError, while the exhaustive sweeps count
and skip disconnected instances.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Iterator, Sequence

import numpy as np


class DisconnectedGraphError(ValueError):
    """The operation needs a connected graph and the input is not."""


class Graph6Error(ValueError):
    """Malformed graph6 record."""


GRAPH6_MAX_ORDER = 62  # single-byte length form only
ENUMERATION_MAX_ORDER = 8
TREE_MAX_ORDER = 18


def _iter_bits(x: int) -> Iterator[int]:
    """Yield the set bit positions of x in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on n labeled vertices, adjacency as bit rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph order must be >= 1, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        mask = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~mask:
                raise ValueError(f"row {v} has bits beyond vertex range")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {{{u},{v}}}")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _iter_bits(self.adj[v]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[v] >> u & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_connected(self) -> bool:
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.edge_count == self.n - 1 and self.is_connected()


@dataclass(frozen=True)
class DistanceDistribution:
    """Counts d_1..d_D of unordered vertex pairs at each distance."""

    n: int
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("distance distributions need order >= 2")
        if not self.d or any(x < 1 for x in self.d):
            raise ValueError("every pair count up to the diameter must be >= 1")
        if sum(self.d) != self.n * (self.n - 1) // 2:
            raise ValueError(
                f"pair counts sum to {sum(self.d)}, expected C({self.n},2)"
            )

    @property
    def diameter(self) -> int:
        return len(self.d)


@dataclass(frozen=True)
class EnumerationStats:
    """Bookkeeping for one exhaustive labeled-graph sweep."""

    order: int
    instances_examined: int
    distinct_distributions: int

    def __post_init__(self) -> None:
        if self.distinct_distributions > self.instances_examined:
            raise ValueError("cannot have more distributions than instances")


# ---------------------------------------------------------------------------
# Construction and parsing
# ---------------------------------------------------------------------------


def from_edge_list(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from 0-indexed edge pairs (duplicates collapse)."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex pair ({u},{v}) out of range for order {n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 record (orders 1..62, optional standard header)."""
    line = text.strip()
    header = ">>graph6<<"
    if line.startswith(header):
        line = line[len(header):]
    if not line:
        raise Graph6Error("empty graph6 record")
    codes = [ord(ch) for ch in line]
    for ch in codes:
        if not 63 <= ch <= 126:
            raise Graph6Error(f"character code {ch} outside graph6 range 63..126")
    n = codes[0] - 63
    if n == 63:
        raise Graph6Error("multi-byte order encodings (order > 62) are not supported")
    if n == 0:
        raise Graph6Error("order-0 graph6 records are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = codes[1:]
    if len(body) != need:
        raise Graph6Error(
            f"order {n} needs {need} payload characters, got {len(body)}"
        )
    rows = [0] * n
    idx = 0
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for byte in body:
        bits = byte - 63
        for k in range(5, -1, -1):
            bit = bits >> k & 1
            if idx < nbits:
                if bit:
                    u, v = pairs[idx]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            elif bit:
                raise Graph6Error("nonzero padding bits in final character")
            idx += 1
    return Graph(n, tuple(rows))


def load_edge_list(lines: Sequence[str], name: str = "<edge list>") -> Graph:
    """Parse the plain fixture format: first line n, then one 'u v' pair per line."""
    rows = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError(f"{name}: empty edge-list input")
    n = int(rows[0])
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"{name}: bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


_FIXTURES = (
    "min_imaginary_graph",
    "min_tree_root_i",
    "extremal_real_tree_16",
    "extremal_real_tree_17",
)


def fixture_names() -> tuple[str, ...]:
    return _FIXTURES


def load_fixture(name: str) -> Graph:
    """Load one of the shipped edge-list fixtures by name."""
    if name not in _FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; have {_FIXTURES}")
    text = resources.files("wiener_roots.data").joinpath(f"{name}.edges").read_text()
    return load_edge_list(text.splitlines(), name=name)


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------


def distance_distribution(g: Graph) -> DistanceDistribution:
    """Count unordered pairs at each distance by BFS from every vertex."""
    if g.n < 2:
        raise ValueError("distance distribution needs order >= 2")
    full = (1 << g.n) - 1
    counts = [0] * g.n  # ordered pairs by distance; index 0 unused
    for src in range(g.n):
        seen = frontier = 1 << src
        dist = 0
        while True:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            if not nxt:
                break
            dist += 1
            counts[dist] += nxt.bit_count()
            seen |= nxt
            frontier = nxt
        if seen != full:
            raise DisconnectedGraphError(
                "distance distribution undefined for disconnected graphs"
            )
    d = counts[1:]
    while d and d[-1] == 0:
        d.pop()
    return DistanceDistribution(g.n, tuple(x // 2 for x in d))


def diameter(g: Graph) -> int:
    """Length of the longest shortest path (0 for the one-vertex graph)."""
    if g.n == 1:
        return 0
    return distance_distribution(g).diameter


# ---------------------------------------------------------------------------
# Exhaustive labeled-graph enumeration (vectorized over edge masks)
# ---------------------------------------------------------------------------

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
_CHUNK = 1 << 20


def _edge_bit_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def _sweep_mask_range(n: int, lo: int, hi: int) -> tuple[set[tuple[int, ...]], int]:
    """Distinct distance distributions and connected count over masks [lo, hi)."""
    pairs = _edge_bit_pairs(n)
    target = n * (n - 1) // 2
    self_bits = (np.uint8(1) << np.arange(n, dtype=np.uint8))
    distinct: set[tuple[int, ...]] = set()
    connected_total = 0
    for start in range(lo, hi, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
        m = masks.size
        rows = np.zeros((m, n), dtype=np.uint8)
        for b, (u, v) in enumerate(pairs):
            bit = ((masks >> b) & 1).astype(np.uint8)
            rows[:, u] |= bit << v
            rows[:, v] |= bit << u
        ball = rows | self_bits
        prev = _POPCOUNT[ball].sum(axis=1, dtype=np.int64)
        dvecs = np.zeros((m, n - 1), dtype=np.int64)
        dvecs[:, 0] = (prev - n) >> 1
        for k in range(2, n):
            grown = ball.copy()
            for v in range(n):
                for u in range(n):
                    if u == v:
                        continue
                    has = (rows[:, v] >> np.uint8(u)) & np.uint8(1)
                    grown[:, v] |= ball[:, u] * has
            ball = grown
            tot = _POPCOUNT[ball].sum(axis=1, dtype=np.int64)
            dvecs[:, k - 1] = (tot - prev) >> 1
            if np.array_equal(tot, prev):
                break
            prev = tot
        full = np.uint8((1 << n) - 1)
        connected = (ball == full).all(axis=1)
        connected_total += int(connected.sum())
        dv = dvecs[connected]
        # invariants: pair counts sum to C(n,2) and zeros appear only as a suffix
        assert np.all(dv.sum(axis=1) == target)
        zero = dv == 0
        assert np.all(np.diff(zero.astype(np.int8), axis=1) >= 0)
        for row in np.unique(dv, axis=0):
            vec = tuple(int(x) for x in row)
            while vec and vec[-1] == 0:
                vec = vec[:-1]
            distinct.add(vec)
    return distinct, connected_total


def enumerate_connected_distributions(
    n: int, *, jobs: int = 1, long_running: bool = False
) -> tuple[list[DistanceDistribution], EnumerationStats]:
    """All distinct distance distributions over labeled connected graphs of order n.

    Iterates every one of the 2^C(n,2) labeled graphs, skips disconnected
    instances (counting the connected ones), and deduplicates by distance
    vector: root sets depend only on the distribution, so nothing is lost.
    Order 8 means a 2^28 sweep and must be requested with long_running=True.
    """
    if not 2 <= n <= ENUMERATION_MAX_ORDER:
        raise ValueError(f"supported orders are 2..{ENUMERATION_MAX_ORDER}, got {n}")
    if n == ENUMERATION_MAX_ORDER and not long_running:
        raise ValueError(
            "order 8 sweeps 2^28 graphs; pass long_running=True to opt in"
        )
    total = 1 << (n * (n - 1) // 2)
    if jobs > 1 and total > _CHUNK:
        slices = jobs * 4
        step = -(-total // slices)
        ranges = [(n, k * step, min((k + 1) * step, total)) for k in range(slices)]
        ranges = [r for r in ranges if r[1] < r[2]]
        distinct: set[tuple[int, ...]] = set()
        connected = 0
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part, count in pool.map(_sweep_mask_range_star, ranges):
                distinct |= part
                connected += count
    else:
        distinct, connected = _sweep_mask_range(n, 0, total)
    dists = [DistanceDistribution(n, vec) for vec in sorted(distinct)]
    stats = EnumerationStats(n, connected, len(dists))
    return dists, stats


def _sweep_mask_range_star(args: tuple[int, int, int]):
    return _sweep_mask_range(*args)


# ---------------------------------------------------------------------------
# Free-tree enumeration via canonical level sequences
# ---------------------------------------------------------------------------


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical rooted-tree level sequences of order n, root at level 1.

    Successor rule (decreasing lexicographic order, constant amortized time):
    find the last entry above 2, lower it by one, and repeat the block ending
    at its new parent.  Starts at the path and ends at the star.
    """
    if n == 0:
        return
    levels = list(range(1, n + 1))
    while True:
        yield levels
        p = n - 1
        while p >= 0 and levels[p] <= 2:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        period = p - q
        for i in range(p, n):
            levels[i] = levels[i - period]


def _levels_to_graph(levels: Sequence[int], offset: int = 0, total: int | None = None,
                     rows: list[int] | None = None) -> list[int]:
    """Accumulate tree edges for a level sequence into adjacency rows."""
    size = total if total is not None else len(levels)
    if rows is None:
        rows = [0] * size
    last_at_level = {levels[0]: offset}
    for i in range(1, len(levels)):
        v = offset + i
        parent = last_at_level[levels[i] - 1]
        rows[v] |= 1 << parent
        rows[parent] |= 1 << v
        last_at_level[levels[i]] = v
    return rows


def _root_child_blocks_ok(levels: Sequence[int], bound: int) -> bool:
    """True when every child subtree of the root has at most `bound` vertices."""
    size = 0
    for lv in levels[1:]:
        if lv == 2:
            if size > bound:
                return False
            size = 1
        else:
            size += 1
    return size <= bound


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every free (unlabeled) tree of order n exactly once.

    A tree with a single centroid appears as the canonical rooted tree at
    that centroid (all root subtrees hold at most (n-1)//2 vertices); a tree
    with two adjacent centroids appears as an unordered pair of canonical
    rooted trees of order n/2 joined at their roots.
    """
    if not 1 <= n <= TREE_MAX_ORDER:
        raise ValueError(f"supported orders are 1..{TREE_MAX_ORDER}, got {n}")
    bound = (n - 1) // 2
    for levels in _rooted_level_sequences(n):
        if _root_child_blocks_ok(levels, bound):
            yield Graph(n, tuple(_levels_to_graph(levels)))
    if n % 2 == 0:
        half = n // 2
        halves = [list(seq) for seq in _rooted_level_sequences(half)]
        for i, a in enumerate(halves):
            for b in itertools.islice(halves, i, None):
                rows = _levels_to_graph(a, 0, n)
                rows = _levels_to_graph(b, half, n, rows)
                rows[0] |= 1 << half
                rows[half] |= 1
                yield Graph(n, tuple(rows))
