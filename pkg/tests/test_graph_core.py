"""Graph representation, parsing, distances, and enumeration.

Oracles used here are independent of the implementation under test: a local
graph6 encoder, Floyd-Warshall distances, the inclusion-exclusion recurrence
for labeled connected graph counts, the rooted-tree/free-tree counting
recurrences, and a Pruefer-sequence sweep deduplicated by canonical codes.
"""

import itertools
import random
from collections import Counter
from math import comb

import pytest

from wiener_roots.graph_core import (
    DisconnectedGraphError,
    DistanceDistribution,
    EnumerationStats,
    Graph,
    Graph6Error,
    diameter,
    distance_distribution,
    enumerate_connected_distributions,
    enumerate_trees,
    fixture_names,
    from_edge_list,
    load_edge_list,
    load_fixture,
    parse_graph6,
)


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


def floyd_warshall_distribution(g: Graph):
    inf = float("inf")
    dist = [[0 if i == j else (1 if g.has_edge(i, j) else inf)
             for j in range(g.n)] for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    counts = Counter(dist[i][j] for i in range(g.n) for j in range(i + 1, g.n))
    if inf in counts:
        return None
    top = max(counts)
    return tuple(counts.get(d, 0) for d in range(1, top + 1))


def labeled_connected_count(n: int) -> int:
    total = lambda k: 1 << comb(k, 2)
    c = [0] * (n + 1)
    c[1] = 1
    for m in range(2, n + 1):
        c[m] = total(m) - sum(comb(m - 1, k - 1) * c[k] * total(m - k)
                              for k in range(1, m))
    return c[n]


def rooted_tree_counts(limit: int) -> list[int]:
    r = [0, 1]
    for n in range(1, limit):
        total = 0
        for k in range(1, n + 1):
            s = sum(d * r[d] for d in range(1, k + 1) if k % d == 0)
            total += s * r[n - k + 1]
        r.append(total // n)
    return r


def free_tree_count(n: int) -> int:
    r = rooted_tree_counts(n)
    pairs = sum(r[i] * r[n - i] for i in range(1, n))
    if n % 2 == 0:
        pairs -= r[n // 2]
    t = r[n] - pairs // 2
    if n % 2 == 0:
        t += 0  # the bicentroid correction is inside the pair sum
    return t


def ahu_code(g: Graph) -> str:
    """Canonical free-tree code: rooted codes at the centroid(s)."""
    adj = [[u for u in range(g.n) if g.has_edge(u, v)] for v in range(g.n)]

    # component sizes of g - v, the slow obvious way
    def component_sizes(v):
        sizes = []
        for u in adj[v]:
            stack, seen = [u], {v, u}
            count = 1
            while stack:
                w = stack.pop()
                for x in adj[w]:
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
                        count += 1
            sizes.append(count)
        return sizes

    best = min(max(component_sizes(v), default=0) for v in range(g.n))
    centroids = [v for v in range(g.n)
                 if max(component_sizes(v), default=0) == best]

    def rooted(v, parent):
        children = sorted(rooted(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(children) + ")"

    if len(centroids) == 1:
        return rooted(centroids[0], -1)
    c1, c2 = centroids
    return "|".join(sorted((rooted(c1, c2), rooted(c2, c1))))


def pruefer_tree(code: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in code:
        u = heapq.heappop(leaves)
        edges.append((u, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    while True:
        edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.4]
        g = from_edge_list(n, edges)
        if g.is_connected():
            return g


# ---------------------------------------------------------------------------
# Graph type and construction
# ---------------------------------------------------------------------------


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (1, 2))  # loop at vertex 1
    with pytest.raises(ValueError):
        Graph(0, ())


def test_from_edge_list_basics():
    g = from_edge_list(2, [(0, 1)])
    assert g.edge_count == 1 and g.has_edge(0, 1)
    g = from_edge_list(3, [(0, 1), (0, 1), (1, 0)])  # duplicates collapse
    assert g.edge_count == 1
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(1, 1)])


def test_from_edge_list_fixture_graphs():
    fig5 = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (0, 5), (0, 4), (4, 5)])
    assert distance_distribution(fig5).d == (6, 4, 3, 2)
    assert load_fixture("min_imaginary_graph") == fig5
    fig6 = load_fixture("min_tree_root_i")
    assert fig6.n == 12 and fig6.is_tree()
    for name in fixture_names():
        g = load_fixture(name)
        assert g.is_connected()


def test_load_edge_list_rejects_garbage():
    with pytest.raises(ValueError):
        load_edge_list(["3", "0 1 2"])
    with pytest.raises(ValueError):
        load_edge_list([])


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def test_parse_graph6_hand_decoded_examples():
    k4 = parse_graph6("C~")
    assert k4.n == 4 and k4.edge_count == 6
    k2 = parse_graph6("A_")
    assert k2.n == 2 and k2.edge_count == 1
    empty2 = parse_graph6("A?")
    assert empty2.n == 2 and empty2.edge_count == 0
    assert parse_graph6(">>graph6<<A_") == k2


def test_parse_graph6_error_cases():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("~~~")  # long-form order
    with pytest.raises(Graph6Error):
        parse_graph6("B")  # missing payload
    with pytest.raises(Graph6Error):
        parse_graph6("A__")  # extra payload
    with pytest.raises(Graph6Error):
        parse_graph6("A" + chr(40))  # character below 63
    with pytest.raises(Graph6Error):
        parse_graph6("A@")  # nonzero padding: order 2 uses only the top bit


def test_parse_graph6_roundtrip_random(encode_graph6):
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 13)
        edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.5]
        g = from_edge_list(n, edges)
        assert parse_graph6(encode_graph6(g)) == g
    # order above the single-byte form boundary still works at 62
    g62 = from_edge_list(62, [(v, v + 1) for v in range(61)])
    assert parse_graph6(encode_graph6(g62)) == g62


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------


def test_distance_distribution_examples():
    k3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert distance_distribution(k3).d == (3,)
    p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert distance_distribution(p4).d == (3, 2, 1)


def test_distance_distribution_paths_staircase():
    for n in range(3, 51):
        g = from_edge_list(n, [(v, v + 1) for v in range(n - 1)])
        assert distance_distribution(g).d == tuple(range(n - 1, 0, -1))


def test_distance_distribution_rejects_disconnected_and_small():
    with pytest.raises(DisconnectedGraphError):
        distance_distribution(from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        distance_distribution(from_edge_list(1, []))


def test_distance_distribution_vs_floyd_warshall():
    rng = random.Random(11)
    for _ in range(120):
        g = random_connected_graph(rng.randrange(2, 9), rng)
        assert distance_distribution(g).d == floyd_warshall_distribution(g)


def test_distribution_invariants_validated():
    with pytest.raises(ValueError):
        DistanceDistribution(4, (3, 2))  # sums to 5, not 6
    with pytest.raises(ValueError):
        DistanceDistribution(4, (5, 0, 1))  # interior zero
    dd = DistanceDistribution(4, (3, 2, 1))
    assert dd.diameter == 3


def test_diameter():
    k5 = from_edge_list(5, [(u, v) for v in range(5) for u in range(v)])
    assert diameter(k5) == 1
    p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert diameter(p4) == 3
    d23 = from_edge_list(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
    assert diameter(d23) == 3
    assert diameter(from_edge_list(1, [])) == 0


# ---------------------------------------------------------------------------
# Labeled-graph enumeration
# ---------------------------------------------------------------------------


def test_enumeration_connected_counts_match_recurrence():
    for n in range(2, 7):
        dists, stats = enumerate_connected_distributions(n)
        assert stats.instances_examined == labeled_connected_count(n)
        assert stats.order == n
        assert stats.distinct_distributions == len(dists)


def test_enumeration_order2():
    dists, stats = enumerate_connected_distributions(2)
    assert stats.instances_examined == 1
    assert [dd.d for dd in dists] == [(1,)]


def test_enumeration_distributions_seen_by_direct_bfs():
    # independent route: every connected labeled graph's BFS distribution
    for n in range(2, 6):
        expected = set()
        pairs = [(u, v) for v in range(n) for u in range(v)]
        for mask in range(1 << comb(n, 2)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = from_edge_list(n, edges)
            if g.is_connected():
                expected.add(distance_distribution(g).d)
        dists, _ = enumerate_connected_distributions(n)
        assert {dd.d for dd in dists} == expected


def test_enumeration_no_duplicates_and_invariants():
    dists, _ = enumerate_connected_distributions(6)
    seen = [dd.d for dd in dists]
    assert len(seen) == len(set(seen))
    for dd in dists:
        assert sum(dd.d) == comb(6, 2)
        assert all(x >= 1 for x in dd.d)


def test_enumeration_gates_and_ranges():
    with pytest.raises(ValueError):
        enumerate_connected_distributions(1)
    with pytest.raises(ValueError):
        enumerate_connected_distributions(9)
    with pytest.raises(ValueError):
        enumerate_connected_distributions(8)  # needs long_running=True


def test_enumeration_jobs_agree():
    seq, seq_stats = enumerate_connected_distributions(5)
    par, par_stats = enumerate_connected_distributions(5, jobs=3)
    assert [d.d for d in seq] == [d.d for d in par]
    assert seq_stats == par_stats


def test_enumeration_stats_invariant():
    with pytest.raises(ValueError):
        EnumerationStats(4, 3, 5)


# ---------------------------------------------------------------------------
# Free-tree enumeration
# ---------------------------------------------------------------------------


def test_tree_counts_against_counting_recurrence():
    for n in range(1, 15):
        assert sum(1 for _ in enumerate_trees(n)) == free_tree_count(n)


def test_tree_count_spec_points():
    assert sum(1 for _ in enumerate_trees(4)) == 2
    assert sum(1 for _ in enumerate_trees(10)) == 106
    assert sum(1 for _ in enumerate_trees(16)) == 19320


def test_trees_are_trees_and_pairwise_nonisomorphic():
    for n in range(1, 11):
        codes = set()
        for g in enumerate_trees(n):
            assert g.n == n and g.edge_count == n - 1 and g.is_connected()
            code = ahu_code(g)
            assert code not in codes
            codes.add(code)


def test_trees_match_pruefer_enumeration():
    # full Pruefer sweep, canonicalized: exact same set of isomorphism classes
    for n in range(3, 8):
        expected = {ahu_code(pruefer_tree(code, n))
                    for code in itertools.product(range(n), repeat=n - 2)}
        got = {ahu_code(g) for g in enumerate_trees(n)}
        assert got == expected


def test_tree_order_range():
    with pytest.raises(ValueError):
        list(enumerate_trees(0))
    with pytest.raises(ValueError):
        list(enumerate_trees(19))


def test_order4_trees_are_path_and_star():
    codes = {ahu_code(g) for g in enumerate_trees(4)}
    path = ahu_code(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))
    star = ahu_code(from_edge_list(4, [(0, 1), (0, 2), (0, 3)]))
    assert codes == {path, star}
