"""Exact searches on small undirected graphs given as bitmask adjacency lists.

``adj[v]`` is an int whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.
Everything here is exponential in the worst case and meant for graphs with a
few dozen vertices at most.
"""

from __future__ import annotations

from typing import Iterator


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def complement(adj: list[int]) -> list[int]:
    full = (1 << len(adj)) - 1
    return [(full ^ a) & ~(1 << v) for v, a in enumerate(adj)]


def maximal_cliques(adj: list[int]) -> list[list[int]]:
    """All inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting).

    Pivot ties break toward the smallest vertex, so the recursion is
    deterministic; the result is sorted anyway.
    """
    out = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (popcount(p & adj[u]), -u))
        for v in bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if adj:
        expand(0, (1 << len(adj)) - 1, 0)
    return sorted(sorted(bits(c)) for c in out)


def max_clique(adj: list[int]) -> list[int]:
    """A maximum clique, by branch and bound on candidate-set size."""
    best = [0, 0]  # size, mask

    def grow(r: int, size: int, p: int) -> None:
        if not p:
            if size > best[0]:
                best[0], best[1] = size, r
            return
        while p:
            if size + popcount(p) <= best[0]:
                return
            v = p.bit_length() - 1
            bit = 1 << v
            grow(r | bit, size + 1, p & adj[v])
            p &= ~bit

    if adj:
        grow(0, 0, (1 << len(adj)) - 1)
    return sorted(bits(best[1]))


def clique_number(adj: list[int]) -> int:
    return len(max_clique(adj))


def independence_number(adj: list[int]) -> int:
    return clique_number(complement(adj))


def maximal_independent_sets(adj: list[int]) -> list[list[int]]:
    return maximal_cliques(complement(adj))


def is_k_colorable(adj: list[int], k: int) -> list[int] | None:
    """Return a proper coloring with colors < k, or None.

    DSATUR-ordered backtracking; a new color is opened only as the next
    unused index, which removes color-permutation symmetry.
    """
    n = len(adj)
    color = [-1] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in bits(adj[v]) if color[u] >= 0})
            kv = (sat, popcount(adj[v]), -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        forbidden = {color[u] for u in bits(adj[v]) if color[u] >= 0}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[v] = c
            if solve(colored + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return list(color) if solve(0, 0) else None


def chromatic_number(adj: list[int]) -> int:
    if not adj:
        return 0
    k = max(1, clique_number(adj))
    while is_k_colorable(adj, k) is None:
        k += 1
    return k


def induced_cycles(
    adj: list[int], min_len: int = 3, max_len: int | None = None, odd_only: bool = False
) -> Iterator[list[int]]:
    """Yield every chordless cycle with min_len <= length <= max_len.

    Each cycle is reported once, starting at its smallest vertex and oriented
    so that its second vertex is smaller than its last.
    """
    n = len(adj)
    if max_len is None:
        max_len = n

    def extend(path: list[int], inner: int, start: int, allowed: int):
        last = path[-1]
        # inner: mask of path vertices other than start and last
        for w in bits(adj[last] & allowed):
            if adj[w] & inner:
                continue
            if adj[w] >> start & 1:
                length = len(path) + 1
                if (
                    length >= 3
                    and min_len <= length <= max_len
                    and path[1] < w
                    and not (odd_only and length % 2 == 0)
                ):
                    yield path + [w]
                continue
            if len(path) + 1 < max_len:
                yield from extend(path + [w], inner | 1 << last, start, allowed & ~(1 << w))

    for s in range(n):
        higher = ~((1 << (s + 1)) - 1) & ((1 << n) - 1)
        for v in bits(adj[s] & higher):
            yield from extend([s, v], 0, s, higher & ~(1 << v))


def find_induced_cycle(adj: list[int], min_len: int, odd_only: bool = False) -> list[int] | None:
    return next(induced_cycles(adj, min_len, odd_only=odd_only), None)
