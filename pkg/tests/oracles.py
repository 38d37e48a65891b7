"""Brute-force reference computations.  Slow, obvious, and independent of the
package's search code; only for small inputs."""

from fractions import Fraction
from itertools import combinations, permutations


def edge_set(cg):
    return {frozenset(e) for e in cg.edges()}


def brute_conflicts(g, ms):
    """Pairs that conflict, straight from the t_ji matrix (no shortcuts)."""
    t = g.t
    out = set()
    for a, b in combinations(list(ms), 2):
        i, j = a.source, a.destination
        i2, j2 = b.source, b.destination
        if i == i2 or j == j2 or t(j2, i) == 1 or t(j, i2) == 1:
            out.add(frozenset((a, b)))
    return out


def brute_maximal_cliques(vertices, edges):
    vertices = list(vertices)
    cliques = [
        frozenset(s)
        for r in range(1, len(vertices) + 1)
        for s in combinations(vertices, r)
        if all(frozenset(p) in edges for p in combinations(s, 2))
    ]
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_independence_number(vertices, edges):
    vertices = list(vertices)
    for r in range(len(vertices), -1, -1):
        for s in combinations(vertices, r):
            if all(frozenset(p) not in edges for p in combinations(s, 2)):
                return r
    return 0


def brute_chromatic_number(vertices, edges):
    """Minimum number of independent sets covering the vertices, by subset DP."""
    vertices = list(vertices)
    n = len(vertices)
    if n == 0:
        return 0
    indep = [True] * (1 << n)
    for mask in range(1 << n):
        members = [vertices[k] for k in range(n) if mask >> k & 1]
        indep[mask] = all(frozenset(p) not in edges for p in combinations(members, 2))
    best = [0] + [n + 1] * ((1 << n) - 1)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sub = mask
        while sub:
            if sub & low and indep[sub]:
                best[mask] = min(best[mask], best[mask ^ sub] + 1)
            sub = (sub - 1) & mask
    return best[(1 << n) - 1]


def brute_is_perfect(vertices, edges):
    """chi == omega on every induced subgraph (the definition itself)."""
    vertices = list(vertices)
    for r in range(1, len(vertices) + 1):
        for s in combinations(vertices, r):
            sub = {e for e in edges if e <= set(s)}
            omega = max(len(c) for c in brute_maximal_cliques(s, sub))
            if brute_chromatic_number(s, sub) != omega:
                return False
    return True


def brute_has_chordless_long_cycle(g):
    """Look for a node subset of size 2k >= 6 whose induced subgraph is a cycle."""
    nodes = [("S", i) for i in range(g.num_sources)] + [("D", j) for j in range(g.num_destinations)]

    def adjacent(u, v):
        if u[0] == v[0]:
            return False
        i, j = (u[1], v[1]) if u[0] == "S" else (v[1], u[1])
        return g.connected(i, j)

    for size in range(6, len(nodes) + 1, 2):
        for sub in combinations(nodes, size):
            deg = {v: sum(adjacent(v, u) for u in sub) for v in sub}
            if any(d != 2 for d in deg.values()):
                continue
            # 2-regular: a single cycle iff connected
            seen, stack = {sub[0]}, [sub[0]]
            while stack:
                v = stack.pop()
                for u in sub:
                    if u not in seen and adjacent(u, v):
                        seen.add(u)
                        stack.append(u)
            if len(seen) == size:
                return True
    return False


def brute_directed_cycle(nodes, edges):
    """True if the digraph has a directed cycle (plain DFS colouring)."""
    succ = {v: [] for v in nodes}
    for a, b in edges:
        succ[a].append(b)
    state = {v: 0 for v in nodes}

    def visit(v):
        state[v] = 1
        for w in succ[v]:
            if state[w] == 1 or (state[w] == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in nodes)


def brute_vertices(rp):
    """Vertices via every d-subset of all constraints (nonnegativity included)."""
    msgs = list(rp.messages)
    d = len(msgs)
    rows = []
    for k in range(d):
        rows.append(([Fraction(-int(q == k)) for q in range(d)], Fraction(0)))
    for c in rp.inequalities:
        rows.append(([Fraction(int(m in c)) for m in msgs], Fraction(1)))
    found = set()
    for chosen in combinations(range(len(rows)), d):
        A = [list(rows[r][0]) + [rows[r][1]] for r in chosen]
        x = _gauss(A, d)
        if x is None:
            continue
        if all(sum(a * v for a, v in zip(row, x)) <= b for row, b in rows):
            found.add(tuple(x))
    return sorted(found)


def _gauss(A, d):
    for col in range(d):
        piv = next((r for r in range(col, d) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [v / p for v in A[col]]
        for r in range(d):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [u - f * v for u, v in zip(A[r], A[col])]
    return [A[r][d] for r in range(d)]


def convex_by_definition(heard_by, order):
    """(a < l < b) and both ends heard => l heard, checked over all triples."""
    rank = {v: k for k, v in enumerate(order)}
    for node, heard in heard_by.items():
        for a, b in permutations(heard, 2):
            for l in order:
                if rank[a] < rank[l] < rank[b] and l not in heard:
                    return False
    return True
