"""Dense-tableau primal simplex over Fractions with Bland's anti-cycling rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass
class LPResult:
    status: str  # "optimal" or "unbounded"
    value: Fraction | None
    x: list
    duals: list
    pivots: int


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence, max_pivots: int = 100_000) -> LPResult:
    """Solve  max c.x  s.t.  A x <= b,  x >= 0  exactly, for b >= 0.

    The slack basis is feasible because b >= 0, so no phase one is needed.
    ``duals`` are the optimal multipliers of the rows of A (they solve the
    dual  min b.y  s.t.  A^T y >= c,  y >= 0).
    """
    m, n = len(A), len(c)
    if len(b) != m or any(len(row) != n for row in A):
        raise ValueError("inconsistent LP dimensions")
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("right-hand side must be nonnegative")

    zero = Fraction(0)
    T = [[Fraction(v) for v in row] + [Fraction(int(k == i)) for k in range(m)] + [Fraction(b[i])] for i, row in enumerate(A)]
    # reduced costs c_j - c_B B^-1 A_j, and -objective in the last slot
    z = [Fraction(v) for v in c] + [zero] * m + [zero]
    basis = list(range(n, n + m))

    pivots = 0
    while True:
        entering = next((j for j in range(n + m) if z[j] > 0), None)
        if entering is None:
            break
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                key = (T[i][-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return LPResult("unbounded", None, [], [], pivots)
        _pivot(T, z, best[1], entering)
        basis[best[1]] = entering
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("simplex pivot limit exceeded")

    x = [zero] * (n + m)
    for i, var in enumerate(basis):
        x[var] = T[i][-1]
    duals = [-z[n + i] for i in range(m)]
    return LPResult("optimal", -z[-1], x[:n], duals, pivots)


def _pivot(T, z, r, s):
    row = T[r]
    p = row[s]
    if p != 1:
        T[r] = row = [v / p for v in row]
    for i, other in enumerate(T):
        if i != r and other[s] != 0:
            f = other[s]
            T[i] = [u - f * v for u, v in zip(other, row)]
    f = z[s]
    if f != 0:
        z[:] = [u - f * v for u, v in zip(z, row)]
