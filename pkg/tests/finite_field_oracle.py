"""Brute-force weights of KL_{v,w} from its points over a small prime field.

A coordinate of the chart Σ_v carries a weight on KL_{v,w} unless it vanishes
identically there.  Over F_p we list every point of Σ_v, keep those meeting
all south-west rank bounds of w, and record which coordinates are ever
nonzero.  This knows nothing about transpositions or Bruhat order.
"""

from itertools import product

from schubtorus.perm import rank_table


def rank_mod_p(rows, p):
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        for r in range(len(m)):
            if r != rank and m[r][c] % p:
                f = m[r][c] * inv % p
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def chart_cells(v):
    n = v.n
    ones = {(v(i), i) for i in range(1, n + 1)}
    zero = set()
    for i in range(1, n + 1):
        zero.update((v(i), a) for a in range(i + 1, n + 1))
        zero.update((b, i) for b in range(1, v(i)))
    free = sorted((r, c) for r in range(1, n + 1) for c in range(1, n + 1)
                  if (r, c) not in ones and (r, c) not in zero)
    return ones, free


def nonvanishing_cells(v, w, p=3):
    n = v.n
    ones, free = chart_cells(v)
    bounds = rank_table(w)
    seen = set()
    for values in product(range(p), repeat=len(free)):
        m = [[0] * n for _ in range(n)]
        for r, c in ones:
            m[r - 1][c - 1] = 1
        for (r, c), x in zip(free, values):
            m[r - 1][c - 1] = x
        ok = True
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                sub = [row[:b] for row in m[a - 1:]]
                if rank_mod_p(sub, p) > bounds[a - 1][b - 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            seen.update(cell for cell, x in zip(free, values) if x)
    return free, seen
