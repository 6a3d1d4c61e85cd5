"""Finitely generated abelian group plumbing.

Two small pieces live here: an integer Smith normal form used to decide
when a presented abelian group vanishes, and a compact presentation of a
finite abelian group given only by its addition table (greedy generators,
canonical coefficient expressions, and rows generating the full relation
lattice).  Everything works on plain Python ints, so there is no overflow
to worry about.
"""
from __future__ import annotations


def smith_normal_form(rows, ncols: int) -> tuple[int, ...]:
    """Nonzero diagonal invariants d1 | d2 | ... of an integer matrix.

    rows is any iterable of length-ncols integer sequences.  The length of
    the result is the rank; zero columns beyond it correspond to free
    summands of the cokernel.
    """
    A = [list(r) for r in rows if any(r)]
    m = len(A)
    divisors: list[int] = []
    t = 0
    while t < m and t < ncols:
        # pivot: smallest nonzero magnitude in the remaining submatrix
        bi = bj = -1
        best = 0
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, ncols):
                v = Ai[j]
                if v and (best == 0 or abs(v) < best):
                    best = abs(v)
                    bi, bj = i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if bi < 0:
            break
        A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, ncols):
                            Ai[j] -= q * At[j]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        for i in range(t, m):
                            A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        for i in range(t, m):
                            A[i][t], A[i][j] = A[i][j], A[i][t]
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix
            p = A[t][t]
            culprit = None
            for i in range(t + 1, m):
                Ai = A[i]
                for j in range(t + 1, ncols):
                    if Ai[j] % p:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            At = A[t]
            Ac = A[culprit]
            for j in range(t, ncols):
                At[j] += Ac[j]
        divisors.append(abs(A[t][t]))
        t += 1
    return tuple(divisors)


def cokernel_invariants(rows, ncols: int) -> tuple[int, ...]:
    """Invariant factors of Z^ncols modulo the row space, 1s dropped.

    Trailing zeros mark free summands.  An empty result means the quotient
    group is trivial.
    """
    d = smith_normal_form(rows, ncols)
    out = [x for x in d if x != 1]
    out.extend([0] * (ncols - len(d)))
    return tuple(out)


def group_presentation(size: int, add, zero: int):
    """Present a finite abelian group given by an addition callable.

    Returns (gens, expr, rel_rows) where gens is a greedy generating list
    of carrier indices, expr maps every carrier index to its canonical
    coefficient tuple over gens, and rel_rows generate the whole kernel of
    Z^len(gens) -> group.  The trivial group yields ([], {zero: ()}, []).
    """
    gens: list[int] = []
    expr: dict[int, tuple[int, ...]] = {zero: ()}
    rows: list[tuple[int, ...]] = []
    while len(expr) < size:
        g = min(x for x in range(size) if x not in expr)
        old = expr
        # index of g over the current span: least k >= 1 with k*g inside
        k, x = 1, g
        while x not in old:
            x = add(x, g)
            k += 1
        overflow = old[x]
        gens.append(g)
        rows.append(tuple(-c for c in overflow) + (k,))
        expr = {}
        for y, ey in old.items():
            cur = y
            for t in range(k):
                expr[cur] = ey + (t,)
                cur = add(cur, g)
    width = len(gens)
    expr = {x: v + (0,) * (width - len(v)) for x, v in expr.items()}
    rows = [r + (0,) * (width - len(r)) for r in rows]
    return gens, expr, rows
