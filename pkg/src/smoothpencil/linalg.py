"""Gaussian elimination over a FieldCtx on lists of element codes."""

from __future__ import annotations

from .gf import FieldCtx


def rref(ctx: FieldCtx, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken in row order (first nonzero entry at or below the current
    row), so the result is deterministic and canonical for the row space.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = ctx.inv(m[row][col])
        m[row] = [ctx.mul(inv, x) for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = ctx.neg(m[i][col])
                m[i] = [ctx.add(a, ctx.mul(f, b)) for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m[:row], pivots


def rank(ctx: FieldCtx, rows) -> int:
    return len(rref(ctx, rows)[1])


def kernel(ctx: FieldCtx, rows, ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(ctx, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, pc in zip(red, pivots):
            if r[f]:
                v[pc] = ctx.neg(r[f])
        basis.append(v)
    return basis


def det(ctx: FieldCtx, rows) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    result = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = ctx.neg(result)
        result = ctx.mul(result, m[col][col])
        inv = ctx.inv(m[col][col])
        for i in range(col + 1, n):
            if m[i][col]:
                f = ctx.neg(ctx.mul(m[i][col], inv))
                m[i] = [ctx.add(a, ctx.mul(f, b)) for a, b in zip(m[i], m[col])]
    return result


def rank_mod_p(rows, p: int) -> int:
    """Rank over GF(p) for a prime p, vectorized with numpy."""
    import numpy as np

    m = np.array(rows, dtype=np.int64) % p
    if m.size == 0:
        return 0
    nrows, ncols = m.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, col]), -1, p) % p
        below = m[r + 1:, col].copy()
        if below.any():
            m[r + 1:] = (m[r + 1:] - np.outer(below, m[r])) % p
        r += 1
    return r
