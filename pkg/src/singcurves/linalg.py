"""Exact linear algebra: fraction-free elimination and polynomial minors."""

from __future__ import annotations

from .poly import MPoly, NotDivisible


def nullspace(rows, ncols: int, ctx):
    """Basis of the right nullspace of a matrix of raw field elements.

    Fraction-free (Bareiss) forward elimination with first-nonzero
    pivoting, then back substitution; one basis vector per free column,
    normalised with a 1 in that column.  Deterministic.
    """
    M = [list(r) for r in rows]
    nr = len(M)
    add, sub, mul, div, is_zero = ctx.add, ctx.sub, ctx.mul, ctx.div, ctx.is_zero
    piv_cols = []
    prev = ctx.one
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nr):
            if not is_zero(M[i][c]):
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            M[r], M[pr] = M[pr], M[r]
        piv = M[r][c]
        for i in range(r + 1, nr):
            mic = M[i][c]
            if is_zero(mic):
                for j in range(c, ncols):
                    M[i][j] = div(mul(piv, M[i][j]), prev)
            else:
                for j in range(c, ncols):
                    M[i][j] = div(sub(mul(piv, M[i][j]), mul(mic, M[r][j])), prev)
        prev = piv
        piv_cols.append(c)
        r += 1
        if r == nr:
            break
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        v = [ctx.zero] * ncols
        v[fc] = ctx.one
        for k in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[k]
            s = ctx.zero
            for j in range(pc + 1, ncols):
                if not is_zero(v[j]) and not is_zero(M[k][j]):
                    s = add(s, mul(M[k][j], v[j]))
            v[pc] = div(ctx.neg(s), M[k][pc])
        basis.append(v)
    return basis


def rank(rows, ncols: int, ctx) -> int:
    if not rows:
        return 0
    return ncols - len(nullspace(rows, ncols, ctx))


_LAPLACE_LIMIT = 8


def det_polys(rows) -> MPoly:
    """Determinant of a square matrix of MPoly entries.

    Laplace expansion with shared-subminor memoisation for small sizes,
    fraction-free Bareiss elimination (exact polynomial division) above.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 1:
        return rows[0][0]
    if n <= _LAPLACE_LIMIT:
        return _det_laplace(rows, ring)
    return _det_bareiss(rows, ring)


def _det_laplace(rows, ring) -> MPoly:
    n = len(rows)
    # level[i] maps a column bitmask of popcount i to the minor of rows 0..i-1
    level = {0: ring.one}
    for i in range(n):
        nxt = {}
        for mask, minor in level.items():
            if minor.is_zero():
                continue
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = rows[i][c]
                if entry.is_zero():
                    continue
                sign = _popcount(mask >> (c + 1)) & 1
                term = entry * minor
                if sign:
                    term = -term
                key = mask | bit
                acc = nxt.get(key)
                nxt[key] = term if acc is None else acc + term
        level = nxt
        if not level:
            return ring.zero
    return level.get((1 << n) - 1, ring.zero)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _det_bareiss(rows, ring) -> MPoly:
    M = [list(r) for r in rows]
    n = len(M)
    prev = ring.one
    sign = 0
    for c in range(n):
        pr = None
        for i in range(c, n):
            if not M[i][c].is_zero():
                pr = i
                break
        if pr is None:
            return ring.zero
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            sign ^= 1
        piv = M[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                num = M[i][j] * piv - M[i][c] * M[c][j]
                M[i][j] = num.exact_divide(prev) if not num.is_zero() else num
            M[i][c] = ring.zero
        prev = piv
    d = M[n - 1][n - 1]
    return -d if sign else d
