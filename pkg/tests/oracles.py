"""Independent brute-force oracles used by the test suite only.

The dimension oracle writes the singularity conditions directly as
linear functionals on the coefficient vector of a generic member of the
system: divisibility by the exceptional factor is expressed through peel
remainders (no nullspace, no blow-down), and the rank is computed by
plain Fraction Gaussian elimination, independent of the package's
fraction-free linear algebra.
"""

from fractions import Fraction

from singcurves.linsys import _next_center


def _to_fraction(ctx, raw):
    if ctx.kind == "rationals":
        return Fraction(int(raw.numerator), int(raw.denominator))
    raise NotImplementedError("oracle runs over the rationals")


def chain_condition_rows(sections, chain):
    """Condition rows (lists, one entry per section) imposed by one chain.

    All sections are transformed in lockstep so that corresponding peel
    remainders produce aligned coefficient rows.
    """
    ring = sections[0].ring
    ctx = ring.ctx
    xn, yn = ring.names
    rows = []
    gs = list(sections)
    p = chain.base
    for j, m in enumerate(chain.mults):
        if j < len(chain.tangents):
            t = chain.tangents[j]
            swap = ctx.is_zero(t[0])
            x, y = ring.var(xn), ring.var(yn)
            a = ring.const(ctx.wrap(p[0]))
            b = ring.const(ctx.wrap(p[1]))
            if not swap:
                subs = [g.substitute(yn, (x - a) * y + b) for g in gs]
                axis, center, other = xn, p[0], yn
            else:
                subs = [g.substitute(xn, (y - b) * x + a) for g in gs]
                axis, center, other = yn, p[1], xn
            hs = subs
            for _ in range(m):
                peeled = [h.peel_remainder(axis, ctx.wrap(center)) for h in hs]
                hs = [q for q, _ in peeled]
                rems = [r for _, r in peeled]
                kmax = max((r.degree_in(other) for r in rems), default=-1)
                for k in range(kmax + 1):
                    rows.append(
                        [r.coeff_of(other, k).constant_raw() for r in rems]
                    )
            gs = hs
            p = _next_center(ctx, p, t, swap)
        else:
            for c in range(m):
                for ax in range(c + 1):
                    rows.append(
                        [
                            g.derivative(xn, ax).derivative(yn, c - ax).eval_at(list(p))
                            for g in gs
                        ]
                    )
    return rows


def brute_force_dimension(L, chains):
    """Corank of the stacked condition matrix on L's coefficients."""
    ctx = L.ring.ctx
    rows = []
    for ch in chains:
        for row in chain_condition_rows(L.sections, ch):
            rows.append([_to_fraction(ctx, v) for v in row])
    if not rows:
        return len(L.sections)
    return len(L.sections) - _fraction_rank(rows)


def _fraction_rank(rows):
    nr, nc = len(rows), len(rows[0])
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nr):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                for j in range(c, nc):
                    rows[i][j] -= f * rows[r][j]
        r += 1
        if r == nr:
            break
    return r
