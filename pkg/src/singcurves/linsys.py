"""Linear systems of affine plane curves with prescribed singularities.

The blow-up at (a, b) acts on equations by the substitution
(x, y) -> (x, (x-a)*y + b) followed by exact division by (x-a)^m, the
exceptional line being {x = a}; when the tangent direction is
proportional to (0, 1) the roles of x and y swap and the exceptional
line is {y = b}.  Infinitely near points along a chain live at
(a, t2/t1) (resp. (t1/t2, b)) of the current chart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .field import FieldElement
from .linalg import nullspace
from .poly import MPoly, PolyRing, rat


class ChainError(ValueError):
    pass


def _as_raw(ring: PolyRing, value):
    if isinstance(value, FieldElement):
        if value.ctx != ring.ctx:
            raise ChainError("point coordinate from a different field context")
        return value.raw
    if ring.ctx.kind == "quadratic":
        if isinstance(value, tuple) and len(value) == 2:
            return (rat(value[0]), rat(value[1]))
        return ring.ctx.from_rat(rat(value))
    return ring.ctx.from_rat(rat(value))


def _as_raw_pair(ring: PolyRing, pair):
    return (_as_raw(ring, pair[0]), _as_raw(ring, pair[1]))


@dataclass(frozen=True)
class PointChain:
    """Base point, multiplicity sequence, concrete tangent directions.

    Tangents are pairs; each is normalised so its first nonzero
    coordinate is 1, with (0, 1) kept literal.  A fully specified chain
    has len(tangents) == len(mults) - 1.
    """

    base: Tuple
    mults: Tuple[int, ...]
    tangents: Tuple

    @classmethod
    def make(cls, ring: PolyRing, base, mults: Sequence[int], tangents=()):
        base = _as_raw_pair(ring, base)
        mults = tuple(int(m) for m in mults)
        if not mults:
            raise ChainError("empty multiplicity sequence")
        if any(m < 0 for m in mults):
            raise ChainError("negative multiplicity")
        tv = []
        for t in tangents:
            t = _as_raw_pair(ring, t)
            ctx = ring.ctx
            if ctx.is_zero(t[0]) and ctx.is_zero(t[1]):
                raise ChainError("zero tangent vector")
            if not ctx.is_zero(t[0]):
                t = (ctx.one, ctx.div(t[1], t[0]))
            else:
                t = (ctx.zero, ctx.one)
            tv.append(t)
        if len(tv) > len(mults) - 1:
            raise ChainError(
                "more tangent directions than blow-ups: need len(tangents) <= len(mults) - 1"
            )
        return cls(base, mults, tuple(tv))


@dataclass
class LinearSystem:
    """A degree bound and a basis of section polynomials in two variables."""

    ring: PolyRing
    degree: int
    sections: List[MPoly]

    @property
    def dimension(self) -> int:
        return len(self.sections)


@dataclass
class ChartState:
    """Blow-up history: (center, swapped-axes flag, multiplicity divided out)."""

    history: List[Tuple[Tuple, bool, int]] = field(default_factory=list)


def full_system(ring: PolyRing, d: int) -> LinearSystem:
    """All monomials of total degree <= d (degree-d curves, affine chart)."""
    if ring.nvars != 2:
        raise ValueError("linear systems live in a two-variable ring")
    if d < 0:
        raise ValueError("negative degree")
    monos = []
    for i in range(d + 1):
        for j in range(d + 1 - i):
            monos.append(ring.monomial((i, j)))
    monos.sort(key=lambda f: ring.mono_key(f.lead_mono()), reverse=True)
    return LinearSystem(ring, d, monos)


def _derivative_rows(sections, p_raw, m: int):
    """Evaluation rows of all partials of order < m at p."""
    ring = sections[0].ring
    xn, yn = ring.names
    rows = []
    derivs = {(0, 0): list(sections)}
    for c in range(m):
        for a in range(c + 1):
            b = c - a
            if (a, b) not in derivs:
                if a > 0:
                    prev = derivs[(a - 1, b)]
                    derivs[(a, b)] = [s.derivative(xn) for s in prev]
                else:
                    prev = derivs[(a, b - 1)]
                    derivs[(a, b)] = [s.derivative(yn) for s in prev]
            rows.append([s.eval_at(p_raw) for s in derivs[(a, b)]])
    return rows


def impose_ordinary(L: LinearSystem, p, m: int) -> LinearSystem:
    """Subsystem vanishing to order m at p (all partials of order < m)."""
    sections = _impose(L.sections, _as_raw_pair(L.ring, p), m)
    return LinearSystem(L.ring, L.degree, sections)


def _impose(sections, p_raw, m: int):
    if m <= 0 or not sections:
        return list(sections)
    ring = sections[0].ring
    rows = _derivative_rows(sections, list(p_raw), m)
    basis = nullspace(rows, len(sections), ring.ctx)
    out = []
    for v in basis:
        s = ring.zero
        for coef, sec in zip(v, sections):
            if not ring.cis_zero(coef):
                s = s + sec.scale(coef)
        out.append(s.primitive_normalize())
    return out


def _blow_up_poly(f: MPoly, center, mult: int, swap: bool) -> MPoly:
    ring = f.ring
    xn, yn = ring.names
    x, y = ring.var(xn), ring.var(yn)
    a, b = center
    ac, bc = ring.const(ring.ctx.wrap(a)), ring.const(ring.ctx.wrap(b))
    if not swap:
        g = f.substitute(yn, (x - ac) * y + bc)
        divisor = (x - ac) ** mult
    else:
        g = f.substitute(xn, (y - bc) * x + ac)
        divisor = (y - bc) ** mult
    if mult == 0:
        return g
    return g.exact_divide(divisor)


def blow_up_step(sections, center, mult: int, swap: bool):
    """Transform sections to the blown-up chart; exact division enforces
    that the requested multiplicity was actually imposed."""
    if not sections:
        return []
    ring = sections[0].ring
    c = _as_raw_pair(ring, center)
    return [_blow_up_poly(s, c, mult, swap) for s in sections]


def _blow_down_poly(f: MPoly, center, mult: int, swap: bool) -> MPoly:
    """Inverse step: multiply by (axis - center)^mult and substitute back."""
    ring = f.ring
    xn, yn = ring.names
    a, b = center
    x, y = ring.var(xn), ring.var(yn)
    ac, bc = ring.const(ring.ctx.wrap(a)), ring.const(ring.ctx.wrap(b))
    if not swap:
        # y <- (y-b)/(x-a), times (x-a)^mult
        groups = f._split_by_var(yn)
        lin = y - bc
        base = x - ac
    else:
        groups = f._split_by_var(xn)
        lin = x - ac
        base = y - bc
    out = ring.zero
    for e, terms in groups.items():
        coeff = MPoly(ring, terms)
        piece = coeff * lin ** e
        k = mult - e
        if k >= 0:
            piece = piece * base ** k
        else:
            piece = piece.exact_divide(base ** (-k))
        out = out + piece
    return out


def blow_down(sections, state: ChartState):
    out = list(sections)
    for center, swap, mult in reversed(state.history):
        if not out:
            break
        out = [_blow_down_poly(s, center, mult, swap) for s in out]
    return out


def _next_center(ctx, p, t, swap: bool):
    if not swap:
        return (p[0], ctx.div(t[1], t[0]))
    return (ctx.div(t[0], t[1]), p[1])


def lin_sys(L: LinearSystem, chains: Sequence[PointChain]) -> LinearSystem:
    """Subsystem with multiplicity >= m_ij at every point of every chain."""
    ring = L.ring
    ctx = ring.ctx
    for ch in chains:
        if len(ch.tangents) != len(ch.mults) - 1:
            raise ChainError("chain not fully specified: need one tangent per blow-up")
    sections = list(L.sections)
    for ch in chains:
        sections = _impose(sections, ch.base, ch.mults[0])
    for ch in chains:
        if not sections:
            break
        state = ChartState()
        p0 = ch.base
        for j, t in enumerate(ch.tangents):
            if not sections:
                break
            swap = ctx.is_zero(t[0])
            sections = [_blow_up_poly(s, p0, ch.mults[j], swap) for s in sections]
            state.history.append((p0, swap, ch.mults[j]))
            p0 = _next_center(ctx, p0, t, swap)
            sections = _impose(sections, p0, ch.mults[j + 1])
        if sections:
            sections = blow_down(sections, state)
    sections = [s.primitive_normalize() for s in sections]
    sections.sort(key=lambda f: ring.mono_key(f.lead_mono()), reverse=True)
    return LinearSystem(ring, L.degree, sections)


def multiplicity_at(f: MPoly, p) -> int:
    """Multiplicity of the curve f at an affine point."""
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial")
    ring = f.ring
    xn, yn = ring.names
    a, b = _as_raw_pair(ring, p)
    x, y = ring.var(xn), ring.var(yn)
    g = f.substitute(xn, x + ring.const(ring.ctx.wrap(a)))
    g = g.substitute(yn, y + ring.const(ring.ctx.wrap(b)))
    sh = ring._deg_shift
    return min(m >> sh for m in g.terms)


def multiplicity_profile(f: MPoly, chain: PointChain) -> List[int]:
    """Actual multiplicities of f along the chain (0 when the chain leaves
    the curve; the walk continues on the total transform)."""
    if f.is_zero():
        raise ValueError("profile of the zero polynomial")
    ring = f.ring
    ctx = ring.ctx
    g = f
    p = chain.base
    profile = [multiplicity_at(g, p)]
    for t in chain.tangents:
        swap = ctx.is_zero(t[0])
        g = _blow_up_poly(g, p, profile[-1], swap)
        p = _next_center(ctx, p, t, swap)
        profile.append(multiplicity_at(g, p))
    return profile
