"""Sparse multivariate polynomials over a FieldContext.

Monomials are packed into single ints: one 16-bit lane per variable plus
a total-degree lane on top, so monomial product is integer addition and
divisibility is one masked subtraction.  Exponents are capped at 2^15-1
(the top bit of each lane is a borrow guard).

Terms live in a dict {packed_mono: raw_coefficient}; coefficient
arithmetic is delegated to the ring's FieldContext, the inner loops to
the selected kernel (compiled or pure).  MPoly values are immutable by
convention: every operation returns a fresh polynomial.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from ._kernel import add_terms, axpy_terms, mul_terms, scale_terms
from .field import FieldContext, FieldElement, Rat, rat

_BITS = 16
_LANE = 0xFFFF
_EMAX = 0x7FFF


class RingMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed; a multiplicity contract broke."""


class PolyRing:
    """Polynomial ring: a FieldContext, ordered variable names, a term order."""

    __slots__ = (
        "ctx", "names", "order", "nvars", "_index", "_deg_shift",
        "_guards", "_strip", "_shifts", "cadd", "csub", "cmul", "cneg",
        "cdiv", "cinv", "cis_zero", "_key_cache", "_key_fn",
        "zero", "one",
    )

    def __init__(self, ctx: FieldContext, names: Sequence[str], order: str = "grevlex"):
        if order not in ("grevlex", "lex"):
            raise ValueError(f"unsupported monomial order {order!r}")
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.ctx = ctx
        self.names = names
        self.order = order
        self.nvars = len(names)
        self._index = {nm: i for i, nm in enumerate(names)}
        self._deg_shift = _BITS * self.nvars
        self._shifts = tuple(_BITS * (self.nvars - 1 - i) for i in range(self.nvars))
        self._guards = sum(1 << (_BITS * k + 15) for k in range(self.nvars + 1))
        self._strip = (1 << self._deg_shift) - 1
        if ctx.kind == "rationals":
            import operator

            self.cadd = operator.add
            self.csub = operator.sub
            self.cmul = operator.mul
            self.cneg = operator.neg
            self.cdiv = ctx.div
            self.cinv = ctx.inv
            self.cis_zero = _q_is_zero
        else:
            self.cadd = ctx.add
            self.csub = ctx.sub
            self.cmul = ctx.mul
            self.cneg = ctx.neg
            self.cdiv = ctx.div
            self.cinv = ctx.inv
            self.cis_zero = ctx.is_zero
        self._key_cache = {}
        self._key_fn = self._grevlex_key if order == "grevlex" else self._lex_key
        self.zero = MPoly(self, {})
        self.one = MPoly(self, {0: ctx.one})

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (
            self is other
            or (
                isinstance(other, PolyRing)
                and self.ctx == other.ctx
                and self.names == other.names
                and self.order == other.order
            )
        )

    def __hash__(self):
        return hash((self.ctx, self.names, self.order))

    def __repr__(self):
        k = "Q" if self.ctx.kind == "rationals" else "Q(r)"
        return f"PolyRing({k}[{', '.join(self.names)}], {self.order})"

    # -- monomial arithmetic on packed ints -----------------------------------

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        m = 0
        d = 0
        for e, sh in zip(exps, self._shifts):
            if not 0 <= e <= _EMAX:
                raise OverflowError("exponent out of packed range")
            m |= e << sh
            d += e
        if d > _EMAX:
            raise OverflowError("total degree out of packed range")
        return m | (d << self._deg_shift)

    def exps(self, mono: int):
        return tuple((mono >> sh) & _LANE for sh in self._shifts)

    def mono_deg(self, mono: int) -> int:
        return mono >> self._deg_shift

    def mono_divides(self, a: int, b: int) -> bool:
        """True when x^a divides x^b."""
        return ((b | self._guards) - a) & self._guards == self._guards

    def mono_lcm(self, a: int, b: int) -> int:
        ea, eb = self.exps(a), self.exps(b)
        return self.pack([max(x, y) for x, y in zip(ea, eb)])

    def _grevlex_key(self, mono: int):
        key = self._key_cache.get(mono)
        if key is None:
            e = self.exps(mono)
            key = (mono >> self._deg_shift, tuple(-x for x in reversed(e)))
            self._key_cache[mono] = key
        return key

    def _lex_key(self, mono: int):
        return mono & self._strip

    def mono_key(self, mono: int):
        return self._key_fn(mono)

    def mono_str(self, mono: int) -> str:
        parts = []
        for nm, e in zip(self.names, self.exps(mono)):
            if e == 1:
                parts.append(nm)
            elif e > 1:
                parts.append(f"{nm}^{e}")
        return "*".join(parts)

    # -- construction ----------------------------------------------------------

    def const(self, value) -> "MPoly":
        raw = self._coerce_coeff(value)
        if self.cis_zero(raw):
            return self.zero
        return MPoly(self, {0: raw})

    def var(self, name: str) -> "MPoly":
        i = self._index.get(name)
        if i is None:
            raise KeyError(f"no variable {name!r} in {self!r}")
        exps = [0] * self.nvars
        exps[i] = 1
        return MPoly(self, {self.pack(exps): self.ctx.one})

    def gens(self):
        return [self.var(nm) for nm in self.names]

    def monomial(self, exps: Sequence[int], coeff=1) -> "MPoly":
        raw = self._coerce_coeff(coeff)
        if self.cis_zero(raw):
            return self.zero
        return MPoly(self, {self.pack(exps): raw})

    def from_terms(self, pairs: Iterable) -> "MPoly":
        terms = {}
        for exps, coeff in pairs:
            raw = self._coerce_coeff(coeff)
            m = exps if isinstance(exps, int) else self.pack(exps)
            if m in terms:
                raw = self.cadd(terms[m], raw)
            if self.cis_zero(raw):
                terms.pop(m, None)
            else:
                terms[m] = raw
        return MPoly(self, terms)

    def _coerce_coeff(self, value):
        if isinstance(value, FieldElement):
            if value.ctx != self.ctx:
                raise RingMismatch("coefficient from a different field context")
            return value.raw
        if isinstance(value, (int, Rat, str)):
            return self.ctx.from_rat(rat(value))
        if self.ctx.kind == "quadratic" and isinstance(value, tuple) and len(value) == 2:
            return (rat(value[0]), rat(value[1]))
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    # -- derived rings -----------------------------------------------------------

    def with_order(self, order: str) -> "PolyRing":
        if order == self.order:
            return self
        return PolyRing(self.ctx, self.names, order)

    def extend(self, *extra: str, order: Optional[str] = None) -> "PolyRing":
        return PolyRing(self.ctx, self.names + tuple(extra), order or self.order)

    def drop(self, name: str, order: Optional[str] = None) -> "PolyRing":
        return PolyRing(
            self.ctx,
            tuple(n for n in self.names if n != name),
            order or self.order,
        )

    def with_context(self, ctx: FieldContext) -> "PolyRing":
        return PolyRing(ctx, self.names, self.order)

    def parse(self, text: str) -> "MPoly":
        return _Parser(self, text).parse()


def _q_is_zero(v):
    return not v


class MPoly:
    """Immutable sparse polynomial; see PolyRing for the representation."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # -- basic queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_raw(self):
        return self.terms.get(0, self.ring.ctx.zero)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        sh = self.ring._deg_shift
        return max(m >> sh for m in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        sh = self.ring._shifts[self.ring._index[name]]
        return max((m >> sh) & _LANE for m in self.terms)

    def variables(self):
        """Names actually occurring."""
        used = 0
        for m in self.terms:
            used |= m
        return [
            nm
            for nm, sh in zip(self.ring.names, self.ring._shifts)
            if (used >> sh) & _LANE
        ]

    def lead_mono(self) -> int:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.mono_key)
        return self._lead

    def lead_coeff_raw(self):
        return self.terms[self.lead_mono()]

    def lead_coeff(self) -> FieldElement:
        return self.ring.ctx.wrap(self.lead_coeff_raw())

    def sorted_monos(self, reverse: bool = True):
        return sorted(self.terms, key=self.ring.mono_key, reverse=reverse)

    def coeff_raw(self, exps):
        m = exps if isinstance(exps, int) else self.ring.pack(exps)
        return self.terms.get(m, self.ring.ctx.zero)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Rat, FieldElement)):
                return self == self.ring.const(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return self.text()

    # -- arithmetic ----------------------------------------------------------------

    def _check(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise RingMismatch("polynomials from different rings")
            return other
        if isinstance(other, (int, Rat, FieldElement)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        r = self.ring
        return MPoly(r, add_terms(self.terms, o.terms, r.cadd, r.cis_zero))

    __radd__ = __add__

    def __neg__(self):
        r = self.ring
        return MPoly(r, {m: r.cneg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        r = self.ring
        if len(o.terms) == 1 and 0 in o.terms:
            return MPoly(r, scale_terms(self.terms, o.terms[0], r.cmul, r.cis_zero))
        return MPoly(r, mul_terms(self.terms, o.terms, r.cadd, r.cmul, r.cis_zero))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, raw) -> "MPoly":
        r = self.ring
        if r.cis_zero(raw):
            return r.zero
        return MPoly(r, scale_terms(self.terms, raw, r.cmul, r.cis_zero))

    # -- substitution and evaluation --------------------------------------------------

    def _split_by_var(self, name: str):
        """Dict var_exp -> terms-with-that-var-removed."""
        r = self.ring
        i = r._index[name]
        sh = r._shifts[i]
        dsh = r._deg_shift
        out = {}
        for m, c in self.terms.items():
            e = (m >> sh) & _LANE
            base = m - (e << sh) - (e << dsh)
            out.setdefault(e, {})[base] = c
        return out

    def substitute(self, name: str, value) -> "MPoly":
        """Replace one variable by a polynomial (or scalar) of the same ring."""
        r = self.ring
        if name not in r._index:
            raise KeyError(f"unknown variable {name!r}")
        expr = self._check(value)
        if expr is None:
            raise TypeError(f"cannot substitute {value!r}")
        groups = self._split_by_var(name)
        if not groups:
            return r.zero
        top = max(groups)
        acc = MPoly(r, groups.get(top, {}))
        for e in range(top - 1, -1, -1):
            acc = acc * expr
            g = groups.get(e)
            if g:
                acc = acc + MPoly(r, g)
        return acc

    def eval_at(self, point) -> object:
        """Raw value of the polynomial at a full point (list of raws)."""
        r = self.ring
        n = r.nvars
        if len(point) != n:
            raise ValueError("point has wrong length")
        powers = [{}] * 0 or [dict() for _ in range(n)]
        add, mul, zero = r.cadd, r.cmul, r.ctx.zero
        total = zero
        shifts = r._shifts
        for m, c in self.terms.items():
            v = c
            for i in range(n):
                e = (m >> shifts[i]) & _LANE
                if e:
                    cache = powers[i]
                    p = cache.get(e)
                    if p is None:
                        p = _raw_pow(point[i], e, mul, r.ctx.one)
                        cache[e] = p
                    v = mul(v, p)
            total = add(total, v)
        return total

    def compose(self, target: PolyRing, images: dict) -> "MPoly":
        """Ring map: send each variable to an image polynomial in `target`.

        Coefficients transfer through matching contexts; a rational
        context lifts into a quadratic target.
        """
        r = self.ring
        lift = None
        if r.ctx != target.ctx:
            if r.ctx.kind == "rationals" and target.ctx.kind == "quadratic":
                lift = target.ctx.from_rat
            else:
                raise RingMismatch("incompatible contexts for compose")
        img = []
        for nm in r.names:
            if nm in images:
                val = images[nm]
                img.append(target.const(val) if not isinstance(val, MPoly) else val)
            else:
                img.append(None)
        out = target.zero
        caches = [dict() for _ in r.names]
        for m, c in self.terms.items():
            piece = target.const(target.ctx.wrap(lift(c) if lift else c))
            for i, sh in enumerate(r._shifts):
                e = (m >> sh) & _LANE
                if not e:
                    continue
                if img[i] is None:
                    raise KeyError(f"no image for variable {r.names[i]!r}")
                p = caches[i].get(e)
                if p is None:
                    p = img[i] ** e
                    caches[i][e] = p
                piece = piece * p
            out = out + piece
        return out

    def to_ring(self, target: PolyRing) -> "MPoly":
        """Cheap transfer to a ring with the same variables (order/ctx may differ)."""
        if target.names == self.ring.names:
            if target.ctx == self.ring.ctx:
                return MPoly(target, dict(self.terms))
            if self.ring.ctx.kind == "rationals" and target.ctx.kind == "quadratic":
                lift = target.ctx.from_rat
                return MPoly(target, {m: lift(c) for m, c in self.terms.items()})
        return self.compose(target, {nm: target.var(nm) for nm in self.ring.names})

    # -- calculus -----------------------------------------------------------------

    def derivative(self, name: str, order: int = 1) -> "MPoly":
        r = self.ring
        if name not in r._index:
            raise KeyError(f"unknown variable {name!r}")
        if order < 0:
            raise ValueError("negative derivative order")
        sh = r._shifts[r._index[name]]
        dsh = r._deg_shift
        f = self.terms
        for _ in range(order):
            out = {}
            for m, c in f.items():
                e = (m >> sh) & _LANE
                if e:
                    out[m - (1 << sh) - (1 << dsh)] = r.cmul(c, r.ctx.from_rat(e))
            f = out
            if not f:
                break
        return MPoly(r, f)

    # -- division ------------------------------------------------------------------

    def exact_divide(self, g: "MPoly") -> "MPoly":
        """q with q*g == self; raises NotDivisible otherwise."""
        o = self._check(g)
        if o is None or o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = self.ring
        if o.is_constant():
            return self.scale(r.cinv(o.constant_raw()))
        gm = o.lead_mono()
        gc = o.lead_coeff_raw()
        gcinv = r.cinv(gc)
        rem = dict(self.terms)
        q = {}
        key = r.mono_key
        while rem:
            m = max(rem, key=key)
            if not r.mono_divides(gm, m):
                raise NotDivisible("leading term not divisible")
            t = m - gm
            c = r.cmul(rem[m], gcinv)
            q[t] = c
            axpy_terms(rem, r.cneg(c), t, o.terms, r.cadd, r.cmul, r.cis_zero)
        return MPoly(r, q)

    def peel_remainder(self, name: str, a) -> tuple["MPoly", "MPoly"]:
        """Write self = (var - a)*q + rem with rem free of var."""
        r = self.ring
        araw = r._coerce_coeff(a)
        groups = self._split_by_var(name)
        if not groups:
            return r.zero, r.zero
        v = r.var(name)
        top = max(groups)
        # synthetic division by (var - a), coefficients are polynomials
        q = r.zero
        carry = r.zero  # q_k as we descend
        for e in range(top, 0, -1):
            coeff = MPoly(r, groups.get(e, {}))
            carry = carry.scale(araw) + coeff if not carry.is_zero() else coeff
            q = q + carry * v ** (e - 1)
        rem = MPoly(r, groups.get(0, {})) + carry.scale(araw)
        return q, rem

    def pseudo_rem(self, g: "MPoly", name: str) -> "MPoly":
        """Pseudo-remainder of self by g with respect to one variable."""
        r = self.ring
        dv = g.degree_in(name)
        if dv <= -1:
            raise ZeroDivisionError("pseudo-division by zero")
        f = self
        df = f.degree_in(name)
        if df < dv:
            return f
        glead = g.coeff_of(name, dv)
        v = r.var(name)
        while df >= dv and not f.is_zero():
            flead = f.coeff_of(name, df)
            f = f * glead - flead * v ** (df - dv) * g
            ndf = f.degree_in(name)
            if ndf == df:
                # cancellation must lower the degree
                raise ArithmeticError("pseudo-division failed to reduce")
            df = ndf
        return f

    def coeff_of(self, name: str, k: int) -> "MPoly":
        """Coefficient of var^k, a polynomial in the other variables."""
        r = self.ring
        sh = r._shifts[r._index[name]]
        dsh = r._deg_shift
        out = {}
        for m, c in self.terms.items():
            if (m >> sh) & _LANE == k:
                out[m - (k << sh) - (k << dsh)] = c
        return MPoly(r, out)

    # -- (de)homogenisation -----------------------------------------------------------

    def homogenize(self, newvar: str, degree: int) -> "MPoly":
        r = self.ring
        d = self.total_degree()
        if degree < d:
            raise ValueError("homogenisation degree below total degree")
        target = r.extend(newvar)
        out = {}
        for m, c in self.terms.items():
            e = r.exps(m) + (degree - r.mono_deg(m),)
            out[target.pack(e)] = c
        return MPoly(target, out)

    def dehomogenize(self, name: str) -> "MPoly":
        r = self.ring
        target = r.drop(name)
        i = r._index[name]
        out = target.zero
        for m, c in self.terms.items():
            e = list(r.exps(m))
            del e[i]
            out = out + target.monomial(e, r.ctx.wrap(c))
        return out

    # -- normalisation ------------------------------------------------------------------

    def primitive_normalize(self) -> "MPoly":
        """Deterministic scalar normal form.

        Over Q: integer coefficients with content 1 and positive leading
        coefficient.  Over Q(r): monic leading coefficient.
        """
        if self.is_zero():
            return self
        r = self.ring
        if r.ctx.kind != "rationals":
            lc = self.lead_coeff_raw()
            if lc == r.ctx.one:
                return self
            return self.scale(r.cinv(lc))
        import math

        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = 0
        for n in nums:
            g = math.gcd(g, int(n))
        l = 1
        for d in dens:
            l = l * int(d) // math.gcd(l, int(d))
        factor = rat(l, g)
        if self.lead_coeff_raw() < 0:
            factor = -factor
        if factor == 1:
            return self
        return self.scale(factor)

    # -- text form ------------------------------------------------------------------------

    def text(self) -> str:
        """Canonical text: terms descending in the ring order."""
        if not self.terms:
            return "0"
        r = self.ring
        ctx = r.ctx
        chunks = []
        for m in self.sorted_monos():
            c = self.terms[m]
            mono = r.mono_str(m)
            if ctx.kind == "rationals":
                neg = c < 0
                mag = -c if neg else c
                if mono and mag == 1:
                    body = mono
                else:
                    body = f"{mag}*{mono}" if mono else str(mag)
            else:
                a, b = c
                if b == 0:
                    neg = a < 0
                    mag = ctx.raw_str((-a if neg else a, rat(0)))
                    if mono and mag == "1":
                        body = mono
                    else:
                        body = f"{mag}*{mono}" if mono else mag
                else:
                    neg = False
                    s = ctx.raw_str(c)
                    body = f"({s})*{mono}" if mono else f"({s})"
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)


def _raw_pow(base, e, mul, one):
    out = one
    b = base
    while e:
        if e & 1:
            out = mul(out, b)
        e >>= 1
        if e:
            b = mul(b, b)
    return out


# -- gcd and squarefree machinery ----------------------------------------------------


def mpoly_gcd(f: MPoly, g: MPoly) -> MPoly:
    """Gcd up to scalar, normalised; primitive subresultant cascade."""
    if f.ring != g.ring:
        raise RingMismatch("gcd of polynomials from different rings")
    if f.is_zero():
        return g.primitive_normalize()
    if g.is_zero():
        return f.primitive_normalize()
    return _gcd_rec(f, g).primitive_normalize()


def _gcd_rec(f: MPoly, g: MPoly) -> MPoly:
    r = f.ring
    if f.is_constant() or g.is_constant():
        return r.one
    fv = set(f.variables())
    gv = set(g.variables())
    common = [nm for nm in r.names if nm in fv and nm in gv]
    if not common:
        return r.one
    var = common[0]
    fc, fp = _content_primitive(f, var)
    gc, gp = _content_primitive(g, var)
    cont = _gcd_rec(fc, gc)
    a, b = fp, gp
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while True:
        rem = a.pseudo_rem(b, var)
        if rem.is_zero():
            break
        if rem.degree_in(var) <= 0:
            return cont
        a, b = b, _content_primitive(rem, var)[1]
    return cont * b


def _content_primitive(f: MPoly, var: str):
    """(content, primitive part) of f seen in R[var]."""
    r = f.ring
    coeffs = [f.coeff_of(var, k) for k in range(f.degree_in(var) + 1)]
    coeffs = [c for c in coeffs if not c.is_zero()]
    cont = coeffs[0]
    for c in coeffs[1:]:
        if cont.is_constant():
            break
        cont = _gcd_rec(cont, c)
    if cont.is_constant():
        one = r.one
        lc = f.primitive_normalize()
        return one, lc
    cont = cont.primitive_normalize()
    return cont, f.exact_divide(cont).primitive_normalize()


def squarefree_part(f: MPoly) -> MPoly:
    """Product of the distinct irreducible factors, up to scalar."""
    if f.is_zero():
        raise ValueError("squarefree part of zero")
    g = f
    for nm in f.variables():
        d = f.derivative(nm)
        g = mpoly_gcd(g, d)
        if g.is_constant():
            return f.primitive_normalize()
    return f.exact_divide(g.scale(f.ring.cinv(g.lead_coeff_raw()))).primitive_normalize()


def is_squarefree(f: MPoly) -> bool:
    if f.is_zero():
        raise ValueError("squarefree test on zero")
    g = f
    for nm in f.variables():
        g = mpoly_gcd(g, f.derivative(nm))
        if g.is_constant():
            return True
    return g.is_constant()


# -- parser -------------------------------------------------------------------------------


class ParseError(ValueError):
    pass


class _Parser:
    """Recursive-descent parser for the canonical polynomial text form.

    Accepts the printed equations of the source material verbatim:
    rationals "p/q", explicit "*" and "^", parenthesised subexpressions,
    the extension symbol r (quadratic contexts only), arbitrary
    whitespace including newlines.
    """

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.pos = 0
        self.n = len(text)

    def parse(self) -> MPoly:
        value = self._expr()
        self._skip_ws()
        if self.pos != self.n:
            raise ParseError(f"trailing input at offset {self.pos}: {self.text[self.pos:self.pos+20]!r}")
        return value

    def _skip_ws(self):
        while self.pos < self.n and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < self.n else ""

    def _expr(self) -> MPoly:
        ch = self._peek()
        neg = False
        if ch in "+-":
            neg = ch == "-"
            self.pos += 1
        value = self._term()
        if neg:
            value = -value
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                value = value + self._term()
            elif ch == "-":
                self.pos += 1
                value = value - self._term()
            else:
                return value

    def _term(self) -> MPoly:
        value = self._factor()
        while self._peek() == "*":
            self.pos += 1
            value = value * self._factor()
        return value

    def _factor(self) -> MPoly:
        base = self._base()
        if self._peek() == "^":
            self.pos += 1
            e = self._int()
            return base ** e
        return base

    def _base(self) -> MPoly:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                raise ParseError(f"missing ')' at offset {self.pos}")
            self.pos += 1
            return value
        if ch == "-":
            self.pos += 1
            return -self._factor()
        if ch.isdigit():
            num = self._int()
            if self._peek() == "/":
                self.pos += 1
                den = self._int()
                return self.ring.const(rat(num, den))
            return self.ring.const(num)
        if ch.isalpha() or ch == "_":
            name = self._name()
            if name in self.ring._index:
                return self.ring.var(name)
            if name == "r" and self.ring.ctx.kind == "quadratic":
                return self.ring.const(self.ring.ctx.wrap(self.ring.ctx.gen()))
            raise ParseError(f"unknown symbol {name!r}")
        raise ParseError(f"unexpected character {ch!r} at offset {self.pos}")

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < self.n and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected integer at offset {self.pos}")
        return int(self.text[start:self.pos])

    def _name(self) -> str:
        self._skip_ws()
        start = self.pos
        while self.pos < self.n and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]


# -- convenience entry points ---------------------------------------------------------------


def poly_arith(f: MPoly, g: MPoly, op: str) -> MPoly:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def substitute(f: MPoly, var: str, expr) -> MPoly:
    return f.substitute(var, expr)


def derivative(f: MPoly, var: str, order: int = 1) -> MPoly:
    return f.derivative(var, order)


def exact_divide(f: MPoly, g: MPoly) -> MPoly:
    return f.exact_divide(g)


def peel_remainder(f: MPoly, var: str, a):
    return f.peel_remainder(var, a)


def homogenize(f: MPoly, newvar: str, degree: int) -> MPoly:
    return f.homogenize(newvar, degree)


def dehomogenize(f: MPoly, var: str) -> MPoly:
    return f.dehomogenize(var)
