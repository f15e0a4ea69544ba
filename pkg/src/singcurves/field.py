"""Exact scalar arithmetic over Q and quadratic extensions Q(r).

A :class:`FieldContext` fixes the coefficient field: either the rationals
or Q(r) with r a root of a monic quadratic r^2 + c1*r + c0 = 0 with
rational c1, c0.  Contexts are immutable; two contexts are compatible for
arithmetic only when they are equal.

Internally field elements are carried in a *raw* form chosen for speed:

* rationals      -> a single ``mpq`` (``fractions.Fraction`` fallback),
* Q(r) elements  -> a pair ``(a, b)`` of ``mpq`` meaning ``a + b*r``.

The raw form is what polynomial code stores as coefficients; the public
value class :class:`FieldElement` wraps ``(context, raw)`` with the usual
operator protocol.  Both representations are exact and immutable.
"""

from __future__ import annotations

from typing import Optional, Union

try:
    from gmpy2 import mpq

    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as mpq

    _BACKEND = "fractions"

Rat = mpq
_ZERO = mpq(0)
_ONE = mpq(1)


class FieldError(ValueError):
    pass


class ContextMismatch(FieldError):
    pass


def rat(value: Union[int, str, Rat], den: Optional[int] = None) -> Rat:
    """Build an exact rational from an int, a "p/q" string or a pair."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, str):
        value = value.strip()
        if "/" in value:
            p, q = value.split("/")
            return mpq(int(p), int(q))
        return mpq(int(value))
    return mpq(value)


def rat_str(q: Rat) -> str:
    return str(q)


class FieldContext:
    """The coefficient field: Q, or Q(r) with r^2 + c1*r + c0 = 0."""

    __slots__ = ("kind", "minpoly", "_r0", "_r1")

    def __init__(self, kind: str, minpoly=None):
        if kind == "rationals":
            if minpoly is not None:
                raise FieldError("rationals take no minimal polynomial")
            self.minpoly = None
        elif kind == "quadratic":
            c1, c0 = minpoly
            c1, c0 = mpq(c1), mpq(c0)
            if c1 * c1 - 4 * c0 == 0:
                raise FieldError("minimal polynomial has a double root")
            self.minpoly = (c1, c0)
            # r^2 = _r1 * r + _r0
            self._r1 = -c1
            self._r0 = -c0
        else:
            raise FieldError(f"unsupported field kind {kind!r}")
        self.kind = kind

    @classmethod
    def rationals(cls) -> "FieldContext":
        return cls("rationals")

    @classmethod
    def quadratic(cls, c1, c0) -> "FieldContext":
        """Context of Q(r) with r^2 + c1*r + c0 = 0."""
        return cls("quadratic", (rat(c1), rat(c0)))

    # -- structural identity ------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldContext)
            and self.kind == other.kind
            and self.minpoly == other.minpoly
        )

    def __hash__(self):
        return hash((self.kind, self.minpoly))

    def __repr__(self):
        if self.kind == "rationals":
            return "FieldContext(Q)"
        c1, c0 = self.minpoly
        return f"FieldContext(Q(r): r^2 + ({c1})*r + ({c0}) = 0)"

    def header(self) -> str:
        """One-line description printed once per document."""
        if self.kind == "rationals":
            return "field: Q"
        c1, c0 = self.minpoly
        parts = ["r^2"]
        if c1 != 0:
            parts.append(f"+ {c1}*r" if c1 > 0 else f"- {-c1}*r")
        if c0 != 0:
            parts.append(f"+ {c0}" if c0 > 0 else f"- {-c0}")
        return "field: Q(r) with " + " ".join(parts) + " = 0"

    # -- raw element protocol ------------------------------------------------

    @property
    def zero(self):
        return _ZERO if self.kind == "rationals" else (_ZERO, _ZERO)

    @property
    def one(self):
        return _ONE if self.kind == "rationals" else (_ONE, _ZERO)

    def gen(self):
        """Raw value of r; only in quadratic contexts."""
        if self.kind != "quadratic":
            raise FieldError("no generator in the rationals")
        return (_ZERO, _ONE)

    def from_rat(self, q):
        q = rat(q)
        return q if self.kind == "rationals" else (q, _ZERO)

    def is_zero(self, x) -> bool:
        if self.kind == "rationals":
            return x == 0
        return x[0] == 0 and x[1] == 0

    def add(self, x, y):
        if self.kind == "rationals":
            return x + y
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        if self.kind == "rationals":
            return x - y
        return (x[0] - y[0], x[1] - y[1])

    def neg(self, x):
        if self.kind == "rationals":
            return -x
        return (-x[0], -x[1])

    def mul(self, x, y):
        if self.kind == "rationals":
            return x * y
        a, b = x
        c, d = y
        bd = b * d
        return (a * c + bd * self._r0, a * d + b * c + bd * self._r1)

    def inv(self, x):
        if self.kind == "rationals":
            if x == 0:
                raise ZeroDivisionError("field inverse of zero")
            return 1 / mpq(x)
        a, b = x
        c1, c0 = self.minpoly
        n = a * a - a * b * c1 + b * b * c0
        if n == 0:
            if a == 0 and b == 0:
                raise ZeroDivisionError("field inverse of zero")
            raise FieldError("minimal polynomial is reducible at this element")
        return ((a - b * c1) / n, -b / n)

    def div(self, x, y):
        if self.kind == "rationals":
            if y == 0:
                raise ZeroDivisionError("field division by zero")
            return x / y
        return self.mul(x, self.inv(y))

    def norm(self, x):
        """N(a + b*r) = (a + b*r)(a + b*conj(r)); a rational."""
        if self.kind == "rationals":
            return x * x
        a, b = x
        c1, c0 = self.minpoly
        return a * a - a * b * c1 + b * b * c0

    def conj(self, x):
        """Image of x under r -> -c1 - r."""
        if self.kind == "rationals":
            return x
        a, b = x
        c1, _ = self.minpoly
        return (a - b * c1, -b)

    def sqrt(self, x):
        """A raw square root of x inside the field, or None."""
        if self.kind == "rationals":
            return _rat_sqrt(x)
        a, b = x
        if b == 0:
            s = _rat_sqrt(a)
            if s is not None:
                return (s, _ZERO)
        # (p + q*r)^2 = p^2 + q^2*r0 + (2pq + q^2*r1) r  with r^2 = r1 r + r0
        r0, r1 = self._r0, self._r1
        # q != 0: eliminate p = (b - t*r1)/(2q) with t = q^2:
        #   (b - t*r1)^2 + 4*t^2*r0 - 4*a*t = 0, a rational quadratic in t.
        A = r1 * r1 + 4 * r0
        B = -2 * b * r1 - 4 * a
        C = b * b
        for t in _rat_quadratic_roots(A, B, C):
            if t <= 0:
                continue
            q = _rat_sqrt(t)
            if q is None:
                continue
            for qq in (q, -q):
                p = (b - t * r1) / (2 * qq)
                cand = (p, qq)
                if self.mul(cand, cand) == x:
                    return cand
        return None

    def is_positive(self, x) -> bool:
        """Sign convention used for deterministic normalisation only."""
        if self.kind == "rationals":
            return x > 0
        a, b = x
        return a > 0 or (a == 0 and b > 0)

    # -- text ----------------------------------------------------------------

    def raw_str(self, x) -> str:
        if self.kind == "rationals":
            return str(x)
        a, b = x
        if b == 0:
            return str(a)
        if b > 0:
            bs = "r" if b == 1 else f"{b}*r"
            return f"{a} + {bs}" if a != 0 else bs
        bs = "r" if b == -1 else f"{-b}*r"
        return f"{a} - {bs}" if a != 0 else f"-{bs}"

    def wrap(self, x) -> "FieldElement":
        return FieldElement(self, x)

    def element(self, a, b=0) -> "FieldElement":
        """Element a + b*r (b ignored must be 0 over the rationals)."""
        a = rat(a)
        b = rat(b)
        if self.kind == "rationals":
            if b != 0:
                raise FieldError("no r in the rationals")
            return FieldElement(self, a)
        return FieldElement(self, (a, b))


def _rat_sqrt(q) -> Optional[Rat]:
    if q < 0:
        return None
    if q == 0:
        return _ZERO
    num, den = mpq(q).numerator, mpq(q).denominator
    rn = _int_sqrt_exact(num)
    if rn is None:
        return None
    rd = _int_sqrt_exact(den)
    if rd is None:
        return None
    return mpq(rn, rd)


def _int_sqrt_exact(n: int) -> Optional[int]:
    import math

    if n < 0:
        return None
    r = math.isqrt(int(n))
    return r if r * r == n else None


def _rat_quadratic_roots(A, B, C):
    """Rational roots of A t^2 + B t + C."""
    if A == 0:
        if B == 0:
            return []
        return [-C / B]
    disc = B * B - 4 * A * C
    s = _rat_sqrt(disc)
    if s is None:
        return []
    if s == 0:
        return [-B / (2 * A)]
    return [(-B + s) / (2 * A), (-B - s) / (2 * A)]


QQ = FieldContext.rationals()


def make_extension(c1, c0) -> FieldContext:
    """Context in which r satisfies r^2 + c1*r + c0 = 0."""
    return FieldContext.quadratic(c1, c0)


class FieldElement:
    """Immutable value a + b*r in a fixed FieldContext."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx: FieldContext, raw):
        self.ctx = ctx
        self.raw = raw

    @property
    def a(self) -> Rat:
        return self.raw if self.ctx.kind == "rationals" else self.raw[0]

    @property
    def b(self) -> Rat:
        return _ZERO if self.ctx.kind == "rationals" else self.raw[1]

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ContextMismatch("elements of different field contexts")
            return other.raw
        if isinstance(other, (int, Rat)):
            return self.ctx.from_rat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.add(self.raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub(self.raw, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub(o, self.raw))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul(self.raw, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.div(self.raw, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.div(o, self.raw))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.raw))

    def __pow__(self, n: int):
        if n < 0:
            return FieldElement(self.ctx, self.ctx.inv(self.raw)) ** (-n)
        out = FieldElement(self.ctx, self.ctx.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Rat)):
            other = FieldElement(self.ctx, self.ctx.from_rat(other))
        return (
            isinstance(other, FieldElement)
            and self.ctx == other.ctx
            and self.raw == other.raw
        )

    def __hash__(self):
        return hash((self.ctx, self.raw if self.ctx.kind == "rationals" else tuple(self.raw)))

    def __bool__(self):
        return not self.ctx.is_zero(self.raw)

    def __repr__(self):
        return self.ctx.raw_str(self.raw)

    __str__ = __repr__

    def norm(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.from_rat(self.ctx.norm(self.raw)))

    def sqrt(self) -> Optional["FieldElement"]:
        s = self.ctx.sqrt(self.raw)
        return None if s is None else FieldElement(self.ctx, s)


def field_arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
    """Named-operation entry point: op in {add, sub, mul, div}."""
    if not isinstance(x, FieldElement) or not isinstance(y, FieldElement):
        raise TypeError("field_arith expects FieldElements")
    if x.ctx != y.ctx:
        raise ContextMismatch("operands from different field contexts")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown field operation {op!r}")
