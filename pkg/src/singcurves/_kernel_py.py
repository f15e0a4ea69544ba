"""Pure-Python term-dictionary kernels.

Polynomials are dicts mapping packed monomial ints to raw coefficients;
monomial multiplication is integer addition of the packed keys.  The
coefficient operations (add/mul/zero-test) come in as callables so the
same loops serve Q and Q(r).

The compiled twin of this module is ``_kernel_c`` (Cython); the importer
in ``_kernel`` picks whichever is available.
"""


def axpy_terms(acc, c, mono, src, add, mul, is_zero):
    """In place: acc += c * x^mono * src.  Returns acc."""
    get = acc.get
    for m, s in src.items():
        k = m + mono
        v = get(k)
        if v is None:
            acc[k] = mul(c, s)
        else:
            v = add(v, mul(c, s))
            if is_zero(v):
                del acc[k]
            else:
                acc[k] = v
    return acc


def mul_terms(fa, fb, add, mul, is_zero):
    """Product of two term dicts."""
    if len(fa) > len(fb):
        fa, fb = fb, fa
    acc = {}
    get = acc.get
    for ma, ca in fa.items():
        for mb, cb in fb.items():
            k = ma + mb
            v = get(k)
            if v is None:
                acc[k] = mul(ca, cb)
            else:
                v = add(v, mul(ca, cb))
                if is_zero(v):
                    del acc[k]
                else:
                    acc[k] = v
    return acc


def add_terms(fa, fb, add, is_zero):
    """Sum of two term dicts (inputs untouched)."""
    acc = dict(fa)
    get = acc.get
    for m, c in fb.items():
        v = get(m)
        if v is None:
            acc[m] = c
        else:
            v = add(v, c)
            if is_zero(v):
                del acc[m]
            else:
                acc[m] = v
    return acc


def scale_terms(f, c, mul, is_zero):
    """c * f as a new dict; c assumed nonzero."""
    return {m: mul(c, v) for m, v in f.items()}
