# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-dictionary kernels; see _kernel_py for the contract.

Coefficients stay generic Python objects (mpq or tuple pairs), so the
gain over the pure loops comes from compiling the dict traversal and
call dispatch, not from typed arithmetic.
"""


def axpy_terms(dict acc, c, mono, dict src, add, mul, is_zero):
    cdef object k, v, m, s
    for m, s in src.items():
        k = m + mono
        v = acc.get(k)
        if v is None:
            acc[k] = mul(c, s)
        else:
            v = add(v, mul(c, s))
            if is_zero(v):
                del acc[k]
            else:
                acc[k] = v
    return acc


def mul_terms(dict fa, dict fb, add, mul, is_zero):
    cdef dict acc = {}
    cdef object k, v, ma, ca, mb, cb
    if len(fa) > len(fb):
        fa, fb = fb, fa
    for ma, ca in fa.items():
        for mb, cb in fb.items():
            k = ma + mb
            v = acc.get(k)
            if v is None:
                acc[k] = mul(ca, cb)
            else:
                v = add(v, mul(ca, cb))
                if is_zero(v):
                    del acc[k]
                else:
                    acc[k] = v
    return acc


def add_terms(dict fa, dict fb, add, is_zero):
    cdef dict acc = dict(fa)
    cdef object m, c, v
    for m, c in fb.items():
        v = acc.get(m)
        if v is None:
            acc[m] = c
        else:
            v = add(v, c)
            if is_zero(v):
                del acc[m]
            else:
                acc[m] = v
    return acc


def scale_terms(dict f, c, mul, is_zero):
    cdef dict acc = {}
    cdef object m, v
    for m, v in f.items():
        acc[m] = mul(c, v)
    return acc
