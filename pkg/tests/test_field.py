import random

import pytest

from singcurves.field import (
    QQ,
    ContextMismatch,
    FieldContext,
    field_arith,
    make_extension,
    rat,
)


def test_rational_add():
    x = QQ.element("1/2")
    y = QQ.element("1/3")
    assert field_arith(x, y, "add") == QQ.element("5/6")


def test_extension_reduction_from_printed_minpoly():
    # r^2 - 33/73*r + 9/292 = 0, so r*r reduces to 33/73*r - 9/292
    ctx = make_extension("-33/73", "9/292")
    r = ctx.wrap(ctx.gen())
    rr = r * r
    assert rr == ctx.element("-9/292", "33/73")


def test_identity_and_div():
    ctx = make_extension(0, -2)  # Q(sqrt 2)
    x = ctx.element("3/5", "7/2")
    one = ctx.element(1)
    assert x * one == x
    assert (x / x) == one
    y = ctx.element(-2, "1/3")
    assert (x / y) * y == x


def test_gaussian_r4_is_one():
    ctx = make_extension(0, 1)  # r^2 = -1
    r = ctx.wrap(ctx.gen())
    assert r ** 4 == ctx.element(1)
    assert r ** 2 == ctx.element(-1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        field_arith(QQ.element(1), QQ.element(0), "div")


def test_context_mismatch():
    a = QQ.element(1)
    b = make_extension(0, -2).element(1)
    with pytest.raises(ContextMismatch):
        field_arith(a, b, "add")


def _random_elements(ctx, rng, n):
    out = []
    for _ in range(n):
        a = rat(rng.randint(-30, 30), rng.randint(1, 12))
        b = rat(rng.randint(-30, 30), rng.randint(1, 12))
        out.append(ctx.element(a, b) if ctx.kind == "quadratic" else ctx.element(a))
    return out


@pytest.mark.parametrize(
    "ctx",
    [QQ, make_extension(0, -2), make_extension("-33/73", "9/292"), make_extension(1, 1)],
    ids=["Q", "Q(sqrt2)", "paper-r", "r2+r+1"],
)
def test_field_axioms_random(ctx):
    rng = random.Random(7)
    xs = _random_elements(ctx, rng, 40)
    one = ctx.element(1)
    for x, y, z in zip(xs, xs[1:], xs[2:]):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x != ctx.element(0):
            assert x * (one / x) == one


@pytest.mark.parametrize(
    "ctx",
    [make_extension(0, -2), make_extension("-33/73", "9/292")],
    ids=["Q(sqrt2)", "paper-r"],
)
def test_norm_multiplicative_random(ctx):
    rng = random.Random(11)
    xs = _random_elements(ctx, rng, 101)
    ys = _random_elements(ctx, rng, 101)
    for x, y in zip(xs, ys):
        assert (x * y).norm() == x.norm() * y.norm()


def test_reduction_idempotent():
    # arithmetic results always have r-degree < 2; squaring twice stays reduced
    ctx = make_extension(3, "-5/7")
    x = ctx.element("2/3", 4)
    y = (x * x) * (x * x)
    assert (y.a, y.b) == ((x ** 4).a, (x ** 4).b)


def test_sqrt_in_extension():
    ctx = make_extension(0, -2)
    r = ctx.wrap(ctx.gen())
    x = (ctx.element(3) + r) * (ctx.element(3) + r)
    s = x.sqrt()
    assert s is not None and s * s == x


def test_higher_degree_rejected():
    with pytest.raises(Exception):
        FieldContext("cubic", (1, 2, 3))


def test_text_form():
    ctx = make_extension("-33/73", "9/292")
    assert str(ctx.element("1/2", "-3/4")) == "1/2 - 3/4*r"
    assert str(ctx.element(0, 1)) == "r"
    assert str(ctx.element(-2, 0)) == "-2"
    assert "r^2" in ctx.header()
