import numpy as np
import pytest

from swissag.fields import FieldSpec, all_elements, build_field, default_modulus

FIELDS = [(2, 6), (2, 10), (2, 12), (3, 6)]


def test_gf64_multiplicative_group():
    ctx = build_field(2, 6)
    assert ctx.order == 64
    for a in range(1, 64):
        assert ctx.pow(a, 63) == 1
        assert ctx.mul(a, ctx.inv(a)) == 1


def test_gf2_characteristic():
    ctx = build_field(2, 1)
    assert ctx.add(1, 1) == 0


def test_frobenius_fixes_field():
    ctx = build_field(2, 6)
    for a in range(64):
        assert ctx.pow(a, 64) == a


def test_enc_bijection_gf1024():
    ctx = build_field(2, 10)
    els = all_elements(ctx)
    assert len(els) == 1024
    assert [e.enc for e in els] == list(range(1024))
    assert els[0].enc == 0 and els[1].enc == 1


def test_enc_roundtrip():
    for p, k in [(2, 6), (3, 6)]:
        ctx = build_field(p, k)
        for e in range(ctx.order):
            el = ctx.element(e)
            assert ctx.from_coeffs(el.coeffs).enc == e


def test_element_order_by_exhaustive_powering():
    # an element of full order 63, raised to the 9th, must have order 7
    ctx = build_field(2, 6)
    g = ctx.element(ctx.generator)
    a = g ** 9

    def order(x):
        acc, n = x, 1
        while acc.enc != 1:
            acc = acc * x
            n += 1
        return n

    assert order(g) == 63
    assert order(a) == 7


def test_sum_of_all_elements_is_zero():
    ctx = build_field(2, 6)
    total = ctx.zero
    for e in all_elements(ctx):
        total = total + e
    assert total.enc == 0


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_laws_randomized(p, k):
    # 10^4 random triples per field, fixed seed, all checked vectorized
    ctx = build_field(p, k)
    rng = np.random.default_rng(12345 + p * 100 + k)
    n = 10_000
    a = rng.integers(0, ctx.order, n).astype(np.uint16)
    b = rng.integers(0, ctx.order, n).astype(np.uint16)
    c = rng.integers(0, ctx.order, n).astype(np.uint16)
    assert np.array_equal(ctx.vadd(a, b), ctx.vadd(b, a))
    assert np.array_equal(ctx.vmul(a, b), ctx.vmul(b, a))
    assert np.array_equal(ctx.vadd(ctx.vadd(a, b), c), ctx.vadd(a, ctx.vadd(b, c)))
    assert np.array_equal(ctx.vmul(ctx.vmul(a, b), c), ctx.vmul(a, ctx.vmul(b, c)))
    assert np.array_equal(ctx.vmul(a, ctx.vadd(b, c)),
                          ctx.vadd(ctx.vmul(a, b), ctx.vmul(a, c)))


@pytest.mark.parametrize("p,k", FIELDS)
def test_unit_group_and_frobenius(p, k):
    ctx = build_field(p, k)
    els = np.arange(ctx.order, dtype=np.uint16)
    assert np.array_equal(ctx.vpow(els, ctx.order), els)
    nz = els[1:]
    assert np.all(ctx.vpow(nz, ctx.order - 1) == 1)


def test_pow_reduces_mod_group_order():
    ctx = build_field(2, 6)
    big = 2 ** 5 * (2 ** 5 + 1) * (2 - 1) * 97  # same scale as the largest exponents used
    for a in range(1, 64):
        assert ctx.pow(a, big) == ctx.pow(a, big % 63)


def test_pow_zero_cases():
    ctx = build_field(2, 6)
    assert ctx.pow(0, 0) == 1
    assert ctx.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        ctx.pow(0, -1)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_cross_field_operations_rejected():
    a = build_field(2, 6).element(3)
    b = build_field(2, 10).element(3)
    with pytest.raises(ValueError):
        _ = a + b


def test_construction_errors():
    with pytest.raises(ValueError):
        build_field(4, 3)              # 4 is not prime
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))     # x^2 + 1 = (x+1)^2 is reducible
    with pytest.raises(ValueError):
        FieldSpec(2, 3, (1, 1, 1))     # wrong degree
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 1, 2))     # coefficient out of range


def test_all_shipped_moduli_build():
    for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 6), (2, 10), (2, 12),
                   (3, 1), (3, 2), (3, 6)]:
        ctx = build_field(p, k)
        assert ctx.order == p ** k
        assert default_modulus(p, k) == ctx.spec.modulus


def test_field_context_is_cached():
    assert build_field(2, 6) is build_field(2, 6)
