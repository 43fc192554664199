import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swissag.fields import build_field
from swissag.polys import (Poly, derivative, poly_from_coeffs, poly_gcd,
                           product_from_roots, roots_in_field)

F64 = build_field(2, 6)


def test_single_root():
    f = product_from_roots(F64, [0])
    assert f.coeffs == (0, 1)  # Z


def test_duplicate_roots_rejected():
    with pytest.raises(ValueError):
        product_from_roots(F64, [3, 3])


def test_derivative_of_constant():
    assert derivative(poly_from_coeffs(F64, [5])).is_zero()


def test_derivative_char2():
    # Z^28 + Z^19 + Z  ->  Z^18 + 1
    f = poly_from_coeffs(F64, [0, 1] + [0] * 17 + [1] + [0] * 8 + [1])
    assert f.exponents() == (1, 19, 28)
    assert derivative(f).exponents() == (0, 18)


def test_roots_char2_square():
    # Z^2 + 1 = (Z + 1)^2 over GF(4): one root
    ctx = build_field(2, 2)
    f = poly_from_coeffs(ctx, [1, 0, 1])
    assert roots_in_field(f) == {1}


def test_roots_of_zero_poly_rejected():
    with pytest.raises(ValueError):
        roots_in_field(poly_from_coeffs(F64, []))


def test_gcd_basics():
    z2 = poly_from_coeffs(F64, [0, 0, 1])
    z3 = poly_from_coeffs(F64, [0, 0, 0, 1])
    assert poly_gcd(z2, z3).coeffs == z2.coeffs
    f = poly_from_coeffs(F64, [0, 3, 5])
    g = poly_gcd(f, poly_from_coeffs(F64, []))
    assert g.coeffs == f.monic().coeffs
    with pytest.raises(ValueError):
        poly_gcd(poly_from_coeffs(F64, []), poly_from_coeffs(F64, []))


def test_gcd_certifies_simple_roots():
    f = poly_from_coeffs(F64, [0, 1] + [0] * 17 + [1] + [0] * 8 + [1])
    assert poly_gcd(f, derivative(f)).degree == 0


def test_text_roundtrip():
    f = poly_from_coeffs(F64, [7, 0, 1, 9])
    assert Poly.from_text(F64, f.to_text()).coeffs == f.coeffs
    assert f.to_text() == "7 0 1 9"


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=63), min_size=1, max_size=20))
def test_product_roots_roundtrip(roots):
    f = product_from_roots(F64, sorted(roots))
    assert f.degree == len(roots)
    assert f.coeffs[-1] == 1
    assert roots_in_field(f) == roots


coeff_lists = st.lists(st.integers(min_value=0, max_value=63), min_size=0, max_size=12)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_derivative_is_additive_and_leibniz(a, b):
    f, g = poly_from_coeffs(F64, a), poly_from_coeffs(F64, b)

    def add(u, v):
        n = max(len(u.coeffs), len(v.coeffs))
        cu = list(u.coeffs) + [0] * (n - len(u.coeffs))
        cv = list(v.coeffs) + [0] * (n - len(v.coeffs))
        return poly_from_coeffs(F64, [F64.add(x, y) for x, y in zip(cu, cv)])

    def mul(u, v):
        if u.is_zero() or v.is_zero():
            return poly_from_coeffs(F64, [])
        out = [0] * (len(u.coeffs) + len(v.coeffs) - 1)
        for i, x in enumerate(u.coeffs):
            for j, y in enumerate(v.coeffs):
                out[i + j] = F64.add(out[i + j], F64.mul(x, y))
        return poly_from_coeffs(F64, out)

    assert derivative(add(f, g)).coeffs == add(derivative(f), derivative(g)).coeffs
    lhs = derivative(mul(f, g))
    rhs = add(mul(derivative(f), g), mul(f, derivative(g)))
    assert lhs.coeffs == rhs.coeffs
    if f.degree >= 1:
        assert derivative(f).degree < f.degree


@settings(max_examples=40, deadline=None)
@given(coeff_lists)
def test_eval_many_matches_scalar_eval(a):
    f = poly_from_coeffs(F64, a)
    import numpy as np
    xs = np.arange(64, dtype=np.uint16)
    vals = f.eval_many(xs)
    for x in (0, 1, 5, 42, 63):
        assert int(vals[x]) == f(x)
