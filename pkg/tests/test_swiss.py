import pytest

from swissag.curves import make_descriptor
from swissag.polys import poly_gcd
from swissag.swiss import (compute_A_set, simple_zero_certificate, swiss_report,
                           verify_closed_forms)


def test_gk2_package(gk2):
    sw = gk2.swiss
    assert len(sw.a_values) == 28
    assert sw.f.exponents() == (1, 19, 28)          # Z^28 + Z^19 + Z
    assert sw.f_prime.exponents() == (0, 18)        # Z^18 + 1
    assert all(sw.f.coeffs[e] == 1 for e in sw.f.exponents())
    assert poly_gcd(sw.f, sw.f_prime).degree == 0
    assert sw.deg_d == 224
    assert sw.deg_m == 144
    assert sw.omega_per_place == (98,)
    assert (sw.s_min, sw.s_max) == (18, 49)
    assert verify_closed_forms(sw)


def test_abq23_package(abq23):
    sw = abq23.swiss
    assert len(sw.a_values) == 28
    assert sw.f.exponents() == (1, 19, 28)
    assert sw.f_prime.exponents() == (0, 18)
    assert sw.deg_d == 112
    assert sw.deg_m == 72
    assert sw.omega_per_place == (44,)
    assert (sw.s_min, sw.s_max) == (4, 22)
    assert verify_closed_forms(sw)


def test_ggk223_package(ggk223):
    sw = ggk223.swiss
    assert len(sw.a_values) == 36
    assert sw.f.exponents() == (0, 18, 27, 36)      # X^36 + X^27 + X^18 + 1
    assert sw.f_prime.exponents() == (26,)          # X^26
    assert sw.deg_d == 216
    assert sw.deg_m == 156
    assert sw.omega_per_place == (26, 26, 26)
    assert (sw.s_min, sw.s_max) == (6, 13)
    assert 0 not in sw.a_values
    assert verify_closed_forms(sw)


def test_divisor_degree_bookkeeping(gk2, abq23, ggk223):
    for inst in (gk2, abq23, ggk223):
        sw = inst.swiss
        g2 = sw.desc.params.two_g_minus_2
        assert sw.deg_m - sw.deg_d + sum(sw.omega_per_place) - g2 == 0


def test_simple_zero_certificates(gk2, abq23, ggk223):
    for inst, fiber in ((gk2, 8), (abq23, 4), (ggk223, 6)):
        rep = simple_zero_certificate(inst.swiss)
        assert rep.ok and rep.fiber_size == fiber


def test_a_set_methods_must_agree(gk2):
    # dropping a fiber's places makes the fiber grouping disagree
    broken = [p for p in gk2.places if p.coords[2].enc != gk2.swiss.a_values[0]]
    with pytest.raises(ValueError):
        compute_A_set(gk2.desc, broken)


def test_swiss_report_schema(gk2):
    rep = swiss_report(gk2.swiss)
    assert set(rep) == {"family", "q", "n", "A_size", "f_coeffs", "fprime_coeffs",
                        "deg_D", "deg_M", "omega_coeff", "s_min", "s_max"}
    assert rep["A_size"] == 28
    assert rep["omega_coeff"] == 98
    assert rep["s_max"] == 49
    assert len(rep["f_coeffs"]) == 29


def test_a_set_condition_only_path():
    # the algebraic condition alone reproduces the closed-form size
    desc = make_descriptor("gk", 2)
    assert len(compute_A_set(desc)) == 28


@pytest.mark.slow
def test_ggs25_package(ggs25):
    sw = ggs25.swiss
    assert len(sw.a_values) == 496
    assert sw.f.exponents() == (1, 67, 331, 364, 496)
    assert sw.f_prime.exponents() == (0, 66, 330)
    assert sw.deg_d == 3968
    assert sw.deg_m == 2640
    assert sw.omega_per_place == (1418,)
    assert (sw.s_min, sw.s_max) == (90, 709)
    assert verify_closed_forms(sw)


@pytest.mark.slow
def test_ggk225_package(ggk225):
    sw = ggk225.swiss
    assert len(sw.a_values) == 660
    assert sw.f.exponents() == (0, 66, 132, 330, 363, 396, 495, 528, 594, 627, 660)
    assert sw.f_prime.exponents() == (362, 494, 626)   # X^626 + X^494 + X^362
    assert sw.deg_d == 3960
    assert sw.deg_m == 3756
    assert sw.omega_per_place == (98, 98, 98)
    assert (sw.s_min, sw.s_max) == (30, 49)
    assert verify_closed_forms(sw)


@pytest.mark.slow
def test_gk3_a_set_size():
    desc = make_descriptor("gk", 3)
    assert len(compute_A_set(desc)) == 3 ** 5 - 3 ** 3 + 3 ** 2 == 225
