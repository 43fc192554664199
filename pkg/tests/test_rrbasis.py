import itertools

import pytest

from swissag.rrbasis import DivisorSpec, basis_filtration, candidate_monomials, select_basis


def semigroup(generators, bound):
    """Numerical semigroup elements up to bound, by direct saturation."""
    reach = {0}
    changed = True
    while changed:
        changed = False
        for s, g in itertools.product(list(reach), generators):
            t = s + g
            if t <= bound and t not in reach:
                reach.add(t)
                changed = True
    return sorted(reach)


def test_gk2_candidates_match_semigroup(gk2):
    # pole orders realized by reduced monomials = the semigroup <6, 8, 9>
    monos = candidate_monomials(gk2.desc, DivisorSpec(18))
    assert len(monos) == 10
    assert [m.pole_order for m in monos] == semigroup((6, 8, 9), 18)


def test_abq23_candidates(abq23):
    monos = candidate_monomials(abq23.desc, DivisorSpec(4))
    assert [m.pole_order for m in monos] == [0, 3, 4]
    assert [m.pole_order for m in candidate_monomials(abq23.desc, DivisorSpec(22))] \
        == semigroup((3, 4), 22)


def test_s_zero_only_constants(gk2, ggk223):
    for inst in (gk2, ggk223):
        r = inst.desc.params.infinity.count
        monos = candidate_monomials(inst.desc, DivisorSpec(0, r))
        assert len(monos) == 1
        assert monos[0].pole_order == 0


def test_candidates_sorted_and_distinct_poles(gk2):
    monos = candidate_monomials(gk2.desc, DivisorSpec(49))
    keys = [(m.pole_order, m.exponents) for m in monos]
    assert keys == sorted(keys)
    poles = [m.pole_order for m in monos]
    assert len(set(poles)) == len(poles)


def test_select_basis_dimensions(gk2, ggk223):
    _, mat = select_basis(gk2.swiss, DivisorSpec(20))
    assert mat.shape == (11, 224)          # 20 + 1 - 10
    _, mat = select_basis(ggk223.swiss, DivisorSpec(6, 3))
    assert mat.shape == (10, 216)          # canonical divisor: dimension g


def test_rank_contract_sweeps(gk2, abq23, ggk223):
    filt = basis_filtration(gk2.swiss, 49)
    assert filt.prefix_size(18) == 10
    for s in range(19, 50):
        assert filt.prefix_size(s) == s - 9
    filt = basis_filtration(abq23.swiss, 22)
    for s in range(5, 23):
        assert filt.prefix_size(s) == s - 2
    filt = basis_filtration(ggk223.swiss, 13)
    assert filt.prefix_size(6) == 10
    for s in range(7, 14):
        assert filt.prefix_size(s) == 3 * s - 9


def test_nested_bases_are_prefixes(gk2):
    small, _ = select_basis(gk2.swiss, DivisorSpec(25))
    large, _ = select_basis(gk2.swiss, DivisorSpec(26))
    assert large[:len(small)] == small


def test_degree_must_stay_below_divisor(abq23):
    with pytest.raises(ValueError):
        select_basis(abq23.swiss, DivisorSpec(112))


def test_divisor_spec_validation():
    with pytest.raises(ValueError):
        DivisorSpec(-1)
    assert DivisorSpec(7, 3).degree == 21


def test_r_mismatch_rejected(gk2):
    with pytest.raises(ValueError):
        candidate_monomials(gk2.desc, DivisorSpec(10, 3))


@pytest.mark.slow
def test_rank_contract_slow(ggs25, ggk225):
    filt = basis_filtration(ggs25.swiss, 709)
    for s in (91, 400, 709):
        assert filt.prefix_size(s) == s + 1 - 46
    assert filt.prefix_size(90) == 46
    filt = basis_filtration(ggk225.swiss, 49)
    assert filt.prefix_size(30) == 46
    for s in range(31, 50):
        assert filt.prefix_size(s) == 3 * s + 1 - 46
