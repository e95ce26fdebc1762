from itertools import product

import pytest
from hypothesis import assume, given, strategies as st

from lieblocks import fusion
from lieblocks import highest_weight as hw
from lieblocks.cartan import LieError, all_types, build, dual_weight, integer_form
from oracles import a1_fusion, sl2_verlinde, character_product, decompose_character

TYPES = all_types(8)
LOW_RANK = [t for t in TYPES if t.rank <= 2]
Z8 = (0,) * 8


def test_alcove_examples():
    for lie in TYPES:
        assert fusion.alcove(lie, 0) == [(0,) * lie.rank]
    assert fusion.alcove("E8", 1) == [Z8]
    assert fusion.alcove("A1", 2) == [(0,), (1,), (2,)]
    assert len(fusion.alcove("A2", 2)) == 6
    with pytest.raises(LieError):
        fusion.alcove("A1", -1)


@pytest.mark.parametrize("lie", [t for t in TYPES if t.rank <= 4], ids=str)
@pytest.mark.parametrize("level", [0, 1, 2, 3])
def test_alcove_is_exactly_the_bounded_dominant_set(lie, level):
    cd = build(lie)
    got = fusion.alcove(lie, level)
    brute = [lam for lam in product(range(level + 1), repeat=cd.rank)
             if cd.inner(lam, cd.highest_root) <= level]
    assert sorted(got) == sorted(brute)
    assert set(dual_weight(cd, lam) for lam in got) == set(got)


def _oracle_tensor(lie, lam, mu):
    cd = build(lie)
    _, g = integer_form(cd)
    rho = [sum(row) for row in g]
    char = character_product(hw.weight_system(lie, lam), hw.weight_system(lie, mu))
    return decompose_character(char, lambda nu: hw.weight_system(lie, nu),
                               lambda nu: sum(a * b for a, b in zip(nu, rho)))


def test_tensor_examples():
    assert fusion.tensor_decompose("B3", (1, 0, 1), (0, 0, 0)) == {(1, 0, 1): 1}
    assert fusion.tensor_decompose("A1", (1,), (1,)) == {(0,): 1, (2,): 1}
    assert fusion.tensor_decompose("A2", (1, 0), (0, 1)) == {(0, 0): 1, (1, 1): 1}
    assert _oracle_tensor("A2", (1, 0), (0, 1)) == {(0, 0): 1, (1, 1): 1}


@given(st.sampled_from([t for t in TYPES if t.rank <= 3]).flatmap(
    lambda t: st.tuples(st.just(t), *[st.tuples(*[st.integers(0, 2)] * t.rank)] * 2)))
def test_tensor_matches_character_oracle(case):
    lie, lam, mu = case
    assume(hw.dim(lie, lam) * hw.dim(lie, mu) <= 5000)
    got = fusion.tensor_decompose(lie, lam, mu)
    assert got == _oracle_tensor(lie, lam, mu)
    assert hw.dim_of_sum(lie, got) == hw.dim(lie, lam) * hw.dim(lie, mu)


def test_fusion_examples():
    assert fusion.fusion_coeff("E8", 1, Z8, Z8, Z8) == 1
    assert fusion.fusion_coeff("A1", 1, (1,), (1,), (0,)) == 1
    assert fusion.fusion_coeff("A1", 1, (1,), (1,), (1,)) == 0
    for lie in LOW_RANK:
        for level in range(3):
            cd = build(lie)
            for lam in fusion.alcove(lie, level):
                assert fusion.fusion_coeff(lie, level, lam, dual_weight(cd, lam), cd.zero) == 1


def test_fusion_rejects_labels_outside_alcove():
    with pytest.raises(LieError):
        fusion.fusion_coeff("A1", 1, (2,), (0,), (2,))


@pytest.mark.parametrize("level", range(5))
def test_a1_fusion_against_truncated_clebsch_gordan(level):
    for a, b, c in product(range(level + 1), repeat=3):
        assert fusion.fusion_coeff("A1", level, (a,), (b,), (c,)) == a1_fusion(level, a, b, c)


@pytest.mark.parametrize("lie", LOW_RANK, ids=str)
@pytest.mark.parametrize("level", [1, 2])
def test_fusion_fully_symmetric_and_unit(lie, level):
    cd = build(lie)
    pts = fusion.alcove(lie, level)
    for lam, mu, nu in product(pts, repeat=3):
        n = fusion.fusion_coeff(lie, level, lam, mu, nu)
        assert n >= 0
        assert n == fusion.fusion_coeff(lie, level, mu, lam, nu) == fusion.fusion_coeff(lie, level, nu, mu, lam)
    for lam, mu in product(pts, repeat=2):
        assert fusion.fusion_coeff(lie, level, lam, mu, cd.zero) == int(mu == dual_weight(cd, lam))


@pytest.mark.parametrize("lie", LOW_RANK, ids=str)
def test_large_level_fusion_is_tensor_product(lie):
    cd = build(lie)
    small = [lam for lam in product(range(2), repeat=cd.rank)]
    for lam, mu in product(small, repeat=2):
        level = fusion.level_of(cd, lam) + fusion.level_of(cd, mu)
        tensor = fusion.tensor_decompose(lie, lam, mu)
        for nu in fusion.alcove(lie, level):
            assert fusion.fusion_coeff(lie, level, lam, mu, nu) == tensor.get(dual_weight(cd, nu), 0)


def test_fusion_without_table(monkeypatch):
    monkeypatch.setattr(fusion, "TABLE_LIMIT", 0)
    fusion._fusion_table.cache_clear()
    try:
        assert fusion._fusion_table(build("A2").lie, 3) is None
        for a, b, c in product(range(4), repeat=3):
            assert fusion.fusion_coeff("A1", 3, (a,), (b,), (c,)) == a1_fusion(3, a, b, c)
    finally:
        fusion._fusion_table.cache_clear()


def test_blocks_examples():
    for g in range(4):
        for n in range(3):
            assert fusion.blocks_dim("E8", 1, g, [Z8] * n) == 1
    for lie in LOW_RANK:
        cd = build(lie)
        for lam in fusion.alcove(lie, 2):
            assert fusion.blocks_dim(lie, 2, 0, [lam, dual_weight(cd, lam)]) == 1
    assert fusion.blocks_dim("A1", 1, 1) == 2


@pytest.mark.parametrize("level", range(1, 6))
@pytest.mark.parametrize("genus", range(4))
def test_a1_genus_counts_match_verlinde_sum(level, genus):
    assert fusion.blocks_dim("A1", level, genus) == sl2_verlinde(level, genus)


def test_blocks_rejects_bad_input():
    with pytest.raises(LieError):
        fusion.blocks_dim("A1", 1, 0, [(2,)])
    with pytest.raises(LieError):
        fusion.blocks_dim("A1", 1, -1)
    with pytest.raises(LieError):
        fusion.blocks_dim("A1", 1, 0, strategy="nope")


def _label_lists(lie, level, max_len=3):
    pts = fusion.alcove(lie, level)
    for n in range(max_len + 1):
        yield from product(pts, repeat=n)


@pytest.mark.parametrize("lie", ["A1", "A2"])
@pytest.mark.parametrize("level", [0, 1, 2])
def test_adding_a_trivial_point_changes_nothing(lie, level):
    zero = build(lie).zero
    for labels in _label_lists(lie, level):
        for g in range(3):
            assert fusion.blocks_dim(lie, level, g, labels + (zero,)) == fusion.blocks_dim(lie, level, g, labels)


@pytest.mark.parametrize("lie", ["A1", "A2", "B2", "G2"])
@pytest.mark.parametrize("level", [1, 2])
def test_factorization_order_independence(lie, level):
    for labels in _label_lists(lie, level):
        for g in range(3):
            vals = {fusion.blocks_dim(lie, level, g, labels, strategy=s) for s in fusion.STRATEGIES}
            assert len(vals) == 1


@given(st.permutations([(1, 0), (0, 1), (1, 1), (0, 0)]), st.integers(0, 2))
def test_blocks_symmetric_under_relabelling(labels, g):
    assert fusion.blocks_dim("A2", 2, g, labels) == fusion.blocks_dim("A2", 2, g, [(1, 0), (0, 1), (1, 1), (0, 0)])


def test_concurrent_first_use_is_benign():
    from concurrent.futures import ThreadPoolExecutor
    fusion._fusion_table.cache_clear()
    fusion._genus_first.cache_clear()
    jobs = [("B2", 3, g, ((1, 0),) * 2) for g in range(3)] * 4
    with ThreadPoolExecutor(max_workers=6) as pool:
        got = list(pool.map(lambda a: fusion.blocks_dim(*a), jobs))
    assert got == [fusion.blocks_dim(*a, strategy="balanced") for a in jobs]
