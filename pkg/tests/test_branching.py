import json
from collections import Counter

import pytest

from lieblocks import branching as br
from lieblocks import highest_weight as hw
from lieblocks.cartan import LieError, build, unit, weyl_orbit

W8 = unit(8, 7)


@pytest.fixture(scope="module")
def tower():
    return br.builtin_tower()


def weights_up_to_dim(lie, bound):
    cd = build(lie)
    seen, frontier = {cd.zero}, [cd.zero]
    while frontier:
        nxt = []
        for lam in frontier:
            for i in range(cd.rank):
                mu = tuple(x + (j == i) for j, x in enumerate(lam))
                if mu not in seen and hw.dim(lie, mu) <= bound:
                    seen.add(mu)
                    nxt.append(mu)
        frontier = nxt
    return sorted(seen)


def test_tower_shape(tower):
    assert [(str(e.ambient), str(e.sub)) for e in tower] == [
        ("E8", "E7"), ("E7", "E6"), ("E6", "F4"), ("F4", "D4")]
    assert all(br.embedding_index(e) == 1 for e in tower)


def test_project_examples(tower):
    f4 = br.chain(tower, "E8", "F4")
    assert br.project(f4, (0,) * 8) == (0, 0, 0, 0)
    # theta(E8) = w8 spans an E7-singlet, so it lands on a zero weight of F4,
    # one of the 14 trivial summands
    assert br.project(f4, build("E8").highest_root) == (0, 0, 0, 0)
    assert br.branch(f4, build("E8").highest_root)[(0, 0, 0, 0)] == 14
    with pytest.raises(LieError):
        br.project(f4, (0, 0, 0, 1))


def test_d4_projects_f4_extremes_to_vector_and_spinors(tower):
    d4 = br.chain(tower, "F4", "D4")
    images = Counter(br.project(d4, w) for w in weyl_orbit(build("F4"), (0, 0, 0, 1)))
    oracle = Counter()
    for i in (0, 2, 3):
        oracle.update(weyl_orbit(build("D4"), unit(4, i)))
    assert images == oracle


def test_branch_examples(tower):
    for e in tower:
        assert br.branch(e, build(e.ambient).zero) == {build(e.sub).zero: 1}
    f4 = br.chain(tower, "E8", "F4")
    assert br.branch(f4, W8) == {(0, 0, 0, 0): 14, (1, 0, 0, 0): 1, (0, 0, 0, 1): 7}
    assert br.branch(tower[3], (0, 0, 0, 1)) == {(0, 0, 0, 0): 2, (1, 0, 0, 0): 1,
                                                 (0, 0, 1, 0): 1, (0, 0, 0, 1): 1}
    e7_56 = br.branch(tower[1], unit(7, 6))
    assert e7_56 == {(0,) * 6: 2, unit(6, 0): 1, unit(6, 5): 1}
    assert sorted(hw.dim("E6", w) for w in e7_56 for _ in range(e7_56[w])) == [1, 1, 27, 27]


def test_identity_and_composites(tower):
    for lie in ["A1", "G2", "E6"]:
        assert br.embedding_index(br.identity(lie)) == 1
    assert br.embedding_index(br.chain(tower, "E8", "F4")) == 1
    assert br.embedding_index(br.chain(tower, "F4", "D4")) == 1
    d4 = br.chain(tower, "E8", "D4")
    assert hw.index_of_sum("D4", br.branch(d4, W8)) == 60


@pytest.mark.parametrize("link", range(4))
def test_index_and_dimension_conservation(tower, link):
    e = tower[link]
    k = br.embedding_index(e)
    for lam in weights_up_to_dim(e.ambient, 3000):
        out = br.branch(e, lam)
        assert hw.dim_of_sum(e.sub, out) == hw.dim(e.ambient, lam)
        assert hw.index_of_sum(e.sub, out) == k * hw.dynkin_index(e.ambient, lam)
        # projected weights are exactly the union of the pieces' weight systems
        rebuilt = Counter()
        for mu, m in out.items():
            for nu, c in hw.weight_system(e.sub, mu).items():
                rebuilt[nu] += m * c
        assert rebuilt == br.projected_character(e, lam)


def test_composition_matches_stepwise(tower):
    e6_e7, f4_e6 = tower[1], tower[2]
    composed = br.compose(e6_e7, f4_e6)
    for lam in weights_up_to_dim("E7", 1600):
        stepwise = Counter()
        for mu, m in br.branch(e6_e7, lam).items():
            for nu, c in br.branch(f4_e6, mu).items():
                stepwise[nu] += m * c
        assert dict(stepwise) == br.branch(composed, lam)


def test_compose_mismatch_rejected(tower):
    with pytest.raises(LieError):
        br.compose(tower[0], tower[2])
    with pytest.raises(LieError):
        br.chain(tower, "F4", "E7")


def test_zero_projection_fails_validation():
    zero = br.make("F4", "D4", [[0] * 4] * 4)
    with pytest.raises(br.EmbeddingError):
        br.validate(zero)


def test_non_invariant_projection_fails_validation():
    bad = br.make("A2", "A1", [[2, 1]])
    with pytest.raises(br.EmbeddingError):
        br.validate(bad)


def test_shape_checks():
    with pytest.raises(br.EmbeddingError):
        br.make("F4", "D4", [[1, 0, 0, 0]])
    with pytest.raises(br.EmbeddingError):
        br.make("A2", "A1", [[0.5, 0.5]])


def test_load_json_and_text(tmp_path, tower):
    f4 = tower[2]
    js = tmp_path / "f4.json"
    js.write_text(json.dumps({"ambient": "E6", "sub": "F4", "projection": [list(r) for r in f4.projection]}))
    assert br.load_embedding(js).projection == f4.projection
    txt = tmp_path / "f4.txt"
    txt.write_text("# F4 < E6 by folding\nE6 F4\n" + "\n".join(" ".join(map(str, r)) for r in f4.projection))
    assert br.load_embedding(txt).projection == f4.projection


def test_load_rejects_bad_files(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"ambient": "E6", "sub": "F4"}))
    with pytest.raises(br.EmbeddingError):
        br.load_embedding(p)
    p.write_text("E6\n1 2")
    with pytest.raises(br.EmbeddingError):
        br.load_embedding(p)
    p.write_text(json.dumps({"ambient": "A2", "sub": "A1", "projection": [[2, 1]]}))
    with pytest.raises(br.EmbeddingError):
        br.load_embedding(p)
