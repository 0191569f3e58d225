from fractions import Fraction

import pytest

from confembed.rootsys import LieType, build_root_datum
from confembed.subalg import (
    SubalgebraError,
    build_subalgebra,
    casimir_eigenvalue_on_p,
    embedding_index,
    enumerate_maximal,
    find_subalgebra,
    index_of_p,
    index_of_p_expected,
)
from confembed.verify import all_types

PAIRS = [s for g in all_types(8) for s in enumerate_maximal(g)]


def pid(s):
    return f"{s.ambient}-{s.label}"


def test_g2_subalgebras():
    names = {s.removed_node: s.name for s in enumerate_maximal("G2")}
    d = build_root_datum("G2")
    long_node = 1 + [i for i in range(2) if d.root_lengths[i] == 2][0]
    short_node = 3 - long_node
    assert names[long_node] == "A1xA1" and d.marks[long_node - 1] == 2
    assert names[short_node] == "A2" and d.marks[short_node - 1] == 3


@pytest.mark.parametrize("n", range(1, 8))
def test_type_a_has_a_center_at_every_node(n):
    subs = enumerate_maximal(LieType("A", n))
    assert len(subs) == n and all(s.center_dim == 1 for s in subs)
    for s in subs:
        h = s.removed_node
        want = sorted(str(LieType("A", r)) for r in (h - 1, n - h) if r >= 1)
        assert sorted(str(i.lie_type) for i in s.ideals) == want


def test_e8_list():
    names = {s.name for s in enumerate_maximal("E8")}
    assert names == {"A4xA4", "D8", "A8", "A1xE7", "A2xE6"}


def test_embedding_index_examples():
    g2a2 = find_subalgebra("G2", "A2")
    assert embedding_index(g2a2, 1) == 1
    for n in range(2, 7):
        s = build_subalgebra(LieType("C", n), n)
        assert s.ideals[0].lie_type == LieType("A", n - 1) and embedding_index(s, 1) == 2
    for n in range(4, 8):
        s = build_subalgebra(LieType("B", n), n)
        assert embedding_index(s, 1) == 1
    assert embedding_index(s, 0) == 1


def test_center_components():
    for s in PAIRS:
        if s.center_dim:
            comps = list(s.p_module)
            assert comps[0].root == s.datum.theta and comps[0].weight.charge == 1
            assert comps[1].root == tuple(-a for a in s.alpha_p) and comps[1].weight.charge == -1


def test_g2_a2_components():
    s = find_subalgebra("G2", "A2")
    blocks = sorted(c.weight.blocks[0] for c in s.p_module)
    assert blocks == [(0, 1), (1, 0)] and all(c.dim == 3 for c in s.p_module)


def test_e8_a4xa4_components():
    s = find_subalgebra("E8", "A4xA4")
    dims = [c.dim for c in s.p_module]
    assert dims == [50] * 4 and sum(dims) == 248 - 48


def test_index_examples():
    assert index_of_p(find_subalgebra("G2", "A2"), 1) == Fraction(1, 3)
    assert index_of_p(find_subalgebra("E8", "D8"), 1) == Fraction(8, 7)
    with pytest.raises(SubalgebraError):
        index_of_p(find_subalgebra("A3", "A2xZ"), 0)


def test_casimir_examples():
    assert casimir_eigenvalue_on_p(find_subalgebra("E8", "A4xA4")) == Fraction(1, 5)
    assert casimir_eigenvalue_on_p(find_subalgebra("G2", "A2")) == Fraction(1, 3)
    assert casimir_eigenvalue_on_p(find_subalgebra("D5", "A4xZ")) == Fraction(1, 2)


def test_nonmaximal_rejected():
    s = build_subalgebra(LieType.parse("E8"), 4)
    assert not s.maximal
    with pytest.raises(SubalgebraError):
        casimir_eigenvalue_on_p(s)


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_dimension_count(s):
    assert s.dim + sum(c.dim for c in s.p_module) == s.datum.dim


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_component_count(s):
    want = 2 if s.center_dim else s.mark - 1
    assert len(s.p_module.components) == want


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_index_identity(s):
    for j in range(1, len(s.ideals) + 1):
        assert index_of_p(s, j) == index_of_p_expected(s, j)


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_casimir_scalar(s):
    assert casimir_eigenvalue_on_p(s) == Fraction(1, s.automorphism_order)
    if s.center_dim:
        dim_p = s.datum.dim - s.dim
        assert s.zeta_norm == Fraction(2 * s.datum.dual_coxeter, dim_p)


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_ideal_root_lengths_match_index(s):
    d = s.datum
    for ideal in s.ideals:
        long_len = max(d.root_inner(r, r) for r in ideal.simple_roots)
        assert ideal.index == Fraction(2) / long_len


def test_lookup_by_label_and_name():
    s = find_subalgebra("A4", "A3xZ#4")
    assert s.removed_node == 4
    assert find_subalgebra("C5", "C3xC2").name == "C2xC3"
    with pytest.raises(SubalgebraError):
        find_subalgebra("G2", "A3")
