import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from confembed.conformal import solve_levels
from confembed.decomp import (
    CONTINUATION,
    BranchingTable,
    GradedBranching,
    canonical_rows,
    diagram_automorphisms,
    finite_decomposition,
    graded_decomposition,
    parse_row_text,
    table_keys,
)
from confembed.findec import Justification, Verdict, classify
from confembed.rootsys import LieType, build_root_datum
from confembed.subalg import SubalgebraError, build_subalgebra, find_subalgebra
from confembed.verify import all_pairs

FINITE_SEMISIMPLE = []
GRADED = []
for _s in all_pairs(8):
    for _k in solve_levels(_s).levels:
        _v = classify(_s, _k)
        if _v.verdict is not Verdict.FINITE:
            continue
        if _s.semisimple:
            FINITE_SEMISIMPLE.append((_s, _k))
        elif _v.justification in (Justification.CRITERION_CENTER, Justification.CITED):
            GRADED.append((_s, _k))


def cid(x):
    return f"{x[0].ambient}-{x[0].label}-{x[1]}"


def test_examples():
    assert finite_decomposition(find_subalgebra("G2", "A2"), Fraction(-5, 3)).text() == (
        "(-5/3 L0) + (-8/3 L0 + L1) + (-8/3 L0 + L2)"
    )
    assert finite_decomposition(find_subalgebra("F4", "B4"), Fraction(-5, 2)).text() == (
        "(-5/2 L0) + (-7/2 L0 + L4)"
    )
    t = finite_decomposition(find_subalgebra("E8", "A4xA4"), 1)
    assert len(t.rows) == 5 and t.rows[0].text() == "(L0, L0)"


def test_rejects_infinite_and_center():
    with pytest.raises(SubalgebraError):
        finite_decomposition(find_subalgebra("C5", "C2xC3"), Fraction(-7, 2))
    with pytest.raises(SubalgebraError):
        finite_decomposition(find_subalgebra("A5", "A2xA2xZ"), -1)
    with pytest.raises(SubalgebraError):
        graded_decomposition(build_subalgebra(LieType("A", 6), 3), Fraction(-7, 2), 1)
    with pytest.raises(SubalgebraError):
        graded_decomposition(find_subalgebra("G2", "A2"), Fraction(-5, 3), 1)


def test_graded_examples():
    s = find_subalgebra("A5", "A2xA2xZ")
    g = graded_decomposition(s, -1, 2)
    rows = dict(g.rows)
    assert rows[0].blocks[0].labels == (0, 0) and rows[0].charge == 0
    # theta restricts to omega_1 on the first A2 and omega_2 on the second
    assert [b.labels for b in rows[1].blocks] == [(1, 0), (0, 1)] and rows[1].charge == 1
    assert g.text().endswith(CONTINUATION)
    # C3 > A2 x Z at -1/2: q = -1 is -alpha_3 restricted, <-alpha_3, alpha_2^vee> = 2
    c3 = build_subalgebra(LieType("C", 3), 3)
    d = c3.datum
    want = int(-2 * d.root_inner((0, 0, 1), (0, 1, 0)) / d.root_inner((0, 1, 0), (0, 1, 0)))
    row = dict(graded_decomposition(c3, Fraction(-1, 2), 1).rows)[-1]
    assert row.blocks[0].labels == (0, want) == (0, 2) and row.charge == -1


@pytest.mark.parametrize("case", FINITE_SEMISIMPLE, ids=cid)
def test_finite_rows(case):
    s, k = case
    t = finite_decomposition(s, k)
    assert len(t.rows) == 1 + len(s.p_module.components)
    if k == 1:
        assert len(t.rows) == s.mark
    for row in t.rows:
        for b, ideal in zip(row.blocks, s.ideals):
            comarks = build_root_datum(ideal.lie_type).comarks
            assert b.level == ideal.index * k
            assert all(isinstance(a, int) and a >= 0 for a in b.labels)
            assert b.l0 + sum(c * a for c, a in zip(comarks, b.labels)) == b.level
    assert all(x == 0 for b in t.rows[0].blocks for x in b.labels)
    assert BranchingTable.from_json(json.dumps(t.to_json())) == t
    ranks = [x.rank for x in t.ideal_types]
    assert parse_row_text(t.text(), ranks) == list(table_keys(t))


@pytest.mark.parametrize("case", GRADED, ids=cid)
def test_graded_rows(case):
    s, k = case
    g = graded_decomposition(s, k, 2)
    charges = [qq for qq, _ in g.rows]
    assert charges == list(range(-2, 3))
    for qq, row in g.rows:
        assert row.charge == qq
        assert all(isinstance(a, int) and a >= 0 for b in row.blocks for a in b.labels)
    assert all(a == 0 for b in dict(g.rows)[0].blocks for a in b.labels)
    assert GradedBranching.from_json(json.dumps(g.to_json())) == g


@pytest.mark.parametrize("t", ["A1", "A4", "D4", "D5", "E6", "E7", "F4"])
def test_automorphisms_preserve_cartan_matrix(t):
    d = build_root_datum(t)
    r = d.lie_type.rank
    simple = d.simple_roots
    for perm in diagram_automorphisms(d.lie_type):
        for i in range(r):
            for j in range(r):
                assert d.root_inner(simple[i], simple[j]) == d.root_inner(simple[perm[i]], simple[perm[j]])


@given(st.permutations([0, 1, 2, 3]))
def test_canonical_rows_ignore_ideal_permutation(perm):
    t = finite_decomposition(find_subalgebra("D4", "A1xA1xA1xA1"), 1)
    keys = table_keys(t)
    shuffled = tuple(tuple(row[p] for p in perm) for row in keys)
    assert canonical_rows(t.ideal_types, t.ideal_levels, keys) == canonical_rows(t.ideal_types, t.ideal_levels, shuffled)


def test_canonical_rows_distinguish_wrong_labels():
    t = finite_decomposition(find_subalgebra("E7", "A2xA5"), 1)
    good = table_keys(t)
    bad = parse_row_text("(L0, L0) + (L1, L3) + (L2, L2)", [2, 5])
    assert canonical_rows(t.ideal_types, t.ideal_levels, good) != canonical_rows(t.ideal_types, t.ideal_levels, bad)


def test_ideal_order_argument():
    s = build_subalgebra(LieType("B", 5), 4)
    t = finite_decomposition(s, 1, ["D4", "A1"])
    assert [str(x) for x in t.ideal_types] == ["D4", "A1"]
    with pytest.raises(SubalgebraError):
        finite_decomposition(s, 1, ["D4"])
