from fractions import Fraction

import pytest

from fixspace.bounds import (NotIrreducible, catalog, check_bound_theorems,
                             extraspecial_free_check, min_semisimple_fixdim,
                             scott_check, scott_suite, sl3_adjoint_heart,
                             sl_p_adjoint_check)
from fixspace.ff import make_field
from fixspace.matrep import (build_rep, deleted, fixed_space_dim, perm_module,
                             is_irreducible)
from fixspace.perm import builtin_group
from fixspace.rng import SeedStream


def deleted_rep(name, q):
    return build_rep(deleted(perm_module(builtin_group(name))), make_field(q))


def test_min_fixdim_mersenne_modules():
    # affine sharpness families: every fixdim hits (n - 1) / 2 exactly
    rep7 = deleted_rep('F56', 7)
    cls, d = min_semisimple_fixdim(rep7)
    assert d == 3 and cls.element_order == 2
    for c in rep7.group.conjugacy_classes():
        if c.element_order == 1 or c.element_order % 7 == 0:
            continue
        assert fixed_space_dim(rep7, c.rep) == 3

    rep3 = deleted_rep('F12', 3)
    cls, d = min_semisimple_fixdim(rep3)
    assert d == 1 and cls.element_order == 2
    for c in rep3.group.conjugacy_classes():
        if c.element_order == 1 or c.element_order % 3 == 0:
            continue
        assert fixed_space_dim(rep3, c.rep) == 1


def test_min_fixdim_deleted_a5():
    rep = deleted_rep('A5', 7)
    cls, d = min_semisimple_fixdim(rep)
    assert d == 0
    assert cls.element_order == 5


def test_min_fixdim_rejects_trivial_prime_pool():
    # the order-2 group has no nontrivial 2'-elements at all
    from fixspace.perm import parse_group_text
    G = parse_group_text("group C2\ndegree 2\ngen (1,2)\n")
    rep = build_rep(deleted(perm_module(G)), make_field(3))
    with pytest.raises(ValueError):
        min_semisimple_fixdim(rep, p=2)


def test_bound_report_structure():
    rep = deleted_rep('F56', 7)
    report = check_bound_theorems(rep)
    assert report.dim == 7 and report.p == 7
    assert report.min_fixed_dim == 3
    assert report.holds
    names = [c.clause for c in report.clauses]
    assert names == ["half-strict", "coprime-order-third", "large-char-third",
                     "coprime-dim-three-eighths", "two-primitive-third",
                     "prime-dim-line-eigenspaces"]
    by_name = {c.clause: c for c in report.clauses}
    # 3 < 7/2 strictly
    assert by_name["half-strict"].strict
    assert by_name["half-strict"].satisfied
    # 7 divides 56, p = dim, p = n and p < n + 2: gates off
    assert not by_name["coprime-order-third"].applicable
    assert not by_name["large-char-third"].applicable
    assert not by_name["coprime-dim-three-eighths"].applicable
    # 2 has order 3 mod 7, not 6, so the primitive-root gate is off
    tp = by_name["two-primitive-third"]
    assert not tp.applicable
    assert tp.threshold == Fraction(7, 3)
    # eigenvalue clause gated off: p = 7 < 2*7 - 3
    assert not by_name["prime-dim-line-eigenspaces"].applicable


def test_two_primitive_clause_gate():
    # dim 4: not an odd prime, the clause must be inapplicable
    rep = deleted_rep('A5', 7)
    by_name = {c.clause: c for c in check_bound_theorems(rep).clauses}
    assert not by_name["two-primitive-third"].applicable
    # dim 5: 2 generates the units mod 5, clause live and satisfied
    rep = deleted_rep('A6', 7)
    by_name = {c.clause: c for c in check_bound_theorems(rep).clauses}
    tp = by_name["two-primitive-third"]
    assert tp.applicable
    assert tp.threshold == Fraction(5, 3)
    assert tp.satisfied
    # dim 6, p = 13 > n + 2: large-char clause live
    rep = deleted_rep('A7', 13)
    by_name = {c.clause: c for c in check_bound_theorems(rep).clauses}
    assert by_name["large-char-third"].applicable
    assert by_name["large-char-third"].satisfied


def test_line_eigenspace_clause_live():
    # dim 3, p = 7 > 2*3 - 3: the extraspecial module keeps every
    # eigenspace on a line
    from fixspace.matrep import builtin_matgroup
    _, rep = builtin_matgroup('E27')
    by_name = {c.clause: c for c in check_bound_theorems(rep).clauses}
    clause = by_name["prime-dim-line-eigenspaces"]
    assert clause.applicable
    assert clause.satisfied
    assert clause.witness_dim == 1


def test_bounds_reject_reducible():
    rep = build_rep(perm_module(builtin_group('A5')), make_field(7))
    with pytest.raises(NotIrreducible):
        check_bound_theorems(rep)


def test_catalog_size_and_irreducibility():
    entries = catalog()
    assert len(entries) >= 25
    idents = [e.ident for e in entries]
    assert len(set(idents)) == len(idents)
    for e in entries:
        assert is_irreducible(e.rep, SeedStream(3)).irreducible, e.ident


def test_catalog_bounds_hold():
    for e in catalog():
        report = check_bound_theorems(e.rep, e.p)
        assert report.holds, (e.ident, report)


def test_scott_inequality_single_pair():
    rep = deleted_rep('A5', 3)
    G = rep.group
    stream = SeedStream(5)
    x = G.random_element(stream)
    y = G.random_element(stream)
    report = scott_check(rep, x, y)
    assert report.holds
    assert report.lhs == report.fixed_x + report.fixed_y + report.fixed_product_inv
    assert report.rhs == report.ambient + report.invariants + report.dual_invariants


def test_scott_suite_clean():
    rep = deleted_rep('A6', 5)
    report = scott_suite(rep, pairs=300, seed=9)
    assert report.checked == 300
    assert report.violations == ()


def test_sl3_adjoint_heart_dimensions():
    rep = sl3_adjoint_heart()
    assert rep.dim == 7
    assert rep.field.p == 3
    assert is_irreducible(rep, SeedStream(2)).irreducible


def test_sl_p_adjoint_check():
    report = sl_p_adjoint_check(3, 3)
    assert report.holds
    assert report.ambient_dim == 9
    assert report.section_dim == 7
    assert report.bound == 1
    assert report.min_fixed == 1
    assert report.classes_checked > 0


def test_sl_p_adjoint_check_other_params_rejected():
    with pytest.raises(ValueError):
        sl_p_adjoint_check(5, 5)


def test_extraspecial_free_action():
    report = extraspecial_free_check()
    assert report.holds
    assert report.dim == 3
    assert report.subgroup_order == 3
    assert report.element_orders == (3, 3)
    assert report.max_eigenspace_dim == 1
