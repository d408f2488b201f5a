"""Annihilator calculus and property deciders, cross-checked two ways:

1. an independent pure-python oracle that applies the definitions literally
   (no numpy, no shared code paths beyond the multiplication table), and
2. frozen counts and witnesses for the named algebras, locked in after the
   oracle confirmed them.
"""

import itertools

import pytest

from jordanlab.annihilators import (
    BAER,
    BJ,
    NILROOT,
    NONDEG,
    QUAD_NONDEG,
    RICKART,
    RJ,
    baer_check,
    bj_check,
    bj_check_direct,
    bj_check_via_t25,
    element_table,
    has_square_root,
    idempotent_kernel_identity,
    idempotents,
    inner_ideal,
    left_annihilator,
    nilroot_check,
    nondeg_check,
    quad_nondeg_check,
    quasi_unit,
    rickart_check,
    right_annihilator,
    rj_check,
    squares_set,
    trivial_elements,
    u_zero_equations,
)
from jordanlab.budget import TooLarge
from jordanlab.corpus import build_algebra


# -- independent definitional oracle ------------------------------------------

def all_elements(A):
    return [A.element(c) for c in
            itertools.product(range(A.field.p), repeat=A.dim)]


def u_of(A, a, x):
    """U_a x = 2(a(ax)) - a^2 x, computed only through the product table."""
    return (a * (a * x)) * 2 - a.square() * x


def oracle_squares(A):
    seen = {}
    for a in all_elements(A):
        seen.setdefault(a.square().coords, a.square())
    return sorted(seen.values(), key=lambda e: e.sort_key())


def oracle_idempotents(A):
    return [e for e in all_elements(A) if e.square() == e]


def oracle_inner_ideal_set(A, e):
    return {u_of(A, e, x).coords for x in all_elements(A)}


def oracle_rj(A):
    """Literal RJ definition; returns (holds, failing_x or None)."""
    squares = oracle_squares(A)
    idem_images = []
    for e in oracle_idempotents(A):
        img = oracle_inner_ideal_set(A, e)
        idem_images.append(frozenset(s.coords for s in squares
                                     if s.coords in img))
    for x in all_elements(A):
        killed = frozenset(s.coords for s in squares
                           if u_of(A, x, s).is_zero())
        if killed not in idem_images:
            return False, x
    return True, None


def oracle_rickart(A):
    """Literal Rickart definition; returns (holds, failing_x or None)."""
    elements = all_elements(A)
    idem_images = [frozenset(oracle_inner_ideal_set(A, e))
                   for e in oracle_idempotents(A)]
    for x in oracle_squares(A):
        ann = frozenset(a.coords for a in elements if u_of(A, a, x).is_zero())
        if ann not in idem_images:
            return False, x
    return True, None


@pytest.mark.parametrize("key", ["e2_f3", "e3_2_f3", "nu_2_f3", "h2_f3",
                                 "m2_f3"])
def test_rj_matches_definitional_oracle(key):
    A = build_algebra(key)
    holds, bad_x = oracle_rj(A)
    rep = rj_check(A)
    assert rep.outcome == ("Holds" if holds else "Fails")
    if not holds:
        w = rep.verdict.witness
        x = A.element(w["x"]["coords"])
        # the engine's witness x must genuinely have an unmatched kernel set
        squares = oracle_squares(A)
        killed = frozenset(s.coords for s in squares if u_of(A, x, s).is_zero())
        for e in oracle_idempotents(A):
            img = oracle_inner_ideal_set(A, e)
            assert killed != frozenset(s.coords for s in squares
                                       if s.coords in img)


@pytest.mark.parametrize("key", ["e2_f3", "nu_2_f3", "h2_f3", "m2_f3"])
def test_rickart_matches_definitional_oracle(key):
    A = build_algebra(key)
    holds, _ = oracle_rickart(A)
    rep = rickart_check(A)
    assert rep.outcome == ("Holds" if holds else "Fails")


# -- frozen facts for the named algebras --------------------------------------

H2F3 = {"n": 27, "squares": 11, "idempotents": 6}
H2F5 = {"n": 125, "squares": 49, "idempotents": 6}
M2F3 = {"n": 81, "squares": 29, "idempotents": 14}
M2F5 = {"n": 625, "squares": 223, "idempotents": 32}


@pytest.mark.parametrize("key,facts", [("h2_f3", H2F3), ("h2_f5", H2F5),
                                       ("m2_f3", M2F3), ("m2_f5", M2F5)])
def test_frozen_element_counts(key, facts):
    t = element_table(build_algebra(key))
    assert t.n == facts["n"]
    assert t.n_squares == facts["squares"]
    assert len(t.idempotent_indices) == facts["idempotents"]


def test_h2_f3_satisfies_every_property():
    A = build_algebra("h2_f3")
    for check in (rj_check, bj_check, rickart_check, baer_check,
                  nondeg_check, quad_nondeg_check, nilroot_check):
        assert check(A).outcome == "Holds", check.__name__


def test_h2_f5_fails_rj_with_frozen_witness():
    A = build_algebra("h2_f5")
    rep = rj_check(A)
    assert rep.outcome == "Fails"
    w = rep.verdict.witness
    assert w["x"]["coords"] == ["0", "1", "0"]
    assert w["x"]["index"] == 5
    assert w["killed_square_count"] == 17
    assert rep.details["n_idempotents"] == 6


def test_h2_f5_fails_rickart_with_frozen_annihilator_size():
    rep = rickart_check(build_algebra("h2_f5"))
    assert rep.outcome == "Fails"
    assert rep.verdict.witness["annihilator_size"] == 9


def test_m2_f3_fails_rj_with_frozen_witness():
    rep = rj_check(build_algebra("m2_f3"))
    assert rep.outcome == "Fails"
    w = rep.verdict.witness
    assert w["x"]["index"] == 1
    assert w["killed_square_count"] == 10


def test_m2_f3_fails_rickart_with_frozen_annihilator_size():
    rep = rickart_check(build_algebra("m2_f3"))
    assert rep.outcome == "Fails"
    assert rep.verdict.witness["annihilator_size"] == 15


def test_m2_f5_fails_rj_with_frozen_witness():
    rep = rj_check(build_algebra("m2_f5"))
    assert rep.outcome == "Fails"
    assert rep.verdict.witness["killed_square_count"] == 47


def test_e2_f3_verdict_profile():
    A = build_algebra("e2_f3")
    assert rj_check(A).outcome == "Holds"
    assert bj_check(A).outcome == "Holds"
    assert rickart_check(A).outcome == "Fails"
    assert baer_check(A).outcome == "Fails"
    # the Rickart failure point: the unit is a square whose set-side
    # annihilator is the nil line, matching no inner ideal
    w = rickart_check(A).verdict.witness
    x = A.element(w["x"]["coords"])
    assert x == A.unit
    assert w["annihilator_size"] == 3


def test_rj_holds_reports_full_idempotent_map_when_small():
    import numpy as np
    A = build_algebra("h2_f3")
    rep = rj_check(A)
    mapping = rep.details.get("element_to_idempotent")
    assert mapping is not None and len(mapping) == 27
    assert [x for x, _ in mapping] == list(range(27))
    t = element_table(A)
    for x_idx, e_idx in mapping:
        e = t.element(e_idx)
        assert e.square() == e
        killed = {int(s) for s in t.squares_of_mask(
            t.killed_square_masks(t.coords_block_of(np.array([x_idx])))[0])}
        fixed = {int(s) for s in t.squares_of_mask(
            t.u_image_fixed_mask(e_idx, t.square_coords()))}
        assert killed == fixed


# -- BJ: direct subset search vs. lattice-based equivalence -------------------

BJ_EQUIV_KEYS = ["e2_f3", "e3_2_f3", "nu_2_f3", "nu_3_f3", "h2_f3", "m2_f3",
                 "seq2_h2_f3"]


@pytest.mark.parametrize("key", BJ_EQUIV_KEYS)
def test_bj_direct_equals_bj_via_lattice(key):
    A = build_algebra(key)
    d = bj_check_direct(A)
    v = bj_check_via_t25(A)
    assert d.outcome == v.outcome, (key, d.outcome, v.outcome)


def test_bj_default_dispatch_matches_direct():
    A = build_algebra("h2_f3")
    assert bj_check(A).outcome == bj_check_direct(A).outcome


# -- annihilator primitives ----------------------------------------------------

def test_left_annihilator_definitional():
    A = build_algebra("h2_f3")
    S = [A.basis_element(0)]
    ann = left_annihilator(A, S)
    for x in all_elements(A):
        killed = all(u_of(A, a, x).is_zero() for a in S)
        assert ann.contains(x.coords) == killed


def test_right_annihilator_definitional():
    A = build_algebra("h2_f3")
    S = [A.unit]
    got = {a.coords for a in right_annihilator(A, S)}
    expect = {a.coords for a in all_elements(A)
              if all(u_of(A, a, x).is_zero() for x in S)}
    assert got == expect
    # U_a 1 = a^2, so these are exactly the square-zero elements
    assert got == {a.coords for a in all_elements(A) if a.square().is_zero()}


def test_right_annihilator_needs_finite_field():
    A = build_algebra("e2_q")
    with pytest.raises(ValueError):
        right_annihilator(A, [A.unit])


def test_inner_ideal_is_u_image():
    A = build_algebra("h2_f3")
    for e in oracle_idempotents(A):
        sub = inner_ideal(A, e)
        img = oracle_inner_ideal_set(A, e)
        for x in all_elements(A):
            assert sub.contains(x.coords) == (x.coords in img)


def test_idempotents_exhaustive_completeness():
    A = build_algebra("m2_f3")
    lst = idempotents(A)
    assert lst.complete and lst.finite and lst.method == "exhaustive"
    got = {e.coords for e in lst.elements}
    assert got == {e.coords for e in oracle_idempotents(A)}


def test_idempotents_symbolic_over_q():
    A = build_algebra("e2_q")
    lst = idempotents(A)
    assert lst.method == "symbolic" and lst.complete and lst.finite
    assert {tuple(e.coords_str()) for e in lst.elements} \
        == {("0/1", "0/1"), ("1/1", "0/1")}


def test_quasi_unit_behaviour():
    # unital: the quasi-unit is the unit itself
    A = build_algebra("h2_f3")
    qu = quasi_unit(A)
    assert qu is not None and qu == A.unit
    # zero-product algebra: the only square is 0, so the zero idempotent
    # already covers every square
    B = build_algebra("nu_2_f3")
    assert quasi_unit(B) == B.zero()
    # truncated polynomial span{t, t^2}: squares are {0, t^2}, the only
    # idempotent is 0, and no inner ideal reaches t^2
    from jordanlab.core import JordanAlgebra
    from jordanlab.fields import Field
    C = JordanAlgebra(Field(3), 2, {(0, 0): (0, 1)}, labels=("t", "t2"))
    assert quasi_unit(C) is None


# -- triviality and roots -------------------------------------------------------

def test_trivial_elements_definitional():
    for key in ("h2_f3", "nu_2_f3", "e2_f3"):
        A = build_algebra(key)
        pts, comps, complete = trivial_elements(A)
        assert complete and comps == ()
        got = {z.coords for z in pts}
        expect = {z.coords for z in all_elements(A)
                  if z.square().is_zero()
                  and all(u_of(A, z, x).is_zero() for x in all_elements(A))}
        assert got == expect, key


def test_trivial_elements_symbolic_family_over_q():
    A = build_algebra("nu_2_q")   # every element is trivial
    pts, comps, complete = trivial_elements(A)
    assert complete
    assert comps and comps[0].dim >= 1


def test_nondeg_profile():
    assert nondeg_check(build_algebra("h2_f3")).outcome == "Holds"
    rep = nondeg_check(build_algebra("e2_f3"))
    assert rep.outcome == "Fails"
    z = rep.verdict.witness["trivial"]
    A = build_algebra("e2_f3")
    zz = A.element(z["coords"])
    assert not zz.is_zero() and zz.square().is_zero() and A.u_op(zz).is_zero()


def test_quad_nondeg_holds_when_no_trivial_has_root():
    # e2_f3 is degenerate (the nil line is trivial) but no nonzero trivial
    # element is a square, so the quadratic variant holds
    A = build_algebra("e2_f3")
    assert nondeg_check(A).outcome == "Fails"
    assert quad_nondeg_check(A).outcome == "Holds"


def test_nilroot_profiles():
    assert nilroot_check(build_algebra("m2_f3")).outcome == "Holds"
    assert nilroot_check(build_algebra("m2_f5")).outcome == "Holds"
    rep = nilroot_check(build_algebra("m3_f3"))
    assert rep.outcome == "Fails"
    w = rep.verdict.witness
    A = build_algebra("m3_f3")
    root = A.element(w["root"]["coords"])
    sq = A.element(w["square"]["coords"])
    assert root.square() == sq and not sq.is_zero()
    # square is nilpotent
    assert any(sq.power(k).is_zero() for k in range(1, A.dim + 2))


def test_has_square_root():
    A = build_algebra("h2_f3")
    v = has_square_root(A, A.unit)
    assert v.holds
    root = A.element(v.witness["root"]["coords"])
    assert root.square() == A.unit
    t = element_table(A)
    non_sq = next(i for i in range(t.n)
                  if i not in set(int(v) for v in t.square_indices))
    assert has_square_root(A, t.element(non_sq)).outcome == "Fails"
    # symbolic side over Q
    B = build_algebra("e2_q")
    vb = has_square_root(B, B.unit)
    assert vb.holds and B.element(vb.witness["root"]["coords"]).square() == B.unit


def test_squares_set_exhaustive_and_symbolic():
    A = build_algebra("h2_f3")
    s = squares_set(A)
    assert s.mode == "exhaustive" and s.size == 11
    assert {e.coords for e in s.elements} \
        == {e.coords for e in oracle_squares(A)}
    B = build_algebra("e2_q")
    sy = squares_set(B)
    assert sy.mode == "symbolic" and sy.size is None
    assert sy.span.dim == 2


def test_u_zero_equations_vanish_exactly_on_kernel_of_all_u():
    A = build_algebra("nu_2_q")       # every U vanishes identically
    eqs = u_zero_equations(A)
    from jordanlab.quadsolve import solve_quadratic_system
    res = solve_quadratic_system(A.field, A.dim, eqs)
    assert res.complete and res.has_positive_dim()


# -- kernel identity sweep -------------------------------------------------------

@pytest.mark.parametrize("key", ["e2_f3", "e3_2_f3", "h2_f3", "nu_2_f3"])
def test_idempotent_kernel_identity_where_rj_holds(key):
    A = build_algebra(key)
    assert rj_check(A).outcome == "Holds"
    for e in idempotents(A).elements:
        res = idempotent_kernel_identity(A, e)
        assert res["equal"], (key, e)


def test_idempotent_kernel_identity_rejects_non_idempotent():
    A = build_algebra("h2_f3")
    with pytest.raises(ValueError):
        idempotent_kernel_identity(A, A.basis_element(2))


# -- symbolic (rationals) paths ---------------------------------------------------

def test_symbolic_rj_bj_unknown_on_unital_rational_algebra():
    A = build_algebra("e2_q")
    rj = rj_check(A)
    assert rj.outcome == "Unknown" and rj.method == "symbolic"
    assert "infinite field" in rj.verdict.reason
    assert rj.details["probes_checked"]      # the certified probes are shown
    bj = bj_check(A)
    assert bj.outcome == "Unknown" and bj.method == "symbolic"
    assert "subset quantifier" in bj.verdict.reason


def test_symbolic_rj_bj_holds_via_zero_u_certificate():
    A = build_algebra("nu_2_q")
    for check in (rj_check, bj_check):
        rep = check(A)
        assert rep.outcome == "Holds"
        assert rep.details["certificate"] == "zero-u-operator"


def test_mode_guards():
    with pytest.raises(ValueError):
        rj_check(build_algebra("e2_f3"), mode="nonsense")
    with pytest.raises(ValueError):
        rj_check(build_algebra("e2_f3"), mode="symbolic")
    with pytest.raises(ValueError):
        rj_check(build_algebra("e2_q"), mode="exhaustive")


def test_budget_guard_raises_too_large():
    with pytest.raises(TooLarge):
        rj_check(build_algebra("m3_f3"), budget=100)
