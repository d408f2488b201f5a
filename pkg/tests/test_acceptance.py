"""Acceptance gate: ten end-to-end criteria, one test (and one printed
pass/fail line) per criterion.  Run with `pytest tests/test_acceptance.py -v`.
"""

import json
import time

import numpy as np
import pytest

from jordanlab.annihilators import (
    bj_check_direct,
    bj_check_via_t25,
    bj_check,
    element_table,
    idempotent_kernel_identity,
    idempotents,
    nilroot_check,
    quasi_unit,
    rj_check,
)
from jordanlab.core import quotient, validate_jordan
from jordanlab.corpus import algebra_keys, build_algebra, fuzz_sweep, run_corpus
from jordanlab.linalg import Subspace
from jordanlab.radlat import deg_radical, jacobson_radical, nil_radical

HOLDS = "Holds"
FAILS = "Fails"


def report(n, text):
    print(f"CRITERION {n}: PASS — {text}")


@pytest.fixture(scope="module")
def corpus_report():
    t0 = time.monotonic()
    rep = run_corpus(threads=4)
    return rep, time.monotonic() - t0


@pytest.fixture(scope="module")
def finite_field_algebras():
    out = {}
    for key in algebra_keys():
        A = build_algebra(key)
        if A.field.p is not None:
            out[key] = A
    return out


@pytest.fixture(scope="module")
def rj_holds_keys(finite_field_algebras):
    return {key: A for key, A in finite_field_algebras.items()
            if rj_check(A).outcome == HOLDS}


def test_criterion_01_corpus_regression(corpus_report):
    rep, elapsed = corpus_report
    d = rep.to_dict()
    by_id = {c["id"]: c for c in d["claims"]}
    stated = [c for c in d["claims"] if c["basis"] == "asserted"]
    failed = [c["id"] for c in stated if not c["passed"]]
    assert failed == [], failed
    for needed in ("e2-f3-annihilator-table",
                   "e3-2-f3-annihilator-identities",
                   "e3-3-f3-annihilator-identities",
                   "nu-2-f3-idempotents", "nu-3-f3-idempotents",
                   "m3-f3-rj", "m3-f3-witness-family",
                   "e2-f3-bj", "e3-2-f3-bj", "e3-3-f3-bj",
                   "nu-2-f3-bj", "nu-3-f3-bj", "seq-2-bj"):
        assert by_id[needed]["passed"], needed
    assert by_id["m3-f3-rj"]["actual"] == FAILS
    assert elapsed <= 60.0, f"corpus took {elapsed:.1f}s"
    report(1, f"{len(stated)} stated claims pass "
              f"({d['summary']['total']} total) in {elapsed:.1f}s <= 60s")


def test_criterion_02_bj_decision_paths_agree(finite_field_algebras):
    required = {"e2_f3", "e3_2_f3", "nu_2_f3", "nu_3_f3", "h2_f3",
                "m2_f3", "seq2_h2_f3"}
    chosen = {key: A for key, A in finite_field_algebras.items()
              if A.field.p == 3 and A.field.p ** A.dim <= 10 ** 6}
    assert required <= set(chosen)
    disagreements = []
    for key, A in sorted(chosen.items()):
        direct = bj_check_direct(A).outcome
        via = bj_check_via_t25(A).outcome
        if direct != via:
            disagreements.append((key, direct, via))
    assert disagreements == []
    report(2, f"direct and reduction-based BJ deciders agree on "
              f"{len(chosen)} F_3 algebras (zero disagreements)")


def test_criterion_03_idempotent_kernel_identity(rj_holds_keys):
    checked = 0
    for key, A in sorted(rj_holds_keys.items()):
        for e in idempotents(A).elements:
            res = idempotent_kernel_identity(A, e)
            assert res["equal"] is True, (key, e.coords_str())
            checked += 1
    assert checked > 0
    report(3, f"kernel/image square sets match for {checked} idempotents "
              f"across {len(rj_holds_keys)} algebras where RJ holds")


def test_criterion_04_quasi_unit_and_nilpotent_roots(rj_holds_keys):
    squares_fixed = 0
    for key, A in sorted(rj_holds_keys.items()):
        e = quasi_unit(A)
        assert e is not None, key
        t = element_table(A)
        for si in t.square_indices:
            s = A.element(t.coords(int(si)))
            assert e * s == s, (key, s.coords_str())
            squares_fixed += 1
        assert nilroot_check(A).outcome == HOLDS, key
    B = build_algebra("m3_f3")
    v = nilroot_check(B)
    assert v.outcome == FAILS
    wit = v.verdict.witness
    b = B.element(tuple(B.field.parse(c) for c in wit["root"]["coords"]))
    sq = b * b
    assert not sq.is_zero()
    power = sq
    nilpotent = False
    for _ in range(B.dim + 1):
        power = power * sq
        if power.is_zero():
            nilpotent = True
            break
    assert nilpotent
    report(4, f"quasi-units fix {squares_fixed} squares and no nilpotent "
              f"square-roots exist where RJ holds; the dim-9 matrix algebra "
              f"yields a concrete nilpotent square")


def test_criterion_05_radical_quotients_stay_clean():
    for key in ("e2_f3", "e3_2_f3"):
        A = build_algebra(key)
        rad = deg_radical(A)
        assert rad.subspace.dim > 0, key
        Q, _ = quotient(A, rad.subspace)
        for B, tag in ((A, "whole"), (Q, "quotient")):
            assert rj_check(B).outcome == HOLDS, (key, tag)
            assert bj_check(B).outcome == HOLDS, (key, tag)
    report(5, "degenerate radical is nonzero and RJ/BJ hold for both the "
              "algebra and its radical quotient (line extensions, F_3)")


def test_criterion_06_radicals_coincide_and_avoid_squares():
    for key, null_cols in (("e2_f3", [1]), ("e3_2_f3", [1, 2])):
        A = build_algebra(key)
        F = A.field
        deg = deg_radical(A)
        nil = nil_radical(A)
        rad = jacobson_radical(A)
        want = Subspace.from_rows(F, A.dim, [
            [F.one if c == col else F.zero for c in range(A.dim)]
            for col in null_cols])
        assert deg.subspace.rows == want.rows, key
        assert nil.subspace.rows == want.rows, key
        assert rad.subspace.rows == want.rows, key
        assert nil.method == "ideal-enumeration"
        assert rad.method == "ideal-enumeration"
        assert nil.verification.outcome == HOLDS
        t = element_table(A)
        for si in t.square_indices:
            v = t.coords(int(si))
            if any(not F.is_zero(c) for c in v):
                assert not deg.subspace.contains(list(v)), (key, v)
    report(6, "Deg = Nil = Rad = the null-generator span, and no nonzero "
              "square lies in the radical (exhaustive, F_3)")


def test_criterion_07_matrix_scan_vs_prediction(corpus_report):
    rep, _ = corpus_report
    finding_ids = {f["claim"] for f in rep.to_dict()["findings"]}
    for key in ("m2_f3", "m2_f5"):
        A = build_algebra(key)
        assert nilroot_check(A).outcome == HOLDS, key
        predicted = HOLDS
        actual = rj_check(A).outcome
        if predicted != actual:
            claim_id = f"{key.replace('_', '-')}-rj-prediction"
            assert claim_id in finding_ids, \
                f"{key}: prediction/verdict disagreement not surfaced"
    report(7, "2x2 matrix algebras are nilpotent-square-free and every "
              "disagreement with the RJ prediction is surfaced as a finding")


def test_criterion_08_albert_algebra_validates():
    A = build_algebra("albert_q")
    assert A.dim == 27
    t0 = time.monotonic()
    res = validate_jordan(A)
    elapsed = time.monotonic() - t0
    assert res.ok and res.method == "linearized"
    assert elapsed <= 120.0, f"validation took {elapsed:.1f}s"
    report(8, f"27-dimensional hermitian octonion algebra passes the "
              f"linearized identity in {elapsed:.1f}s <= 120s")


def test_criterion_09_randomized_sweep_clean():
    sweep = fuzz_sweep(n_seeds=100, threads=4)
    assert sweep["violations"] == []
    assert sweep["oracle_pairs"] == 600
    for imp in ("rickart-implies-rj", "baer-implies-bj",
                "rj-implies-quad-nondeg"):
        row = sweep["implications"][imp]
        assert row["confirmed"] == row["antecedent_holds"], imp
    report(9, "100 seeded special algebras: all implications, idempotent "
              "uniqueness, and associative-envelope oracles check out "
              "(zero violations)")


def test_criterion_10_reports_are_thread_independent(corpus_report):
    rep4, _ = corpus_report
    rep1 = run_corpus(threads=1)
    blob4 = json.dumps(rep4.to_dict(), indent=2, sort_keys=True)
    blob1 = json.dumps(rep1.to_dict(), indent=2, sort_keys=True)
    assert blob4.encode() == blob1.encode()
    f2 = fuzz_sweep(n_seeds=16, threads=2)
    f1 = fuzz_sweep(n_seeds=16, threads=1)
    assert json.dumps(f2, sort_keys=True).encode() == \
        json.dumps(f1, sort_keys=True).encode()
    report(10, "corpus and sweep reports are byte-identical across thread "
               "counts")
