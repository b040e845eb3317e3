"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v`` or as a script:
``python tests/test_acceptance.py``.  Integer results are exact, so every
comparison below is equality; the only tolerances are wall-clock limits.
"""
import sys
import time
from math import factorial

import pytest

from hookvan import verify
from hookvan.characters import CharacterSession, degree, value
from hookvan.partitions import partitions_of
from hookvan.sym_groups import nu_p
from hookvan.vanishing import compare_profiles, linear_twist_equivalent, profile_sym, van_pow


def _emit(capsys, label: str, ok: bool, detail: str) -> None:
    line = f"[acceptance {label}] {'PASS' if ok else 'FAIL'}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def _timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


# -- 1 -------------------------------------------------------------------------

def criterion_1():
    r, dt = _timed(verify.run_sweep, "orthogonality", n_max=8)
    ok = r.ok and dt < 10
    return ok, f"row orthogonality n<=8, {r.checked} inner products, {len(r.failures)} failures, {dt:.2f}s (<10s)"


def test_criterion_1_orthogonality(capsys):
    ok, detail = criterion_1()
    _emit(capsys, "1", ok, detail)
    assert ok


# -- 2 -------------------------------------------------------------------------

def criterion_2():
    from hookvan.abacus import core_tower
    from hookvan.partitions import Partition, remove_hook

    checks = {
        "value 6,2,1 3,3,1,1,1 = -3": value((6, 2, 1), (3, 3, 1, 1, 1)) == -3,
        "value 6,3 3,3,1,1,1 = 0": value((6, 3), (3, 3, 1, 1, 1)) == 0,
        "value 2,2 2,1,1 = 0": value((2, 2), (2, 1, 1)) == 0,
        "hook removal (9,8,6,5,1) at (2,3)": remove_hook((9, 8, 6, 5, 1), (2, 3)) == ((9, 5, 4, 2, 1), 2),
        "2-core tower of (5,3,3,3,1)": core_tower((5, 3, 3, 3, 1), 2).layers == (
            (Partition((1,)),), (Partition((2, 1)), Partition()),
            (Partition(), Partition(), Partition((1,)), Partition((1,)))),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{len(checks) - len(bad)}/{len(checks)} pinned values and diagrams" + (f"; bad: {bad}" if bad else "")


def test_criterion_2_pinned_values(capsys):
    ok, detail = criterion_2()
    _emit(capsys, "2", ok, detail)
    assert ok


# -- 3 -------------------------------------------------------------------------

def criterion_3():
    r, dt = _timed(verify.run_sweep, "determine_weights", n_max=16, primes=(2, 3, 5, 7))
    ok = r.ok and dt < 60
    return ok, f"weights recovered for all lam |- n<=16, p in 2,3,5,7: {r.checked} cases, {len(r.failures)} failures, {dt:.2f}s (<60s)"


def test_criterion_3_determine_weights(capsys):
    ok, detail = criterion_3()
    _emit(capsys, "3", ok, detail)
    assert ok


# -- 4 -------------------------------------------------------------------------

def criterion_4():
    r, dt = _timed(verify.run_sweep, "weight_minus_one", n_max=16, primes=(2,))
    return r.ok, f"non-vanishing at (w-1) 2^l-cycles, n<=16: {r.checked} cases, {len(r.failures)} failures, {dt:.2f}s"


def test_criterion_4_weight_minus_one(capsys):
    ok, detail = criterion_4()
    _emit(capsys, "4", ok, detail)
    assert ok


# -- 5 -------------------------------------------------------------------------

S14 = ((6, 3, 3, 2), (5, 5, 2, 1, 1))


def criterion_5():
    s2 = verify.run_sweep("S2", n_max=12, primes=(2, 3))
    s3 = verify.run_sweep("S3", n_max=12)
    a, b = profile_sym((6, 4), 2), profile_sym((6, 2, 1, 1), 2)
    strict_fails = (compare_profiles(b, a).relation == "subset"
                    and nu_p(degree((6, 2, 1, 1)), 2) == nu_p(degree((6, 4)), 2))
    lam, mu = S14
    session = CharacterSession()
    hlf = (degree(lam), degree(mu))
    mn = (session.value(lam, (1,) * 14), session.value(mu, (1,) * 14))
    squares = sum(degree(x) ** 2 for x in partitions_of(14)) == factorial(14)
    s14 = (van_pow(lam) == van_pow(mu) and hlf == mn == (35035, 35035) and squares
           and not linear_twist_equivalent(lam, mu))
    ok = s2.ok and s3.ok and strict_fails and s14
    return ok, (f"S2 {s2.checked} pairs/{len(s2.failures)} fail, S3 {s3.checked} pairs/{len(s3.failures)} fail; "
                f"S10 strict version fails: {strict_fails}; S14 equal Van_pow, degrees HLF={hlf[0]} MN={mn[0]}, "
                f"not twists: {s14}")


def test_criterion_5_containment(capsys):
    ok, detail = criterion_5()
    _emit(capsys, "5", ok, detail)
    assert ok


@pytest.mark.xfail(strict=True, reason="printed degree 21021 disagrees with HLF and MN, which both give 35035")
def test_criterion_5_printed_degree_literal(capsys):
    ok = degree(S14[0]) == degree(S14[1]) == 21021
    _emit(capsys, "5/literal-21021", ok, f"degree((6,3,3,2)) = {degree(S14[0])}, printed 21021")
    assert ok


# -- 6 -------------------------------------------------------------------------

def criterion_6():
    t = time.perf_counter()
    reports = [verify.run_sweep(name, n_max=16, primes=(2,))
               for name in ("weight-estimates", "alt-determine-weights", "alt-determine-data")]
    dt = time.perf_counter() - t
    ok = all(r.ok for r in reports) and dt < 120
    parts = ", ".join(f"{r.theorem} {r.checked}/{len(r.failures)} fail" for r in reports)
    return ok, f"A_n estimators n<=16 p=2 (both estimators): {parts}; {dt:.2f}s (<120s)"


def test_criterion_6_alt_estimators(capsys):
    ok, detail = criterion_6()
    _emit(capsys, "6", ok, detail)
    assert ok


# -- 7 -------------------------------------------------------------------------

def criterion_7():
    lam, mu = (10, 4, 3), (7, 2, 2, 2, 2, 2)
    t = time.perf_counter()
    session = CharacterSession()
    equal = van_pow(lam, "A", session) == van_pow(mu, "A", session)
    dt = time.perf_counter() - t
    doubled = degree(mu) == 2 * degree(lam)
    ok = equal and doubled and dt < 30
    return ok, (f"A17 equal van_pow: {equal}; degree(mu) = {degree(mu)} = 2 * {degree(lam)}: {doubled}; "
                f"{dt:.2f}s (<30s)")


def test_criterion_7_a17(capsys):
    ok, detail = criterion_7()
    _emit(capsys, "7", ok, detail)
    assert ok


# -- 8 -------------------------------------------------------------------------

ROWS = {row: (lam, mu, diff, sc, family) for row, lam, mu, diff, sc, family in verify.EQUAL_PROFILE_PAIRS}
UNATTAINABLE_ROWS = {"g": "A_3 has odd order, so both labels have 2-defect 0; computed signature (0,0,0)"}


def criterion_8_row(row):
    lam, mu, diff, sc, family = ROWS[row]
    got = verify.pair_signature(lam, mu)
    ok = got == (True, diff, sc)
    detail = f"row ({row}) {lam} vs {mu}: equal profiles/diffs/self-conj = {got}, printed {(True, diff, sc)}"
    if family:
        big = verify.pair_signature(verify.enlarge_core(lam), verify.enlarge_core(mu))
        ok &= big == (True, diff, sc)
        detail += f"; larger 2-core {big}"
    return ok, detail


@pytest.mark.parametrize("row", [
    pytest.param(r, marks=pytest.mark.xfail(strict=True, reason=UNATTAINABLE_ROWS[r])) if r in UNATTAINABLE_ROWS else r
    for r in ROWS
])
def test_criterion_8_table_row(row, capsys):
    ok, detail = criterion_8_row(row)
    _emit(capsys, f"8/{row}", ok, detail)
    assert ok


def test_criterion_8_combination_still_occurs(capsys):
    # the (0,1,1), one-self-conjugate combination of row (g) does occur, first at n = 7
    got = verify.pair_signature((5, 2), (4, 1, 1, 1))
    ok = got == (True, (0, 1, 1), 1)
    _emit(capsys, "8/g-substitute", ok, f"(5,2) vs (4,1,1,1) in A_7: {got}")
    assert ok


# -- 9 -------------------------------------------------------------------------

def criterion_9():
    r = verify.run_sweep("final-proposition", n_max=14, primes=(2,))
    wide = verify.run_sweep("final-proposition", n_max=21, primes=(2,))
    ok = r.ok and wide.ok
    return ok, (f"n<=14: {r.checked} qualifying pairs, {len(r.failures)} failures (hypothesis never met); "
                f"n<=21: {wide.checked} qualifying pairs, {len(wide.failures)} failures")


def test_criterion_9_final_proposition(capsys):
    ok, detail = criterion_9()
    _emit(capsys, "9", ok, detail)
    assert ok


if __name__ == "__main__":
    results = [("1", criterion_1()), ("2", criterion_2()), ("3", criterion_3()), ("4", criterion_4()),
               ("5", criterion_5()), ("6", criterion_6()), ("7", criterion_7())]
    results += [(f"8/{row}", criterion_8_row(row)) for row in ROWS]
    results.append(("9", criterion_9()))
    for label, (ok, detail) in results:
        _emit(None, label, ok, detail)
    sys.exit(0 if all(ok for label, (ok, _) in results if label[2:] not in UNATTAINABLE_ROWS) else 1)
