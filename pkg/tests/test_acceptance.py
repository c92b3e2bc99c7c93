"""One test per acceptance criterion, each printing a PASS/FAIL line."""

import random
import time
from fractions import Fraction

from domino_forge.board import BoardDims
from domino_forge.enumeration import count_tilings_oracle
from domino_forge.kasteleyn import KasteleynParams, kasteleyn_count, kasteleyn_product_interval
from domino_forge.methods import CountMethod, six_wide_count, step_count
from domino_forge.series import (
    PUBLISHED_C,
    char_poly,
    check_u_identity,
    evaluate_at_matrix,
    extend,
    extend_backward,
    gf6,
    is_palindromic,
    printed_recurrence_order20,
    random_rationals,
    recurrence_from_gf,
    series_expand,
    symmetric_recurrence_order20,
    u_identity_sides,
)
from domino_forge.transfer import (
    MultiplicationCounter,
    matrix_power,
    matrix_power_entry,
    paper_matrix_C,
    transfer_sequence,
    verify_compact,
)
from domino_forge.verify import suite_paths6x6, worker_count

TABLE = list(PUBLISHED_C)
CHAR_POLY_HALF = [1, -63, 1561, -21023, 176393, -992383, 3912609, -11117602, 23182782, -35879970, 41475390]


def test_criterion_1_table_reproduction(criterion):
    start = time.perf_counter()
    c = paper_matrix_C()
    power = matrix_power(c, 0)
    compact = []
    for n in range(18):
        if n:
            power = power @ c
        compact.append(power[0, 0])
    results = {
        "transfer": transfer_sequence(6, 18, step=2),
        "compact": compact,
        "gf": series_expand(gf6(), 17),
        "rec7": extend(recurrence_from_gf(gf6()), TABLE[:7], 18),
    }
    # order 20, run backward from the transfer window c_18..c_37
    window = transfer_sequence(6, 38, step=2)[18:]
    results["rec20"] = extend_backward(symmetric_recurrence_order20(), window, 18)[:18]
    elapsed = time.perf_counter() - start
    bad = [name for name, seq in results.items() if seq != TABLE]
    ok = not bad and TABLE[3] == 6728 and TABLE[17] == 314771823879840325570888 and elapsed < 5
    assert criterion(1, "c_0..c_17 by five methods equal the table", ok,
                     f"mismatches={bad}, {elapsed:.2f}s of 5s")


def test_criterion_2_kasteleyn_certification(criterion):
    start = time.perf_counter()
    bad = []
    for r in range(1, 6):
        for n in range(1, 6):
            if kasteleyn_count(KasteleynParams(r, n)) != count_tilings_oracle(BoardDims(2 * r, 2 * n)):
                bad.append((2 * r, 2 * n))
    six = [kasteleyn_count(KasteleynParams(3, n)) for n in range(1, 9)]
    enc = kasteleyn_product_interval(KasteleynParams(3, 3), 128)
    isolated = enc.unique_integer() == 6728 and enc.width < Fraction(1, 2)
    elapsed = time.perf_counter() - start
    ok = not bad and six == TABLE[1:9] and isolated and elapsed < 10
    assert criterion(2, "product formula matches oracle and table; 6x6 enclosure isolates 6728", ok,
                     f"oracle mismatches={bad}, {elapsed:.2f}s of 10s")


def test_criterion_3_compact_matrix_integrity(criterion):
    start = time.perf_counter()
    c = paper_matrix_C()
    poly = char_poly(c)
    checks = {
        "symmetric": c.is_symmetric(),
        "trace 63": c.trace() == 63,
        "(C^2)[0][0] 281": matrix_power_entry(c, 2, 0, 0) == 281,
        "det 1": poly[0] == 1,
        "char poly": list(poly.coefficients[::-1]) == CHAR_POLY_HALF + CHAR_POLY_HALF[-2::-1],
        "palindromic": is_palindromic(poly),
        "Cayley-Hamilton": evaluate_at_matrix(poly, c).is_zero(),
    }
    elapsed = time.perf_counter() - start
    failed = [k for k, v in checks.items() if not v]
    assert criterion(3, "compact matrix integrity", not failed and elapsed < 5,
                     f"failed={failed}, {elapsed:.2f}s of 5s")


def test_criterion_4_matrix_power_correctness(criterion):
    start = time.perf_counter()
    report = verify_compact(paper_matrix_C(), 30)
    elapsed = time.perf_counter() - start
    assert criterion(4, "(C^n)[0][0] equals the transfer count for n <= 30", report.ok and elapsed < 5,
                     f"{report.to_json()}, {elapsed:.2f}s of 5s")


def test_criterion_5_exhaustive_6x6(criterion):
    workers = worker_count()
    limit = 600 if workers == 1 else 120
    start = time.perf_counter()
    checks = suite_paths6x6(workers)
    elapsed = time.perf_counter() - start
    failed = [c.name for c in checks if not c.ok]
    assert criterion(5, "all 6728 tilings: fault line, both paths, two sides summing to 18",
                     not failed and elapsed < limit,
                     f"failed={failed}, {workers} workers, {elapsed:.1f}s of {limit}s")


def test_criterion_6_series_identities(criterion):
    start = time.perf_counter()
    expanded = series_expand(gf6(), 17) == TABLE
    at_one = u_identity_sides(1) == (Fraction(2, 13), Fraction(2, 13))
    points = list(random_rationals(random.Random(20), 20))
    random_ok = all(check_u_identity(x) for x in points)
    elapsed = time.perf_counter() - start
    ok = expanded and at_one and random_ok and elapsed < 1
    assert criterion(6, "gf expansion and u-identity (limit 2/13, 20 random points)", ok, f"{elapsed:.3f}s of 1s")


def test_criterion_7_performance(criterion):
    counter = MultiplicationCounter()
    start = time.perf_counter()
    compact = six_wide_count(4096, CountMethod.COMPACT, counter)
    compact_time = time.perf_counter() - start
    timings = {"compact": compact_time}
    values = {"compact": compact}
    for method in (CountMethod.REC7, CountMethod.GF):
        t0 = time.perf_counter()
        values[method.value] = six_wide_count(4096, method)
        timings[method.value] = time.perf_counter() - t0
    agree = len(set(values.values())) == 1
    ok = counter.count <= 24 and compact_time < 10 and agree
    report = ", ".join(f"{k} {v:.3f}s" for k, v in timings.items())
    steps = f"compact {counter.count} products vs rec7 {step_count(4096, CountMethod.REC7)} steps"
    assert criterion(7, "c_4096 by compact power within 24 products and 10s", ok, f"{steps}; {report}")


def test_criterion_8_recurrence_typo(criterion):
    seq = transfer_sequence(6, 31, step=2)
    corrected = extend(symmetric_recurrence_order20(), seq[:20], 31)
    printed = extend(printed_recurrence_order20(), seq[:20], 21)
    fixed_ok = corrected == seq and seq[:18] == TABLE
    printed_fails = printed[20] != seq[20]
    assert criterion(8, "corrected order-20 recurrence reproduces c_20 onward; printed form fails",
                     fixed_ok and printed_fails,
                     f"c_20={seq[20]}, printed form gives {printed[20]}")
