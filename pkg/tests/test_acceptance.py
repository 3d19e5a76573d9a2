"""Acceptance criteria 1-10.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import logging
import random
import sys
import time

from wreathdecomp import goldens, verify
from wreathdecomp.assemble import assemble_cn_wr_h, assemble_g_wr_h
from wreathdecomp.perm import (
    SHIFTS,
    Permutation,
    cycle_count,
    f_set,
    gamma,
    pi,
    shift_admissible,
    sigma_shift,
    truncate,
)
from wreathdecomp.regset import is_regular
from wreathdecomp.twined import FactorTuple, construct_base, pad, select_recipe
from wreathdecomp.wreath import dicycle, make_test_h, rotation_cover, tuple_arcs, wreath_product

CRITERIA = {
    1: "F_15 golden listing",
    2: "m=11 golden tables and products",
    3: "regularity sweep",
    4: "sigma_shift table law",
    5: "even-m construction sweep",
    6: "odd-m construction sweep",
    7: "end-to-end assembly",
    8: "negative search results",
    9: "truncation calculus",
    10: "expansion cycle count vs product",
}


class _Collect(logging.Handler):
    def __init__(self):
        super().__init__(logging.INFO)
        self.messages: list[str] = []

    def emit(self, record):
        self.messages.append(record.getMessage())


def _failed(checks):
    return [(c.name, c.detail) for c in checks if not c.passed]


def criterion_1():
    checks = goldens.check_f15()
    assert len(checks) == 15
    assert _failed(checks) == []
    assert _failed(goldens.check_gamma15()) == []


def criterion_2():
    for c in (5, 7):
        checks = goldens.check_eleven(c)
        assert _failed(checks) == []
        table = goldens.ELEVEN[c]
        assert len(checks) == len(table.d_t) + len(table.d_h) + 1
        assert verify.is_c_twined(construct_base(11, c)).passed


def criterion_3():
    for m in range(5, 102, 2):
        assert is_regular(f_set(m))[0], m
        assert verify.is_regular_set(f_set(m)).passed, m
    seen = set()
    for m in range(4, 101):
        cyclic = [pi(m, i) for i in range(m)]
        assert verify.is_regular_set(cyclic).passed, m
        for c in range(2, m - 1):
            if m % 2 == 0 and c % 2:
                continue
            recipe = select_recipe(m, c)
            for rs in (recipe.r1, recipe.r2):
                key = tuple(p.images for p in rs.members)
                if key not in seen:
                    seen.add(key)
                    assert verify.is_regular_set(rs.members).passed, (m, c)


def criterion_4():
    mismatches, checked = [], 0
    for m in range(5, 102, 2):
        sigmas = f_set(m)
        for i in range(1, m - 1):
            for t in SHIFTS:
                if shift_admissible(m, i, t):
                    checked += 1
                    if sigma_shift(m, i, t) != sigmas[(m - i + t) % m]:
                        mismatches.append((m, i, t))
    assert checked > 0 and mismatches == []


def _sweep(pairs, lengths):
    """Construct, pad and certify; completion runs must be logged."""
    handler = _Collect()
    logger = logging.getLogger("wreathdecomp.twined")
    old = logger.level
    logger.addHandler(handler)
    logger.setLevel(logging.INFO)
    try:
        for m, c in pairs:
            before = len(handler.messages)
            base = construct_base(m, c)
            recipe = select_recipe(m, c)
            listed = {(a, b) for a, b, _ in recipe.labeled_pairs()}
            firsts = {a for a, _ in listed}
            if len(firsts) < m:
                news = handler.messages[before:]
                assert any(f"m={m}, c={c}" in msg and "completing" in msg for msg in news), (m, c)
            for n in lengths:
                assert verify.is_c_twined(pad(base, n)).passed, (m, c, n)
    finally:
        logger.removeHandler(handler)
        logger.setLevel(old)


def criterion_5():
    _sweep([(m, c) for m in range(4, 41, 2) for c in range(2, m - 1, 2)], (2, 4, 6))


def criterion_6():
    pairs = [(m, c) for m in range(5, 42, 2) for c in range(2, m - 1)]
    assert (11, 5) in pairs and (11, 7) in pairs
    _sweep(pairs, (2,))


def criterion_7():
    for n, m, c in ((2, 4, 2), (4, 5, 2), (2, 5, 3), (4, 7, 3), (6, 8, 4)):
        h, cover = make_test_h(m, c)
        dec = assemble_cn_wr_h(n, h, cover)
        assert len(dec.cycles) == m + c, (n, m, c)
        assert all(len(cyc) == n * m for cyc in dec.cycles)
        assert verify.is_ham_decomposition(wreath_product(dicycle(n), h), dec.encoded_cycles()).passed
    g = rotation_cover(4, [1, 3])
    h = rotation_cover(5, [1, 2])
    dec = assemble_g_wr_h(g, h.digraph, h)
    assert len(g) * 5 + 2 == 12 == len(dec.cycles)
    assert verify.is_ham_decomposition(wreath_product(g.digraph, h.digraph), dec.encoded_cycles()).passed


def criterion_8():
    for m in (3, 2):
        start = time.perf_counter()
        result = verify.search_ham_decomposition(wreath_product(dicycle(2), dicycle(m)), budget=None)
        elapsed = time.perf_counter() - start
        assert result.status == verify.PROVEN_NONE, m
        assert elapsed < 60, elapsed


def criterion_9():
    rng = random.Random(20261014)
    for m in (5, 8, 15):
        apex = m - 1
        done = 0
        while done < 1000:
            xs = list(range(m))
            rng.shuffle(xs)
            a = Permutation(tuple(xs))
            if a.is_stabilizer():
                continue
            done += 1
            hat = truncate(a)
            pre = a.inverse()(apex)
            assert hat(apex) == apex
            assert hat(pre) == a(apex)
            assert all(hat(j) == a(j) for j in range(m) if j not in (apex, pre))
    for m in (5, 15):
        assert cycle_count(gamma(m, 1)) == 2
        assert cycle_count(gamma(m, -1)) == 2


def _expansion_cycles(f):
    succ = dict(tuple_arcs(f))
    seen, count = set(), 0
    for v in succ:
        if v not in seen:
            count += 1
            while v not in seen:
                seen.add(v)
                v = succ[v]
    return count


def criterion_10():
    rng = random.Random(10)
    for _ in range(500):
        m, n = rng.randint(2, 9), rng.randint(2, 7)
        perms = []
        for _ in range(n):
            xs = list(range(m))
            rng.shuffle(xs)
            perms.append(Permutation(tuple(xs)))
        f = FactorTuple(tuple(perms))
        assert _expansion_cycles(f) == cycle_count(f.product())


def test_criterion_01_f15_listing():
    criterion_1()


def test_criterion_02_eleven_tables():
    criterion_2()


def test_criterion_03_regularity_sweep():
    criterion_3()


def test_criterion_04_table_law():
    criterion_4()


def test_criterion_05_even_sweep():
    criterion_5()


def test_criterion_06_odd_sweep():
    criterion_6()


def test_criterion_07_end_to_end():
    criterion_7()


def test_criterion_08_negative_searches():
    criterion_8()


def test_criterion_09_truncation_calculus():
    criterion_9()


def test_criterion_10_expansion_oracle():
    criterion_10()


def main() -> int:
    failures = 0
    for k, label in CRITERIA.items():
        fn = globals()[f"criterion_{k}"]
        start = time.perf_counter()
        try:
            fn()
            verdict = "PASS"
        except Exception as exc:  # report and continue
            verdict = f"FAIL ({type(exc).__name__}: {exc})"
            failures += 1
        print(f"criterion {k:2d} {label}: {verdict} [{time.perf_counter() - start:.1f}s]")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
