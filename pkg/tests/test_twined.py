import logging

import pytest

from wreathdecomp import verify
from wreathdecomp.perm import Permutation, compose, f_set, gamma, identity, parse_cycles, pi, transposition, truncate
from wreathdecomp.regset import cyclic_set, left_mul, odd_set
from wreathdecomp.twined import (
    FactorTuple,
    OpenCaseError,
    OutOfScopeError,
    TupleKind,
    TwinedError,
    TwinedFactorization,
    complete_partial,
    construct_base,
    is_hamiltonian,
    is_truncated_hamiltonian,
    pad,
    recipe_even_even,
    recipe_odd_even,
    recipe_odd_odd,
    repair_and_complete,
    select_recipe,
    tuple_kind,
    zero_twined,
)


def pair(a, b):
    return FactorTuple((a, b))


# ------------------------------------------------------------ classification


def test_tuple_kind_examples():
    s = f_set(11)
    mu0 = compose(transposition(11, 0, 10), s[0])
    f = pair(s[1], mu0)
    assert tuple_kind(f) is TupleKind.TRUNCATED_HAMILTONIAN
    assert f.truncated_product() == parse_cycles("(1,2,3,4,5,6,7,8,9,0)(10)", 11)
    for m in (3, 6, 9):
        for i in range(m):
            assert tuple_kind(pair(pi(m, i), pi(m, 1 - i))) is TupleKind.HAMILTONIAN
    assert tuple_kind(pair(identity(2), identity(2))) is TupleKind.OTHER


def test_stabilizer_coordinate_blocks_truncated_kind():
    m = 7
    assert not is_truncated_hamiltonian(pair(pi(m, 0), pi(m, 1)))


def test_kind_reports_hamiltonian_when_both_hold():
    # truncation flips the product's sign n times, so overlap needs odd n
    m = 4
    f = FactorTuple((parse_cycles("(2,3)", m), pi(m, 1), pi(m, 1)))
    assert is_hamiltonian(f) and is_truncated_hamiltonian(f)
    assert tuple_kind(f) is TupleKind.HAMILTONIAN


def test_even_length_tuples_are_never_both_kinds():
    import itertools

    m = 4
    for a in itertools.permutations(range(m)):
        for j in range(m):
            f = pair(Permutation(a), pi(m, j))
            assert not (is_hamiltonian(f) and is_truncated_hamiltonian(f))


def test_factor_tuple_validation_and_json():
    with pytest.raises(TwinedError):
        FactorTuple((pi(3, 1),))
    with pytest.raises(TwinedError):
        FactorTuple((pi(3, 1), pi(4, 1)))
    f = pair(pi(5, 2), pi(5, 4))
    assert FactorTuple.from_json(f.to_json()) == f
    assert f.n == 2 and f.m == 5


# ------------------------------------------------------------------ recipes


def test_even_case_two_m4_pairs():
    r = recipe_even_even(4, 2)
    assert r.d_t == [(1, 2), (0, 1)]
    assert r.d_h == [(3, 3), (2, 0)]
    assert r.r1 == left_mul(transposition(4, 0, 3), cyclic_set(4))
    tf = construct_base(4, 2)
    assert verify.is_c_twined(tf).passed


def test_even_case_one_m8_pairs():
    r = recipe_even_even(8, 2)
    assert r.context.chosen == (3,)
    assert r.d_t == [(3, 6), (4, 3)]
    for a, b in r.d_t:
        assert tuple_kind(pair(r.r1[a], r.r2[b])) is TupleKind.TRUNCATED_HAMILTONIAN


@pytest.mark.parametrize("m", [4, 6, 8, 12, 30])
def test_even_case_one_product_identity(m):
    mu0 = compose(transposition(m, 1, m - 2), pi(m, 0))
    text = "(" + ",".join(map(str, [*range(0, m - 1, 2), *range(3, m, 2), 1])) + ")"
    assert compose(mu0, pi(m, 2)) == parse_cycles(text, m)


def test_even_m6_example_certifies_and_logs(caplog):
    with caplog.at_level(logging.INFO, logger="wreathdecomp.twined"):
        tf = construct_base(6, 2)
    assert verify.is_c_twined(tf).passed
    r = recipe_even_even(6, 2)
    assert set(r.d_t) == {(3, 4), (4, 1)}
    assert set(r.d_h) == {(0, 2), (5, 5)}
    assert "completion pairs" in caplog.text


def test_odd_mod4_step_one_case_one():
    for m in (9, 13, 17, 29):
        s = f_set(m)
        for a, b in ((m - 2, 2), (m - 3, 3)):
            assert tuple_kind(pair(s[a], s[b])) is TupleKind.TRUNCATED_HAMILTONIAN
        assert compose(truncate(s[m - 2]), truncate(s[2])) == gamma(m, 1)


def test_odd_mod12_three_contains_listed_pairs():
    m = 15
    r = recipe_odd_even(m, 4)
    assert {(1, 2), (2, 1)} <= set(r.d_t)
    base = odd_set(m)
    assert r.r1 == left_mul(gamma(m, 1), base)
    assert r.r2 == left_mul(gamma(m, -1), base)


def test_odd_even_m13_c2():
    assert verify.is_c_twined(construct_base(13, 2)).passed


def test_odd_odd_eleven_seven_table():
    r = recipe_odd_odd(11, 7)
    assert r.d_h == [(1, 4), (4, 0), (8, 3), (0, 2)]


def test_odd_odd_m9_c7_uses_high_recipe():
    r = recipe_odd_odd(9, 7)
    assert "3 mod 6" in r.context.name
    assert verify.is_c_twined(construct_base(9, 7)).passed


def test_odd_odd_m5_c3_low_recipe():
    r = recipe_odd_odd(5, 3)
    assert {(0, 1), (3, 3), (4, 4)} <= set(r.d_t)
    assert verify.is_c_twined(construct_base(5, 3)).passed


def test_low_range_wins_when_ranges_overlap():
    # m = 13: low range 3..7 and high range 5..11 overlap at 5 and 7
    assert "low" in recipe_odd_odd(13, 5).context.name
    assert "low" in recipe_odd_odd(13, 7).context.name
    assert "high" in recipe_odd_odd(13, 9).context.name


def test_recipe_context_invariant():
    for m, c in ((8, 4), (17, 6), (23, 9), (27, 19)):
        ctx = select_recipe(m, c).context
        assert len(ctx.chosen) == ctx.t
        assert set(ctx.chosen) <= set(ctx.index_set)
        assert list(ctx.chosen) == list(ctx.index_set[: ctx.t])


@pytest.mark.parametrize("m, c", [(6, 2), (9, 4), (17, 15), (35, 33), (23, 21)])
def test_repair_path_is_deterministic(m, c):
    a = construct_base(m, c).to_json()
    b = construct_base(m, c).to_json()
    assert a == b


# --------------------------------------------------------------- completion


def test_complete_partial_m6_unused_members():
    m = 6
    r1 = left_mul(transposition(m, 1, m - 2), cyclic_set(m))
    r2 = cyclic_set(m)
    pairs = [(3, 4, TupleKind.TRUNCATED_HAMILTONIAN), (0, 2, TupleKind.HAMILTONIAN), (5, 5, TupleKind.HAMILTONIAN)]
    tf = complete_partial(pairs, r1, r2, 2)
    assert verify.is_c_twined(tf).passed
    assert len(tf.d_t) == 2


def test_complete_partial_returns_complete_input_unchanged():
    r = recipe_odd_odd(11, 5)
    tf = complete_partial(r.labeled_pairs(), r.r1, r.r2, 5)
    assert [f.perms for f in tf.d_t] == [(r.r1[a], r.r2[b]) for a, b in r.d_t]
    assert [f.perms for f in tf.d_h] == [(r.r1[a], r.r2[b]) for a, b in r.d_h]


def test_complete_partial_unequal_unused():
    with pytest.raises(TwinedError, match="unequal unused"):
        complete_partial([(0, 1), (0, 2)], cyclic_set(4), cyclic_set(4), 2)


def test_complete_partial_reused_member():
    with pytest.raises(TwinedError, match="reuses a member"):
        complete_partial([(0, 1), (0, 2), (1, 1)], cyclic_set(4), cyclic_set(4), 2)


def test_complete_partial_too_many_unused():
    with pytest.raises(TwinedError, match="exceeds"):
        complete_partial([], cyclic_set(8), cyclic_set(8), 2)


def test_complete_partial_reports_failure():
    # Pi_5 x Pi_5 has no 2-twined bijection
    with pytest.raises(TwinedError, match="recipe completion failed for m=5, c=2"):
        complete_partial([], cyclic_set(5), cyclic_set(5), 2)


def test_complete_partial_rejects_mislabeled_pair():
    # (pi_0, pi_1) has a stabilizer coordinate, so it cannot be truncated
    with pytest.raises(TwinedError, match="recipe completion failed: pair"):
        complete_partial([(0, 1, TupleKind.TRUNCATED_HAMILTONIAN)], cyclic_set(4), cyclic_set(4), 2)


def test_repair_drops_defective_pair(caplog):
    r = recipe_even_even(8, 4)
    with caplog.at_level(logging.INFO, logger="wreathdecomp.twined"):
        tf = repair_and_complete(r, 4)
    assert verify.is_c_twined(tf).passed
    assert "dropping defective recipe pair" in caplog.text


# ----------------------------------------------------------------- dispatch


def test_construct_base_errors():
    with pytest.raises(OpenCaseError, match="open case, not constructible"):
        construct_base(8, 3)
    with pytest.raises(TwinedError, match="outside"):
        construct_base(7, 6)
    with pytest.raises(TwinedError, match="outside"):
        construct_base(7, -1)
    with pytest.raises(OutOfScopeError):
        construct_base(7, 1)
    with pytest.raises(TwinedError):
        construct_base(3, 0)


def test_construct_base_eleven_five():
    tf = construct_base(11, 5)
    s = f_set(11)
    mu = [compose(transposition(11, 0, 10), x) for x in s]
    want = [(s[1], mu[0]), (s[5], mu[1]), (s[8], mu[6]), (s[9], mu[9]), (s[10], mu[10])]
    assert [f.perms for f in tf.d_t] == want
    assert verify.is_c_twined(tf).passed


def test_c_zero_routes_to_zero_twined():
    assert construct_base(7, 0) == zero_twined(7, 2)
    assert construct_base(8, 0).c == 0


def test_no_truncated_tuple_has_stabilizer():
    for m, c in ((8, 6), (9, 5), (15, 8), (21, 19)):
        for f in construct_base(m, c).d_t:
            assert not any(p.is_stabilizer() for p in f.perms)


# ---------------------------------------------------------- padding, zero


def test_pad_shape():
    base = construct_base(5, 3)
    padded = pad(base, 4)
    m = 5
    for i, (f, g) in enumerate(zip(base.tuples, padded.tuples)):
        assert g.perms == (pi(m, i + 1), pi(m, -i - 1)) + f.perms
        assert g.product() == f.product()
    assert len(padded.d_t) == len(base.d_t)
    assert verify.is_c_twined(padded).passed


def test_pad_zero_twined():
    tf = pad(zero_twined(4, 2), 6)
    assert verify.is_c_twined(tf).passed
    assert tf.c == 0 and len(tf.d_h) == 4


def test_pad_rejects_odd_n():
    with pytest.raises(TwinedError, match="must be even"):
        pad(construct_base(5, 2), 5)


def test_zero_twined_examples():
    tf = zero_twined(3, 2)
    assert [f.perms for f in tf.d_h] == [(pi(3, 0), pi(3, 1)), (pi(3, 1), pi(3, 0)), (pi(3, 2), pi(3, 2))]
    for m, n in ((3, 2), (6, 4), (5, 8), (2, 4)):
        tf = zero_twined(m, n)
        assert all(f.product() == pi(m, 1) for f in tf.d_h)
        assert verify.is_c_twined(tf).passed
    with pytest.raises(TwinedError, match="odd-n construction out of scope"):
        zero_twined(4, 3)


def test_twined_json_round_trip():
    tf = construct_base(9, 4)
    again = TwinedFactorization.from_json(tf.to_json())
    assert again == tf
    assert set(tf.to_json()) == {"n", "m", "c", "D_T", "D_H"}


def test_problems_lists_violations():
    tf = construct_base(7, 2)
    swapped = TwinedFactorization(2, 7, 2, tf.d_h[:2], tf.d_t + tf.d_h[2:])
    assert swapped.problems()
    with pytest.raises(TwinedError):
        swapped.check()
