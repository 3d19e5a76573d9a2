import random

import pytest

from wreathdecomp.perm import Permutation, PermutationError, compose, f_set, identity, pi, transposition
from wreathdecomp.regset import (
    RegularSet,
    RegularSetError,
    cyclic_set,
    is_regular,
    left_mul,
    odd_set,
    stabilizer_indices,
)


def test_is_regular_examples():
    assert is_regular(cyclic_set(6).members) == (True, None)
    assert is_regular(f_set(15))[0]
    ok, witness = is_regular([identity(4)] * 4)
    assert not ok and witness == (0, 0, 1)


def test_is_regular_rejects_mixed_orders():
    with pytest.raises(RegularSetError):
        is_regular([identity(3), identity(4)])


def test_wrong_size_is_not_regular():
    assert is_regular([pi(5, 0), pi(5, 1)]) == (False, None)


def test_constructor_validates():
    with pytest.raises(RegularSetError):
        RegularSet((identity(3),) * 3)


def test_left_mul_examples():
    m = 8
    assert left_mul(identity(m), cyclic_set(m)) == cyclic_set(m)
    mu = transposition(m, 1, m - 2)
    assert left_mul(mu, cyclic_set(m)).members == tuple(compose(mu, pi(m, i)) for i in range(m))
    r2 = left_mul(transposition(11, 0, 10), odd_set(11))
    assert r2[3] == compose(transposition(11, 0, 10), f_set(11)[3])


def test_left_mul_order_mismatch():
    with pytest.raises(PermutationError):
        left_mul(identity(4), cyclic_set(5))


def test_left_mul_preserves_regularity_on_random_samples():
    rng = random.Random(7)
    for _ in range(1000):
        m = rng.choice([5, 6, 7, 9, 11])
        choice = rng.randrange(3)
        if choice == 0:
            s = cyclic_set(m)
        elif choice == 1 and m % 2:
            s = odd_set(m)
        else:
            a, b = rng.sample(range(m), 2)
            s = left_mul(transposition(m, a, b), cyclic_set(m))
        images = list(range(m))
        rng.shuffle(images)
        assert is_regular(left_mul(Permutation(tuple(images)), s).members)[0]


def test_stabilizer_examples():
    assert stabilizer_indices(cyclic_set(7)) == {0}
    assert stabilizer_indices(odd_set(13)) == {0}
    assert stabilizer_indices(left_mul(transposition(10, 1, 8), cyclic_set(10))) == {0}


@pytest.mark.parametrize("m", [4, 5, 9, 12])
def test_each_point_hits_every_value(m):
    for s in (cyclic_set(m), left_mul(transposition(m, 0, m - 1), cyclic_set(m))):
        for j in range(m):
            assert sorted(p(j) for p in s) == list(range(m))
        assert len(stabilizer_indices(s)) == 1


def test_indexing_wraps_and_json_round_trips():
    s = odd_set(7)
    assert s[-1] == s[6] and s[7] == s[0]
    assert s.index(s[3]) == 3
    assert RegularSet.from_json(s.to_json()) == s
    assert s.to_json()["m"] == 7
