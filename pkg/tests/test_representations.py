import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordermatch.oracle import ranks, window_ranks
from ordermatch.os_tree import NEG_INFINITY as NEG
from ordermatch.os_tree import POS_INFINITY as POS
from ordermatch.representations import (
    natural_rep,
    natural_to_prefix,
    nn_rep,
    prefix_rep,
    prefix_to_natural,
    windowed_prefix_rep,
)

P = (33, 42, 73, 57, 63, 87, 95, 79)
values = st.lists(st.integers(0, 6), max_size=30)


def test_natural_rep_examples():
    assert natural_rep(P) == (1, 2, 5, 3, 4, 7, 8, 6)
    assert natural_rep((21, 24, 50, 29, 36, 73, 85, 63)) == (1, 2, 5, 3, 4, 7, 8, 6)
    assert natural_rep((5,)) == (1,)
    assert natural_rep(()) == ()


def test_prefix_rep_examples():
    assert prefix_rep(P) == (1, 2, 3, 3, 4, 6, 7, 6)
    assert prefix_rep((9, 7, 5)) == (1, 1, 1)
    assert prefix_rep((1, 2, 3, 4)) == (1, 2, 3, 4)
    assert prefix_rep(()) == ()


def test_nn_rep_examples():
    assert nn_rep(P) == ((NEG, 1, 2, 2, 4, 3, 6, 3), (POS, POS, POS, 3, 3, POS, POS, 6))
    assert nn_rep((10, 20, 30)) == ((NEG, 1, 2), (POS, POS, POS))
    assert nn_rep((7,)) == ((NEG,), (POS,))


def test_conversions():
    assert natural_to_prefix((1, 2, 5, 3, 4, 7, 8, 6)) == (1, 2, 3, 3, 4, 6, 7, 6)
    assert prefix_to_natural((1, 2, 3, 3, 4, 6, 7, 6)) == (1, 2, 5, 3, 4, 7, 8, 6)
    assert natural_to_prefix((1,)) == prefix_to_natural((1,)) == (1,)


def test_conversion_round_trip_all_length_5():
    perms = list(itertools.permutations(range(1, 6)))
    assert len(perms) == 120
    for sigma in perms:
        assert prefix_to_natural(natural_to_prefix(sigma)) == sigma


@pytest.mark.parametrize("bad", [(1, 1), (0, 1), (2, 3, 1, 5)])
def test_natural_to_prefix_rejects_non_permutation(bad):
    with pytest.raises(ValueError):
        natural_to_prefix(bad)


@pytest.mark.parametrize("bad", [(2,), (1, 3), (1, 0), (1, 2, 4)])
def test_prefix_to_natural_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        prefix_to_natural(bad)


def test_windowed_prefix_rep():
    assert windowed_prefix_rep((9, 5, 2, 7, 6, 4), 1) == (1, 1, 1, 2, 1, 1)
    assert windowed_prefix_rep((3, 2, 1), 1) == (1, 1, 1)
    x = (4, 8, 1, 9, 2)
    assert windowed_prefix_rep(x, 5) == windowed_prefix_rep(x, 4) == prefix_rep(x)
    with pytest.raises(ValueError):
        windowed_prefix_rep(x, 0)


@given(values, st.integers(1, 6))
def test_windowed_prefix_rep_matches_brute_force(x, k):
    assert windowed_prefix_rep(x, k) == window_ranks(x, k)


@given(values)
def test_fast_reps_match_brute_force(x):
    assert natural_rep(x) == ranks(x)
    assert prefix_rep(x) == window_ranks(x)
    assert natural_to_prefix(natural_rep(x)) == prefix_rep(x)
    assert prefix_to_natural(prefix_rep(x)) == natural_rep(x)


@given(values)
def test_prefix_rep_invariants(x):
    mu = prefix_rep(x)
    assert all(1 <= r <= i for i, r in enumerate(mu, start=1))
    assert sorted(natural_rep(x)) == list(range(1, len(x) + 1))


@given(values, st.integers(0, 6))
def test_prefix_rep_is_incremental(x, extra):
    assert prefix_rep(x + [extra])[:-1] == prefix_rep(x)


@pytest.mark.parametrize("n", range(1, 7))
def test_prefix_reps_of_permutations_are_all_distinct(n):
    reps = {prefix_rep(p) for p in itertools.permutations(range(1, n + 1))}
    assert len(reps) == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_natural_and_prefix_agree_on_isomorphism(n):
    # natural_rep of a permutation is itself, so pairs reduce to comparing
    # the map perm -> prefix_rep for injectivity.
    seen = {}
    for perm in itertools.permutations(range(1, n + 1)):
        mu = prefix_rep(perm)
        assert natural_rep(perm) == perm
        assert seen.setdefault(mu, perm) == perm
    assert len(seen) == math.factorial(n)


def _key(x, i):
    return (x[i - 1], i)


@given(st.lists(st.integers(0, 8), min_size=1, max_size=25))
def test_nn_soundness(x):
    prev, nxt = nn_rep(x)
    assert prev[0] is NEG and nxt[0] is POS
    for i in range(1, len(x) + 1):
        me = _key(x, i)
        lo = None if prev[i - 1] is NEG else _key(x, prev[i - 1])
        hi = None if nxt[i - 1] is POS else _key(x, nxt[i - 1])
        earlier = [_key(x, j) for j in range(1, i)]
        if lo is not None:
            assert prev[i - 1] < i and lo < me
            assert not any(lo < e < me for e in earlier)
        else:
            assert all(e > me for e in earlier)
        if hi is not None:
            assert nxt[i - 1] < i and me < hi
            assert not any(me < e < hi for e in earlier)
        else:
            assert all(e < me for e in earlier)


def test_nn_interval_is_exactly_the_rank_preserving_range():
    rng = random.Random(3)
    for _ in range(300):
        x = [rng.uniform(0, 10) for _ in range(rng.randint(1, 12))]
        prev, nxt = nn_rep(x)
        i = rng.randint(1, len(x))
        lo = -math.inf if prev[i - 1] is NEG else x[prev[i - 1] - 1]
        hi = math.inf if nxt[i - 1] is POS else x[nxt[i - 1] - 1]
        rank = prefix_rep(x[:i])[-1]
        for candidate in (lo - 1, lo, hi, hi + 1, (lo + hi) / 2 if math.isfinite(lo + hi) else None):
            if candidate is None or not math.isfinite(candidate):
                continue
            changed = prefix_rep(x[:i - 1] + [candidate])[-1] != rank
            # A tie with the earlier neighbor counts as larger than it.
            assert changed == (not lo <= candidate < hi)
