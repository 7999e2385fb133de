import itertools

import pytest

from ordermatch.oracle import (
    GeneratorConfig,
    generate,
    naive_failure,
    naive_multi,
    naive_search,
    ranks,
)

P = (33, 42, 73, 57, 63, 87, 95, 79)
T = (11, 15, 33, 21, 24, 50, 29, 36, 73, 85, 63, 69, 78, 88, 44, 62)


def test_naive_search_examples():
    assert [(r.start, r.end) for r in naive_search(T, P)] == [(4, 11)]
    assert naive_search(P, T) == []
    assert naive_search(T, ()) == []


def test_equal_values_count_as_increasing():
    flat = (4,) * 7
    assert ranks(flat[:3]) == (1, 2, 3)
    assert [r.start for r in naive_search(flat, (1, 2, 3))] == [1, 2, 3, 4, 5]


def test_naive_failure_examples():
    assert naive_failure(P) == (0, 1, 2, 1, 2, 3, 3, 1)
    assert naive_failure((8,)) == (0,)
    assert naive_failure((1, 2, 3, 4)) == (0, 1, 2, 3)


def test_naive_multi():
    patterns = [(23, 35, 15, 53, 47), (66, 71, 57, 79, 84, 93), (43, 51, 62, 73)]
    text = (23, 35, 15, 53, 47, 43, 51, 62, 73)
    found = naive_multi(text, patterns, report_all=True)
    # Exhaustive check of every window against every pattern.
    expected = sorted(
        (start + len(p) - 1, pid, start)
        for pid, p in enumerate(patterns)
        for start in range(1, len(text) - len(p) + 2)
        if ranks(text[start - 1:start - 1 + len(p)]) == ranks(p)
    )
    assert [(r.end, r.pattern_id, r.start) for r in found] == expected
    assert {(r.pattern_id, r.start) for r in found} >= {(0, 1), (2, 6)}
    assert naive_multi((), patterns) == []
    assert naive_multi(T, [P]) == naive_search(T, P)


def test_naive_multi_longest_only_keeps_one_per_end():
    found = naive_multi((1, 2, 3), [(1, 2), (1, 2, 3), (5, 6)])
    assert [(r.pattern_id, r.start, r.end) for r in found] == [(0, 1, 2), (1, 1, 3)]


def test_generator_is_deterministic():
    config = GeneratorConfig(seed=1, pattern_count_max=3)
    first = list(itertools.islice(generate(config), 100))
    assert first == list(itertools.islice(generate(config), 100))
    assert first != list(itertools.islice(generate(GeneratorConfig(seed=2, pattern_count_max=3)), 100))


def test_generator_narrow_range_produces_duplicates():
    config = GeneratorConfig(text_len_max=20, value_range=(1, 3), seed=4)
    for text, _ in itertools.islice(generate(config), 200):
        if len(text) == 20:
            assert len(set(text)) < len(text)


def test_generator_single_pattern_config():
    for _, patterns in itertools.islice(generate(GeneratorConfig(pattern_count_max=1)), 100):
        assert len(patterns) == 1


@pytest.mark.parametrize("kwargs", [
    {"text_len_max": 0}, {"pattern_len_max": 0}, {"pattern_count_max": 0},
    {"value_range": (3, 1)}, {"seed": -1},
])
def test_generator_rejects_degenerate_config(kwargs):
    with pytest.raises(ValueError):
        GeneratorConfig(**kwargs)
