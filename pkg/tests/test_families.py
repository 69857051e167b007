"""Generators, figure fixtures, and the seeded random families."""

import pytest

from synclang import (
    Alphabet,
    PERMUTATION,
    SIMPLE_IDEMPOTENT,
    case2_automaton,
    cerny,
    classify_letters,
    figure_commutative,
    figure_commutative_nonsync,
    figure_noncommutative_sync_counterpart,
    fixture_path,
    is_commutative,
    is_synchronizing,
    load_fixture,
    random_commutative,
    random_simple_idempotents,
    serialize,
    sink_cycle_automaton,
)
from synclang.rng import SplitMix64


def test_cerny_table_shape():
    for n in (2, 4, 7):
        aut = cerny(n)
        assert aut.n_states == n
        for q in range(n):
            assert aut.delta[q][1] == (q + 1) % n
            assert aut.delta[q][0] == (1 if q == 0 else q)


def test_cerny_rejects_tiny():
    with pytest.raises(ValueError):
        cerny(1)


def test_sink_cycle_shape():
    for n in (3, 6, 9):
        aut = sink_cycle_automaton(n)
        sink = n - 1
        for x in range(2):
            assert aut.delta[sink][x] == sink
        for q in range(n - 1):
            assert aut.delta[q][1] == (q + 1) % (n - 1)
            assert aut.delta[q][0] == (sink if q == n - 2 else q)


def test_case2_shape_and_cerny_coincidence():
    aut = case2_automaton(7, 3)
    for q in range(7):
        assert aut.delta[q][1] == (q + 1) % 7
        assert aut.delta[q][0] == (3 if q == 0 else q)
    assert case2_automaton(5, 1).delta == cerny(5).delta


def test_case2_rejects_bad_offset():
    with pytest.raises(ValueError):
        case2_automaton(6, 0)
    with pytest.raises(ValueError):
        case2_automaton(6, 6)


def test_figure_fixtures_basic_facts():
    fig = figure_commutative()
    assert fig.n_states == 7
    assert is_commutative(fig)
    assert is_synchronizing(fig).synchronizing
    nonsync = figure_commutative_nonsync()
    assert nonsync.n_states == 7
    assert is_commutative(nonsync)
    assert not is_synchronizing(nonsync).synchronizing


def test_nonsync_alias_points_to_same_fixture():
    assert (
        figure_noncommutative_sync_counterpart().delta
        == figure_commutative_nonsync().delta
    )


def test_fixture_files_match_builders():
    expectations = {
        "cerny_3.aut": cerny(3),
        "cerny_4.aut": cerny(4),
        "sink_cycle_6.aut": sink_cycle_automaton(6),
        "sink_cycle_7.aut": sink_cycle_automaton(7),
        "case2_7_3.aut": case2_automaton(7, 3),
        "fig_commutative.aut": figure_commutative(),
        "fig_commutative_nonsync.aut": figure_commutative_nonsync(),
    }
    for name, built in expectations.items():
        text = fixture_path(name).read_text()
        body = "".join(
            line for line in text.splitlines(keepends=True)
            if not line.startswith("#")
        )
        assert body == serialize(built), name
        loaded = load_fixture(name)
        assert loaded.delta == built.delta


def test_fig_commutative_header_documents_edge_reading():
    text = fixture_path("fig_commutative.aut").read_text()
    assert text.startswith("#")
    assert "self-loop" in text


def test_fixture_path_unknown_name():
    with pytest.raises(FileNotFoundError):
        fixture_path("no_such_fixture.aut")


def test_splitmix64_reference_vector():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        16294208416658607535,
        7960286522194355700,
        487617019471545679,
    ]
    rng = SplitMix64(42)
    assert rng.next_u64() == 13679457532755275413


def test_splitmix64_randrange_bounds():
    rng = SplitMix64(9)
    for _ in range(1000):
        assert 0 <= rng.randrange(7) < 7


def test_splitmix64_shuffle_is_a_permutation():
    rng = SplitMix64(3)
    items = list(range(20))
    rng.shuffle(items)
    assert sorted(items) == list(range(20))
    assert items != list(range(20))


def test_random_commutative_postcondition_and_determinism():
    for seed in range(100):
        aut = random_commutative(5, 2, seed)
        assert is_commutative(aut)
    a1 = random_commutative(6, 3, 1234)
    a2 = random_commutative(6, 3, 1234)
    assert serialize(a1) == serialize(a2)
    assert a1.alphabet.symbols == ("a", "b", "c")


def test_random_commutative_unary_always_commutes():
    for seed in (0, 1, 2):
        aut = random_commutative(4, 1, seed)
        assert aut.n_letters == 1
        assert is_commutative(aut)


def test_random_commutative_varied_shapes():
    seen_states = {random_commutative(n, 2, 77).n_states for n in range(2, 7)}
    assert seen_states == {2, 3, 4, 5, 6}


def test_random_simple_idempotents_postcondition_and_determinism():
    for seed in range(100):
        aut = random_simple_idempotents(2 + seed % 7, seed)
        assert sorted(classify_letters(aut).tags) == sorted(
            (SIMPLE_IDEMPOTENT, PERMUTATION)
        )
    a1 = random_simple_idempotents(8, 55)
    a2 = random_simple_idempotents(8, 55)
    assert serialize(a1) == serialize(a2)


def test_generators_are_alphabet_stable():
    assert cerny(5).alphabet == Alphabet(("a", "b"))
    assert sink_cycle_automaton(5).alphabet == Alphabet(("a", "b"))
    assert random_simple_idempotents(5, 4).alphabet == Alphabet(("a", "b"))
