"""Synchronization search engines: pair-collapse, subset BFS, oracle."""

import pytest

from synclang import (
    Alphabet,
    BudgetExceededError,
    Dcsa,
    SearchBudget,
    cerny,
    compile,
    constrained_sync_oracle,
    idempotent_count_check,
    is_synchronizing,
    parse_automaton,
    parse_regex,
    shortest_sync_word,
    sink_cycle_automaton,
    step,
)
from synclang.rng import SplitMix64

AB = Alphabet(("a", "b"))


def random_dcsa(rng: SplitMix64, n: int, k: int = 2) -> Dcsa:
    alphabet = Alphabet(tuple(chr(ord("a") + i) for i in range(k)))
    delta = tuple(
        tuple(rng.randrange(n) for _ in range(k)) for _ in range(n)
    )
    return Dcsa(alphabet, n, delta)


def _accepts(b, word) -> bool:
    state = b.start
    for x in word:
        state = b.delta[state][x]
        if state is None:
            return False
    return state in b.finals


def test_one_state_synchronizes_with_empty_word():
    aut = parse_automaton("alphabet a\nstates 1\ntrans 0 a 0\n")
    report = is_synchronizing(aut)
    assert report.synchronizing
    assert report.witness == ()
    assert report.sync_state == 0


def test_unary_two_cycle_not_synchronizing():
    aut = parse_automaton("alphabet a\nstates 2\ntrans 0 a 1\ntrans 1 a 0\n")
    report = is_synchronizing(aut)
    assert not report.synchronizing
    assert report.witness is None
    assert report.sync_state is None


def test_cerny_family_synchronizing_with_sound_witness():
    for n in (2, 3, 4, 5, 8):
        aut = cerny(n)
        report = is_synchronizing(aut)
        assert report.synchronizing
        image = step(aut, frozenset(range(n)), report.witness)
        assert image == frozenset({report.sync_state})
        assert len(report.witness) <= n ** 3


def test_sink_cycle_family_synchronizing():
    for n in range(3, 11):
        assert is_synchronizing(sink_cycle_automaton(n)).synchronizing


def test_shortest_sync_word_cerny_lengths():
    expected = {2: "a", 3: "abba", 4: "abbbabbba"}
    for n, text in expected.items():
        aut = cerny(n)
        word = shortest_sync_word(aut)
        assert aut.alphabet.text(word) == text
        assert len(word) == (n - 1) ** 2


def test_shortest_sync_word_absent_on_permutation_automaton():
    aut = parse_automaton(
        "alphabet a b\nstates 2\ntrans 0 a 1\ntrans 1 a 0\ntrans 0 b 0\ntrans 1 b 1\n"
    )
    assert shortest_sync_word(aut) is None


def test_shortest_word_agrees_with_pair_collapse_check():
    rng = SplitMix64(5150)
    for _ in range(200):
        aut = random_dcsa(rng, 2 + rng.randrange(5))
        assert (shortest_sync_word(aut) is not None) == (
            is_synchronizing(aut).synchronizing
        )


def test_oracle_minimality_by_exhaustive_enumeration():
    rng = SplitMix64(860)
    checked = 0
    while checked < 500:
        n = 2 + rng.randrange(4)
        aut = random_dcsa(rng, n)
        word = shortest_sync_word(aut)
        if word is None:
            continue
        checked += 1
        full = frozenset(range(n))
        frontier = [()]
        for _ in range(len(word) - 1):
            frontier = [w + (x,) for w in frontier for x in range(2)]
            for shorter in frontier:
                assert len(step(aut, full, shorter)) > 1


def test_budget_exceeded_is_distinct_from_no_word():
    with pytest.raises(BudgetExceededError):
        shortest_sync_word(cerny(6), SearchBudget(max_subsets=4))
    aut = parse_automaton(
        "alphabet a b\nstates 2\ntrans 0 a 1\ntrans 1 a 0\ntrans 0 b 0\ntrans 1 b 1\n"
    )
    # a non-synchronizing automaton answers "no word" within a generous budget
    assert shortest_sync_word(aut, SearchBudget(max_subsets=1 << 12)) is None


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_subsets=0)


def test_constrained_oracle_matches_unconstrained_under_universal_constraint():
    universal = compile(parse_regex("(a+b)*"), AB)
    rng = SplitMix64(31337)
    for _ in range(150):
        aut = random_dcsa(rng, 2 + rng.randrange(5))
        constrained = constrained_sync_oracle(aut, universal)
        free = shortest_sync_word(aut)
        if free is None:
            assert constrained is None
        else:
            assert constrained is not None
            assert len(constrained) == len(free)


def test_constrained_oracle_parity_fixture():
    constraint = compile(parse_regex("b(a+bb)*"), AB)
    assert constrained_sync_oracle(sink_cycle_automaton(5), constraint) is None
    word = constrained_sync_oracle(sink_cycle_automaton(6), constraint)
    assert word is not None
    aut = sink_cycle_automaton(6)
    assert len(step(aut, frozenset(range(6)), word)) == 1
    assert _accepts(constraint, word)


def test_constrained_oracle_witness_soundness():
    rng = SplitMix64(40)
    constraints = [
        compile(parse_regex(rx), AB)
        for rx in ["b(a+bb)*", "ab*a", "(ab)*", "(a+b)*b", "b(ba*b)*"]
    ]
    for _ in range(120):
        aut = random_dcsa(rng, 2 + rng.randrange(5))
        for constraint in constraints:
            word = constrained_sync_oracle(aut, constraint)
            if word is None:
                continue
            assert len(step(aut, frozenset(range(aut.n_states)), word)) == 1
            assert _accepts(constraint, word)


def test_constrained_oracle_monotone_under_language_inclusion():
    # L(b(a+bb)*) is a subset of L((a+b)*) and of L(b(a+b)*); a witness in
    # the smaller language implies one in the larger.
    small = compile(parse_regex("b(a+bb)*"), AB)
    for larger_rx in ["(a+b)*", "b(a+b)*"]:
        larger = compile(parse_regex(larger_rx), AB)
        for n in (6, 8, 10):
            aut = sink_cycle_automaton(n)
            if constrained_sync_oracle(aut, small) is not None:
                assert constrained_sync_oracle(aut, larger) is not None


def test_constrained_oracle_alphabet_mismatch():
    from synclang import AutomatonFormatError

    constraint = compile(parse_regex("a*"), Alphabet(("a", "c")))
    with pytest.raises(AutomatonFormatError):
        constrained_sync_oracle(cerny(3), constraint)


def test_constrained_oracle_budget():
    constraint = compile(parse_regex("(a+b)*"), AB)
    with pytest.raises(BudgetExceededError):
        constrained_sync_oracle(cerny(7), constraint, SearchBudget(max_subsets=3))


def test_idempotent_count_check_on_cerny_words():
    aut = cerny(4)
    word = shortest_sync_word(aut)
    assert idempotent_count_check(aut, word)
    assert sum(1 for x in word if x == 0) >= 3


def test_idempotent_count_check_single_state():
    aut = parse_automaton("alphabet a\nstates 1\ntrans 0 a 0\n")
    assert idempotent_count_check(aut, ())


def test_idempotent_count_check_rejects_non_reset_word():
    aut = cerny(5)
    with pytest.raises(ValueError):
        idempotent_count_check(aut, aut.alphabet.word("bbbb"))


def test_large_instance_uses_same_answers_as_small_path():
    # the scipy-backed path and the pure-Python path must agree
    rng = SplitMix64(808)
    for _ in range(25):
        aut = random_dcsa(rng, 40 + rng.randrange(30))
        report = is_synchronizing(aut)
        if report.synchronizing:
            image = step(aut, frozenset(range(aut.n_states)), report.witness)
            assert len(image) == 1
        else:
            # spot-check: no word of length <= 6 synchronizes
            frontier = [()]
            full = frozenset(range(aut.n_states))
            for _ in range(3):
                frontier = [w + (x,) for w in frontier for x in range(2)]
                for word in frontier:
                    assert len(step(aut, full, word)) > 1
