"""Commutative pipeline: quotient, counting construction, solver, lemmas."""

import itertools

import pytest

from synclang import (
    Alphabet,
    accepted_vectors,
    cerny,
    commutative_is_synchronizing,
    compile,
    constrained_sync_commutative,
    constrained_sync_oracle,
    counting_automaton,
    figure_commutative,
    figure_commutative_nonsync,
    intersect_wac,
    is_commutative,
    is_empty,
    is_synchronizing,
    is_weakly_acyclic,
    parse_automaton,
    parse_regex,
    random_commutative,
    scc_decompose,
    scc_quotient,
    shortest_sync_word,
    step,
    sync_language_automaton,
    threshold_vector,
)

AB = Alphabet(("a", "b"))

SAMPLE = [random_commutative(2 + (seed % 5), 2, seed) for seed in range(60)]


def _accepts(b, word) -> bool:
    state = b.start
    for x in word:
        state = b.delta[state][x]
        if state is None:
            return False
    return state in b.finals


def _all_words(k: int, max_len: int):
    frontier = [()]
    yield ()
    for _ in range(max_len):
        frontier = [w + (x,) for w in frontier for x in range(k)]
        yield from frontier


def test_is_commutative_basic():
    assert is_commutative(parse_automaton("alphabet a\nstates 3\ntrans 0 a 1\ntrans 1 a 2\ntrans 2 a 0\n"))
    assert is_commutative(figure_commutative())
    assert not is_commutative(cerny(4))


def test_is_weakly_acyclic_basic():
    assert is_weakly_acyclic(scc_quotient(figure_commutative()))
    assert not is_weakly_acyclic(cerny(3))
    assert is_weakly_acyclic(parse_automaton("alphabet a\nstates 1\ntrans 0 a 0\n"))


def test_quotient_figure_golden():
    q = scc_quotient(figure_commutative())
    assert q.n_states == 5
    assert is_weakly_acyclic(q)
    assert is_commutative(q)
    assert q.delta == ((2, 0), (3, 2), (4, 2), (3, 4), (4, 4))


def test_quotient_of_weakly_acyclic_is_isomorphic_copy():
    for aut in SAMPLE:
        if is_weakly_acyclic(aut):
            assert scc_quotient(aut).n_states == aut.n_states


def test_quotient_rejects_non_commutative():
    with pytest.raises(ValueError):
        scc_quotient(cerny(4))


def test_quotient_preserves_reset_words():
    # word-level equivalence holds for synchronizing inputs; for the rest
    # only the forward direction survives (a one-component permutation
    # automaton quotients to a single state that the empty word resets)
    for aut in SAMPLE[:25]:
        quo = scc_quotient(aut)
        synchronizing = is_synchronizing(aut).synchronizing
        full_a = frozenset(range(aut.n_states))
        full_q = frozenset(range(quo.n_states))
        for word in _all_words(2, 6):
            resets_a = len(step(aut, full_a, word)) == 1
            resets_q = len(step(quo, full_q, word)) == 1
            if synchronizing:
                assert resets_a == resets_q
            elif resets_a:
                assert resets_q


def test_commutative_sync_check_matches_general_check():
    assert commutative_is_synchronizing(figure_commutative()).synchronizing
    assert not commutative_is_synchronizing(figure_commutative_nonsync()).synchronizing
    for aut in SAMPLE:
        assert (
            commutative_is_synchronizing(aut).synchronizing
            == is_synchronizing(aut).synchronizing
        )


def test_commutative_sync_check_rejects_non_commutative():
    with pytest.raises(ValueError):
        commutative_is_synchronizing(cerny(4))


def test_threshold_vector_goldens():
    assert threshold_vector(AB.word("aabba"), 3, 2) == (2, 2)
    assert threshold_vector((), 4, 2) == (0, 0)
    assert threshold_vector(AB.word("bbb"), 2, 2) == (0, 1)


def test_counting_automaton_single_threshold():
    ca = counting_automaton(1, AB, {(0, 0)})
    assert ca.n_states == 1
    for word in _all_words(2, 3):
        assert _accepts(ca, word)


def test_counting_automaton_both_letters():
    ca = counting_automaton(2, AB, {(1, 1)})
    assert ca.n_states == 4
    for word in _all_words(2, 5):
        expected = (0 in word) and (1 in word)
        assert _accepts(ca, word) == expected


def test_counting_automaton_membership_is_threshold_preimage():
    accepted = {(0, 2), (1, 1), (2, 0)}
    ca = counting_automaton(3, AB, accepted)
    assert ca.n_states == 9
    for word in _all_words(2, 6):
        assert _accepts(ca, word) == (threshold_vector(word, 3, 2) in accepted)


def test_accepted_vectors_universal_and_empty():
    from synclang import Pdfa

    universal = Pdfa(AB, 1, 0, frozenset({0}), ((0, 0),))
    assert accepted_vectors(universal, 3) == {
        (i, j) for i in range(3) for j in range(3)
    }
    empty = Pdfa(AB, 1, 0, frozenset(), ((0, 0),))
    assert accepted_vectors(empty, 3) == set()


def test_accepted_vectors_characterize_membership():
    # a commutative weakly acyclic acceptor: its language is exactly the
    # threshold preimage of its accepted vector set
    quo = scc_quotient(figure_commutative())
    m = quo.n_states
    from synclang import Pdfa

    acceptor = Pdfa(quo.alphabet, m, 0, frozenset({m - 1}), quo.delta)
    vectors = accepted_vectors(acceptor, m)
    for word in _all_words(2, 2 * m):
        assert _accepts(acceptor, word) == (
            threshold_vector(word, m, 2) in vectors
        )


def test_accepted_vectors_rejects_bad_inputs():
    from synclang import Pdfa

    cyclic = Pdfa(AB, 2, 0, frozenset({0}), ((1, 1), (0, 0)))
    with pytest.raises(ValueError):
        accepted_vectors(cyclic, 2)


def test_intersect_wac_single_input_language_equivalent():
    quo = scc_quotient(figure_commutative())
    m = quo.n_states
    from synclang import Pdfa

    acceptor = Pdfa(quo.alphabet, m, 0, frozenset({m - 1}), quo.delta)
    result = intersect_wac([acceptor], m)
    assert result.n_states == m ** 2
    for word in _all_words(2, 6):
        assert _accepts(result, word) == _accepts(acceptor, word)


def test_intersect_wac_disjoint_languages_empty():
    from synclang import Pdfa

    only_zero_a = Pdfa(AB, 2, 0, frozenset({1}), ((1, 0), (None, 1)))
    # requires at least one a, and the other requires none
    no_a = Pdfa(AB, 1, 0, frozenset({0}), ((None, 0),))
    assert is_weakly_acyclic(only_zero_a) and is_weakly_acyclic(no_a)
    result = intersect_wac([only_zero_a, no_a], 2)
    assert is_empty(result)


def test_intersect_wac_conjunctive_membership():
    quo = scc_quotient(figure_commutative())
    m = quo.n_states
    from synclang import Pdfa

    parts = [
        Pdfa(quo.alphabet, m, 0, frozenset({q}), quo.delta) for q in (2, 3)
    ]
    result = intersect_wac(parts, m)
    assert result.n_states == m ** 2
    for word in _all_words(2, 2 * m):
        assert _accepts(result, word) == all(_accepts(p, word) for p in parts)


def test_sync_language_automaton_figure():
    lang = sync_language_automaton(figure_commutative())
    assert lang.n_states == 25
    assert _accepts(lang, AB.word("baa"))
    assert _accepts(lang, AB.word("aab"))
    assert not _accepts(lang, AB.word("ba"))


def test_sync_language_automaton_nonsync_is_empty():
    lang = sync_language_automaton(figure_commutative_nonsync())
    assert lang.n_states == 1
    assert lang.finals == frozenset()
    assert is_empty(lang)


def test_sync_language_automaton_matches_reset_predicate():
    for aut in SAMPLE[:20]:
        lang = sync_language_automaton(aut)
        if is_synchronizing(aut).synchronizing:
            assert lang.n_states == scc_quotient(aut).n_states ** 2
        else:
            assert lang.n_states == 1 and not lang.finals
        full = frozenset(range(aut.n_states))
        for word in _all_words(2, 6):
            assert _accepts(lang, word) == (len(step(aut, full, word)) == 1)


def test_sync_language_minimal_states_flag_language_equal():
    for aut in SAMPLE[:20]:
        full_build = sync_language_automaton(aut)
        minimal_build = sync_language_automaton(aut, minimal_states_only=True)
        for word in _all_words(2, 6):
            assert _accepts(full_build, word) == _accepts(minimal_build, word)


def test_constrained_commutative_universal_gives_shortest_length():
    word = constrained_sync_commutative(
        figure_commutative(), compile(parse_regex("(a+b)*"), AB)
    )
    assert word is not None
    assert len(word) == 3


def test_constrained_commutative_nonsync_always_absent():
    for rx in ["(a+b)*", "a*", "b(a+bb)*"]:
        assert (
            constrained_sync_commutative(
                figure_commutative_nonsync(), compile(parse_regex(rx), AB)
            )
            is None
        )


def test_constrained_commutative_rejects_non_commutative():
    with pytest.raises(ValueError):
        constrained_sync_commutative(cerny(4), compile(parse_regex("a*"), AB))


def test_constrained_commutative_matches_oracle():
    constraints = [
        compile(parse_regex(rx), AB)
        for rx in ["a(a+b)*", "(a+b)*b", "ab*a", "b(aa+ba)*", "(ab)*", "a*b"]
    ]
    for aut in SAMPLE:
        for constraint in constraints:
            ours = constrained_sync_commutative(aut, constraint)
            oracle = constrained_sync_oracle(aut, constraint)
            assert (ours is None) == (oracle is None)
            if ours is not None:
                assert len(step(aut, frozenset(range(aut.n_states)), ours)) == 1
                assert _accepts(constraint, ours)


def _scc_sets(aut):
    return [frozenset(c) for c in scc_decompose(aut).components]


def test_lemma_permute_or_leave():
    for aut in SAMPLE:
        for comp in _scc_sets(aut):
            for x in range(aut.n_letters):
                image = step(aut, comp, (x,))
                assert image == comp or not (image & comp)


def test_lemma_images_of_components_stay_in_one_component():
    for aut in SAMPLE[:30]:
        decomposition = scc_decompose(aut)
        for comp in _scc_sets(aut):
            for word in _all_words(2, 4):
                image = step(aut, comp, word)
                assert len({decomposition.component_of[q] for q in image}) == 1


def test_lemma_permutation_propagation():
    for aut in SAMPLE[:30]:
        decomposition = scc_decompose(aut)
        components = _scc_sets(aut)
        for comp in components:
            for x in range(aut.n_letters):
                if step(aut, comp, (x,)) != comp:
                    continue
                others = [y for y in range(aut.n_letters) if y != x]
                for word in _all_words(len(others), 3):
                    actual = tuple(others[i] for i in word)
                    image = step(aut, comp, actual)
                    target = components[
                        decomposition.component_of[next(iter(image))]
                    ]
                    assert step(aut, target, (x,)) == target


def test_lemma_stabilization():
    for aut in SAMPLE[:15]:
        for comp in _scc_sets(aut):
            for u in _all_words(2, 3):
                from_u = step(aut, comp, u)
                for v in _all_words(2, 3):
                    if len(u) + len(v) > 6 or not v:
                        continue
                    from_uv = step(aut, from_u, v)
                    if from_uv <= from_u:
                        assert from_uv == from_u


def test_lemma_sync_state_is_sink():
    for aut in SAMPLE:
        report = is_synchronizing(aut)
        if not report.synchronizing:
            continue
        sink = report.sync_state
        for x in range(aut.n_letters):
            assert aut.delta[sink][x] == sink


def test_length_bound_unconstrained_reset():
    for aut in SAMPLE:
        word = shortest_sync_word(aut)
        if word is not None:
            assert len(word) <= aut.n_states - 1


def test_length_bound_constrained_reset():
    # The naive bound |P| * n(n-1)/2 is off by one at n = 2: against
    # b(ba*b)* the two-state automaton where a merges state 1 into a sink
    # has shortest witness bbab, length 4 against a bound of 3 (seed 10
    # below builds exactly that automaton).  The |P| - 1 slack covers the
    # walk through the constraint to the first merging letter.
    constraints = [
        compile(parse_regex(rx), AB)
        for rx in ["a(a+b)*", "(a+b)*b", "ab*a", "b(aa+ba)*", "b(ba*b)*"]
    ]
    for aut in SAMPLE:
        n = aut.n_states
        for constraint in constraints:
            word = constrained_sync_oracle(aut, constraint)
            if word is not None:
                bound = constraint.n_states * n * (n - 1) // 2
                assert len(word) <= bound + constraint.n_states - 1


def test_rank_words_within_length_bound():
    # whenever some word reaches image size r, a word of length <= n - r does
    for aut in SAMPLE[:30]:
        n = aut.n_states
        full = frozenset(range(n))
        best: dict[int, int] = {n: 0}
        seen = {full}
        frontier = [full]
        depth = 0
        while frontier:
            depth += 1
            nxt = []
            for states in frontier:
                for x in range(aut.n_letters):
                    image = frozenset(aut.delta[q][x] for q in states)
                    if image not in seen:
                        seen.add(image)
                        best.setdefault(len(image), depth)
                        nxt.append(image)
            frontier = nxt
        for rank, length in best.items():
            assert length <= n - rank
