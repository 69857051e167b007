"""Data model, text format, and graph algorithm tests."""

import pytest

from synclang import (
    Alphabet,
    AutomatonFormatError,
    Dcsa,
    Pdfa,
    cerny,
    compile,
    figure_commutative,
    is_empty,
    parse_automaton,
    parse_regex,
    product,
    scc_decompose,
    serialize,
    step,
    to_dot,
)
from synclang.rng import SplitMix64

AB = Alphabet(("a", "b"))


def random_dcsa(rng: SplitMix64, n: int, k: int = 2) -> Dcsa:
    alphabet = Alphabet(tuple(chr(ord("a") + i) for i in range(k)))
    delta = tuple(
        tuple(rng.randrange(n) for _ in range(k)) for _ in range(n)
    )
    return Dcsa(alphabet, n, delta)


def test_parse_minimal_dcsa():
    aut = parse_automaton("alphabet a\nstates 1\ntrans 0 a 0\n")
    assert isinstance(aut, Dcsa)
    assert aut.n_states == 1
    assert aut.delta == ((0,),)


def test_parse_comments_and_blank_lines():
    text = "# header\nalphabet a b\n\nstates 2\ntrans 0 a 1\ntrans 0 b 0\ntrans 1 a 1\ntrans 1 b 0\n"
    aut = parse_automaton(text)
    assert isinstance(aut, Dcsa)
    assert aut.delta == ((1, 0), (1, 0))


def test_parse_pdfa_with_initial_final():
    text = "alphabet a b\nstates 2\ninitial 0\nfinal 1\ntrans 0 a 1\n"
    aut = parse_automaton(text)
    assert isinstance(aut, Pdfa)
    assert aut.start == 0
    assert aut.finals == frozenset({1})
    assert aut.delta == ((1, None), (None, None))


def test_parse_final_line_may_be_empty():
    aut = parse_automaton("alphabet a\nstates 1\nfinal\ntrans 0 a 0\n")
    assert isinstance(aut, Pdfa)
    assert aut.finals == frozenset()


def test_parse_rejects_duplicate_transition():
    text = "alphabet a b\nstates 3\ninitial 0\ntrans 0 a 1\ntrans 0 a 2\n"
    with pytest.raises(AutomatonFormatError):
        parse_automaton(text)


def test_parse_rejects_partial_dcsa():
    with pytest.raises(AutomatonFormatError):
        parse_automaton("alphabet a b\nstates 2\ntrans 0 a 1\n")


def test_parse_rejects_out_of_range_target():
    with pytest.raises(AutomatonFormatError):
        parse_automaton("alphabet a\nstates 1\ninitial 0\ntrans 0 a 4\n")


def test_parse_rejects_unknown_symbol():
    with pytest.raises(AutomatonFormatError):
        parse_automaton("alphabet a\nstates 1\ninitial 0\ntrans 0 c 0\n")


def test_parse_rejects_zero_states():
    with pytest.raises(AutomatonFormatError):
        parse_automaton("alphabet a\nstates 0\ninitial 0\n")


def test_serialize_parse_round_trip_cerny():
    aut = cerny(4)
    again = parse_automaton(serialize(aut))
    assert isinstance(again, Dcsa)
    assert again.n_states == 4
    assert again.alphabet.symbols == ("a", "b")
    assert again.delta == aut.delta


def test_serialize_parse_round_trip_random():
    rng = SplitMix64(417)
    for _ in range(50):
        aut = random_dcsa(rng, 1 + rng.randrange(7), 1 + rng.randrange(3))
        assert parse_automaton(serialize(aut)).delta == aut.delta


def test_serialize_parse_round_trip_pdfa():
    b = compile(parse_regex("b(a+bb)*"), AB)
    again = parse_automaton(serialize(b))
    assert isinstance(again, Pdfa)
    assert again.delta == b.delta
    assert again.start == b.start
    assert again.finals == b.finals


def test_step_identity_on_empty_word():
    aut = cerny(5)
    states = frozenset({1, 3})
    assert step(aut, states, ()) == states


def test_step_empty_set_fixed_point():
    assert step(cerny(4), frozenset(), (0, 1, 0)) == frozenset()


def test_step_never_grows_images():
    rng = SplitMix64(99)
    for _ in range(40):
        aut = random_dcsa(rng, 2 + rng.randrange(6))
        states = frozenset(
            q for q in range(aut.n_states) if rng.randrange(2) == 0
        ) or frozenset({0})
        word = tuple(rng.randrange(2) for _ in range(rng.randrange(6)))
        assert len(step(aut, states, word)) <= len(states)


def test_step_reset_word_on_cerny_4():
    aut = cerny(4)
    word = aut.alphabet.word("abbbabbba")
    assert len(step(aut, frozenset(range(4)), word)) == 1


def test_step_drops_undefined_pdfa_transitions():
    b = compile(parse_regex("ab*a"), AB)
    assert step(b, frozenset({b.start}), AB.word("b")) == frozenset()


def test_scc_single_state():
    aut = parse_automaton("alphabet a\nstates 1\ntrans 0 a 0\n")
    assert len(scc_decompose(aut).components) == 1


def test_scc_cerny_is_strongly_connected():
    for n in (3, 5, 8):
        assert len(scc_decompose(cerny(n)).components) == 1


def test_scc_figure_has_five_components():
    assert len(scc_decompose(figure_commutative()).components) == 5


def test_scc_matches_brute_force_reachability():
    rng = SplitMix64(2024)
    for _ in range(30):
        aut = random_dcsa(rng, 2 + rng.randrange(7))
        n = aut.n_states
        reach = [[False] * n for _ in range(n)]
        for q in range(n):
            seen = {q}
            stack = [q]
            while stack:
                cur = stack.pop()
                for x in range(aut.n_letters):
                    nxt = aut.delta[cur][x]
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            for t in seen:
                reach[q][t] = True
        dec = scc_decompose(aut)
        for p in range(n):
            for q in range(n):
                same = dec.component_of[p] == dec.component_of[q]
                assert same == (reach[p][q] and reach[q][p])


def test_scc_topo_order_respects_dag_edges():
    rng = SplitMix64(7)
    for _ in range(30):
        aut = random_dcsa(rng, 2 + rng.randrange(7))
        dec = scc_decompose(aut)
        position = {c: i for i, c in enumerate(dec.topo_order)}
        for src, dst in dec.dag_edges:
            assert position[src] < position[dst]


def _accepts(b: Pdfa, word) -> bool:
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


def test_product_intersects_languages():
    pairs = [
        ("a*b", "b*a"),
        ("(a+bb)*", "(aa+b)*"),
        ("b(a+bb)*", "(a+b)*"),
        ("ab*a", "a(a+b)*"),
    ]
    for left, right in pairs:
        b1 = compile(parse_regex(left), AB)
        b2 = compile(parse_regex(right), AB)
        prod = product(b1, b2)
        bound = 2 * (b1.n_states + b2.n_states)
        for word in _all_words(2, min(bound, 8)):
            assert _accepts(prod, word) == (_accepts(b1, word) and _accepts(b2, word))


def test_product_with_universal_acceptor_preserves_language():
    universal = compile(parse_regex("(a+b)*"), AB)
    b = compile(parse_regex("b(aa*b)*"), AB)
    prod = product(b, universal)
    for word in _all_words(2, 6):
        assert _accepts(prod, word) == _accepts(b, word)


def test_product_rejects_alphabet_mismatch():
    b1 = compile(parse_regex("a*"), AB)
    b2 = compile(parse_regex("a*"), Alphabet(("a", "c")))
    with pytest.raises(AutomatonFormatError):
        product(b1, b2)


def test_is_empty():
    assert is_empty(Pdfa(AB, 1, 0, frozenset(), ((0, 0),)))
    assert not is_empty(compile(parse_regex("a*b"), AB))
    unreachable_final = Pdfa(AB, 2, 0, frozenset({1}), ((0, 0), (None, None)))
    assert is_empty(unreachable_final)


def test_to_dot_single_state():
    aut = parse_automaton("alphabet a b\nstates 1\ntrans 0 a 0\ntrans 0 b 0\n")
    text = to_dot(aut)
    assert text.startswith("digraph")
    assert text.count("->") == 2


def test_to_dot_edge_counts():
    assert to_dot(cerny(3)).count("->") == 6
    b = compile(parse_regex("ab*a"), AB)
    defined = sum(1 for row in b.delta for dst in row if dst is not None)
    # one extra arrow marks the start state
    assert to_dot(b).count("->") == defined + 1
    assert "doublecircle" in to_dot(b)
