"""Regex parsing, compilation goldens, and membership equivalence."""

import pytest

from synclang import (
    Alphabet,
    RegexSyntaxError,
    UnknownRegexSymbol,
    ast_matches,
    compile,
    parse_regex,
    regex_symbols,
    sigma_sets,
)

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))


def _accepts(b, word_text: str) -> bool:
    state = b.start
    for sym in word_text:
        state = b.delta[state][b.alphabet.index(sym)]
        if state is None:
            return False
    return state in b.finals


def _all_texts(symbols, max_len: int):
    frontier = [""]
    yield ""
    for _ in range(max_len):
        frontier = [w + s for w in frontier for s in symbols]
        yield from frontier


def test_parse_shapes():
    ast = parse_regex("a(b+c)*")
    assert regex_symbols(ast) == frozenset("abc")
    assert ast_matches(ast, "a")
    assert ast_matches(ast, "abcb")
    assert not ast_matches(ast, "ba")


def test_parse_precedence_star_concat_union():
    ast = parse_regex("ab+c*")
    assert ast_matches(ast, "ab")
    assert ast_matches(ast, "")
    assert ast_matches(ast, "ccc")
    assert not ast_matches(ast, "abc")


def test_parse_whitespace_ignored():
    assert ast_matches(parse_regex(" b ( a + b b ) * "), "babb")


def test_parse_errors():
    for bad in ["", "a(b", "a)b", "+a", "a+", "*a", "()", "a++b"]:
        with pytest.raises(RegexSyntaxError):
            parse_regex(bad)


def test_compile_golden_b_a_plus_bb():
    b = compile(parse_regex("b(a+bb)*"), AB)
    assert b.n_states == 3
    assert b.start == 0
    assert b.finals == frozenset({1})
    assert b.delta == ((None, 1), (1, 2), (None, 1))


def test_compile_golden_ab_star_a():
    b = compile(parse_regex("ab*a"), AB)
    assert b.n_states == 3
    assert b.start == 0
    assert b.finals == frozenset({2})
    assert b.delta == ((1, None), (2, 1), (None, None))


def test_compile_golden_a_star():
    b = compile(parse_regex("a*"), AB)
    assert b.n_states == 1
    assert b.finals == frozenset({0})
    assert b.delta == ((0, None),)


def test_compile_is_trimmed_and_deterministic():
    for rx in ["b(aa+ba)*", "(ab)*", "a(a+b)*", "(a+b)*b", "b(bb*a)*"]:
        b = compile(parse_regex(rx), AB)
        for q in range(b.n_states):
            # co-reachability: some word from q reaches a final state
            seen = {q}
            stack = [q]
            hit = q in b.finals
            while stack and not hit:
                cur = stack.pop()
                for dst in b.delta[cur]:
                    if dst is not None and dst not in seen:
                        if dst in b.finals:
                            hit = True
                            break
                        seen.add(dst)
                        stack.append(dst)
            assert hit, f"{rx}: state {q} cannot reach a final state"


def test_compiled_membership_equals_ast_matcher():
    fixtures = [
        "b(a+bb)*", "b(aa*b)*", "b(a+ba)*", "b(ab*a)*", "b(b+ab)*",
        "b(ba*b)*", "b(b+aa)*", "b(bb*a)*", "b((a+b)a)*", "b(a(a+b))*",
        "b((a+b)b)*", "b(b(a+b))*", "a(a+b)*", "(a+b)*b", "ab*a",
        "b(aa+ba)*", "(ab)*", "(a+b)*", "a*", "(bbba)*bb(bbba)*bb(bbba)*",
    ]
    for rx in fixtures:
        ast = parse_regex(rx)
        b = compile(ast, AB)
        for text in _all_texts("ab", 8):
            assert _accepts(b, text) == ast_matches(ast, text), (rx, text)


def test_factored_equals_distributed_inner_blocks():
    pairs = [
        ("b((a+b)a)*", "b(aa+ba)*"),
        ("b(a(a+b))*", "b(aa+ab)*"),
        ("b((a+b)b)*", "b(ab+bb)*"),
        ("b(b(a+b))*", "b(ba+bb)*"),
    ]
    for factored, distributed in pairs:
        fa = parse_regex(factored)
        da = parse_regex(distributed)
        for text in _all_texts("ab", 7):
            assert ast_matches(fa, text) == ast_matches(da, text)


def test_compile_unknown_symbol_is_rejected():
    with pytest.raises(UnknownRegexSymbol):
        compile(parse_regex("a(b+c)*"), AB)


def test_compile_ternary_alphabet():
    ast = parse_regex("a(b+c)*")
    b = compile(ast, ABC)
    for text in _all_texts("abc", 5):
        assert _accepts(b, text) == ast_matches(ast, text)


def test_sigma_sets_golden():
    b = compile(parse_regex("b(a+bb)*"), AB)
    sets = sigma_sets(b).sets
    assert sets[(0, 1)] == frozenset({1})
    assert sets[(1, 1)] == frozenset({0})
    assert sets[(1, 2)] == frozenset({1})
    assert sets[(2, 1)] == frozenset({1})
    assert all(
        not letters
        for pair, letters in sets.items()
        if pair not in {(0, 1), (1, 1), (1, 2), (2, 1)}
    )


def test_sigma_sets_ab_star_a():
    b = compile(parse_regex("ab*a"), AB)
    sets = sigma_sets(b).sets
    assert sets[(0, 1)] == frozenset({0})
    assert sets[(1, 1)] == frozenset({1})
    assert sets[(1, 2)] == frozenset({0})


def test_sigma_sets_partition_defined_letters():
    for rx in ["b(a+bb)*", "(ab)*", "a(a+b)*", "b(ba*b)*"]:
        b = compile(parse_regex(rx), AB)
        sets = sigma_sets(b).sets
        for i in range(b.n_states):
            union = set()
            total = 0
            for j in range(b.n_states):
                letters = sets[(i, j)]
                total += len(letters)
                union |= letters
            defined = {x for x in range(b.n_letters) if b.delta[i][x] is not None}
            assert union == defined
            assert total == len(defined)
