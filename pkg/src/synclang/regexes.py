"""Regular-expression constraints and their compilation to partial DFAs.

The constraint notation is deliberately tiny: single-character symbols,
concatenation by juxtaposition, union ``+``, Kleene star ``*`` and
parentheses.  There is no empty-word literal, so every expression denotes
a nonempty language.

``compile`` turns an AST into the canonical trim partial DFA for the
language: Thompson construction, subset determinization in BFS order,
removal of states not on a start-to-final path, then merging of
language-equivalent states so that equal languages always yield the same
table, with states renumbered by BFS discovery (start state 0, letters
tried in alphabet order).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import Alphabet, Pdfa


class RegexSyntaxError(ValueError):
    """Raised when constraint text does not parse."""


class UnknownRegexSymbol(ValueError):
    """Raised when a regex uses a symbol outside the target alphabet."""


@dataclass(frozen=True)
class Sym:
    symbol: str


@dataclass(frozen=True)
class Concat:
    parts: tuple[RegexAst, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("concatenation nodes need at least two children")


@dataclass(frozen=True)
class Union:
    parts: tuple[RegexAst, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("union nodes need at least two children")


@dataclass(frozen=True)
class Star:
    inner: RegexAst


RegexAst = Sym | Concat | Union | Star

_RESERVED = "()+*"


class _Parser:
    """Recursive descent for  expr := term ('+' term)* ;  term := factor+ ;
    factor := atom '*'* ;  atom := SYMBOL | '(' expr ')'  (whitespace ignored)."""

    def __init__(self, text: str):
        self.tokens = [ch for ch in text if not ch.isspace()]
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            raise RegexSyntaxError("unexpected end of expression")
        self.pos += 1
        return ch

    def expr(self) -> RegexAst:
        parts = [self.term()]
        while self.peek() == "+":
            self.take()
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def term(self) -> RegexAst:
        parts = [self.factor()]
        while self.peek() is not None and self.peek() not in "+)":
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def factor(self) -> RegexAst:
        node = self.atom()
        while self.peek() == "*":
            self.take()
            node = Star(node)
        return node

    def atom(self) -> RegexAst:
        ch = self.peek()
        if ch == "(":
            self.take()
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError("missing closing parenthesis")
            self.take()
            return node
        if ch is None or ch in _RESERVED:
            raise RegexSyntaxError(f"expected a symbol or '(', got {ch!r}")
        return Sym(self.take())


def parse_regex(text: str) -> RegexAst:
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek() is not None:
        raise RegexSyntaxError(f"trailing input at {parser.peek()!r}")
    return node


def regex_symbols(node: RegexAst) -> frozenset[str]:
    """All symbols occurring in the expression."""
    if isinstance(node, Sym):
        return frozenset((node.symbol,))
    if isinstance(node, Star):
        return regex_symbols(node.inner)
    out: set[str] = set()
    for part in node.parts:
        out |= regex_symbols(part)
    return frozenset(out)


def ast_matches(node: RegexAst, text: str) -> bool:
    """Direct recursive membership check on the AST, no automaton involved.

    Used as the independent oracle that ``compile`` is tested against.
    Works span-wise: ``ends(node, i)`` is the set of positions j such that
    node matches text[i:j].
    """
    memo: dict[tuple[RegexAst, int], frozenset[int]] = {}

    def ends(n: RegexAst, i: int) -> frozenset[int]:
        key = (n, i)
        got = memo.get(key)
        if got is not None:
            return got
        if isinstance(n, Sym):
            out = frozenset((i + 1,)) if text[i : i + 1] == n.symbol else frozenset()
        elif isinstance(n, Union):
            acc: set[int] = set()
            for part in n.parts:
                acc |= ends(part, i)
            out = frozenset(acc)
        elif isinstance(n, Concat):
            starts = {i}
            for part in n.parts:
                nxt: set[int] = set()
                for s in starts:
                    nxt |= ends(part, s)
                starts = nxt
                if not starts:
                    break
            out = frozenset(starts)
        else:  # Star
            reach = {i}
            frontier = [i]
            while frontier:
                s = frontier.pop()
                for j in ends(n.inner, s):
                    if j > s and j not in reach:
                        reach.add(j)
                        frontier.append(j)
            out = frozenset(reach)
        memo[key] = out
        return out

    return len(text) in ends(node, 0)


def compile(ast: RegexAst, alphabet: Alphabet) -> Pdfa:  # noqa: A001 - mirrors re.compile
    """Canonical trim partial DFA for the expression's language."""
    missing = sorted(regex_symbols(ast) - set(alphabet.symbols))
    if missing:
        raise UnknownRegexSymbol(f"regex symbols {missing} are not in the alphabet")

    # Thompson construction: eps[s] and moves[s] = [(letter, target), ...].
    eps: list[list[int]] = []
    moves: list[list[tuple[int, int]]] = []

    def fresh() -> int:
        eps.append([])
        moves.append([])
        return len(eps) - 1

    def build(node: RegexAst) -> tuple[int, int]:
        if isinstance(node, Sym):
            s, t = fresh(), fresh()
            moves[s].append((alphabet.index(node.symbol), t))
            return s, t
        if isinstance(node, Concat):
            s, t = build(node.parts[0])
            for part in node.parts[1:]:
                ns, nt = build(part)
                eps[t].append(ns)
                t = nt
            return s, t
        if isinstance(node, Union):
            s, t = fresh(), fresh()
            for part in node.parts:
                ps, pt = build(part)
                eps[s].append(ps)
                eps[pt].append(t)
            return s, t
        s, t = fresh(), fresh()
        ps, pt = build(node.inner)
        eps[s].extend((ps, t))
        eps[pt].extend((ps, t))
        return s, t

    nfa_start, nfa_accept = build(ast)

    def closure(states: set[int]) -> frozenset[int]:
        stack = list(states)
        seen = set(states)
        while stack:
            q = stack.pop()
            for t in eps[q]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    # Subset construction, BFS over discovered subsets.
    k = len(alphabet)
    start_set = closure({nfa_start})
    number: dict[frozenset[int], int] = {start_set: 0}
    order = [start_set]
    queue = deque([start_set])
    while queue:
        current = queue.popleft()
        for x in range(k):
            target = {t for q in current for (y, t) in moves[q] if y == x}
            if not target:
                continue
            closed = closure(target)
            if closed not in number:
                number[closed] = len(order)
                order.append(closed)
                queue.append(closed)

    n = len(order)
    rows: list[list[int | None]] = [[None] * k for _ in range(n)]
    for i, subset in enumerate(order):
        for x in range(k):
            target = {t for q in subset for (y, t) in moves[q] if y == x}
            if target:
                rows[i][x] = number[closure(target)]
    finals = {i for i, subset in enumerate(order) if nfa_accept in subset}

    return _normalize_pdfa(alphabet, rows, 0, finals)


def _normalize_pdfa(alphabet: Alphabet, rows: list[list[int | None]], start: int,
                    finals: set[int]) -> Pdfa:
    """Trim, merge language-equivalent states, renumber by BFS discovery."""
    n = len(rows)
    k = len(alphabet)

    # Reachable from start.
    reach = {start}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for t in rows[q]:
            if t is not None and t not in reach:
                reach.add(t)
                queue.append(t)
    # Co-reachable to a final, over reachable states only.
    back: list[set[int]] = [set() for _ in range(n)]
    for q in reach:
        for t in rows[q]:
            if t is not None and t in reach:
                back[t].add(q)
    alive = {q for q in finals if q in reach}
    queue = deque(alive)
    while queue:
        q = queue.popleft()
        for p in back[q]:
            if p not in alive:
                alive.add(p)
                queue.append(p)

    if start not in alive:
        # Empty language; the regex grammar cannot produce this, but keep a
        # sensible canonical value for robustness.
        return Pdfa(alphabet, 1, 0, frozenset(), ((None,) * k,))

    keep = sorted(alive)
    old_to_trim = {q: i for i, q in enumerate(keep)}
    trows: list[list[int | None]] = []
    for q in keep:
        trows.append([old_to_trim[t] if (t is not None and t in alive) else None
                      for t in rows[q]])
    tstart = old_to_trim[start]
    tfinals = {old_to_trim[q] for q in finals if q in alive}

    # Single-pass merge of duplicate states: states that agree on finality
    # and on their literal successor row denote one subset-construction
    # state printed several times, so collapse them.  This deliberately
    # stops short of full minimization; the constraint classifier works on
    # the shape this pass produces.
    m = len(keep)
    signature: dict[tuple, int] = {}
    cls = []
    for q in range(m):
        key = (q in tfinals, tuple(trows[q]))
        if key not in signature:
            signature[key] = len(signature)
        cls.append(signature[key])

    n_cls = max(cls) + 1
    crows: list[list[int | None]] = [[None] * k for _ in range(n_cls)]
    for q in range(m):
        crows[cls[q]] = [None if t is None else cls[t] for t in trows[q]]
    cstart = cls[tstart]
    cfinals = {cls[q] for q in tfinals}

    # BFS renumbering for a canonical presentation.
    renum = {cstart: 0}
    order = [cstart]
    queue = deque([cstart])
    while queue:
        q = queue.popleft()
        for t in crows[q]:
            if t is not None and t not in renum:
                renum[t] = len(order)
                order.append(t)
                queue.append(t)
    out_rows = tuple(
        tuple(None if t is None else renum[t] for t in crows[q]) for q in order
    )
    out_finals = frozenset(renum[q] for q in cfinals)
    return Pdfa(alphabet, len(order), 0, out_finals, out_rows)


@dataclass(frozen=True, eq=False)
class SigmaSets:
    """For a constraint automaton, the letter set labelling each state pair.

    ``sets[(i, j)]`` is the (possibly empty) frozenset of letter indexes x
    with a transition i -x-> j; every pair of states is present as a key.
    """

    n_states: int
    sets: dict[tuple[int, int], frozenset[int]]

    def __getitem__(self, pair: tuple[int, int]) -> frozenset[int]:
        return self.sets[pair]


def sigma_sets(constraint: Pdfa) -> SigmaSets:
    table: dict[tuple[int, int], set[int]] = {
        (i, j): set() for i in range(constraint.n_states) for j in range(constraint.n_states)
    }
    for i in range(constraint.n_states):
        for x, t in enumerate(constraint.delta[i]):
            if t is not None:
                table[(i, t)].add(x)
    return SigmaSets(constraint.n_states, {pair: frozenset(v) for pair, v in table.items()})
