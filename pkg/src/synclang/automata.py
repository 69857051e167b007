"""Deterministic automata over dense integer states.

Two concrete kinds are used throughout the package:

* ``Dcsa``, a deterministic complete semiautomaton: every state has a
  transition for every letter, there is no start state and no final set.
  Synchronization questions are asked about these.
* ``Pdfa``, a partial deterministic finite automaton with a start state
  and a set of final states.  Constraint languages are given this way.

States are always ``0 .. n_states - 1`` and letters are indexes into an
``Alphabet``.  A ``Word`` is a tuple of letter indexes; use
``Alphabet.word`` / ``Alphabet.text`` to cross between tuples and strings.

The textual format (extension ``.aut``) is line based::

    # comment
    alphabet a b
    states 4
    initial 0
    final 2 3
    trans 0 a 1

``initial`` and ``final`` are optional; if either is present the file
describes a ``Pdfa`` (a missing ``initial`` defaults to state 0, and a bare
``final`` line means no final states), otherwise it describes a ``Dcsa``
and the transition table must be total.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

Word = tuple[int, ...]


class AutomatonFormatError(ValueError):
    """Malformed automaton text or an inconsistent transition table."""


def _fail(message: str, lineno: int | None = None) -> None:
    if lineno is not None:
        message = f"line {lineno}: {message}"
    raise AutomatonFormatError(message)


@dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free tuple of single-character symbols."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            _fail("alphabet must not be empty")
        for sym in self.symbols:
            if not isinstance(sym, str) or len(sym) != 1:
                _fail(f"alphabet symbols are single characters, got {sym!r}")
            if sym == "#" or sym.isspace():
                _fail(f"symbol {sym!r} would collide with the text format")
        if len(set(self.symbols)) != len(self.symbols):
            _fail("alphabet symbols must be unique")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i: int) -> str:
        return self.symbols[i]

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            _fail(f"unknown symbol {symbol!r}")

    def word(self, text: str) -> Word:
        """Letter-index tuple for a string like ``"aba"``."""
        return tuple(self.index(ch) for ch in text)

    def text(self, word: Word) -> str:
        return "".join(self.symbols[x] for x in word)


@dataclass(frozen=True)
class Dcsa:
    """Complete deterministic semiautomaton; ``delta[state][letter]``."""

    alphabet: Alphabet
    n_states: int
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n_states < 1:
            _fail("an automaton needs at least one state")
        if len(self.delta) != self.n_states:
            _fail(f"expected {self.n_states} transition rows, got {len(self.delta)}")
        k = len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != k:
                _fail(f"state {q} has {len(row)} transitions, alphabet has {k}")
            for x, dest in enumerate(row):
                if not 0 <= dest < self.n_states:
                    _fail(f"transition {q} -{self.alphabet[x]}-> {dest} leaves the state range")

    @property
    def n_letters(self) -> int:
        return len(self.alphabet)


@dataclass(frozen=True)
class Pdfa:
    """Partial DFA with start state and final set; undefined entries are None."""

    alphabet: Alphabet
    n_states: int
    start: int
    finals: frozenset[int]
    delta: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        if self.n_states < 1:
            _fail("an automaton needs at least one state")
        if not 0 <= self.start < self.n_states:
            _fail(f"start state {self.start} is out of range")
        for f in self.finals:
            if not 0 <= f < self.n_states:
                _fail(f"final state {f} is out of range")
        if len(self.delta) != self.n_states:
            _fail(f"expected {self.n_states} transition rows, got {len(self.delta)}")
        k = len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != k:
                _fail(f"state {q} has {len(row)} transitions, alphabet has {k}")
            for x, dest in enumerate(row):
                if dest is not None and not 0 <= dest < self.n_states:
                    _fail(f"transition {q} -{self.alphabet[x]}-> {dest} leaves the state range")

    @property
    def n_letters(self) -> int:
        return len(self.alphabet)


def parse_automaton(text: str) -> Dcsa | Pdfa:
    """Parse ``.aut`` text; see the module docstring for the format."""
    symbols: list[str] | None = None
    n_states: int | None = None
    initial: int | None = None
    finals: list[int] | None = None
    trans: list[tuple[int, int, str, int]] = []

    def parse_int(token: str, lineno: int) -> int:
        try:
            return int(token, 10)
        except ValueError:
            _fail(f"expected an integer, got {token!r}", lineno)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw, args = parts[0], parts[1:]
        if kw == "alphabet":
            if symbols is not None:
                _fail("duplicate alphabet line", lineno)
            if not args:
                _fail("alphabet line needs at least one symbol", lineno)
            symbols = args
        elif kw == "states":
            if n_states is not None:
                _fail("duplicate states line", lineno)
            if len(args) != 1:
                _fail("states line takes exactly one count", lineno)
            n_states = parse_int(args[0], lineno)
        elif kw == "initial":
            if initial is not None:
                _fail("duplicate initial line", lineno)
            if len(args) != 1:
                _fail("initial line takes exactly one state", lineno)
            initial = parse_int(args[0], lineno)
        elif kw == "final":
            if finals is not None:
                _fail("duplicate final line", lineno)
            finals = [parse_int(tok, lineno) for tok in args]
        elif kw == "trans":
            if len(args) != 3:
                _fail("trans line takes source, symbol, target", lineno)
            trans.append((lineno, parse_int(args[0], lineno), args[1], parse_int(args[2], lineno)))
        else:
            _fail(f"unknown directive {kw!r}", lineno)

    if symbols is None:
        _fail("missing alphabet line")
    if n_states is None:
        _fail("missing states line")
    alphabet = Alphabet(tuple(symbols))
    if n_states < 1:
        _fail("states count must be at least 1")

    k = len(alphabet)
    table: list[list[int | None]] = [[None] * k for _ in range(n_states)]
    for lineno, src, sym, dst in trans:
        if not 0 <= src < n_states:
            _fail(f"source state {src} is out of range", lineno)
        if not 0 <= dst < n_states:
            _fail(f"target state {dst} is out of range", lineno)
        if sym not in alphabet.symbols:
            _fail(f"unknown symbol {sym!r}", lineno)
        x = alphabet.index(sym)
        if table[src][x] is not None:
            _fail(f"duplicate transition from state {src} on {sym!r}", lineno)
        table[src][x] = dst

    if initial is None and finals is None:
        for q in range(n_states):
            for x in range(k):
                if table[q][x] is None:
                    _fail(f"complete automaton is missing transition from {q} on {alphabet[x]!r}")
        rows = tuple(tuple(row) for row in table)  # type: ignore[arg-type]
        return Dcsa(alphabet, n_states, rows)

    start = 0 if initial is None else initial
    if not 0 <= start < n_states:
        _fail(f"initial state {start} is out of range")
    final_set = frozenset(finals or ())
    for f in final_set:
        if not 0 <= f < n_states:
            _fail(f"final state {f} is out of range")
    return Pdfa(alphabet, n_states, start, final_set, tuple(tuple(row) for row in table))


def serialize(aut: Dcsa | Pdfa) -> str:
    """Canonical ``.aut`` text; ``parse_automaton`` round-trips it exactly."""
    lines = ["alphabet " + " ".join(aut.alphabet.symbols), f"states {aut.n_states}"]
    if isinstance(aut, Pdfa):
        lines.append(f"initial {aut.start}")
        lines.append(("final " + " ".join(str(f) for f in sorted(aut.finals))).rstrip())
    for q in range(aut.n_states):
        for x in range(aut.n_letters):
            dest = aut.delta[q][x]
            if dest is None:
                continue
            lines.append(f"trans {q} {aut.alphabet[x]} {dest}")
    return "\n".join(lines) + "\n"


def step(aut: Dcsa | Pdfa, states, word: Word) -> frozenset[int]:
    """Image of a state set under a word; partial automata drop dead branches."""
    current = set(states)
    for q in current:
        if not 0 <= q < aut.n_states:
            _fail(f"state {q} is out of range")
    for x in word:
        if not 0 <= x < aut.n_letters:
            _fail(f"letter index {x} is out of range")
        nxt = set()
        for q in current:
            dest = aut.delta[q][x]
            if dest is not None:
                nxt.add(dest)
        current = nxt
    return frozenset(current)


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components, numbered in topological order.

    ``component_of[q]`` is the component index of state ``q``; every defined
    transition goes from a component to one with an equal or larger index.
    ``components`` holds each component's states sorted ascending,
    ``dag_edges`` the condensation edges (no self loops), and ``topo_order``
    the component indexes in topological order, which under this numbering
    is simply ``0, 1, ...``.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    dag_edges: tuple[tuple[int, int], ...]
    topo_order: tuple[int, ...]


def _tarjan(n: int, succ: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan; returns components in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            for i in range(pos, len(succ[v])):
                w = succ[v][i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def _successors(aut: Dcsa | Pdfa) -> list[list[int]]:
    succ: list[list[int]] = []
    for q in range(aut.n_states):
        row = []
        seen = set()
        for dest in aut.delta[q]:
            if dest is not None and dest not in seen:
                seen.add(dest)
                row.append(dest)
        succ.append(row)
    return succ


def scc_decompose(aut: Dcsa | Pdfa) -> SccDecomposition:
    """Tarjan condensation of the transition graph (defined edges only)."""
    succ = _successors(aut)
    comps = _tarjan(aut.n_states, succ)
    comps.reverse()  # now topological: edges go to equal or larger index
    component_of = [0] * aut.n_states
    for ci, comp in enumerate(comps):
        for q in comp:
            component_of[q] = ci
    edges = set()
    for q in range(aut.n_states):
        for dest in succ[q]:
            a, b = component_of[q], component_of[dest]
            if a != b:
                edges.add((a, b))
    return SccDecomposition(
        component_of=tuple(component_of),
        components=tuple(tuple(c) for c in comps),
        dag_edges=tuple(sorted(edges)),
        topo_order=tuple(range(len(comps))),
    )


def product(a: Pdfa, b: Pdfa) -> Pdfa:
    """Synchronized product recognizing the intersection of two languages.

    Only pairs reachable from the pair of start states are kept; they are
    numbered in breadth-first discovery order (letters tried in alphabet
    order), so the result is stable for a given pair of inputs.
    """
    if a.alphabet.symbols != b.alphabet.symbols:
        _fail("product needs identical alphabets")
    k = len(a.alphabet)
    start = (a.start, b.start)
    number: dict[tuple[int, int], int] = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        pa, pb = queue.popleft()
        for x in range(k):
            ta = a.delta[pa][x]
            tb = b.delta[pb][x]
            if ta is None or tb is None:
                continue
            pair = (ta, tb)
            if pair not in number:
                number[pair] = len(order)
                order.append(pair)
                queue.append(pair)
    rows: list[tuple[int | None, ...]] = []
    for pa, pb in order:
        row: list[int | None] = []
        for x in range(k):
            ta = a.delta[pa][x]
            tb = b.delta[pb][x]
            row.append(None if ta is None or tb is None else number[(ta, tb)])
        rows.append(tuple(row))
    finals = frozenset(i for i, (pa, pb) in enumerate(order) if pa in a.finals and pb in b.finals)
    return Pdfa(a.alphabet, len(order), 0, finals, tuple(rows))


def is_empty(aut: Pdfa) -> bool:
    """True when no final state is reachable from the start state."""
    seen = {aut.start}
    queue = deque([aut.start])
    while queue:
        q = queue.popleft()
        if q in aut.finals:
            return False
        for dest in aut.delta[q]:
            if dest is not None and dest not in seen:
                seen.add(dest)
                queue.append(dest)
    return True


def to_dot(aut: Dcsa | Pdfa) -> str:
    """Graphviz text with one edge per defined transition (no label merging)."""
    lines = ["digraph {", "  rankdir=LR;"]
    is_pdfa = isinstance(aut, Pdfa)
    if is_pdfa:
        lines.append('  __start [shape=plaintext label=""];')
    for q in range(aut.n_states):
        shape = "doublecircle" if is_pdfa and q in aut.finals else "circle"
        lines.append(f"  {q} [shape={shape}];")
    if is_pdfa:
        lines.append(f"  __start -> {aut.start};")
    for q in range(aut.n_states):
        for x in range(aut.n_letters):
            dest = aut.delta[q][x]
            if dest is None:
                continue
            lines.append(f'  {q} -> {dest} [label="{aut.alphabet[x]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
