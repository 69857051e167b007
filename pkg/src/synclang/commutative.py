"""Polynomial synchronization machinery for commutative automata.

The pipeline: quotient a commutative automaton by its strongly connected
components (this preserves the set of reset words exactly), decide
synchronizability from the component DAG, and represent the full reset
language by threshold counting, since over a weakly acyclic commutative
automaton membership of a word only depends on its per-letter counts
saturated at m - 1.  Constrained synchronization then reduces to an
emptiness/BFS question on a product with the constraint automaton.
"""

from __future__ import annotations

import itertools
from collections import deque

from .automata import (
    AutomatonFormatError,
    Dcsa,
    Pdfa,
    Word,
    product,
    scc_decompose,
)
from .search import SyncReport

ThresholdVector = tuple[int, ...]
AcceptedVectorSet = frozenset[ThresholdVector]


def is_commutative(a: Dcsa) -> bool:
    """True iff every pair of letters acts identically in both orders."""
    k = a.n_letters
    for x in range(k):
        for y in range(x + 1, k):
            for q in range(a.n_states):
                if a.delta[a.delta[q][x]][y] != a.delta[a.delta[q][y]][x]:
                    return False
    return True


def is_weakly_acyclic(a: Dcsa | Pdfa) -> bool:
    """True iff all cycles are self-loops, i.e. every SCC is a singleton."""
    return all(len(c) == 1 for c in scc_decompose(a).components)


def _require_commutative(a: Dcsa) -> None:
    if not is_commutative(a):
        raise ValueError("input automaton is not commutative")


def scc_quotient(a: Dcsa) -> Dcsa:
    """Quotient by SCCs; a synchronizing input keeps the same reset words.

    The construction is defined for every commutative input, but the
    reset-word guarantee needs the synchronizing hypothesis: an automaton
    whose letters all permute one big component quotients to a single
    state, which the empty word trivially resets.

    Component numbering is topological, so the quotient's transitions never
    go to a smaller state index; the result is weakly acyclic and
    commutative.
    """
    _require_commutative(a)
    dec = scc_decompose(a)
    rows = []
    for comp in dec.components:
        rep = comp[0]
        rows.append(tuple(dec.component_of[a.delta[rep][x]] for x in range(a.n_letters)))
    return Dcsa(a.alphabet, len(dec.components), tuple(rows))


def commutative_is_synchronizing(a: Dcsa) -> SyncReport:
    """Linear-time synchronizability for commutative automata.

    The automaton is synchronizing iff the topologically last component is
    a singleton and every component reaches it.  No witness is produced;
    the reported sync_state is that singleton (necessarily a sink).
    """
    _require_commutative(a)
    dec = scc_decompose(a)
    m = len(dec.components)
    last = dec.components[-1]
    if len(last) != 1:
        return SyncReport(False, None, None)
    back: list[list[int]] = [[] for _ in range(m)]
    for i, j in dec.dag_edges:
        back[j].append(i)
    seen = {m - 1}
    stack = [m - 1]
    while stack:
        for i in back[stack.pop()]:
            if i not in seen:
                seen.add(i)
                stack.append(i)
    if len(seen) != m:
        return SyncReport(False, None, None)
    return SyncReport(True, None, last[0])


def threshold_vector(w: Word, n: int, k: int) -> ThresholdVector:
    """Per-letter occurrence counts of w, each saturated at n - 1."""
    counts = [0] * k
    for x in w:
        if not 0 <= x < k:
            raise ValueError(f"letter index {x} out of range for {k} letters")
        if counts[x] < n - 1:
            counts[x] += 1
    return tuple(counts)


def _vector_index(c: tuple[int, ...], n: int) -> int:
    idx = 0
    for v in c:
        idx = idx * n + v
    return idx


def counting_automaton(n: int, alphabet, accepted: AcceptedVectorSet) -> Pdfa:
    """Complete automaton on saturated count vectors {0..n-1}^k.

    State (c_1, .., c_k) means "letter j seen min(count, n-1) times"; letter
    j saturating-increments coordinate j.  Accepts exactly the words whose
    threshold vector lies in ``accepted``.  Always has n^k states.
    """
    k = len(alphabet)
    if n < 1:
        raise ValueError("threshold must be at least 1")
    for c in accepted:
        if len(c) != k or any(not 0 <= v <= n - 1 for v in c):
            raise ValueError(f"vector {c} does not fit dimensions (k={k}, n={n})")
    rows = []
    for c in itertools.product(range(n), repeat=k):
        row = []
        for j in range(k):
            bumped = list(c)
            bumped[j] = min(bumped[j] + 1, n - 1)
            row.append(_vector_index(tuple(bumped), n))
        rows.append(tuple(row))
    finals = frozenset(_vector_index(c, n) for c in accepted)
    return Pdfa(alphabet, n**k, 0, finals, tuple(rows))


def _pdfa_commutative(ai: Pdfa) -> bool:
    k = ai.n_letters
    for q in range(ai.n_states):
        for x in range(k):
            for y in range(x + 1, k):
                qx = ai.delta[q][x]
                qy = ai.delta[q][y]
                one = ai.delta[qx][y] if qx is not None else None
                two = ai.delta[qy][x] if qy is not None else None
                if one != two:
                    return False
    return True


def accepted_vectors(ai: Pdfa, n: int) -> AcceptedVectorSet:
    """Threshold vectors of the accepted canonical words a1^c1 .. ak^ck.

    For weakly acyclic commutative automata with at most n states these
    vectors determine the whole language: w is accepted iff its threshold
    vector is collected here.
    """
    if ai.n_states > n:
        raise ValueError("threshold n must be at least the automaton's state count")
    if not is_weakly_acyclic(ai):
        raise ValueError("input automaton is not weakly acyclic")
    if not _pdfa_commutative(ai):
        raise ValueError("input automaton is not commutative")
    k = ai.n_letters
    out = set()
    for c in itertools.product(range(n), repeat=k):
        state: int | None = ai.start
        for j in range(k):
            for _ in range(c[j]):
                state = ai.delta[state][j]
                if state is None:
                    break
            if state is None:
                break
        if state is not None and state in ai.finals:
            out.add(c)
    return frozenset(out)


def intersect_wac(automata, n: int) -> Pdfa:
    """Intersection of weakly acyclic commutative languages as counting.

    Every input must be weakly acyclic, commutative, have at most n states
    and share one alphabet; the result is the counting automaton over the
    intersection of their accepted-vector sets, with exactly n^k states.
    """
    automata = list(automata)
    if not automata:
        raise ValueError("need at least one automaton to intersect")
    alphabet = automata[0].alphabet
    for ai in automata[1:]:
        if ai.alphabet.symbols != alphabet.symbols:
            raise AutomatonFormatError("intersection needs identical alphabets")
    vectors = accepted_vectors(automata[0], n)
    for ai in automata[1:]:
        vectors = vectors & accepted_vectors(ai, n)
    return counting_automaton(n, alphabet, vectors)


def sync_language_automaton(a: Dcsa, minimal_states_only: bool = False) -> Pdfa:
    """Automaton recognizing exactly the reset words of a commutative input.

    Non-synchronizing inputs yield a single-state automaton with no final
    states.  Otherwise the SCC quotient C with sink s is built and the
    result is the intersection of the languages "from q, C ends in s" over
    quotient states q (all of them, or only the reachability-minimal ones
    when ``minimal_states_only`` is set; both give the same language).
    """
    _require_commutative(a)
    k = a.n_letters
    report = commutative_is_synchronizing(a)
    if not report.synchronizing:
        return Pdfa(a.alphabet, 1, 0, frozenset(), ((0,) * k,))
    quot = scc_quotient(a)
    m = quot.n_states
    sink = m - 1  # topological numbering puts the sink component last
    if minimal_states_only:
        has_incoming = set()
        for q in range(m):
            for x in range(k):
                t = quot.delta[q][x]
                if t != q:
                    has_incoming.add(t)
        states = [q for q in range(m) if q not in has_incoming]
    else:
        states = list(range(m))
    factors = [
        Pdfa(a.alphabet, m, q, frozenset((sink,)), quot.delta) for q in states
    ]
    return intersect_wac(factors, m)


def _shortest_accepted(aut: Pdfa) -> Word | None:
    """Lexicographically least shortest accepted word, by plain BFS."""
    if aut.start in aut.finals:
        return ()
    parent: dict[int, tuple[int, int]] = {}
    seen = {aut.start}
    queue = deque([aut.start])
    while queue:
        q = queue.popleft()
        for x in range(aut.n_letters):
            t = aut.delta[q][x]
            if t is None or t in seen:
                continue
            seen.add(t)
            parent[t] = (q, x)
            if t in aut.finals:
                out = []
                cur = t
                while cur != aut.start:
                    cur, letter = parent[cur]
                    out.append(letter)
                out.reverse()
                return tuple(out)
            queue.append(t)
    return None


def constrained_sync_commutative(a: Dcsa, b: Pdfa) -> Word | None:
    """Shortest reset word of a commutative automaton inside L(b), or None.

    Runs a BFS over the product of the reset-language automaton with the
    constraint; polynomial in the automaton size for a fixed alphabet.
    """
    if a.alphabet.symbols != b.alphabet.symbols:
        raise AutomatonFormatError("constrained search needs identical alphabets")
    _require_commutative(a)
    sync_lang = sync_language_automaton(a)
    return _shortest_accepted(product(sync_lang, b))
