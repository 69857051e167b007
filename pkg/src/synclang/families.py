"""Parameterized automaton families, worked examples and random samplers.

Everything here is pure: the same arguments (including the seed) always
produce the same automaton, and ``serialize`` of the result is byte
identical across runs.  The shipped ``fixtures/*.aut`` files are exactly
the serialized output of these builders; tests pin that equality.
"""

from __future__ import annotations

import importlib.resources

from .automata import Alphabet, Dcsa, parse_automaton
from .commutative import is_commutative
from .rng import SplitMix64

Seed = int

_AB = Alphabet(("a", "b"))


class GenerationError(RuntimeError):
    """A random sampler exhausted its retry budget without a valid draw."""


def cerny(n: int) -> Dcsa:
    """The classic slowly synchronizing n-state cycle automaton.

    Letter ``b`` rotates the cycle, letter ``a`` fixes everything except
    state 0, which it sends to 1.  Its shortest reset word has length
    (n - 1)^2 (length 1 for n = 2).
    """
    if n < 2:
        raise ValueError("cerny family needs at least 2 states")
    rows = []
    for q in range(n):
        a_dest = 1 if q == 0 else q
        rows.append((a_dest, (q + 1) % n))
    return Dcsa(_AB, n, tuple(rows))


def sink_cycle_automaton(n: int) -> Dcsa:
    """Cycle on states 0..n-2 plus a sink, entered from state n - 2 by ``a``.

    ``b`` rotates the cycle and fixes the sink; ``a`` fixes everything
    except state n - 2, which it sends into the sink n - 1.  The word
    a(ba)^(n-2) synchronizes it.
    """
    if n < 3:
        raise ValueError("sink-cycle family needs at least 3 states")
    sink = n - 1
    rows = []
    for q in range(n):
        a_dest = sink if q == n - 2 else q
        b_dest = sink if q == sink else (q + 1) % (n - 1)
        rows.append((a_dest, b_dest))
    return Dcsa(_AB, n, tuple(rows))


def case2_automaton(n: int, p: int) -> Dcsa:
    """Full b-cycle with a single chord: ``a`` sends state 0 to state p.

    Requires 0 < p < n.  For p = 1 this is exactly ``cerny(n)``; it is
    synchronizing precisely when gcd(p, n) = 1.
    """
    if n < 3:
        raise ValueError("chorded-cycle family needs at least 3 states")
    if not 0 < p < n:
        raise ValueError("chord target p must satisfy 0 < p < n")
    rows = []
    for q in range(n):
        a_dest = p if q == 0 else q
        rows.append((a_dest, (q + 1) % n))
    return Dcsa(_AB, n, tuple(rows))


_FIG_COMMUTATIVE = (
    (1, 2),
    (3, 4),
    (4, 2),
    (1, 4),
    (4, 4),
    (2, 6),
    (2, 5),
)

_FIG_COMMUTATIVE_NONSYNC = (
    (1, 2),
    (5, 6),
    (6, 3),
    (4, 3),
    (3, 4),
    (1, 2),
    (2, 4),
)


def figure_commutative() -> Dcsa:
    """Seven-state commutative worked example; synchronizes to state 4.

    Has five strongly connected components and a shortest reset word of
    length 3 ("baa" is one).
    """
    return Dcsa(_AB, 7, _FIG_COMMUTATIVE)


def figure_commutative_nonsync() -> Dcsa:
    """Seven-state commutative companion example that does not synchronize.

    Its terminal strongly connected component has two states, so no word
    can bring the whole state set to a single state.
    """
    return Dcsa(_AB, 7, _FIG_COMMUTATIVE_NONSYNC)


def figure_noncommutative_sync_counterpart() -> Dcsa:
    """Alias of :func:`figure_commutative_nonsync`, kept for interface
    stability; the automaton itself is commutative and non-synchronizing."""
    return figure_commutative_nonsync()


def _propagate(q: int, value: int, g: list[int | None], letters: list[list[int]]) -> bool:
    """Assign g[q] = value and close under g(f(s)) = f(g(s)); False on clash."""
    if g[q] is not None:
        return g[q] == value
    g[q] = value
    stack = [q]
    while stack:
        s = stack.pop()
        gs = g[s]
        for f in letters:
            t = f[s]
            required = f[gs]
            if g[t] is None:
                g[t] = required
                stack.append(t)
            elif g[t] != required:
                return False
    return True


def _commuting_partner(n: int, letters: list[list[int]], rng: SplitMix64) -> list[int] | None:
    """One random mapping commuting with every mapping in ``letters``."""
    g: list[int | None] = [None] * n
    order = list(range(n))
    rng.shuffle(order)
    for q in order:
        if g[q] is not None:
            continue
        candidates = list(range(n))
        rng.shuffle(candidates)
        placed = False
        for value in candidates:
            trial = list(g)
            if _propagate(q, value, trial, letters):
                g = trial
                placed = True
                break
        if not placed:
            return None
    assert all(v is not None for v in g)
    return g  # type: ignore[return-value]


def random_commutative(n: int, k: int, seed: Seed) -> Dcsa:
    """Random commutative automaton with n states and k letters.

    Draws the first letter uniformly, then fills in each further letter by
    randomized constraint propagation against the letters so far, rejecting
    and restarting on dead ends.  If propagation keeps failing, the repair
    path draws the next letter as a power of the first (powers always
    commute).  Deterministic for a given seed; raises
    :class:`GenerationError` after a bounded number of full restarts.
    """
    if n < 1:
        raise ValueError("need at least one state")
    if k < 1:
        raise ValueError("need at least one letter")
    if k > 26:
        raise ValueError("at most 26 letters are supported")
    alphabet = Alphabet(tuple(chr(ord("a") + i) for i in range(k)))
    rng = SplitMix64(seed)
    for _ in range(64):
        first = [rng.randrange(n) for _ in range(n)]
        letters = [first]
        while len(letters) < k:
            g = None
            for _ in range(8):
                g = _commuting_partner(n, letters, rng)
                if g is not None:
                    break
            if g is None:
                # repair: iterate the first letter a random number of times
                power = rng.randrange(n) + 1
                g = list(range(n))
                for _ in range(power):
                    g = [first[s] for s in g]
            letters.append(g)
        rows = tuple(tuple(letters[x][q] for x in range(k)) for q in range(n))
        candidate = Dcsa(alphabet, n, rows)
        if is_commutative(candidate):
            return candidate
    raise GenerationError(f"no commutative automaton found for n={n}, k={k}, seed={seed}")


def random_simple_idempotents(n: int, seed: Seed) -> Dcsa:
    """Random binary automaton: ``a`` merges one random state into another,
    ``b`` is a uniformly random permutation.  Deterministic for a seed."""
    if n < 2:
        raise ValueError("need at least two states")
    rng = SplitMix64(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    source = rng.randrange(n)
    target = rng.randrange(n - 1)
    if target >= source:
        target += 1
    rows = []
    for q in range(n):
        a_dest = target if q == source else q
        rows.append((a_dest, perm[q]))
    return Dcsa(_AB, n, tuple(rows))


def fixture_path(name: str):
    """Filesystem path of a shipped ``.aut`` fixture (e.g. ``cerny_4.aut``)."""
    path = importlib.resources.files("synclang") / "fixtures" / name
    if not path.is_file():
        raise FileNotFoundError(f"no shipped fixture named {name!r}")
    return path


def load_fixture(name: str) -> Dcsa:
    """Parse a shipped fixture by file name."""
    return parse_automaton(fixture_path(name).read_text())
