"""Synchronization searches.

Three layers, from polynomial to exponential:

* ``is_synchronizing``: the pairwise-collapse decision procedure plus a
  greedy witness (repeatedly collapse the pair of image states with the
  shortest collapse word).  Polynomial; witnesses are deterministic but
  not shortest.
* ``shortest_sync_word``: breadth-first search over the power set of
  states.  Exact and exponential; this is the package-wide oracle for
  reset-word lengths.
* ``constrained_sync_oracle``: the same search run in product with a
  constraint automaton, accepting only words the constraint accepts.

All breadth-first layers expand letters in index order with first visit
wins, so a returned word is always the lexicographically least among the
shortest ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from .automata import AutomatonFormatError, Dcsa, Pdfa, Word, step


class BudgetExceededError(RuntimeError):
    """The subset search hit its configuration cap before finding an answer.

    Deliberately distinct from a "no word exists" result, which is a plain
    None return.
    """


@dataclass(frozen=True)
class SearchBudget:
    """Cap on explored subset (or subset x constraint-state) configurations."""

    max_subsets: int = 1 << 22

    def __post_init__(self):
        if self.max_subsets < 1:
            raise ValueError("max_subsets must be at least 1")


@dataclass(frozen=True)
class SyncReport:
    """Outcome of the polynomial synchronization check.

    ``witness`` is present exactly when ``synchronizing`` is true, and then
    ``step(A, Q, witness) == {sync_state}``.
    """

    synchronizing: bool
    witness: Word | None
    sync_state: int | None


# Above this state count the pair-graph work moves to numpy/scipy.
_LARGE_N = 128


def _tri_index(n: int, p: int, q: int) -> int:
    """Linear index of the unordered pair p < q; lexicographic in (p, q)."""
    return p * (2 * n - p - 1) // 2 + (q - p - 1)


def is_synchronizing(a: Dcsa) -> SyncReport:
    """Pairwise-collapse decision with a greedy composed witness.

    Every unordered pair of states must be able to reach the diagonal in
    the pair automaton.  If so, the witness is assembled by repeatedly
    collapsing the image pair with the shortest collapse word (ties go to
    the lexicographically smallest pair, and each collapse word is the
    lexicographically least shortest one).
    """
    if a.n_states == 1:
        return SyncReport(True, (), 0)
    if a.n_states <= _LARGE_N:
        return _is_sync_small(a)
    return _is_sync_large(a)


def _is_sync_small(a: Dcsa) -> SyncReport:
    n, k = a.n_states, a.n_letters
    delta = a.delta
    npairs = n * (n - 1) // 2

    succ: list[list[int]] = [[-1] * k for _ in range(npairs)]
    rev: list[list[int]] = [[] for _ in range(npairs)]
    dist = [-1] * npairs
    queue: deque[int] = deque()
    for p in range(n):
        for q in range(p + 1, n):
            e = _tri_index(n, p, q)
            for x in range(k):
                tp, tq = delta[p][x], delta[q][x]
                if tp == tq:
                    if dist[e] == -1:
                        dist[e] = 1
                        queue.append(e)
                else:
                    f = _tri_index(n, tp, tq) if tp < tq else _tri_index(n, tq, tp)
                    succ[e][x] = f
                    rev[f].append(e)
    while queue:
        e = queue.popleft()
        for g in rev[e]:
            if dist[g] == -1:
                dist[g] = dist[e] + 1
                queue.append(g)
    if any(d == -1 for d in dist):
        return SyncReport(False, None, None)

    def collapse_word(e: int) -> tuple[int, ...]:
        out = []
        d = dist[e]
        while True:
            for x in range(k):
                f = succ[e][x]
                if f == -1:
                    # A collapsing letter exists only at distance 1.
                    if d == 1:
                        out.append(x)
                        return tuple(out)
                elif dist[f] == d - 1:
                    out.append(x)
                    e = f
                    d -= 1
                    break

    cache: dict[int, tuple[int, ...]] = {}
    image = sorted(range(n))
    word: list[int] = []
    while len(image) > 1:
        best_d = best_e = -1
        for i, p in enumerate(image):
            for q in image[i + 1 :]:
                e = _tri_index(n, p, q)
                if best_d == -1 or dist[e] < best_d:
                    best_d, best_e = dist[e], e
        w = cache.get(best_e)
        if w is None:
            w = collapse_word(best_e)
            cache[best_e] = w
        word.extend(w)
        current = set(image)
        for x in w:
            current = {delta[q][x] for q in current}
        image = sorted(current)
    return SyncReport(True, tuple(word), image[0])


def _is_sync_large(a: Dcsa) -> SyncReport:
    n, k = a.n_states, a.n_letters
    delta = np.array(a.delta, dtype=np.int64)
    p_idx, q_idx = np.triu_indices(n, 1)
    npairs = p_idx.shape[0]

    succ_cols = []
    for x in range(k):
        tp = delta[p_idx, x]
        tq = delta[q_idx, x]
        lo = np.minimum(tp, tq)
        hi = np.maximum(tp, tq)
        e = lo * (2 * n - lo - 1) // 2 + (hi - lo - 1)
        succ_cols.append(np.where(lo == hi, npairs, e))

    # Distance of every pair to the diagonal: unweighted shortest path on
    # the reversed pair graph, with one virtual node for the diagonal.
    rows = np.concatenate([col for col in succ_cols])
    cols = np.tile(np.arange(npairs, dtype=np.int64), k)
    data = np.ones(rows.shape[0], dtype=np.int8)
    graph = scipy.sparse.csr_matrix((data, (rows, cols)), shape=(npairs + 1, npairs + 1))
    dist = scipy.sparse.csgraph.dijkstra(graph, directed=True, indices=npairs, unweighted=True)
    dist = dist[:npairs]
    if not np.isfinite(dist).all():
        return SyncReport(False, None, None)
    dist = dist.astype(np.int64)

    # Pairs in shortlex order of (distance, pair index); stable sort keeps
    # the lexicographic tie-break.
    order = np.argsort(dist, kind="stable")
    order_p = p_idx[order]
    order_q = q_idx[order]

    # Python lists are faster than numpy scalars for the per-letter descent.
    dist_l = dist.tolist()
    succ_l = [col.tolist() for col in succ_cols]

    # Binary-lifting tables per letter, for applying long single-letter runs
    # to the image in O(log run) gathers.
    lifts: list[list[np.ndarray]] = [[delta[:, x].copy()] for x in range(k)]

    def apply_run(image: np.ndarray, x: int, count: int) -> np.ndarray:
        table = lifts[x]
        level = 0
        while count:
            if level == len(table):
                prev = table[-1]
                table.append(prev[prev])
            if count & 1:
                image = table[level][image]
            count >>= 1
            level += 1
        return image

    def collapse_runs(e: int) -> list[tuple[int, int]]:
        runs: list[tuple[int, int]] = []
        d = dist_l[e]
        while True:
            step_letter = -1
            for x in range(k):
                f = succ_l[x][e]
                if f == npairs:
                    if d == 1:
                        step_letter = x
                        d = 0
                        break
                elif dist_l[f] == d - 1:
                    step_letter = x
                    e = f
                    d -= 1
                    break
            if runs and runs[-1][0] == step_letter:
                runs[-1] = (step_letter, runs[-1][1] + 1)
            else:
                runs.append((step_letter, 1))
            if d == 0:
                return runs

    cache: dict[int, list[tuple[int, int]]] = {}
    in_image = np.ones(n, dtype=bool)
    image = np.arange(n)
    witness_runs: list[tuple[int, int]] = []
    chunk = 1 << 16
    while image.shape[0] > 1:
        best = -1
        for lo in range(0, npairs, chunk):
            hit = np.flatnonzero(
                in_image[order_p[lo : lo + chunk]] & in_image[order_q[lo : lo + chunk]]
            )
            if hit.shape[0]:
                best = int(order[lo + hit[0]])
                break
        runs = cache.get(best)
        if runs is None:
            runs = collapse_runs(best)
            cache[best] = runs
        for x, count in runs:
            if witness_runs and witness_runs[-1][0] == x:
                witness_runs[-1] = (x, witness_runs[-1][1] + count)
            else:
                witness_runs.append((x, count))
            image = apply_run(image, x, count)
        image = np.unique(image)
        in_image[:] = False
        in_image[image] = True

    letters = np.array([x for x, _ in witness_runs], dtype=np.int64)
    counts = np.array([c for _, c in witness_runs], dtype=np.int64)
    witness = tuple(np.repeat(letters, counts).tolist())
    return SyncReport(True, witness, int(image[0]))


def _mask_images(a: Dcsa) -> list[list[int]]:
    """bit_image[x][q] = bitmask of delta(q, x)."""
    return [[1 << a.delta[q][x] for q in range(a.n_states)] for x in range(a.n_letters)]


def shortest_sync_word(a: Dcsa, budget: SearchBudget | None = None) -> Word | None:
    """Exact shortest reset word by BFS over subsets of Q, or None.

    Returns the lexicographically least among the shortest words.  Raises
    BudgetExceededError when the visited-configuration cap is hit, which is
    a different outcome than "no reset word exists".
    """
    if budget is None:
        budget = SearchBudget()
    n, k = a.n_states, a.n_letters
    if n == 1:
        return ()
    bit_image = _mask_images(a)
    full = (1 << n) - 1
    parent: dict[int, tuple[int, int]] = {}
    visited = {full}
    queue = deque([full])

    def assemble(mask: int) -> Word:
        out = []
        while mask != full:
            mask, x = parent[mask]
            out.append(x)
        out.reverse()
        return tuple(out)

    while queue:
        mask = queue.popleft()
        for x in range(k):
            child = 0
            m = mask
            images = bit_image[x]
            while m:
                low = m & -m
                child |= images[low.bit_length() - 1]
                m ^= low
            if child in visited:
                continue
            visited.add(child)
            if len(visited) > budget.max_subsets:
                raise BudgetExceededError(
                    f"visited more than {budget.max_subsets} subsets without an answer"
                )
            parent[child] = (mask, x)
            if child & (child - 1) == 0:
                return assemble(child)
            queue.append(child)
    return None


def constrained_sync_oracle(a: Dcsa, b: Pdfa, budget: SearchBudget | None = None) -> Word | None:
    """Shortest word in L(b) that synchronizes a, by product subset BFS.

    Configurations are (subset of a's states, state of b) starting from
    (Q, b.start); only letters defined in b are followed; accepting means
    the subset is a singleton and b is in a final state.  None when no such
    word exists; BudgetExceededError when the cap is hit first.
    """
    if a.alphabet.symbols != b.alphabet.symbols:
        raise AutomatonFormatError("constrained search needs identical alphabets")
    if budget is None:
        budget = SearchBudget()
    n, k = a.n_states, a.n_letters
    bit_image = _mask_images(a)
    full = (1 << n) - 1
    start = (full, b.start)
    if full & (full - 1) == 0 and b.start in b.finals:
        return ()
    parent: dict[tuple[int, int], tuple[tuple[int, int], int]] = {}
    visited = {start}
    queue = deque([start])

    def assemble(cfg: tuple[int, int]) -> Word:
        out = []
        while cfg != start:
            cfg, x = parent[cfg]
            out.append(x)
        out.reverse()
        return tuple(out)

    while queue:
        mask, bstate = queue.popleft()
        for x in range(k):
            bnext = b.delta[bstate][x]
            if bnext is None:
                continue
            child_mask = 0
            m = mask
            images = bit_image[x]
            while m:
                low = m & -m
                child_mask |= images[low.bit_length() - 1]
                m ^= low
            child = (child_mask, bnext)
            if child in visited:
                continue
            visited.add(child)
            if len(visited) > budget.max_subsets:
                raise BudgetExceededError(
                    f"visited more than {budget.max_subsets} configurations without an answer"
                )
            parent[child] = ((mask, bstate), x)
            if child_mask & (child_mask - 1) == 0 and bnext in b.finals:
                return assemble(child)
            queue.append(child)
    return None


def idempotent_count_check(a: Dcsa, w: Word) -> bool:
    """Check the reset-word letter-count bound on a synchronizing word.

    For automata whose letters are permutations or simple idempotents,
    every reset word must use non-permutational letters at least n - 1
    times in total; this returns that comparison.  Raises ValueError when
    w does not synchronize a.
    """
    image = step(a, range(a.n_states), w)
    if len(image) != 1:
        raise ValueError("word does not synchronize the automaton")
    n = a.n_states
    nonperm = {
        x for x in range(a.n_letters) if len({a.delta[q][x] for q in range(n)}) < n
    }
    count = sum(1 for x in w if x in nonperm)
    return count >= n - 1
