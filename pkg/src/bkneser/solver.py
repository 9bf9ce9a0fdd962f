"""Exact b-chromatic number search, brute-force oracle, and greedy heuristic.

The exact solver tests feasibility of k-color b-colorings for k descending
from an upper bound; the first feasible k is the answer because the target is
a maximum (b-colorability is not monotone in k, so every k above the answer
is refuted exhaustively). Feasibility search seeds k candidate dominating
vertices with distinct colors and extends by backtracking with forward
checking on properness and on each seed retaining a path to domination.

Completeness of the seeding: any b-coloring with k colors has, per class, a
minimum-index dominating vertex; sorting those k vertices and renaming colors
to match their order yields an equivalent coloring found by exactly one seed
combination. Refuting every combination therefore refutes k.

The brute-force oracle is an independent check: it enumerates canonical
colorings (restricted-growth strings, pruned only by properness) and tests
domination at the leaves, with no shared search machinery.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from threading import Lock
from typing import Callable, Iterator, TypeVar

from .bcoloring import BColoringFailure, Coloring, is_b_coloring
from .bounds import best_upper_bound
from .kneser import Graph, InstanceTooLarge

DEFAULT_NODE_BUDGET = 100_000_000
DEFAULT_BRUTE_FORCE_CAP = 12
_FLUSH_EVERY = 2048

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class Budget:
    """Resource limits for exact search; exceeding them yields a bracket,
    never a wrong answer."""

    max_nodes: int = DEFAULT_NODE_BUDGET
    time_limit: float | None = None


class BudgetExceeded(Exception):
    """Search ran out of nodes or time; carries the partial bracket.

    lower_bound (with certificate) comes from the best verified b-coloring
    found before the limit; upper_bound is the largest k not yet refuted.
    """

    def __init__(
        self,
        message: str,
        *,
        tested_k: int,
        lower_bound: int | None = None,
        upper_bound: int | None = None,
        certificate: Coloring | None = None,
        nodes_explored: int = 0,
    ) -> None:
        super().__init__(message)
        self.tested_k = tested_k
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.certificate = certificate
        self.nodes_explored = nodes_explored


class _StopSearch(Exception):
    """Internal signal: budget exhausted; unwinds the current search."""


class _BudgetTracker:
    """Shared node/time accounting; workers flush local counts in batches."""

    def __init__(self, budget: Budget) -> None:
        self.budget = budget
        self._lock = Lock()
        self.nodes = 0
        self._deadline = (
            time.monotonic() + budget.time_limit
            if budget.time_limit is not None
            else None
        )
        self.stopped = False

    def add(self, n: int, enforce: bool = True) -> None:
        if n:
            with self._lock:
                self.nodes += n
        if not enforce:
            return
        if (
            self.stopped
            or self.nodes > self.budget.max_nodes
            or (self._deadline is not None and time.monotonic() > self._deadline)
        ):
            self.stopped = True
            raise _StopSearch


@dataclass(frozen=True)
class SolveStats:
    nodes_explored: int
    elapsed_seconds: float
    mode: str


@dataclass(frozen=True)
class SolveResult:
    """phi is exact in exact/brute modes and a verified lower bound in
    heuristic mode; the certificate always passes b-coloring verification."""

    phi: int
    certificate: Coloring
    infeasible_at: tuple[int, ...]
    stats: SolveStats
    exact: bool


def degree_bound(graph: Graph) -> int:
    """Largest m with at least m vertices of degree >= m-1.

    Sound for every graph: a b-coloring with m colors needs m dominating
    vertices in distinct classes, each of degree >= m-1. Equals d+1 on
    d-regular graphs.
    """
    degs = sorted(graph.degrees(), reverse=True)
    m = 0
    for i, d in enumerate(degs):
        if d >= i:
            m = i + 1
        else:
            break
    return m


class _SearchContext:
    """Per-(graph, k) immutable data shared by all seed branches."""

    __slots__ = ("n", "k", "full_colors", "adj", "closed_adj")

    def __init__(self, graph: Graph, k: int) -> None:
        self.n = graph.vertex_count
        self.k = k
        self.full_colors = (1 << k) - 1
        self.adj = tuple(graph.neighbors(v) for v in range(self.n))
        self.closed_adj = tuple((v,) + self.adj[v] for v in range(self.n))


def _witness_viable(
    ctx: _SearchContext, color: list[int], allowed: list[int], w: int
) -> bool:
    """Can w still end up seeing every color? Colored neighbors contribute
    their color; uncolored ones anything still allowed for them."""
    vis = 0
    for u in ctx.closed_adj[w]:
        c = color[u]
        vis |= (1 << c) if c >= 0 else allowed[u]
    return vis == ctx.full_colors


def _search_with_seeds(
    ctx: _SearchContext, seeds: tuple[int, ...], tracker: _BudgetTracker
) -> list[int] | None:
    """Extend seed colors 0..k-1 on `seeds` to a full coloring where every
    seed dominates its class; None when this branch is exhausted."""
    k = ctx.k
    color = [-1] * ctx.n
    allowed = [ctx.full_colors] * ctx.n
    for i, w in enumerate(seeds):
        color[w] = i
    for i, w in enumerate(seeds):
        bit = 1 << i
        for u in ctx.adj[w]:
            if color[u] < 0 and allowed[u] & bit:
                allowed[u] &= ~bit
                if not allowed[u]:
                    return None
    for w in seeds:
        if not _witness_viable(ctx, color, allowed, w):
            return None

    order = [v for v in range(ctx.n) if color[v] < 0]
    pending = [0]

    max_nodes = tracker.budget.max_nodes

    def bump() -> None:
        pending[0] += 1
        if pending[0] >= _FLUSH_EVERY or tracker.nodes + pending[0] > max_nodes:
            n, pending[0] = pending[0], 0
            tracker.add(n)

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        avail = allowed[v]
        while avail:
            bit = avail & -avail
            avail ^= bit
            bump()
            color[v] = bit.bit_length() - 1
            touched = []
            dead = False
            for u in ctx.adj[v]:
                if color[u] < 0 and allowed[u] & bit:
                    allowed[u] &= ~bit
                    touched.append(u)
                    if not allowed[u]:
                        dead = True
                        break
            if not dead and all(
                _witness_viable(ctx, color, allowed, w) for w in seeds
            ):
                if extend(pos + 1):
                    return True
            color[v] = -1
            for u in touched:
                allowed[u] |= bit
        return False

    try:
        found = extend(0)
    finally:
        tracker.add(pending[0], enforce=False)
    return list(color) if found else None


def _first_in_order(
    items: Iterator[T], fn: Callable[[T], R | None], threads: int
) -> R | None:
    """First non-None fn(item) in item order; deterministic regardless of
    thread count because results are reduced strictly in submission order."""
    if threads <= 1:
        for item in items:
            result = fn(item)
            if result is not None:
                return result
        return None
    wave = max(2, threads * 2)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        while True:
            batch = list(islice(items, wave))
            if not batch:
                return None
            futures = [pool.submit(fn, item) for item in batch]
            outcomes: list[object] = []
            for f in futures:
                try:
                    outcomes.append(f.result())
                except _StopSearch as exc:
                    outcomes.append(exc)
            for out in outcomes:
                if isinstance(out, _StopSearch):
                    raise out
                if out is not None:
                    return out  # type: ignore[return-value]


def feasible_b_coloring(
    graph: Graph,
    k: int,
    budget: Budget | None = None,
    threads: int = 1,
    _tracker: _BudgetTracker | None = None,
) -> Coloring | None:
    """A verified b-coloring with exactly k colors, or None after exhausting
    every seed combination (a proof of infeasibility).

    Raises BudgetExceeded when the node or time budget runs out, which is
    distinct from infeasibility.
    """
    n = graph.vertex_count
    if n == 0:
        raise ValueError("empty graph rejected")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    tracker = _tracker if _tracker is not None else _BudgetTracker(budget or Budget())
    candidates = [v for v in range(n) if graph.degree(v) >= k - 1]
    if len(candidates) < k:
        return None
    ctx = _SearchContext(graph, k)

    def worker(seeds: tuple[int, ...]) -> list[int] | None:
        tracker.add(0)  # fast-fail when another worker already stopped us
        return _search_with_seeds(ctx, seeds, tracker)

    try:
        assignment = _first_in_order(combinations(candidates, k), worker, threads)
    except _StopSearch:
        raise BudgetExceeded(
            f"budget exhausted while testing k={k}",
            tested_k=k,
            nodes_explored=tracker.nodes,
        ) from None
    if assignment is None:
        return None
    certificate = Coloring.from_sequence(assignment)
    if certificate.color_count != k:
        raise RuntimeError("internal error: search lost a color class")
    if not is_b_coloring(graph, certificate).valid:
        raise RuntimeError("internal error: search produced an invalid b-coloring")
    return certificate


def brute_force_phi(graph: Graph, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> SolveResult:
    """Exhaustive oracle: enumerate canonical colorings and take the maximum
    color count admitting a b-coloring.

    Canonical colorings are restricted-growth strings over at most
    degree_bound(graph) blocks, pruned only by properness; domination is
    decided at complete assignments. Intended for cross-validation, hence the
    small default cap.
    """
    n = graph.vertex_count
    if n == 0:
        raise ValueError("empty graph rejected")
    if n > cap:
        raise InstanceTooLarge(
            f"instance too large: brute force capped at {cap} vertices (got {n})"
        )
    start = time.perf_counter()
    ub = degree_bound(graph)
    adj_masks = [0] * n
    for v in range(n):
        for u in graph.neighbors(v):
            adj_masks[v] |= 1 << u
    closed_masks = [adj_masks[v] | (1 << v) for v in range(n)]

    colors = [-1] * n
    block_masks: list[int] = []
    found: dict[int, tuple[int, ...]] = {}
    nodes = 0

    def dominated_everywhere() -> bool:
        blocks = len(block_masks)
        for bm in block_masks:
            members = bm
            ok = False
            while members:
                low = members & -members
                members ^= low
                v = low.bit_length() - 1
                cm = closed_masks[v]
                if all(cm & other for other in block_masks):
                    ok = True
                    break
            if not ok:
                return False
        return blocks > 0

    def descend(v: int) -> None:
        nonlocal nodes
        if v == n:
            b = len(block_masks)
            if b not in found and dominated_everywhere():
                found[b] = tuple(colors)
            return
        nodes += 1
        vbit = 1 << v
        for i, bm in enumerate(block_masks):
            if not bm & adj_masks[v]:
                colors[v] = i
                block_masks[i] = bm | vbit
                descend(v + 1)
                block_masks[i] = bm
        if len(block_masks) < ub:
            colors[v] = len(block_masks)
            block_masks.append(vbit)
            descend(v + 1)
            block_masks.pop()
        colors[v] = -1

    descend(0)
    if not found:
        raise RuntimeError("internal error: no b-coloring found at any k >= 1")
    phi = max(found)
    certificate = Coloring.from_sequence(found[phi])
    if not is_b_coloring(graph, certificate).valid:
        raise RuntimeError("internal error: oracle certificate failed verification")
    return SolveResult(
        phi=phi,
        certificate=certificate,
        infeasible_at=tuple(range(phi + 1, ub + 1)),
        stats=SolveStats(nodes, time.perf_counter() - start, "brute"),
        exact=True,
    )


def exact_phi(
    graph: Graph,
    upper_hint: int | None = None,
    budget: Budget | None = None,
    threads: int = 1,
) -> SolveResult:
    """Exact b-chromatic number by descending feasibility search.

    The upper bound is the minimum of the degree bound, the closed-form bound
    report when the graph carries Kneser parameters, and upper_hint (trusted;
    an invalid hint below the true value makes the answer wrong). A greedy
    heuristic run seeds the lower end of the bracket; when every k above it
    is refuted, its certificate is already the optimum.
    """
    n = graph.vertex_count
    if n == 0:
        raise ValueError("empty graph rejected")
    start = time.perf_counter()
    ub = degree_bound(graph)
    if graph.params is not None:
        ub = min(ub, best_upper_bound(graph.params).best)
    if upper_hint is not None:
        ub = min(ub, upper_hint)
    heur = heuristic_b_coloring(graph)
    lower, certificate = heur.phi, heur.certificate
    if lower > ub:
        if upper_hint is not None and upper_hint < lower:
            raise ValueError(
                f"upper hint {upper_hint} lies below a verified lower bound {lower}"
            )
        raise RuntimeError("internal error: heuristic exceeded a sound upper bound")
    tracker = _BudgetTracker(budget or Budget())
    phi = lower
    for k in range(ub, lower, -1):
        try:
            found = feasible_b_coloring(graph, k, threads=threads, _tracker=tracker)
        except BudgetExceeded:
            raise BudgetExceeded(
                f"budget exhausted while testing k={k}; phi in [{lower}, {k}]",
                tested_k=k,
                lower_bound=lower,
                upper_bound=k,
                certificate=certificate,
                nodes_explored=tracker.nodes,
            ) from None
        if found is not None:
            phi, certificate = k, found
            break
    stats = SolveStats(
        tracker.nodes + heur.stats.nodes_explored,
        time.perf_counter() - start,
        "exact",
    )
    return SolveResult(
        phi=phi,
        certificate=certificate,
        infeasible_at=tuple(range(phi + 1, ub + 1)),
        stats=stats,
        exact=True,
    )


def heuristic_b_coloring(graph: Graph) -> SolveResult:
    """Greedy lower-bound certificate; always returns a verified b-coloring.

    Two phases: (1) a guaranteed fallback that takes a largest-first proper
    coloring and repeatedly recolors away any class lacking a dominating
    vertex (each member of such a class misses some color, and members are
    pairwise non-adjacent, so the class always empties and the color count
    drops by one; properness is preserved throughout); (2) seeded greedy
    attempts for each larger k, with a bounded single-vertex repair pass,
    kept only if the verifier accepts the result.
    """
    n = graph.vertex_count
    if n == 0:
        raise ValueError("empty graph rejected")
    start = time.perf_counter()
    steps = [0]
    base = _eliminate_undominated(graph, _greedy_proper(graph, steps), steps)
    best = base
    for k in range(degree_bound(graph), base.color_count, -1):
        attempt = _seeded_greedy(graph, k, steps)
        if attempt is not None:
            best = attempt
            break
    if not is_b_coloring(graph, best).valid:
        raise RuntimeError("internal error: heuristic produced an invalid coloring")
    return SolveResult(
        phi=best.color_count,
        certificate=best,
        infeasible_at=(),
        stats=SolveStats(steps[0], time.perf_counter() - start, "heuristic"),
        exact=False,
    )


def _greedy_proper(graph: Graph, steps: list[int]) -> list[int]:
    """Largest-first greedy proper coloring (ties by vertex index)."""
    n = graph.vertex_count
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    colors = [-1] * n
    for v in order:
        steps[0] += 1
        used = {colors[u] for u in graph.neighbors(v) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _eliminate_undominated(
    graph: Graph, colors: list[int], steps: list[int]
) -> Coloring:
    """Recolor away undominated classes until the coloring is a b-coloring."""
    rounds = max(c for c in colors) + 2
    for _ in range(rounds):
        coloring = Coloring.from_sequence(colors)
        verdict = is_b_coloring(graph, coloring)
        if verdict.valid:
            return coloring
        if verdict.reason is not BColoringFailure.MISSING_DOMINATING_VERTEX:
            raise RuntimeError("internal error: base coloring lost properness")
        colors = list(coloring.colors)
        count = coloring.color_count
        failing = verdict.failing_color
        for v in [v for v in range(len(colors)) if colors[v] == failing]:
            steps[0] += 1
            seen = {colors[u] for u in graph.closed_neighbors(v)}
            missing = [c for c in range(count) if c not in seen]
            if not missing:
                break  # class became dominated; re-verify from the top
            colors[v] = missing[0]
    raise RuntimeError("internal error: undominated-class elimination diverged")


def _seeded_greedy(graph: Graph, k: int, steps: list[int]) -> Coloring | None:
    """One greedy attempt at a k-color b-coloring; None when it fails."""
    n = graph.vertex_count
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    seeds = [v for v in order if graph.degree(v) >= k - 1][:k]
    if len(seeds) < k:
        return None
    colors = [-1] * n
    for i, w in enumerate(seeds):
        colors[w] = i
    seed_set = set(seeds)
    for v in order:
        if v in seed_set:
            continue
        steps[0] += 1
        used = {colors[u] for u in graph.neighbors(v) if colors[u] >= 0}
        avail = [c for c in range(k) if c not in used]
        if not avail:
            return None
        colors[v] = max(avail, key=lambda c: (_seed_gain(graph, colors, seeds, v, c), -c))
    for _ in range(k + 1):
        coloring = Coloring.from_sequence(colors)
        verdict = is_b_coloring(graph, coloring)
        if verdict.valid:
            return coloring
        if verdict.reason is not BColoringFailure.MISSING_DOMINATING_VERTEX:
            return None
        colors = list(coloring.colors)
        assert verdict.failing_color is not None
        if not _repair_class(graph, colors, verdict.failing_color, k, steps):
            return None
    return None


def _seed_gain(
    graph: Graph, colors: list[int], seeds: list[int], v: int, c: int
) -> int:
    """How many seed neighborhoods would gain a still-missing color c from v."""
    gain = 0
    for w in seeds:
        if v not in graph.neighbor_set(w):
            continue
        seen = {colors[u] for u in graph.closed_neighbors(w) if colors[u] >= 0}
        if c not in seen:
            gain += 1
    return gain


def _repair_class(
    graph: Graph, colors: list[int], failing: int, k: int, steps: list[int]
) -> bool:
    """Move one vertex so a candidate witness of the failing class gains a
    missing color; True when a move was made (validity is re-checked later)."""
    n = graph.vertex_count
    for w in range(n):
        if colors[w] != failing or graph.degree(w) < k - 1:
            continue
        seen = {colors[u] for u in graph.closed_neighbors(w)}
        missing = sorted(set(range(k)) - seen)
        if not missing:
            return True  # w already dominates; verifier will confirm
        for c in missing:
            for u in graph.neighbors(w):
                steps[0] += 1
                old = colors[u]
                if sum(1 for x in range(n) if colors[x] == old) <= 1:
                    continue
                if any(colors[y] == c for y in graph.neighbors(u)):
                    continue
                colors[u] = c
                return True
    return False
