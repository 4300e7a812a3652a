"""Exact solvers: cp^(t), cp, pi_t, pi, k_t and K_t-decompositions.

All partition solvers share one depth-first search. It always branches on the
lowest-index uncovered edge and tries the admissible cliques through that edge
in order of decreasing size, then lexicographically. The incumbent only
changes on strict improvement. The witness is therefore the first optimal
partition in that fixed search order, however strong the pruning is and
however the root branches are spread over worker processes.

Pruning is purely combinatorial:

* edge bound: each further clique covers at most C(t', 2) uncovered edges;
* vertex bound: a vertex with r uncovered incident edges needs at least
  ceil(r / (t' - 1)) more cliques through it,

where t' is the largest admissible clique size.
"""

from __future__ import annotations

import multiprocessing as mp
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Union

from .cliques import Clique, clique_number, cliques_up_to
from .graph import Graph
from .partition import CliquePartition, validate

EDGE_GUARD = 60
DEFAULT_TIMEOUT = 60.0
_INF = float("inf")


class SolveError(ValueError):
    """Bad solver arguments or an instance with no admissible answer."""


class SizeGuardError(SolveError):
    pass


class SolveTimeout(RuntimeError):
    pass


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: Union[CliquePartition, tuple[Clique, ...]]
    nodes_explored: int
    elapsed: float

    @property
    def cliques(self) -> tuple[Clique, ...]:
        w = self.witness
        return w.cliques if isinstance(w, CliquePartition) else w


def default_workers() -> int:
    env = os.environ.get("SPECPART_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _check_guard(g: Graph, force: bool) -> None:
    if g.m > EDGE_GUARD and not force:
        raise SizeGuardError(
            f"graph has {g.m} edges, above the guard of {EDGE_GUARD}; use force"
        )


# --- shared search state -----------------------------------------------------


class _Incumbent:
    """Best value seen by any worker. A plain holder in serial runs, an
    ``mp.Value`` in worker processes."""

    def __init__(self, value: float = _INF):
        self.value = value

    def get(self) -> float:
        return self.value

    def offer(self, v: float, minimise: bool) -> None:
        if (v < self.value) if minimise else (v > self.value):
            self.value = v


class _SharedIncumbent:
    def __init__(self, shared):
        self.shared = shared

    def get(self) -> float:
        return self.shared.value

    def offer(self, v: float, minimise: bool) -> None:
        with self.shared.get_lock():
            cur = self.shared.value
            if (v < cur) if minimise else (v > cur):
                self.shared.value = v


_worker_shared = None


def _init_worker(shared) -> None:
    global _worker_shared
    _worker_shared = shared


# --- partition search ----------------------------------------------------------


@dataclass(frozen=True)
class _PartitionProblem:
    """One connected component, relabelled ``0..k-1``."""

    n: int
    m: int
    edge_ends: tuple[tuple[int, int], ...]
    clique_vertices: tuple[Clique, ...]
    clique_masks: tuple[int, ...]
    candidates: tuple[tuple[int, ...], ...]  # per edge, clique ids in branch order
    tmax: int
    total: bool  # objective: False = number of cliques, True = total size


def _build_problem(g: Graph, cliques: list[Clique], total: bool) -> _PartitionProblem:
    eidx = {e: i for i, e in enumerate(g.edges)}
    masks = []
    for c in cliques:
        mk = 0
        for a in range(len(c)):
            for b in range(a + 1, len(c)):
                mk |= 1 << eidx[(c[a], c[b])]
        masks.append(mk)
    order = sorted(range(len(cliques)), key=lambda i: (-len(cliques[i]), cliques[i]))
    cand = [[] for _ in range(g.m)]
    for i in order:
        mk = masks[i]
        while mk:
            low = mk & -mk
            cand[low.bit_length() - 1].append(i)
            mk ^= low
    return _PartitionProblem(
        n=g.n,
        m=g.m,
        edge_ends=g.edges,
        clique_vertices=tuple(cliques),
        clique_masks=tuple(masks),
        candidates=tuple(tuple(c) for c in cand),
        tmax=max(len(c) for c in cliques),
        total=total,
    )


class _PartitionSearch:
    def __init__(self, prob: _PartitionProblem, incumbent, deadline: float | None):
        self.p = prob
        self.inc = incumbent
        self.deadline = deadline
        self.best = _INF
        self.best_choice: list[int] | None = None
        self.nodes = 0
        self.ebound = comb(prob.tmax, 2)
        self.vbound = prob.tmax - 1

    def _lower(self, rem: int, rdeg: list[int]) -> int:
        vb = self.vbound
        if self.p.total:
            return sum(-(-r // vb) for r in rdeg)
        return max(-(-rem // self.ebound), max(-(-r // vb) for r in rdeg))

    def run(self, unc: int, rdeg: list[int], cost: int, chosen: list[int]) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 1023:
            if time.monotonic() > self.deadline:
                raise SolveTimeout("search timed out")
        if not unc:
            if cost < self.best:
                self.best = cost
                self.best_choice = list(chosen)
                self.inc.offer(cost, True)
            return
        lb = cost + self._lower(bin(unc).count("1"), rdeg)
        if lb >= self.best or lb > self.inc.get():
            return
        p = self.p
        e = (unc & -unc).bit_length() - 1
        for ci in p.candidates[e]:
            mk = p.clique_masks[ci]
            if mk & unc != mk:
                continue
            c = p.clique_vertices[ci]
            s = len(c)
            for v in c:
                rdeg[v] -= s - 1
            chosen.append(ci)
            self.run(unc & ~mk, rdeg, cost + (s if p.total else 1), chosen)
            chosen.pop()
            for v in c:
                rdeg[v] += s - 1

    def root_children(self) -> list[int]:
        full = (1 << self.p.m) - 1
        return list(self.p.candidates[0]) if full else []

    def run_child(self, ci: int) -> None:
        p = self.p
        rdeg = [0] * p.n
        for a, b in p.edge_ends:
            rdeg[a] += 1
            rdeg[b] += 1
        full = (1 << p.m) - 1
        self.nodes += 1
        c = p.clique_vertices[ci]
        for v in c:
            rdeg[v] -= len(c) - 1
        self.run(full & ~p.clique_masks[ci], rdeg, len(c) if p.total else 1, [ci])


def _partition_task(args):
    prob, ci, deadline = args
    search = _PartitionSearch(prob, _SharedIncumbent(_worker_shared), deadline)
    search.run_child(ci)
    return search.best, search.best_choice, search.nodes


def _solve_partition_component(prob: _PartitionProblem, workers: int, deadline):
    """Returns (optimum, chosen clique ids, nodes)."""
    root = _PartitionSearch(prob, _Incumbent(), deadline)
    children = root.root_children()
    if workers <= 1 or len(children) <= 1:
        rdeg = [0] * prob.n
        for a, b in prob.edge_ends:
            rdeg[a] += 1
            rdeg[b] += 1
        root.run((1 << prob.m) - 1, rdeg, 0, [])
        return root.best, root.best_choice, root.nodes
    ctx = mp.get_context("fork")
    shared = ctx.Value("d", _INF)
    with ProcessPoolExecutor(
        max_workers=min(workers, len(children)),
        mp_context=ctx,
        initializer=_init_worker,
        initargs=(shared,),
    ) as pool:
        results = list(pool.map(_partition_task, [(prob, ci, deadline) for ci in children]))
    best, choice, nodes = _INF, None, 1
    for val, ch, nd in results:
        nodes += nd
        # earlier root branch wins ties: keeps the serial witness
        if ch is not None and val < best:
            best, choice = val, ch
    return best, choice, nodes


def _admissible_cliques(g: Graph, t: int, exclude_trivial: bool) -> list[Clique]:
    cl = cliques_up_to(g, t)
    if exclude_trivial:
        cl = [c for c in cl if len(c) < g.n]
    return cl


def _solve_partition(
    g: Graph,
    t: int,
    total: bool,
    exclude_trivial: bool,
    force: bool,
    workers: int | None,
    timeout: float | None,
) -> SolveResult:
    if t < 2:
        raise SolveError("t must be >= 2")
    start = time.perf_counter()
    if g.m == 0:
        return SolveResult(0, CliquePartition.of(g, []), 0, 0.0)
    _check_guard(g, force)
    workers = default_workers() if workers is None else workers
    deadline = None if timeout is None else time.monotonic() + timeout
    all_cliques = _admissible_cliques(g, t, exclude_trivial)
    chosen_all: list[Clique] = []
    optimum = 0
    nodes = 0
    for comp in g.components():
        if len(comp) < 2:
            continue
        sub = g.induced(comp)
        local = {v: i for i, v in enumerate(comp)}
        cl = sorted(
            tuple(local[v] for v in c) for c in all_cliques if c[0] in local
        )
        if not cl:
            raise SolveError("no admissible clique partition exists")
        prob = _build_problem(sub, cl, total)
        best, choice, nd = _solve_partition_component(prob, workers, deadline)
        nodes += nd
        if choice is None:
            raise SolveError("no admissible clique partition exists")
        optimum += int(best)
        chosen_all.extend(tuple(comp[v] for v in prob.clique_vertices[i]) for i in choice)
    witness = CliquePartition.of(g, chosen_all)
    validate(witness)
    return SolveResult(optimum, witness, nodes, time.perf_counter() - start)


def solve_cp_t(g: Graph, t: int, *, exclude_trivial: bool = False, force: bool = False,
               workers: int | None = 1, timeout: float | None = None) -> SolveResult:
    """Minimum number of cliques of size <= t partitioning E(g)."""
    return _solve_partition(g, t, False, exclude_trivial, force, workers, timeout)


def solve_pi_t(g: Graph, t: int, *, exclude_trivial: bool = False, force: bool = False,
               workers: int | None = 1, timeout: float | None = None) -> SolveResult:
    """Minimum total size of a partition of E(g) into cliques of size <= t."""
    return _solve_partition(g, t, True, exclude_trivial, force, workers, timeout)


def _omega_for(g: Graph) -> int:
    return max(2, clique_number(g)) if g.n else 2


def solve_cp(g: Graph, **kw) -> SolveResult:
    return solve_cp_t(g, _omega_for(g), **kw)


def solve_pi(g: Graph, **kw) -> SolveResult:
    return solve_pi_t(g, _omega_for(g), **kw)


# --- edge-disjoint t-clique packing ------------------------------------------


@dataclass(frozen=True)
class _PackingProblem:
    masks: tuple[int, ...]
    per_clique_edges: int


class _PackingSearch:
    def __init__(self, prob: _PackingProblem, incumbent, deadline):
        self.p = prob
        self.inc = incumbent
        self.deadline = deadline
        self.best = -1
        self.best_choice: list[int] | None = None
        self.nodes = 0

    def run(self, start: int, used: int, chosen: list[int]) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 1023:
            if time.monotonic() > self.deadline:
                raise SolveTimeout("search timed out")
        count = len(chosen)
        if count > self.best:
            self.best = count
            self.best_choice = list(chosen)
            self.inc.offer(count, False)
        masks = self.p.masks
        avail = 0
        ncompat = 0
        for j in range(start, len(masks)):
            if not masks[j] & used:
                avail |= masks[j]
                ncompat += 1
        if not ncompat:
            return
        ub = count + min(ncompat, bin(avail).count("1") // self.p.per_clique_edges)
        if ub <= self.best or ub < self.inc.get():
            return
        for j in range(start, len(masks)):
            if masks[j] & used:
                continue
            chosen.append(j)
            self.run(j + 1, used | masks[j], chosen)
            chosen.pop()


def _packing_task(args):
    prob, j, deadline = args
    search = _PackingSearch(prob, _SharedIncumbent(_worker_shared), deadline)
    search.nodes += 1
    search.run(j + 1, prob.masks[j], [j])
    return search.best, search.best_choice, search.nodes


def _solve_packing_component(prob: _PackingProblem, workers: int, deadline):
    if workers <= 1 or len(prob.masks) <= 1:
        s = _PackingSearch(prob, _Incumbent(-1), deadline)
        s.run(0, 0, [])
        return s.best, s.best_choice, s.nodes
    ctx = mp.get_context("fork")
    shared = ctx.Value("d", -1.0)
    with ProcessPoolExecutor(
        max_workers=min(workers, len(prob.masks)),
        mp_context=ctx,
        initializer=_init_worker,
        initargs=(shared,),
    ) as pool:
        results = list(pool.map(
            _packing_task, [(prob, j, deadline) for j in range(len(prob.masks))]
        ))
    best, choice, nodes = 0, [], 1
    for val, ch, nd in results:
        nodes += nd
        if ch is not None and val > best:
            best, choice = val, ch
    return best, choice, nodes


def solve_kt(g: Graph, t: int, *, force: bool = False, workers: int | None = 1,
             timeout: float | None = None) -> SolveResult:
    """Maximum number of pairwise edge-disjoint t-cliques; witness is the clique list."""
    if t < 3:
        raise SolveError("t must be >= 3")
    start = time.perf_counter()
    _check_guard(g, force)
    workers = default_workers() if workers is None else workers
    deadline = None if timeout is None else time.monotonic() + timeout
    tcliques = [c for c in cliques_up_to(g, t) if len(c) == t] if g.m else []
    eidx = {e: i for i, e in enumerate(g.edges)}
    chosen_all: list[Clique] = []
    total = 0
    nodes = 0
    for comp in g.components():
        members = set(comp)
        cl = [c for c in tcliques if c[0] in members]
        if not cl:
            continue
        masks = []
        for c in cl:
            mk = 0
            for a in range(t):
                for b in range(a + 1, t):
                    mk |= 1 << eidx[(c[a], c[b])]
            masks.append(mk)
        prob = _PackingProblem(tuple(masks), comb(t, 2))
        best, choice, nd = _solve_packing_component(prob, workers, deadline)
        nodes += nd
        total += best
        chosen_all.extend(cl[j] for j in choice)
    return SolveResult(total, tuple(sorted(chosen_all)), nodes, time.perf_counter() - start)


# --- K_t-decompositions -------------------------------------------------------


def iter_kt_decompositions(g: Graph, t: int, node_limit: int | None = None
                           ) -> Iterator[CliquePartition]:
    """Yield every K_t-decomposition of ``g`` in a fixed order.

    Exact cover of E(g) by t-cliques, always branching on the uncovered edge
    with the fewest usable t-cliques (lowest index on ties). Raises
    SolveTimeout when more than ``node_limit`` nodes are needed.
    """
    if t < 2:
        raise SolveError("t must be >= 2")
    if g.m == 0:
        yield CliquePartition.of(g, [])
        return
    if g.m % comb(t, 2) or any(d % (t - 1) for d in g.degrees()):
        return
    tcl = [c for c in cliques_up_to(g, t) if len(c) == t]
    eidx = {e: i for i, e in enumerate(g.edges)}
    masks = []
    through: list[list[int]] = [[] for _ in range(g.m)]
    for i, c in enumerate(tcl):
        mk = 0
        for a in range(t):
            for b in range(a + 1, t):
                k = eidx[(c[a], c[b])]
                mk |= 1 << k
                through[k].append(i)
        masks.append(mk)
    nodes = 0

    def search(unc: int, chosen: list[int]):
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise SolveTimeout("decomposition search exceeded its node limit")
        if not unc:
            yield list(chosen)
            return
        best_e, best_opts = -1, None
        u = unc
        while u:
            low = u & -u
            e = low.bit_length() - 1
            u ^= low
            opts = [i for i in through[e] if masks[i] & unc == masks[i]]
            if best_opts is None or len(opts) < len(best_opts):
                best_e, best_opts = e, opts
                if not opts:
                    return
        for i in best_opts:
            chosen.append(i)
            yield from search(unc & ~masks[i], chosen)
            chosen.pop()

    for choice in search((1 << g.m) - 1, []):
        yield CliquePartition.of(g, [tcl[i] for i in choice])


def find_kt_decomposition(g: Graph, t: int, node_limit: int | None = None
                          ) -> CliquePartition | None:
    return next(iter_kt_decompositions(g, t, node_limit), None)
