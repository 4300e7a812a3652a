"""Spectral bounds on clique-partition quantities and their equality cases.

Lower bounds are strengthened by ceiling and upper bounds by floor, each with
a TAU_EIG slack so that numerically integral values round as intended.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Any, Optional, Union

from .cliques import clique_number
from .designs import Design, DesignError, decomposition_to_design, design_to_dict, validate_design
from .graph import Graph, degree_profile
from .partition import CliquePartition, partition_to_dict
from .solve import (
    EDGE_GUARD,
    SolveError,
    SolveTimeout,
    iter_kt_decompositions,
    solve_cp,
    solve_cp_t,
    solve_kt,
    solve_pi,
    solve_pi_t,
)
from .spectral import TAU_EIG, TAU_GROUP, count_not_minus_one, graph_spectrum

ATTAINED = "attained-with-certificate"
NOT_ATTAINED = "not-attained"
UNDECIDED = "undecided"

# structural search budget for equality certificates
DECOMPOSITION_NODE_LIMIT = 200_000


class BoundPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    name: str
    quantity: str  # cp, cp_t, pi, pi_t, k_t
    params: dict
    raw: float
    strengthened: int
    upper: bool = False
    equality_diagnosis: str = UNDECIDED
    certificate: Optional[Union[Design, CliquePartition, tuple]] = None
    exact: Optional[int] = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "quantity": self.quantity,
            "params": dict(self.params),
            "raw": self.raw,
            "strengthened": self.strengthened,
            "equality_diagnosis": self.equality_diagnosis,
            "exact": self.exact,
        }
        if isinstance(self.certificate, Design):
            out["certificate"] = {"design": design_to_dict(self.certificate)}
        elif isinstance(self.certificate, CliquePartition):
            out["certificate"] = {"partition": partition_to_dict(self.certificate)}
        elif self.certificate is not None:
            out["certificate"] = {"packing": [list(c) for c in self.certificate]}
        return out


def _report(name, quantity, params, raw, upper=False) -> BoundReport:
    strong = math.floor(raw + TAU_EIG) if upper else math.ceil(raw - TAU_EIG)
    return BoundReport(name, quantity, params, float(raw), int(strong), upper)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise BoundPreconditionError("graph is not connected")


def _require_t(t: int, minimum: int) -> None:
    if t < minimum:
        raise BoundPreconditionError(f"t must be >= {minimum}")


def _omega(g: Graph) -> int:
    w = clique_number(g)
    if w < 2:
        raise BoundPreconditionError("graph has no edges")
    return w


# --- the bounds --------------------------------------------------------------


def hoffman_q_bound(g: Graph) -> BoundReport:
    """cp >= (-1 + sqrt(8q + 1)) / 2, q = #eigenvalues different from -1."""
    if g.n == 0 or degree_profile(g).has_isolated_vertex:
        raise BoundPreconditionError("graph has an isolated vertex")
    q = count_not_minus_one(g)
    return _report("hoffman_eigencount", "cp", {"q": q}, (-1 + math.sqrt(8 * q + 1)) / 2)


def hoffman_lambda_bound(g: Graph) -> BoundReport:
    """cp >= -lambda_min."""
    if g.m == 0:
        raise BoundPreconditionError("graph has no edges")
    return _report("hoffman_min_eigenvalue", "cp", {}, -graph_spectrum(g).smallest)


def _radius_degree_term(g: Graph, t: int) -> tuple[float, int]:
    rho = graph_spectrum(g).largest
    delta = degree_profile(g).min_degree
    return rho, _ceil_div(delta, t - 1)


def cp_t_lower_bound(g: Graph, t: int) -> BoundReport:
    """cp^(t) >= rho - t + 1 + ceil(delta / (t - 1))."""
    _require_connected(g)
    _require_t(t, 2)
    rho, c = _radius_degree_term(g, t)
    return _report("spectral_cp_t", "cp_t", {"t": t}, rho - t + 1 + c)


def cp_lower_bound(g: Graph) -> BoundReport:
    _require_connected(g)
    w = _omega(g)
    return replace(cp_t_lower_bound(g, w), name="spectral_cp", quantity="cp",
                   params={"omega": w})


def pi_t_lower_bound(g: Graph, t: int) -> BoundReport:
    """pi_t >= rho + (n - t + 1) ceil(delta / (t - 1))."""
    _require_connected(g)
    _require_t(t, 2)
    rho, c = _radius_degree_term(g, t)
    return _report("spectral_pi_t", "pi_t", {"t": t}, rho + (g.n - t + 1) * c)


def kt_upper_bound(g: Graph, t: int) -> BoundReport:
    """k_t <= (2m - rho - (n - t + 1) ceil(delta / (t - 1))) / (t (t - 2))."""
    _require_connected(g)
    _require_t(t, 3)
    rho, c = _radius_degree_term(g, t)
    raw = (2 * g.m - rho - (g.n - t + 1) * c) / (t * (t - 2))
    return _report("spectral_kt", "k_t", {"t": t}, raw, upper=True)


def pi_lower_bound(g: Graph) -> BoundReport:
    _require_connected(g)
    w = _omega(g)
    return replace(pi_t_lower_bound(g, w), name="spectral_pi", quantity="pi",
                   params={"omega": w})


def cp_via_pi_bound(g: Graph) -> BoundReport:
    """cp >= pi / omega, with pi bounded below spectrally."""
    pb = pi_lower_bound(g)
    w = pb.params["omega"]
    return _report("spectral_cp_via_pi", "cp", {"omega": w}, pb.raw / w)


# --- equality ------------------------------------------------------------------


BOUND_KINDS = ("cp_t", "pi_t", "k_t")


def _matches(raw: float, value: int) -> bool:
    return abs(raw - value) <= TAU_EIG * max(1.0, abs(raw))


def _three_eigenvalue_pattern(delta: int, t: int, k: int, n: int, v: int):
    expected = [(float(delta), 1), (float(t - 1 - k), v - 1), (float(-k), n - v)]
    return [(x, mult) for x, mult in expected if mult > 0]


def spectrum_matches(g: Graph, expected: list[tuple[float, int]]) -> bool:
    got = graph_spectrum(g).grouped
    exp = sorted(expected, reverse=True)
    return len(got) == len(exp) and all(
        gm == em and abs(gv - ev) <= TAU_GROUP for (gv, gm), (ev, em) in zip(got, exp)
    )


def _pairwise_single_intersection(p: CliquePartition) -> bool:
    sets = [set(c) for c in p.cliques]
    return all(len(a & b) == 1 for a, b in combinations(sets, 2))


def _classify_cp_t(g: Graph, t: int, confirm: bool, workers, timeout) -> BoundReport:
    rep = cp_t_lower_bound(g, t)
    prof = degree_profile(g)
    if not prof.is_regular:
        return replace(rep, equality_diagnosis=NOT_ATTAINED, note="graph is not regular")
    delta = prof.min_degree
    if delta % (t - 1):
        return replace(rep, equality_diagnosis=NOT_ATTAINED, note="t - 1 does not divide the degree")
    k = delta // (t - 1)
    if (g.n * k) % t:
        return replace(rep, equality_diagnosis=NOT_ATTAINED, note="k n / t is not an integer")
    v = g.n * k // t
    if not spectrum_matches(g, _three_eigenvalue_pattern(delta, t, k, g.n, v)):
        return replace(rep, equality_diagnosis=NOT_ATTAINED,
                       note="spectrum differs from the block-graph pattern")
    found = None
    try:
        for p in iter_kt_decompositions(g, t, DECOMPOSITION_NODE_LIMIT):
            if _pairwise_single_intersection(p):
                found = p
                break
    except SolveTimeout:
        return replace(rep, note="decomposition search exceeded its budget")
    if found is None:
        return replace(rep, equality_diagnosis=NOT_ATTAINED,
                       note="no K_t-decomposition with pairwise-meeting cliques")
    if found.size == 1:
        cert: Union[Design, CliquePartition] = found
    else:
        try:
            cert = decomposition_to_design(g, found)
        except DesignError as exc:
            return replace(rep, equality_diagnosis=NOT_ATTAINED, note=str(exc))
        validate_design(cert)
    if not _matches(rep.raw, found.size):
        return replace(rep, equality_diagnosis=NOT_ATTAINED, certificate=cert,
                       note="certificate size differs from the bound")
    return _confirm(rep, cert, found.size, confirm and g.m <= EDGE_GUARD,
                    lambda: solve_cp_t(g, t, workers=workers, timeout=timeout).optimum)


def _classify_regular_decomposition(g: Graph, t: int, kind: str, confirm: bool,
                                    workers, timeout) -> BoundReport:
    rep = pi_t_lower_bound(g, t) if kind == "pi_t" else kt_upper_bound(g, t)
    if not degree_profile(g).is_regular:
        return replace(rep, equality_diagnosis=NOT_ATTAINED, note="graph is not regular")
    try:
        found = next(iter_kt_decompositions(g, t, DECOMPOSITION_NODE_LIMIT), None)
    except SolveTimeout:
        return replace(rep, note="decomposition search exceeded its budget")
    if found is None:
        return replace(rep, equality_diagnosis=NOT_ATTAINED, note="no K_t-decomposition")
    value = t * found.size if kind == "pi_t" else found.size
    if not _matches(rep.raw, value):
        return replace(rep, equality_diagnosis=NOT_ATTAINED, certificate=found,
                       note="certificate value differs from the bound")
    if kind == "pi_t":
        solver = lambda: solve_pi_t(g, t, workers=workers, timeout=timeout).optimum  # noqa: E731
    else:
        solver = lambda: solve_kt(g, t, workers=workers, timeout=timeout).optimum  # noqa: E731
    return _confirm(rep, found, value, confirm and g.m <= EDGE_GUARD, solver)


def _confirm(rep: BoundReport, cert, value: int, run_solver: bool, solver) -> BoundReport:
    """The certificate already meets the bound, so it is optimal; the exact
    solver, when within the size guard, re-derives the value independently."""
    if run_solver:
        try:
            exact = solver()
        except SolveTimeout:
            return replace(rep, certificate=cert, note="exact confirmation timed out")
        if exact != rep.strengthened:
            return replace(rep, equality_diagnosis=NOT_ATTAINED, certificate=cert, exact=exact,
                           note="exact solver disagrees with the certificate")
        return replace(rep, equality_diagnosis=ATTAINED, certificate=cert, exact=exact)
    return replace(rep, equality_diagnosis=ATTAINED, certificate=cert, exact=value,
                   note="certified structurally; exact solver skipped by the size guard")


def classify_equality(g: Graph, t: int, bound: str, *, confirm: bool = True,
                      workers: int | None = 1, timeout: float | None = None) -> BoundReport:
    """Decide whether ``bound`` ('cp_t', 'pi_t' or 'k_t') is attained on ``g``."""
    _require_connected(g)
    if bound == "cp_t":
        _require_t(t, 2)
        return _classify_cp_t(g, t, confirm, workers, timeout)
    if bound == "pi_t":
        _require_t(t, 2)
        return _classify_regular_decomposition(g, t, "pi_t", confirm, workers, timeout)
    if bound == "k_t":
        _require_t(t, 3)
        return _classify_regular_decomposition(g, t, "k_t", confirm, workers, timeout)
    raise ValueError(f"unknown bound {bound!r}; expected one of {BOUND_KINDS}")


# --- dashboard -----------------------------------------------------------------


@dataclass
class Dashboard:
    reports: list[BoundReport] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    exact: dict[str, Optional[int]] = field(default_factory=dict)

    def by_name(self, name: str) -> BoundReport:
        for r in self.reports:
            if r.name == name:
                return r
        raise KeyError(name)


def _with_exact(rep: BoundReport, exact: Optional[int], witness) -> BoundReport:
    if exact is None:
        return rep
    diag = ATTAINED if _matches(rep.raw, exact) else NOT_ATTAINED
    return replace(rep, exact=exact, equality_diagnosis=diag,
                   certificate=witness if diag == ATTAINED else None)


def bound_dashboard(g: Graph, t: int | None = None, *, exact: bool = True,
                    exact_t: bool = False, workers: int | None = 1,
                    timeout: float | None = None) -> Dashboard:
    """Evaluate every applicable bound on ``g``.

    Bounds whose preconditions fail are skipped and their messages collected
    in ``errors``. Exact values are solved when ``g`` is within the size guard.
    """
    dash = Dashboard()
    makers = [
        ("spectral_cp", lambda: cp_lower_bound(g)),
        ("spectral_cp_via_pi", lambda: cp_via_pi_bound(g)),
        ("hoffman_eigencount", lambda: hoffman_q_bound(g)),
        ("hoffman_min_eigenvalue", lambda: hoffman_lambda_bound(g)),
        ("spectral_pi", lambda: pi_lower_bound(g)),
    ]
    if t is not None:
        makers += [
            ("spectral_cp_t", lambda: cp_t_lower_bound(g, t)),
            ("spectral_pi_t", lambda: pi_t_lower_bound(g, t)),
            ("spectral_kt", lambda: kt_upper_bound(g, t)),
        ]
    for name, make in makers:
        try:
            dash.reports.append(make())
        except BoundPreconditionError as exc:
            dash.errors.append(f"{name}: {exc}")
    if not exact or g.m == 0 or g.m > EDGE_GUARD or not g.is_connected():
        return dash

    solved: dict[str, Any] = {}

    def run(key, fn):
        try:
            res = fn()
        except (SolveTimeout, SolveError) as exc:
            dash.errors.append(f"exact {key}: {exc}")
            dash.exact[key] = None
            return
        dash.exact[key] = res.optimum
        solved[key] = res

    kw = {"workers": workers, "timeout": timeout}
    run("cp", lambda: solve_cp(g, **kw))
    run("pi", lambda: solve_pi(g, **kw))
    if t is not None and exact_t:
        run("cp_t", lambda: solve_cp_t(g, t, **kw))
        run("pi_t", lambda: solve_pi_t(g, t, **kw))
        if t >= 3:
            run("k_t", lambda: solve_kt(g, t, **kw))
    new = []
    for rep in dash.reports:
        res = solved.get(rep.quantity)
        new.append(_with_exact(rep, res.optimum, res.witness) if res else rep)
    dash.reports = new
    return dash
