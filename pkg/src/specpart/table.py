"""Comparison table of the four spectral lower bounds on cp over four graph
families, with closed-form values and exact cp where the solver can run."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .bounds import cp_lower_bound, cp_via_pi_bound, hoffman_lambda_bound, hoffman_q_bound
from .graph import (
    Graph,
    gen_complete_multipartite,
    gen_cycle_complement,
    gen_friendship,
    gen_triangular,
)
from .solve import EDGE_GUARD, SolveTimeout, solve_cp

COLUMNS = ("spectral_cp", "spectral_cp_via_pi", "hoffman_eigencount", "hoffman_min_eigenvalue")


def closed_multipartite(p: int, a: int) -> tuple[float, ...]:
    return (p * (a - 1) + 1, a * a, (-1 + math.sqrt(8 * p * a + 1)) / 2, a)


def closed_cycle_complement(s: int) -> tuple[float, ...]:
    return (
        s + 1,
        (4 * s + 2) / s,
        (-1 + math.sqrt(16 * s + 9)) / 2,
        2 * math.cos(2 * math.pi / (2 * s + 1)) + 1,
    )


def closed_triangular(v: int) -> tuple[float, ...]:
    return (v, v, v - 1, 2)


def closed_friendship(v: int) -> tuple[float, ...]:
    r = math.sqrt(8 * v + 1)
    return ((-1 + r) / 2, (4 * v - 1 + r) / 6, (-1 + math.sqrt(8 * v + 9)) / 2, (-1 + r) / 2)


@dataclass(frozen=True)
class Table1Row:
    family: str
    label: str
    evaluated: tuple[float, ...]
    closed_form: tuple[float, ...]
    cp: Union[int, str]  # exact value, "skipped" or "timeout"
    known_cp: Optional[int]  # closed-form cp where the family has one

    @property
    def residual(self) -> float:
        return max(abs(x - y) for x, y in zip(self.evaluated, self.closed_form))

    def as_dict(self) -> dict:
        out = {"family": self.family, "instance": self.label}
        out.update({c: v for c, v in zip(COLUMNS, self.evaluated)})
        out["cp"] = self.cp
        out["residual"] = self.residual
        return out


def evaluate_bounds(g: Graph) -> tuple[float, ...]:
    return (
        cp_lower_bound(g).raw,
        cp_via_pi_bound(g).raw,
        hoffman_q_bound(g).raw,
        hoffman_lambda_bound(g).raw,
    )


def _instances(p_range, a_range, s_range, v_range, f_range):
    for p in p_range:
        for a in a_range:
            yield ("multipartite", f"K_{{{p}x{a}}}",
                   lambda p=p, a=a: gen_complete_multipartite([a] * p),
                   closed_multipartite(p, a), None)
    for s in s_range:
        yield ("cycle-complement", f"co-C_{2 * s + 1}",
               lambda s=s: gen_cycle_complement(2 * s + 1), closed_cycle_complement(s), None)
    for v in v_range:
        yield ("triangular", f"T({v})", lambda v=v: gen_triangular(v), closed_triangular(v), v)
    for v in f_range:
        yield ("friendship", f"F_{v}", lambda v=v: gen_friendship(v), closed_friendship(v), v)


def table1_rows(
    p_range=range(2, 6),
    a_range=range(2, 6),
    s_range=range(2, 7),
    v_range=range(4, 9),
    f_range=range(2, 9),
    *,
    exact: bool = True,
    timeout: float | None = 60.0,
    workers: int | None = 1,
    progress: Callable[[str], None] | None = None,
) -> list[Table1Row]:
    rows = []
    for family, label, make, closed, known in _instances(p_range, a_range, s_range, v_range, f_range):
        g = make()
        cp: Union[int, str] = "skipped"
        if exact and g.m <= EDGE_GUARD:
            try:
                cp = solve_cp(g, timeout=timeout, workers=workers).optimum
            except SolveTimeout:
                cp = "timeout"
        if progress:
            progress(label)
        rows.append(Table1Row(family, label, evaluate_bounds(g), tuple(float(x) for x in closed),
                              cp, known))
    return rows
