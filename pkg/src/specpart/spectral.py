"""Dense symmetric eigenvalues and the adjacency-spectrum statistics built on them.

The eigensolver is Householder reduction to tridiagonal form followed by
implicit QL iteration with Wilkinson-type shifts. Only eigenvalues are
computed; eigenvectors are never formed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph

TAU_EIG = 1e-9
TAU_GROUP = 1e-6

# SymMatrix: any real symmetric square array. Symmetry is the caller's
# responsibility and is not checked numerically.
SymMatrix = np.ndarray


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # descending
    grouped: tuple[tuple[float, int], ...]

    @property
    def order(self) -> int:
        return len(self.eigenvalues)

    @property
    def largest(self) -> float:
        return self.eigenvalues[0]

    @property
    def smallest(self) -> float:
        return self.eigenvalues[-1]

    def distinct(self) -> list[float]:
        return [v for v, _ in self.grouped]


def _as_matrix(m) -> np.ndarray:
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise SpectralError("matrix order must be >= 1")
    if not np.all(np.isfinite(a)):
        raise SpectralError("matrix has non-finite entries")
    return a


def tridiagonalize(m) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction. Returns (diagonal, subdiagonal) with the
    subdiagonal padded by a trailing zero to length n."""
    a = _as_matrix(m).copy()
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm = math.sqrt(float(x @ x))
        if norm == 0.0:
            continue
        alpha = -norm if x[0] >= 0 else norm
        v = x
        v[0] -= alpha
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = 2.0 * p - 2.0 * float(v @ p) * v
        sub -= np.outer(v, w) + np.outer(w, v)
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = a[k, k + 1] = alpha
    d = a.diagonal().copy()
    e = np.zeros(n)
    if n > 1:
        e[:-1] = a.diagonal(-1)
    return d, e


def tridiagonal_eigenvalues(d, e, max_sweeps: int = 60) -> list[float]:
    """Implicit QL on a symmetric tridiagonal matrix (unsorted result)."""
    d = [float(x) for x in d]
    e = [float(x) for x in e]
    n = len(d)
    if n:
        e[-1] = 0.0
    eps = np.finfo(float).eps
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise SpectralError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def group_eigenvalues(values, tol: float = TAU_GROUP) -> tuple[tuple[float, int], ...]:
    """Group descending values into (mean, multiplicity) runs."""
    groups: list[list[float]] = []
    for x in values:
        if groups and abs(groups[-1][-1] - x) <= tol:
            groups[-1].append(x)
        else:
            groups.append([x])
    return tuple((sum(g) / len(g), len(g)) for g in groups)


def sym_eigenvalues(m: SymMatrix) -> Spectrum:
    d, e = tridiagonalize(m)
    vals = sorted(tridiagonal_eigenvalues(d, e), reverse=True)
    return Spectrum(tuple(vals), group_eigenvalues(vals))


@lru_cache(maxsize=256)
def graph_spectrum(g: Graph) -> Spectrum:
    if g.n < 1:
        raise SpectralError("graph must have at least one vertex")
    return sym_eigenvalues(g.adjacency_matrix())


def spectral_radius(g: Graph) -> float:
    return graph_spectrum(g).largest


def lambda_min(g: Graph) -> float:
    return graph_spectrum(g).smallest


def count_not_minus_one(g: Graph) -> int:
    """Number of adjacency eigenvalues farther than TAU_GROUP from -1."""
    return sum(1 for x in graph_spectrum(g).eigenvalues if abs(x + 1.0) > TAU_GROUP)


def check_weyl(a: SymMatrix, b: SymMatrix, i: int, j: int) -> tuple[bool, bool]:
    """Check both Weyl inequalities for 1-based indices ``i``, ``j``.

    Upper form (needs j <= i): l_i(A+B) <= l_j(A) + l_{i+1-j}(B).
    Lower form (needs i <= j): l_i(A+B) >= l_j(A) + l_{i+n-j}(B).
    An inapplicable form is reported as True.
    """
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape != b.shape:
        raise SpectralError("matrices must have equal order")
    n = a.shape[0]
    if not (1 <= i <= n and 1 <= j <= n):
        raise SpectralError(f"indices must lie in 1..{n}")
    la = sym_eigenvalues(a).eigenvalues
    lb = sym_eigenvalues(b).eigenvalues
    ls = sym_eigenvalues(a + b).eigenvalues
    upper = True
    if j <= i:
        upper = ls[i - 1] <= la[j - 1] + lb[i - j] + TAU_EIG * max(1.0, abs(ls[i - 1]))
    lower = True
    if i <= j:
        lower = ls[i - 1] >= la[j - 1] + lb[i + n - j - 1] - TAU_EIG * max(1.0, abs(ls[i - 1]))
    return upper, lower


def max_row_sum(m: SymMatrix) -> float:
    a = _as_matrix(m)
    if np.any(a < 0):
        raise SpectralError("max_row_sum requires nonnegative entries")
    return float(a.sum(axis=1).max())
