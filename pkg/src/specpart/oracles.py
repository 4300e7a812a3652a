"""Independent brute-force oracles used to check the fast code paths.

Nothing here imports the solvers or the eigensolver. The clique partition
oracle enumerates every edge-disjoint clique family by include/exclude over a
flat clique list. The spectrum oracle computes the characteristic polynomial
exactly and isolates its roots with Sturm sequences.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .graph import Graph

# --- cliques -------------------------------------------------------------------


def brute_force_cliques(g: Graph, max_size: int | None = None) -> list[tuple[int, ...]]:
    """Every clique of size >= 2 (up to ``max_size``) by subset enumeration."""
    top = g.n if max_size is None else min(max_size, g.n)
    out = []
    for k in range(2, top + 1):
        for s in combinations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in combinations(s, 2)):
                out.append(s)
    return sorted(out)


def brute_force_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    all_c = [tuple([v]) for v in range(g.n)] + brute_force_cliques(g)
    sets = [set(c) for c in all_c]
    return sorted(c for c, s in zip(all_c, sets) if not any(s < o for o in sets))


# --- clique partitions -----------------------------------------------------------


def enumerate_clique_partitions(g: Graph, exclude_trivial: bool = False):
    """Yield every clique partition of E(g) as a sorted list of cliques."""
    cliques = brute_force_cliques(g)
    if exclude_trivial:
        cliques = [c for c in cliques if len(c) < g.n]
    eidx = {e: i for i, e in enumerate(g.edges)}
    masks = [sum(1 << eidx[e] for e in combinations(c, 2)) for c in cliques]
    # dead[i]: edges that no clique with index >= i contains
    dead = [0] * (len(cliques) + 1)
    dead[len(cliques)] = (1 << g.m) - 1
    for i in range(len(cliques) - 1, -1, -1):
        dead[i] = dead[i + 1] & ~masks[i]
    full = (1 << g.m) - 1

    def rec(i: int, covered: int, chosen: list[int]):
        if covered == full:
            yield [cliques[j] for j in chosen]
            return
        if ~covered & full & dead[i]:
            return
        if not masks[i] & covered:
            chosen.append(i)
            yield from rec(i + 1, covered | masks[i], chosen)
            chosen.pop()
        yield from rec(i + 1, covered, chosen)

    if g.m == 0:
        yield []
        return
    yield from rec(0, 0, [])


def naive_partition_values(g: Graph, exclude_trivial: bool = False) -> dict[int, tuple[int, int]]:
    """Map t -> (cp^(t), pi_t) for every t from 2 to n, by full enumeration.
    Values of t that admit no partition are absent."""
    best: dict[int, tuple[int, int]] = {}
    profiles = set()
    for p in enumerate_clique_partitions(g, exclude_trivial):
        profiles.add((max((len(c) for c in p), default=2), len(p), sum(len(c) for c in p)))
    for t in range(2, max(g.n, 2) + 1):
        ok = [(c, s) for mx, c, s in profiles if mx <= t]
        if ok:
            best[t] = (min(c for c, _ in ok), min(s for _, s in ok))
    return best


def naive_kt(g: Graph, t: int) -> int:
    """Largest number of pairwise edge-disjoint t-cliques, by trying every
    combination of k t-cliques for increasing k."""
    tcl = [c for c in brute_force_cliques(g, t) if len(c) == t]
    edge_sets = [frozenset(combinations(c, 2)) for c in tcl]
    best = 0
    for k in range(1, len(tcl) + 1):
        if any(
            all(not (edge_sets[a] & edge_sets[b]) for a, b in combinations(combo, 2))
            for combo in combinations(range(len(tcl)), k)
        ):
            best = k
        else:
            break
    return best


# --- characteristic polynomial -------------------------------------------------


def charpoly(matrix) -> list[int]:
    """Integer characteristic polynomial det(xI - A), low-to-high coefficients,
    by the Faddeev-LeVerrier recursion in exact integer arithmetic."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum(a[i][l] * m[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += coeffs[n - k + 1]
        m = am
        tr = sum(sum(a[i][l] * m[l][i] for l in range(n)) for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return coeffs


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _deriv(p):
    return _trim([i * p[i] for i in range(1, len(p))] or [0])


def _divmod(num, den):
    num = [Fraction(x) for x in num]
    den = _trim([Fraction(x) for x in den])
    if len(num) < len(den):
        return [Fraction(0)], _trim(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    r = num[:]
    for i in range(len(q) - 1, -1, -1):
        c = r[i + len(den) - 1] / den[-1]
        q[i] = c
        for j, d in enumerate(den):
            r[i + j] -= c * d
    return _trim(q), _trim(r[: len(den) - 1] or [Fraction(0)])


def _is_zero(p):
    return all(c == 0 for c in p)


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while not _is_zero(b):
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a]


def _squarefree_parts(f):
    """Yun's algorithm: [(factor, multiplicity), ...]."""
    out = []
    f = [Fraction(c) for c in f]
    a = _gcd(f, _deriv(f))
    b = _divmod(f, a)[0]
    c = _divmod(_deriv(f), a)[0]
    d = [x - y for x, y in _pad(c, _deriv(b))]
    i = 1
    while len(_trim(b)) > 1:
        a = _gcd(b, d)
        b = _divmod(b, a)[0]
        c = _divmod(d, a)[0]
        if len(a) > 1:
            out.append((a, i))
        d = [x - y for x, y in _pad(c, _deriv(b))]
        i += 1
    return out


def _pad(p, q):
    n = max(len(p), len(q))
    return list(zip(list(p) + [0] * (n - len(p)), list(q) + [0] * (n - len(q))))


def _eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sturm_chain(f):
    chain = [f, _deriv(f)]
    while True:
        r = _divmod(chain[-2], chain[-1])[1]
        if _is_zero(r):
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain, x):
    signs = [v for v in (_eval(p, x) for p in chain) if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0))


def _real_roots_squarefree(f, tol: Fraction) -> list[Fraction]:
    chain = _sturm_chain(f)
    bound = 1 + max(abs(c / f[-1]) for c in f[:-1]) if len(f) > 1 else 1
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(chain, lo) - _sign_changes(chain, hi)  # roots in (lo, hi]
        if count == 0:
            continue
        if count == 1 and hi - lo < tol:
            out.append((lo + hi) / 2)
            continue
        mid = (lo + hi) / 2
        stack += [(lo, mid), (mid, hi)]
    return out


def charpoly_eigenvalues(matrix, tol: float = 1e-12) -> list[float]:
    """Eigenvalues of an integer symmetric matrix with multiplicity, descending."""
    f = charpoly(matrix)
    vals = []
    for part, mult in _squarefree_parts(f):
        for r in _real_roots_squarefree(part, Fraction(tol)):
            vals.extend([float(r)] * mult)
    return sorted(vals, reverse=True)
