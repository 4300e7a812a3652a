#!/usr/bin/env python3
"""Compare the exact solvers with exhaustive enumeration on random graphs and
check every spectral bound against the exact values."""

import argparse
import random
import sys
import time

from specpart.bounds import cp_t_lower_bound, kt_upper_bound, pi_t_lower_bound
from specpart.graph import random_graph
from specpart.oracles import naive_kt, naive_partition_values
from specpart.partition import verify_gram_identities
from specpart.solve import solve_cp_t, solve_kt, solve_pi_t


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    done = mismatches = 0
    start = time.perf_counter()
    while done < args.count:
        g = random_graph(rng.randint(3, args.max_n), rng.uniform(0.3, 0.9), rng)
        if not g.is_connected():
            continue
        done += 1
        naive = naive_partition_values(g)
        for t in range(2, g.n + 1):
            cp, pi = solve_cp_t(g, t), solve_pi_t(g, t)
            ok = (cp.optimum, pi.optimum) == naive[t]
            ok &= verify_gram_identities(cp.witness) and verify_gram_identities(pi.witness)
            ok &= cp_t_lower_bound(g, t).strengthened <= cp.optimum
            ok &= pi_t_lower_bound(g, t).strengthened <= pi.optimum
            if t >= 3:
                kt = solve_kt(g, t).optimum
                ok &= kt == naive_kt(g, t) and kt_upper_bound(g, t).strengthened >= kt
            if not ok:
                mismatches += 1
                print(f"mismatch: n={g.n} t={t} edges={list(g.edges)}")
    print(f"{done} graphs, {mismatches} mismatches, {time.perf_counter() - start:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
