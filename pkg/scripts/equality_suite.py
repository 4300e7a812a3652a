#!/usr/bin/env python3
"""Run the equality classifier on the block graphs of the design corpus and on
a few graphs where the bounds are known to be strict."""

import argparse
import json
import sys

from specpart.bounds import classify_equality
from specpart.designs import (
    affine_plane,
    block_graph,
    bose_sts,
    fano_plane,
    projective_plane,
    trivial_pair_design,
    validate_design,
)
from specpart.graph import gen_complete, gen_complete_multipartite, gen_friendship, gen_petersen


def design_cases():
    designs = [(f"pairs({v})", trivial_pair_design(v)) for v in (4, 5, 6)]
    designs += [("fano", fano_plane()), ("AG(2,2)", affine_plane(2)), ("AG(2,3)", affine_plane(3)),
                ("AG(2,5)", affine_plane(5)), ("PG(2,3)", projective_plane(3)),
                ("bose(9)", bose_sts(9)), ("bose(15)", bose_sts(15))]
    for label, d in designs:
        g, _ = block_graph(d)
        yield f"block graph of {label}", g, validate_design(d).r, "cp_t"


def other_cases():
    octa = gen_complete_multipartite([2, 2, 2])
    yield "K_7", gen_complete(7), 3, "pi_t"
    yield "K_7", gen_complete(7), 3, "k_t"
    yield "octahedron", octa, 3, "pi_t"
    yield "octahedron", octa, 3, "k_t"
    yield "F_2", gen_friendship(2), 3, "pi_t"
    yield "Petersen", gen_petersen(), 3, "cp_t"
    yield "K_{3x3}", gen_complete_multipartite([3, 3, 3]), 3, "cp_t"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="one JSON report per line")
    ap.add_argument("--timeout", type=float, default=60.0)
    args = ap.parse_args(argv)
    for label, g, t, kind in list(design_cases()) + list(other_cases()):
        rep = classify_equality(g, t, kind, timeout=args.timeout)
        if args.json:
            print(json.dumps({"graph": label, **rep.to_dict(), "note": rep.note}, sort_keys=True))
        else:
            note = f"  ({rep.note})" if rep.note else ""
            print(f"{label:<28} {kind:<5} t={t:<2} raw={rep.raw:10.6f} "
                  f"exact={rep.exact!s:<5} {rep.equality_diagnosis}{note}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
