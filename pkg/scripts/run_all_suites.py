"""Run every registered suite, at its defaults and at the larger sweep sizes."""

import argparse
import json
import sys

from pcalm import verify

# wider sweeps for the suites whose defaults are deliberately small
SWEEPS = {
    "saturated-nim-table": [{"p": p, "m": m, "bound": b} for p in (2, 3, 5) for m, b in ((2, 9), (3, 6))],
    "psi-vs-brute": [{"p": p, "m": m, "bound": b} for p in (2, 3, 5) for m, b in ((2, 9), (3, 6))],
    "welter-sum": [{"p": p, "arities": a, "bound": 6} for p in (2, 3, 5) for a in ([1, 1], [1, 2], [2, 2])],
    "calm": [{"game": g, "p": p, "bound": b} for p in (2, 3, 5)
             for g, b in (("nim:1", 9), ("nim:2", 9), ("welter:2", 9), ("welter:3", 6))],
    "calm-counterexample": [{"p": p} for p in (2, 3, 5)],
    "pn-counterexample": [{"left": f"twopoint:{p}", "p": p, "bound": p} for p in (2, 3, 5)],
    "fd-welter-sum": [{"p": p, "arities": a, "bound": 6} for p in (2, 3, 5) for a in ([3], [3, 2])],
    "macdonald": [{"p": p, "k": 1, "cells": 14} for p in (2, 3, 5)]
    + [{"p": p, "k": k, "cells": 10} for p in (2, 3) for k in (2, 3)],
    "pprime-subdiagram": [{"p": p, "cells": 12} for p in (2, 3, 5)],
    "pprime-tuples": [{"p": p, "cells": 10} for p in (2, 3)],
    "carry-lemma": [{"p": p} for p in (2, 3, 5)],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="defaults only")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    status = 0
    for name, _, _ in verify.list_suites():
        runs = [{}] if args.quick else SWEEPS.get(name, [{}])
        for params in runs:
            v = verify.run_suite(name, params)
            if args.json:
                print(json.dumps(v.to_dict(), sort_keys=True, separators=(",", ":")))
            else:
                state = "ok " if v.ok else "BAD"
                print(f"{state} {name:22s} {json.dumps(params, sort_keys=True):50s} "
                      f"checked={v.positions_checked} {v.elapsed:.2f}s")
            status |= not v.ok
    return status


if __name__ == "__main__":
    sys.exit(main())
