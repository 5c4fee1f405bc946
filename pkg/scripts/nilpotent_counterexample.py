"""Run the nilpotent counterexample report and print phi next to its closed form.

    python3 scripts/nilpotent_counterexample.py --order 21
"""

import argparse
import json
from dataclasses import dataclass
from math import comb

from sl2auto.algebra import Q, _qstr
from sl2auto.bch import nilpotent_example


@dataclass
class Config:
    order: int = 21
    json: bool = False


def main(cfg):
    report = nilpotent_example(cfg.order)
    if cfg.json:
        print(json.dumps(report, indent=2))
        return 0 if report["passed"] else 1
    for c in report["checks"]:
        print(("PASS  " if c["pass"] else "FAIL  ") + c["name"] + (f"  ({c['detail']})" if c["detail"] else ""))
    print()
    print(" k  phi_k (matrix log)    (-1)^k / (2(2k+1) C(2k,k))")
    for k, q in enumerate(report["phi"]):
        closed = _qstr(Q((-1) ** k, 2 * (2 * k + 1) * comb(2 * k, k)))
        print(f"{k:2d}  {q:20s}  {closed}")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=Config.order)
    ap.add_argument("--json", action="store_true")
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
