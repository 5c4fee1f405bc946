"""Print the composition of x and y in W order by order, next to the free BCH oracle.

    python3 scripts/bch_in_w.py --order 8
"""

import argparse
import time
from dataclasses import dataclass

from sl2auto.bch import bch, project_to_w
from sl2auto.inner import compose
from sl2auto.lie import lie_form, lie_membership
from sl2auto.walgebra import WElement


@dataclass
class Config:
    order: int = 8


def main(cfg):
    for n in range(1, cfg.order + 1):
        t0 = time.perf_counter()
        Z = compose(WElement.x(n), WElement.y(n), n)
        t1 = time.perf_counter()
        P = project_to_w(bch(n))
        t2 = time.perf_counter()
        status = "agree" if Z == P else "DIFFER"
        print(f"order {n}: {status}  (closed form {t1 - t0:.3f}s, oracle {t2 - t1:.3f}s)")
    print()
    print("Z =", Z)
    print("  =", lie_form(lie_membership(Z)))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=Config.order)
    main(Config(**vars(ap.parse_args())))
