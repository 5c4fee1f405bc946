"""Time exp_ad and log_aut on random elements across truncation orders.

    python3 scripts/timing_sweep.py --orders 6 8 10 12 14 --samples 5
"""

import argparse
import time
from dataclasses import dataclass, field

from sl2auto.inner import exp_ad, log_aut
from sl2auto.sampling import make_rng, random_derivation_element


@dataclass
class Config:
    orders: list = field(default_factory=lambda: [6, 8, 10, 12])
    samples: int = 5
    maxdeg: int = 4
    seed: int = 0


def main(cfg):
    rng = make_rng(cfg.seed)
    print("order  exp (s)   log (s)   round trip")
    for n in cfg.orders:
        t_exp = t_log = 0.0
        ok = True
        for _ in range(cfg.samples):
            X = random_derivation_element(rng, n, cfg.maxdeg)
            t0 = time.perf_counter()
            Q = exp_ad(X)
            t1 = time.perf_counter()
            back = log_aut(Q)
            t2 = time.perf_counter()
            t_exp += t1 - t0
            t_log += t2 - t1
            ok = ok and back == X
        print(f"{n:5d}  {t_exp / cfg.samples:8.4f}  {t_log / cfg.samples:8.4f}   {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=Config().orders)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--maxdeg", type=int, default=Config.maxdeg)
    ap.add_argument("--seed", type=int, default=Config.seed)
    main(Config(**vars(ap.parse_args())))
