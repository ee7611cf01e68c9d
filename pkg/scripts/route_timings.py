"""Wall-clock cost of each route at growing degree (m = n), averaged over a few seeds.

The double sum has C(m, p) C(n, q) terms, so it dominates quickly; the
determinant routes stay polynomial.
"""

import argparse
import time
from dataclasses import dataclass

from subres.algebra import poly_from_roots
from subres.subresultants import sres_def, sres_hong, sres_sd, sres_sylvester, single_sum
from subres.verify import InstanceSpec, gen_instance


@dataclass
class Config:
    max_deg: int = 8
    repeats: int = 3


def main(cfg: Config) -> None:
    routes = {
        "def": lambda A, B, f, g, d: sres_def(f, g, d),
        "sd": lambda A, B, f, g, d: sres_sd(f, g, d),
        "hong": lambda A, B, f, g, d: sres_hong(A, B, d),
        "single": lambda A, B, f, g, d: single_sum(A, B, d),
        "sylv(p=d/2)": lambda A, B, f, g, d: sres_sylvester(A, B, d // 2, d - d // 2),
    }
    print("m=n  d   " + "  ".join(f"{name:>12}" for name in routes))
    for deg in range(2, cfg.max_deg + 1):
        d = deg // 2
        cost = dict.fromkeys(routes, 0.0)
        for seed in range(cfg.repeats):
            A, B = gen_instance(InstanceSpec(seed, deg, deg))
            f, g = poly_from_roots(A), poly_from_roots(B)
            for name, fn in routes.items():
                t = time.perf_counter()
                fn(A, B, f, g, d)
                cost[name] += time.perf_counter() - t
        print(f"{deg:>3}  {d:<2}  " + "  ".join(f"{1e3 * cost[k] / cfg.repeats:>10.2f}ms" for k in routes))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-deg", type=int, default=Config.max_deg)
    ap.add_argument("--repeats", type=int, default=Config.repeats)
    main(Config(**vars(ap.parse_args())))
