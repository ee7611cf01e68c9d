"""Inject each wrong sign exponent and report the first instance that exposes it."""

import argparse
from dataclasses import dataclass

from subres.verify import MUTANTS, first_detection, instance_specs, mutated


@dataclass
class Config:
    trials: int = 200
    max_deg: int = 6
    seed: int = 0


def main(cfg: Config) -> int:
    specs = instance_specs(cfg.trials, cfg.max_deg, cfg.seed)
    survivors = 0
    for target, variants in MUTANTS.items():
        for variant in variants:
            with mutated(target, variant):
                hit = first_detection(specs)
            if hit is None:
                survivors += 1
                print(f"{target:<24} {variant:<14} SURVIVED")
            else:
                print(f"{target:<24} {variant:<14} caught at instance {specs.index(hit)} (m={hit.m}, n={hit.n})")
    return 1 if survivors else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--max-deg", type=int, default=Config.max_deg)
    ap.add_argument("--seed", type=int, default=Config.seed)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
