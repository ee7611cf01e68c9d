"""Run the identity cross-check on a batch of seeded instances and save the report.

    python scripts/run_verification.py --trials 200 --max-deg 6 --out report.json
"""

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from subres.verify import DEFAULT_ROOT_BOUND, run_trials


@dataclass
class Config:
    trials: int = 200
    max_deg: int = 6
    seed: int = 0
    root_bound: int = DEFAULT_ROOT_BOUND
    lemma3: bool = True
    out: str | None = None


def parse() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--max-deg", type=int, default=Config.max_deg)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--root-bound", type=int, default=Config.root_bound)
    ap.add_argument("--no-lemma3", dest="lemma3", action="store_false")
    ap.add_argument("--out")
    return Config(**vars(ap.parse_args()))


def main(cfg: Config) -> int:
    start = time.perf_counter()
    reports = run_trials(cfg.trials, cfg.max_deg, cfg.seed, cfg.root_bound, lemma3=cfg.lemma3)
    elapsed = time.perf_counter() - start

    totals, fails = Counter(), Counter()
    for rep in reports:
        for c in rep.checks:
            family = c.name.split("_d")[0] if c.name.startswith(("five_way", "single_eq", "degree")) else c.name.split("_P=")[0]
            totals[family] += 1
            fails[family] += not c.passed
    width = max(map(len, totals))
    for family in sorted(totals):
        print(f"{family:<{width}}  {totals[family] - fails[family]:>6}/{totals[family]:<6}")
    passed = sum(r.all_pass for r in reports)
    print(f"{passed}/{len(reports)} instances passed in {elapsed:.1f} s")

    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "elapsed_s": elapsed,
                       "reports": [r.to_json() for r in reports]}, fh, indent=1)
    return 0 if passed == len(reports) else 1


if __name__ == "__main__":
    raise SystemExit(main(parse()))
