"""Lower/upper/exact chromatic numbers of small Kneser hypergraphs KG^r_s(n, k).

    python3 scripts/sandwich_table.py --n-max 8 --out sandwich.jsonl
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass

from kneser.solver import verify_sandwich

log = logging.getLogger("sandwich")


@dataclass
class Config:
    n_min: int = 4
    n_max: int = 8
    ks: tuple[int, ...] = (2, 3)
    rs: tuple[int, ...] = (2, 3, 4)
    ss: tuple[int, ...] = (1, 2)
    t: int = 1
    limit: int = 40  # skip exact solve above this many vertices
    out: str | None = None


def grid(cfg: Config):
    for n in range(cfg.n_min, cfg.n_max + 1):
        for k in cfg.ks:
            for r in cfg.rs:
                for s in cfg.ss:
                    if s < r and s * n >= k * r:
                        yield n, k, r, s


def run(cfg: Config) -> list[dict]:
    rows = []
    for n, k, r, s in grid(cfg):
        t0 = time.perf_counter()
        rep = verify_sandwich(n, k, r, s, cfg.t, limit=cfg.limit)
        row = rep.to_json() | {"seconds": round(time.perf_counter() - t0, 3)}
        log.info("n=%d k=%d r=%d s=%d  %d <= %s <= %d", n, k, r, s, rep.lower, rep.exact, rep.upper)
        rows.append(row)
    return rows


def parse(argv=None) -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--t", type=int, default=Config.t)
    ap.add_argument("--limit", type=int, default=Config.limit)
    ap.add_argument("--out")
    return Config(**vars(ap.parse_args(argv)))


def main(argv=None):
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    cfg = parse(argv)
    log.info("config %s", asdict(cfg))
    rows = run(cfg)
    tight = sum(1 for r in rows if r["lower_tight"])
    log.info("%d instances, %d with exact value, lower bound tight on %d",
             len(rows), sum(r["exact"] is not None for r in rows), tight)
    lines = "".join(json.dumps(row, sort_keys=True) + "\n" for row in rows)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)


if __name__ == "__main__":
    main()
