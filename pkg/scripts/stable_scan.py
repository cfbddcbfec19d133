"""Chromatic number and vertex-criticality of r-stable Kneser hypergraphs.

Compares chi(KG^r(n, k)_{r-stab}) with ceil((n - (k-1) r) / (r-1)) and records
whether deleting any vertex lowers it.
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass

from kneser.solver import scan_r_stable

log = logging.getLogger("stable_scan")


@dataclass
class Config:
    n_max: int = 10
    k_max: int = 3
    r_max: int = 4
    limit: int = 40


def run(cfg: Config) -> list[dict]:
    rows = []
    for r in range(2, cfg.r_max + 1):
        for k in range(2, cfg.k_max + 1):
            for n in range(k * r, cfg.n_max + 1):
                try:
                    res = scan_r_stable(n, k, r, limit=cfg.limit)
                except ValueError as e:
                    log.info("skip n=%d k=%d r=%d: %s", n, k, r, e)
                    continue
                log.info("n=%d k=%d r=%d chi=%d formula=%d critical=%s (%s)",
                         n, k, r, res.chi, res.formula, res.vertex_critical, res.expectation)
                rows.append(res.to_json())
    return rows


def main(argv=None):
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in ("n_max", "k_max", "r_max", "limit"):
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=getattr(Config, f))
    cfg = Config(**vars(ap.parse_args(argv)))
    log.info("config %s", asdict(cfg))
    rows = run(cfg)
    bad = [r for r in rows if not r["matches"]]
    log.info("%d instances, %d formula mismatches", len(rows), len(bad))
    for row in rows:
        print(json.dumps(row, sort_keys=True))


if __name__ == "__main__":
    main()
