"""Compare Mukai-lattice walls with the enumerated orbit list over a range of n."""

import argparse
import time
from dataclasses import dataclass

from mbm_classes.lattice import Family
from mbm_classes.mukai import bm_check, round_trip_failures


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 2
    n_max: int = 5
    u_bound: int = 5
    s_factor: int = 5   # |s| <= s_factor * t
    kappa_factor: int = 8   # |kappa^2| <= kappa_factor * t^2


def run(cfg: SweepConfig) -> bool:
    ok = True
    for kind in ("k3", "kummer"):
        for n in range(cfg.n_min, cfg.n_max + 1):
            fam = Family.parse(kind, n)
            t = fam.t
            start = time.perf_counter()
            res = bm_check(fam, cfg.u_bound, cfg.s_factor * t, cfg.kappa_factor * t * t)
            bad = round_trip_failures(fam, range(-cfg.u_bound, cfg.u_bound + 1))
            dt = time.perf_counter() - start
            good = res["match"] and not bad
            ok &= good
            print(f"{str(fam):<14} orbits {len(res['theorem_orbits']):>3}  hit {len(res['wall_orbits']):>3}  "
                  f"round trip failures {len(bad)}  {'ok' if good else 'MISMATCH'}  ({dt:.2f} s)")
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--u", type=int, default=5)
    args = ap.parse_args()
    raise SystemExit(0 if run(SweepConfig(args.n_min, args.n_max, args.u)) else 1)


if __name__ == "__main__":
    main()
