"""Scan MBM walls of a rank-2 Picard lattice and locate the chamber of a probe class.

Prints every wall ray within the coefficient bound, then checks that the set
is stable when the scan is redone at a larger bound and filtered back.
"""

import argparse
from dataclasses import dataclass
from typing import Optional

from mbm_classes.lattice import Family, PicClass
from mbm_classes.walls import ScanWindow, chamber_of, scan_walls


@dataclass(frozen=True)
class WallScanConfig:
    kind: str = "k3"
    n: int = 2
    d: int = 1
    bound: int = 10
    probe: Optional[tuple[int, int]] = (4, -1)
    stability_factor: int = 3


def describe(ray) -> str:
    return f"{ray.p}x {'+' if ray.q >= 0 else '-'} {abs(ray.q)}e"


def run(cfg: WallScanConfig) -> bool:
    fam = Family.parse(cfg.kind, cfg.n)
    rays = scan_walls(fam, cfg.d, ScanWindow(cfg.bound))
    print(f"{fam}, q(x) = {2 * cfg.d}, |f|, |c| <= {cfg.bound}: {len(rays)} walls")
    for w in rays:
        print(f"  slope {str(w.slope):>6}  ray {describe(w):<12} source ({w.source.f}, {w.source.c})"
              f"  orbit (a={w.orbit.a}, b={w.orbit.b})")

    wide = scan_walls(fam, cfg.d, ScanWindow(cfg.stability_factor * cfg.bound))
    refiltered = [w for w in wide if max(abs(w.source.f), abs(w.source.c)) <= cfg.bound]
    stable = [(w.p, w.q) for w in refiltered] == [(w.p, w.q) for w in rays]
    print(f"rescan at bound {cfg.stability_factor * cfg.bound}: {len(wide)} walls, "
          f"restriction {'agrees' if stable else 'DIFFERS'}")

    if cfg.probe is not None:
        ch = chamber_of(fam, cfg.d, PicClass(*cfg.probe, cfg.d, fam), ScanWindow(cfg.bound))
        lo = "none" if ch.lower is None else describe(ch.lower)
        hi = "none" if ch.upper is None else describe(ch.upper)
        print(f"probe {cfg.probe}: between {lo} and {hi}" + (" (on a wall)" if ch.on_wall else ""))
    return stable


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", dest="kind", choices=["k3", "kummer"], default="k3")
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--d", type=int, default=1, help="half-square of x")
    ap.add_argument("--bound", type=int, default=10)
    ap.add_argument("--probe", default="4,-1", help="'f,c' or 'none'")
    args = ap.parse_args()
    probe = None if args.probe == "none" else tuple(int(v) for v in args.probe.split(","))
    ok = run(WallScanConfig(args.kind, args.n, args.d, args.bound, probe))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
