"""Tabulate MBM orbits, their curve realizations and the extremal bound for a range of n."""

import argparse
from dataclasses import dataclass

from mbm_classes.curves import extremal_qhat, genus_bound, realize_orbit
from mbm_classes.lattice import Family
from mbm_classes.orbits import enumerate_mbm_orbits


@dataclass(frozen=True)
class TableConfig:
    kind: str = "k3"
    n_min: int = 2
    n_max: int = 8
    summary_only: bool = False


def orbit_rows(family: Family):
    for o in enumerate_mbm_orbits(family):
        cr = realize_orbit(o)
        yield (o.a, o.b, str(o.q_hat), cr.genus, cr.k, cr.locus_dim, "*" if cr.exceptional else "")


def run(cfg: TableConfig) -> None:
    for n in range(cfg.n_min, cfg.n_max + 1):
        fam = Family.parse(cfg.kind, n)
        orbs = enumerate_mbm_orbits(fam)
        low = min(o.q_hat for o in orbs)
        print(f"{fam}: {len(orbs)} orbits, min q_hat {low} (bound {extremal_qhat(fam)}), "
              f"genus <= {genus_bound(fam)}")
        if cfg.summary_only:
            continue
        print(f"  {'a':>3} {'b':>3} {'q_hat':>8} {'g':>3} {'k':>3} {'locus':>5}")
        for a, b, q, g, k, locus, mark in orbit_rows(fam):
            print(f"  {a:>3} {b:>3} {q:>8} {g:>3} {k:>3} {locus:>5} {mark}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", dest="kind", choices=["k3", "kummer"], default="k3")
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--summary-only", action="store_true")
    args = ap.parse_args()
    run(TableConfig(args.kind, args.n_min, args.n_max, args.summary_only))


if __name__ == "__main__":
    main()
