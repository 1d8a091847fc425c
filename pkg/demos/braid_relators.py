"""Check intersection-equals-commutator for the pairwise closures of the
4-string braid relators inside free nilpotent truncations."""

from picolim.wu import braid_check

for c in (2, 3, 4):
    out = braid_check(c)
    print(f"class {c}: all pairs equal: {out['all_equal']}")
    for p in out["pairs"]:
        print(f"  relators {p['pair']}: equal={p['equal']} "
              f"(intersection rows {p['intersection_rows']}, "
              f"commutator rows {p['commutator_rows']})")
