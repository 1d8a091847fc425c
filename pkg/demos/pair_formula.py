"""Walk the normal pairs of a few catalog groups and compare the colimit
formula for pi_2 against the direct quotient (M cap N)/[M,N]."""

from itertools import product

from picolim.catalog import catalog_group
from picolim.colimit import NormalTuple, pi_n_colimit
from picolim.finite import abelian_invariants_of_quotient

for name in ("S3", "D4", "Q8", "S4", "C12"):
    g = catalog_group(name)
    normals = g.normal_subgroups()
    print(f"{name} (order {g.n}): {len(normals)} normal subgroups")
    seen = set()
    for m, n in product(normals, repeat=2):
        rep = pi_n_colimit(NormalTuple(g, (m, n)))
        direct = abelian_invariants_of_quotient(m.intersect(n), m.commutator(n))
        assert rep.invariants == direct
        key = (m.order(), n.order(), str(rep.invariants))
        if key in seen:
            continue
        seen.add(key)
        print(f"  |M|={m.order():>2} |N|={n.order():>2}  pi_2 = {rep.invariants}")
    print()
