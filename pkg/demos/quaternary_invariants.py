"""The order-576 group acting on GF(4) enumerators: Molien series and Reynolds bases.

    python3 demos/quaternary_invariants.py
"""

from colordesigns import catalog
from colordesigns.enumerators import cwe
from colordesigns.invariants import (exact_rank, invariant_basis, is_invariant, molien_bivariate, named_group,
                                     specialization_rank_check, group_alphabet)
from colordesigns.polyring import nonzero_merge_map, render

grp = named_group("g4")
print(f"group order {len(grp)}")
mol = molien_bivariate(grp, 8)
for d in (2, 4, 6, 8):
    print(mol.render_degree(d))

for name in ["c2iv", "c4iv", "h6", "c8iv"]:
    print(f"cwe({name}) invariant: {is_invariant(cwe(catalog.get(name)), grp.generators)}")

merge = nonzero_merge_map(group_alphabet(grp))
for i, j in [(1, 5), (2, 4), (3, 3)]:
    basis = invariant_basis(grp, i, j, target=mol.dims[(i, j)])
    rc = specialization_rank_check(basis, merge)
    print(f"M_{i},{j}: dim {mol.dims[(i, j)]}, basis rank {exact_rank(basis)}, after merging {rc['rank_after']}")
print("first basis element of M_2,4:", render(invariant_basis(grp, 2, 4, target=1)[0])[:160], "...")
