"""Split enumerators of the [4,2] ternary code and their MacWilliams transforms.

    python3 demos/split_enumerators_c4.py
"""

from colordesigns import catalog
from colordesigns.codes import dual
from colordesigns.enumerators import SplitSpec, macwilliams_scj, macwilliams_scwe, scwe, split_complete_jacobi
from colordesigns.polyring import render

code = catalog.get("c4")
spec = SplitSpec(((1, 2), (3, 4)))
w = scwe(code, spec)
print("scwe  =", render(w))

d = dual(code)
print("dual equals code:", d.same_words(code))
print("MacWilliams(scwe) = scwe(dual):", macwilliams_scwe(w, code.field, len(code)) == scwe(d, spec))

j = split_complete_jacobi(code, spec.with_refs([(1,), (3,)]))
print("SCJ   =", render(j))
print("MacWilliams(SCJ) = SCJ(dual):", macwilliams_scj(j, code.field, len(code)) == split_complete_jacobi(d, spec.with_refs([(1,), (3,)])))
