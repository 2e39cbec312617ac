"""Walk through the length-12 ternary code: enumerator, Jacobi polynomials, designs.

    python3 demos/golay_colored_designs.py
"""

from colordesigns import catalog
from colordesigns.designs import colored_design_check, lambda_table
from colordesigns.enumerators import complete_jacobi, cwe, cwe_y, polarize_power
from colordesigns.polyring import render

code = catalog.get("g12")
print(f"{code!r}: {len(code)} words, weights {code.weight_distribution()}")
print("cwe =", render(cwe(code)))

# CJ(T) depends only on |T| up to 3, and equals the polarized enumerator
base = cwe_y(code)
for t, T in [(1, [1]), (2, [1, 2]), (3, [2, 5, 11])]:
    same = complete_jacobi(code, T) == polarize_power(base, t)
    print(f"|T|={t}: CJ(T) equals A^{t} cwe: {same}")

for comp in [(6, 3, 3), (6, 6, 0)]:
    print(colored_design_check(code, comp, 3).summary())

print()
print(lambda_table(code, [(6, 6, 0), (6, 3, 3)], 4, cross_check=False).render(width=8))
