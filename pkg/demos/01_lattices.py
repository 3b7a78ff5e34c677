"""Łukasiewicz chains as index tables, and what the validator says about them."""

import numpy as np

from fuzzycat.io import lattice_from_json, lattice_to_json
from fuzzycat.lattice import make_lukasiewicz_chain, product_lattice, validate_lattice

# The five-element chain 0 < 1/4 < 1/2 < 3/4 < 1. Every operation is a table
# indexed by carrier positions, so all arithmetic below is exact.
L5 = make_lukasiewicz_chain(4)
print(L5, L5.labels)

e = L5.element
print("1/2 * 3/4 =", L5.label(L5.star[e("1/2"), e("3/4")]))
print("1/2 # 3/4 =", L5.label(L5.hash[e("1/2"), e("3/4")]))
print("neg 1/4   =", L5.label(L5.neg[e("1/4")]))

# Whole tables are easy to read off as label grids.
print("star table:")
for row in L5.star:
    print("  ", [L5.labels[v] for v in row])

report = validate_lattice(L5)
print(f"\n{report.subject}: {len(report.checks)} laws, all pass = {report.passed}")

# Products of chains are lattices too, just not chains.
P = product_lattice(make_lukasiewicz_chain(1), make_lukasiewicz_chain(2))
print(P.name, "size", P.size, "chain?", P.is_chain, "valid?", validate_lattice(P).passed)

# Break one cell of the multiplication and look at the witnesses.
doc = lattice_to_json(L5)
doc["star"][2][3] = "1/2"
broken = validate_lattice(lattice_from_json(doc))
print("\nafter editing 1/2 * 3/4:")
for c in broken.failures:
    print(f"  {c.name}: {c.witness}")

# Folding over the empty family gives the unit of each operation.
print("\nmeet of nothing:", L5.label(L5.meet_reduce(np.array([], dtype=np.intp))))
