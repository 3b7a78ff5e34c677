"""Fuzzy partitions, the lower F-transform, and the structures built from it."""

from fuzzycat.fixtures import partition_fixture
from fuzzycat.fuzzy import FuzzySet, finite_set
from fuzzycat.partition import FuzzyPartition, check_ftransform_properties, lower_ftransform, validate_partition
from fuzzycat.systems import lts_from_partition, partition_from_lts, validate_lts
from fuzzycat.topology import (
    coatom_matrix,
    interior_from_partition,
    pretopology_from_partition,
    validate_pretopology,
)
from fuzzycat.lattice import make_lukasiewicz_chain

L5 = make_lukasiewicz_chain(4)
P = partition_fixture(L5)
print(P)
print("core assignment xi:", [P.J.elements[j] for j in P.xi])

X = P.X
f = FuzzySet.from_labels(X, ["1/2", "3/4", "1/4"], L5)
print("\nf            =", f.labels())
print("F-transform  =", lower_ftransform(P, f).labels())

report = check_ftransform_properties(P)
print(f"properties: {[c.name for c in report.checks]} -> {report.passed}")

# The same data as a lower transformation system, and back again.
H = lts_from_partition(P)
print("\nsystem kernel:", H.relation().labels())
print("system valid:", validate_lts(H).passed, " round trip:", partition_from_lts(H) == P)

# Pretopology and interior read the transform at the block of each point.
S = pretopology_from_partition(P)
I = interior_from_partition(P)
print("\np(f) =", S(f).labels(), " i(f) =", I(f).labels())
print("pretopology valid:", validate_pretopology(S).passed)
print("co-atom matrix recovers the blocks:", (coatom_matrix(S) == P.membership[P.xi]).all())

# A membership table that leaves x2 outside every core is rejected with a witness.
bad = FuzzyPartition.from_membership(X, finite_set("J", 2), [[4, 3, 1], [1, 0, 4]], L5)
for c in validate_partition(bad).failures:
    print("broken partition:", c.name, c.witness)
