"""Where the naive statements stop holding, each shown by a concrete witness."""

import numpy as np

from fuzzycat.category import Category, MorphismPair, check_morphism, check_qua_morphism, embed_qua_pretopology, identity
from fuzzycat.fixtures import one_block_partition, random_partition, threshold_pretopology
from fuzzycat.functors import FunctorId as F
from fuzzycat.functors import apply_functor_morphism, check_functor_laws
from fuzzycat.fuzzy import FuzzyRelation, finite_set
from fuzzycat.lattice import make_lukasiewicz_chain
from fuzzycat.topology import (
    identity_interior,
    indiscrete_interior,
    interior_from_partition,
    is_kernel_determined,
    pretopology_from_interior,
    pretopology_from_partition,
)

L3 = make_lukasiewicz_chain(2)
X = finite_set("X", 3)

# 1. Transferring morphisms to pretopologies keeps composites but not identities
#    when a block has two core points: the transferred identity has 0 between them.
P = random_partition(X, finite_set("J", 2), L3, seed=5)
print("cores:", [P.J.elements[j] for j in P.xi])
report = check_functor_laws(F.F7, [P], validate_images=False)
law = report.get("F(id_A) = id_F(A)")
print("identity law holds:", law.passed)
print("  transferred identity backward:", law.witness["F(id)"]["backward"])
print("  identity backward:            ", law.witness["id"]["backward"])

# 2. A {0,1}-valued backward relation other than a 0-graph does not survive F4' then F4.
S = pretopology_from_partition(P)
ones = FuzzyRelation(X, X, np.full((3, 3), L3.top), L3)
pair = MorphismPair(identity(S).forward, ones, Category.LFPRTOP, S, S)
back = apply_functor_morphism(F.F4, apply_functor_morphism(F.F4P, pair))
print("\nall-ones backward is a morphism:", check_morphism(pair).passed, " round trip:", back == pair)

# 3. The indiscrete interior comes from the one-block partition.
print("\nindiscrete = one-block interior:", indiscrete_interior(X, L3) == interior_from_partition(one_block_partition(X, L3)))

# 4. A pretopology outside the partition-induced class, and a morphism from it
#    whose relations break the Qua inequality between the co-atom images.
T = threshold_pretopology(L3)
Z = finite_set("Z", 2)
D = pretopology_from_interior(identity_interior(Z, L3))
h = L3.element("1/2")
m = MorphismPair(FuzzyRelation(T.X, Z, [[0, 0], [0, h]], L3), FuzzyRelation(Z, T.X, [[0, h], [0, 0]], L3), Category.LFPRTOP, T, D)
print("\nthreshold pretopology kernel-determined:", is_kernel_determined(T))
print("pretopology morphism:", check_morphism(m).passed)
print(check_qua_morphism(embed_qua_pretopology(T), embed_qua_pretopology(D), m.retag(Category.QUA)))
