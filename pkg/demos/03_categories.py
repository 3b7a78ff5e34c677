"""Morphisms as relation pairs: validation, composition, crisp morphisms, Qua images."""

from fuzzycat.category import (
    Category,
    check_morphism,
    compose,
    crisp_to_pair,
    embed_qua_morphism,
    identity,
    pair_to_crisp,
)
from fuzzycat.fixtures import crisp_morphisms, least_backward, random_morphism, singleton_partition
from fuzzycat.fuzzy import finite_set
from fuzzycat.lattice import make_lukasiewicz_chain
from fuzzycat.fixtures import partition_fixture

L5 = make_lukasiewicz_chain(4)
P = partition_fixture(L5)
Q = singleton_partition(finite_set("Z", 2), L5, fuzzy_seed=1)

# A random forward relation, with backward entries drawn among the values that keep it a morphism.
p = random_morphism(P, Q, Category.LSPACEFP, seed=3)
print("forward :", p.forward.labels())
print("backward:", p.backward.labels())
print("least backward for this forward:", least_backward(P, Q, Category.LSPACEFP, p.forward).labels())
print(check_morphism(p))

q = random_morphism(Q, P, Category.LSPACEFP, seed=4)
pq = compose(p, q)
print("composite is a morphism:", check_morphism(pq).passed)
print("identity laws:", compose(identity(P), pq) == pq == compose(pq, identity(P)))

# Crisp morphisms are pairs of maps; their graphs are relational morphisms.
cs = crisp_morphisms(P, Q, Category.SPACEFP)
print(f"\n{len(cs)} crisp morphisms P -> Q")
if cs:
    pair = crisp_to_pair(cs[0])
    print("graph pair:", pair.forward.labels(), pair.backward.labels())
    print("back to maps:", pair_to_crisp(pair) == cs[0])

# The same relations read in Qua, between the embedded objects.
print("\nembedded in Qua:", check_morphism(embed_qua_morphism(p)).passed)
