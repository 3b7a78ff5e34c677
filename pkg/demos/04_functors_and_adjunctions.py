"""Functors between the categories, the commuting square, and the two adjunctions."""

from fuzzycat.suites import Fixtures, SuiteConfig, suite_adjunction_f3, suite_adjunction_f6, suite_fig2
from fuzzycat.category import Category
from fuzzycat.functors import FunctorId as F
from fuzzycat.functors import apply_functor_morphism, apply_functor_object, check_functor_laws, check_isomorphism
from fuzzycat.io import parse_lattice_spec

fx = Fixtures(SuiteConfig(lattice=parse_lattice_spec("luk:3"), seed=1))
Ps = fx.partitions
maps = fx.morphisms(Category.LSPACEFP, induced_only=True)
print(f"{len(Ps)} partitions, {len(maps)} FP-maps")

# F3 sends a partition to its transformation system and keeps the relation pair.
H = apply_functor_object(F.F3, Ps[0])
print("F3 kernel:", H.relation().labels())
print(check_functor_laws(F.F3, Ps, fx.composable(Category.LSPACEFP, n=20, induced_only=True)))

systems = [apply_functor_object(F.F3, P) for P in Ps]
images = [apply_functor_morphism(F.F3, m) for m in maps]
print(check_isomorphism(F.F3, F.F3P, Ps, maps, systems, images))

# Transfer to pretopologies: the backward relation is pulled back along the core maps.
m = maps[-1]
t = apply_functor_morphism(F.F7, m)
print("\nFP-map backward:", m.backward.labels())
print("pretop backward:", t.backward.labels())

print()
print(suite_fig2(fx))
print(suite_adjunction_f3(fx))
print(suite_adjunction_f6(fx))
