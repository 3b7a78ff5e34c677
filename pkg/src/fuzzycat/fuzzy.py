"""L-valued fuzzy sets and relations over named finite sets.

Every binary operation checks that axes carry the *same* named set, not just
the same size, so a transposed relation is an error rather than a silent bug.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import InvalidArgument, QuantifierBudgetError
from .lattice import Lattice

DEFAULT_BUDGET = 10_000

POINTWISE_OPS = ("meet", "join", "star", "hash", "neg")


@dataclass(frozen=True)
class FiniteSet:
    name: str
    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise InvalidArgument(f"set {self.name!r} has duplicate element labels")

    def index(self, label) -> int:
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < len(self.elements):
                return int(label)
            raise InvalidArgument(f"index {label} outside set {self.name!r}")
        try:
            return self.elements.index(str(label))
        except ValueError:
            raise InvalidArgument(f"{label!r} is not an element of {self.name!r}") from None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"{self.name}{{{', '.join(self.elements)}}}"


def finite_set(name: str, size_or_labels) -> FiniteSet:
    """``finite_set("X", 3)`` gives ``X{x1, x2, x3}``."""
    if isinstance(size_or_labels, int):
        prefix = name.lower()
        return FiniteSet(name, tuple(f"{prefix}{i + 1}" for i in range(size_or_labels)))
    return FiniteSet(name, tuple(size_or_labels))


def _same_lattice(a: Lattice, b: Lattice):
    if a is not b and a != b:
        raise InvalidArgument(f"operands live in different lattices ({a.name}, {b.name})")


class FuzzySet:
    """A function ``domain -> L`` stored as a read-only index vector."""

    __slots__ = ("domain", "lattice", "values")

    def __init__(self, domain: FiniteSet, values, lattice: Lattice):
        vals = lattice.check_array(values).reshape(-1).copy()
        if vals.shape != (len(domain),):
            raise InvalidArgument(
                f"fuzzy set on {domain.name!r} needs {len(domain)} values, got {vals.shape[0]}"
            )
        vals.setflags(write=False)
        self.domain = domain
        self.lattice = lattice
        self.values = vals

    @classmethod
    def from_labels(cls, domain, labels, lattice):
        return cls(domain, [lattice.element(s) for s in labels], lattice)

    def __call__(self, x) -> int:
        return int(self.values[self.domain.index(x)])

    def labels(self) -> list[str]:
        return [self.lattice.labels[v] for v in self.values]

    def __le__(self, other: FuzzySet) -> bool:
        _check_domain(self, other)
        return self.lattice.leq_all(self.values, other.values)

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.lattice == other.lattice
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.domain, self.values.tobytes()))

    def __str__(self):
        return "[" + ", ".join(self.labels()) + "]"

    def __repr__(self):
        return f"FuzzySet({self.domain.name}, {self})"


class FuzzyRelation:
    """A matrix ``source × target -> L`` of carrier indices."""

    __slots__ = ("source", "target", "lattice", "entries")

    def __init__(self, source: FiniteSet, target: FiniteSet, entries, lattice: Lattice):
        arr = lattice.check_array(entries)
        if arr.size == 0:
            arr = arr.reshape(len(source), len(target))
        if arr.shape != (len(source), len(target)):
            raise InvalidArgument(
                f"relation {source.name}x{target.name} needs shape "
                f"{(len(source), len(target))}, got {arr.shape}"
            )
        arr = arr.copy()
        arr.setflags(write=False)
        self.source = source
        self.target = target
        self.lattice = lattice
        self.entries = arr

    @classmethod
    def from_labels(cls, source, target, rows, lattice):
        return cls(source, target, [[lattice.element(s) for s in row] for row in rows], lattice)

    def __call__(self, s, t) -> int:
        return int(self.entries[self.source.index(s), self.target.index(t)])

    def labels(self) -> list[list[str]]:
        return [[self.lattice.labels[v] for v in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.lattice == other.lattice
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.source, self.target, self.entries.tobytes()))

    def __repr__(self):
        return f"FuzzyRelation({self.source.name}x{self.target.name}, {self.labels()})"


def _check_domain(f: FuzzySet, g: FuzzySet):
    if f.domain != g.domain:
        raise InvalidArgument(f"domain mismatch: {f.domain.name!r} vs {g.domain.name!r}")
    _same_lattice(f.lattice, g.lattice)


def pointwise(op: str, f: FuzzySet, g: FuzzySet | None = None) -> FuzzySet:
    lat = f.lattice
    if op not in POINTWISE_OPS:
        raise InvalidArgument(f"unknown pointwise operation {op!r}")
    if op == "neg":
        if g is not None:
            raise InvalidArgument("neg takes a single fuzzy set")
        return FuzzySet(f.domain, lat.neg[f.values], lat)
    if g is None:
        raise InvalidArgument(f"{op} takes two fuzzy sets")
    _check_domain(f, g)
    return FuzzySet(f.domain, getattr(lat, op)[f.values, g.values], lat)


def constant_set(domain: FiniteSet, lattice: Lattice, a: int) -> FuzzySet:
    a = lattice.check_element(a)
    return FuzzySet(domain, np.full(len(domain), a, dtype=np.intp), lattice)


def characteristic(domain: FiniteSet, lattice: Lattice, subset: Iterable) -> FuzzySet:
    vals = np.full(len(domain), lattice.bottom, dtype=np.intp)
    for x in subset:
        vals[domain.index(x)] = lattice.top
    return FuzzySet(domain, vals, lattice)


def coatom(domain: FiniteSet, lattice: Lattice, x) -> FuzzySet:
    """``¬1_{x}``: 0 at ``x`` and 1 elsewhere."""
    return pointwise("neg", characteristic(domain, lattice, [x]))


def core(f: FuzzySet) -> frozenset[str]:
    return frozenset(f.domain.elements[i] for i in np.flatnonzero(f.values == f.lattice.top))


def is_normal(f: FuzzySet) -> bool:
    return bool((f.values == f.lattice.top).any())


def _check_chain(left: FuzzyRelation, right: FuzzyRelation):
    if left.target != right.source:
        raise InvalidArgument(
            f"cannot compose {left.source.name}x{left.target.name} "
            f"with {right.source.name}x{right.target.name}"
        )
    _same_lattice(left.lattice, right.lattice)


def compose_sup_star(R: FuzzyRelation, S: FuzzyRelation) -> FuzzyRelation:
    """``(x, z) -> ⋁_y R(x, y) ⁎ S(y, z)``."""
    _check_chain(R, S)
    lat = R.lattice
    terms = lat.star[R.entries[:, :, None], S.entries[None, :, :]]
    return FuzzyRelation(R.source, S.target, lat.join_reduce(terms, axis=1), lat)


def compose_inf_hash(A: FuzzyRelation, B: FuzzyRelation) -> FuzzyRelation:
    """``(u, w) -> ⋀_v A(u, v) # B(v, w)``."""
    _check_chain(A, B)
    lat = A.lattice
    terms = lat.hash[A.entries[:, :, None], B.entries[None, :, :]]
    return FuzzyRelation(A.source, B.target, lat.meet_reduce(terms, axis=1), lat)


def backward_matrix(lattice: Lattice, psi: np.ndarray, functions: np.ndarray) -> np.ndarray:
    """Backward powerset image of many functions at once.

    ``psi`` is ``|X1| × |X2|``, ``functions`` is ``N × |X2|``; the result is
    ``N × |X1|`` with row ``k`` equal to ``⋀_{x2} ¬psi(·, x2) # f_k(x2)``.
    """
    terms = lattice.hash[lattice.neg[psi][None, :, :], functions[:, None, :]]
    return lattice.meet_reduce(terms, axis=2)


def backward_powerset(psi: FuzzyRelation, f: FuzzySet) -> FuzzySet:
    if f.domain != psi.target:
        raise InvalidArgument(
            f"backward image of {psi.source.name}x{psi.target.name} needs a set on "
            f"{psi.target.name!r}, got {f.domain.name!r}"
        )
    _same_lattice(psi.lattice, f.lattice)
    out = backward_matrix(psi.lattice, psi.entries, f.values[None, :])[0]
    return FuzzySet(psi.source, out, psi.lattice)


def crisp_identity(X: FiniteSet, lattice: Lattice) -> FuzzyRelation:
    """1 on the diagonal, 0 elsewhere: the two-sided unit of ⊙."""
    n = len(X)
    eye = np.where(np.eye(n, dtype=bool), lattice.top, lattice.bottom)
    return FuzzyRelation(X, X, eye, lattice)


def hash_identity(J: FiniteSet, lattice: Lattice) -> FuzzyRelation:
    """0 on the diagonal, 1 elsewhere: the two-sided unit of ⊕."""
    n = len(J)
    eye = np.where(np.eye(n, dtype=bool), lattice.bottom, lattice.top)
    return FuzzyRelation(J, J, eye, lattice)


def make_identity_pair(X: FiniteSet, J: FiniteSet, lattice: Lattice):
    return crisp_identity(X, lattice), hash_identity(J, lattice)


class FunctionSpace:
    """The finite set ``L^X`` in lexicographic order (first coordinate slowest)."""

    def __init__(self, domain: FiniteSet, lattice: Lattice):
        self.domain = domain
        self.lattice = lattice
        self.size = lattice.size ** len(domain)
        self._weights = lattice.size ** np.arange(len(domain) - 1, -1, -1, dtype=np.int64)
        self._all = None

    def all(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        if self.size > budget:
            raise QuantifierBudgetError(
                f"|L|^|{self.domain.name}| = {self.lattice.size}^{len(self.domain)} = "
                f"{self.size} exceeds quantifier budget {budget}"
            )
        if self._all is None:
            grid = itertools.product(range(self.lattice.size), repeat=len(self.domain))
            arr = np.array(list(grid), dtype=np.intp).reshape(self.size, len(self.domain))
            arr.setflags(write=False)
            self._all = arr
        return self._all

    def encode(self, values) -> np.ndarray:
        """Lexicographic index of each row of ``values`` (shape ``[..., |X|]``)."""
        return np.asarray(values, dtype=np.int64) @ self._weights

    def decode(self, index: int) -> np.ndarray:
        digits = []
        for _ in range(len(self.domain)):
            index, r = divmod(int(index), self.lattice.size)
            digits.append(r)
        return np.array(digits[::-1], dtype=np.intp)

    def landmarks(self) -> np.ndarray:
        """All constants followed by all co-atoms."""
        lat, m = self.lattice, len(self.domain)
        consts = np.repeat(np.arange(lat.size, dtype=np.intp)[:, None], m, axis=1)
        coatoms = np.where(np.eye(m, dtype=bool), lat.bottom, lat.top).astype(np.intp)
        return np.vstack([consts, coatoms]).reshape(-1, m)

    def sample(self, n: int, seed: int = 0) -> np.ndarray:
        rng = np.random.default_rng(seed)
        m = len(self.domain)
        drawn = rng.integers(0, self.lattice.size, size=(n, m))
        rows = dict.fromkeys(map(tuple, np.vstack([self.landmarks(), drawn]).tolist()))
        return np.array(list(rows), dtype=np.intp).reshape(-1, m)

    def quantifier(self, budget=DEFAULT_BUDGET, samples=None, seed=0):
        """Return ``(functions, exhaustive)`` for a universal quantifier over L^X.

        Exhaustive when the space fits the budget; otherwise a seeded sample
        if ``samples`` is given, else :class:`QuantifierBudgetError`.
        """
        if self.size <= budget:
            return self.all(budget), True
        if samples:
            return self.sample(samples, seed), False
        self.all(budget)  # raises

    def __len__(self):
        return self.size


def enumerate_functions(
    domain: FiniteSet,
    lattice: Lattice,
    budget: int = DEFAULT_BUDGET,
    sample: int | None = None,
    seed: int = 0,
) -> Iterator[FuzzySet]:
    """Yield every ``f ∈ L^X`` (or, with ``sample=N``, a seeded sample)."""
    space = FunctionSpace(domain, lattice)
    rows = space.sample(sample, seed) if sample is not None else space.all(budget)
    for row in rows:
        yield FuzzySet(domain, row, lattice)
