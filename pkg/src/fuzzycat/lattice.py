"""Finite complete residuated and co-residuated lattices with an involutive negator.

Elements are carrier indices (plain ``int`` or integer numpy arrays). Every
operation is a table lookup, so ``lat.star[a, b]`` works equally for scalars
and for broadcast arrays of indices. Nothing here uses floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import ConstructionError, InvalidArgument
from .report import ValidationReport, timed

BINARY_OPS = ("meet", "join", "star", "hash", "leq")
OPS = BINARY_OPS + ("neg",)


def _frozen(arr, dtype):
    out = np.array(arr, dtype=dtype)
    out.setflags(write=False)
    return out


class Lattice:
    """Operation tables of ``(L, ∧, ∨, ⁎, #, ¬, 0, 1)`` on ``range(size)``.

    ``leq[a, b]`` is the order; ``meet``, ``join``, ``star`` and ``hash`` are
    ``size × size`` element tables and ``neg`` is a length-``size`` table.
    Construction checks shapes and index ranges only; the algebraic laws are
    left to :func:`validate_lattice` so that broken tables can be inspected.
    """

    def __init__(self, labels, leq, meet, join, star, hash, neg, name=None):
        labels = tuple(str(s) for s in labels)
        n = len(labels)
        if n == 0:
            raise ConstructionError("a lattice needs at least one element")
        if len(set(labels)) != n:
            raise ConstructionError(f"duplicate carrier labels in {labels}")
        self.labels = labels
        self.size = n
        self.name = name or f"L{n}"
        self.leq = _frozen(leq, bool)
        if self.leq.shape != (n, n):
            raise ConstructionError(f"leq must be {n}x{n}, got {self.leq.shape}")
        for op, table in (("meet", meet), ("join", join), ("star", star), ("hash", hash)):
            arr = _frozen(table, np.intp)
            if arr.shape != (n, n):
                raise ConstructionError(f"{op} table must be {n}x{n}, got {arr.shape}")
            if arr.min() < 0 or arr.max() >= n:
                raise ConstructionError(f"{op} table has entries outside [0, {n})")
            setattr(self, op, arr)
        self.neg = _frozen(neg, np.intp)
        if self.neg.shape != (n,):
            raise ConstructionError(f"neg table must have length {n}")
        if self.neg.min() < 0 or self.neg.max() >= n:
            raise ConstructionError(f"neg table has entries outside [0, {n})")

        bottoms = [a for a in range(n) if self.leq[a, :].all()]
        tops = [a for a in range(n) if self.leq[:, a].all()]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ConstructionError("order needs a unique least and greatest element")
        self.bottom = bottoms[0]
        self.top = tops[0]

        # chains stored in index order allow np.min/np.max folds
        idx = np.arange(n)
        self._index_chain = bool(
            np.array_equal(self.leq, idx[:, None] <= idx[None, :])
            and np.array_equal(self.meet, np.minimum.outer(idx, idx))
            and np.array_equal(self.join, np.maximum.outer(idx, idx))
        )
        self._lookup = {}
        for i, s in enumerate(labels):
            self._lookup[s] = i
            try:
                self._lookup.setdefault(Fraction(s), i)
            except (ValueError, ZeroDivisionError):
                pass

    @classmethod
    def from_order(cls, labels, leq, star, hash, neg, name=None):
        """Build a lattice from its order table, deriving meet and join."""
        leq = np.array(leq, dtype=bool)
        n = len(labels)
        if leq.shape != (n, n):
            raise ConstructionError(f"leq must be {n}x{n}, got {leq.shape}")
        meet = np.zeros((n, n), dtype=np.intp)
        join = np.zeros((n, n), dtype=np.intp)
        for a in range(n):
            for b in range(n):
                lower = [c for c in range(n) if leq[c, a] and leq[c, b]]
                upper = [c for c in range(n) if leq[a, c] and leq[b, c]]
                glb = [c for c in lower if all(leq[d, c] for d in lower)]
                lub = [c for c in upper if all(leq[c, d] for d in upper)]
                if len(glb) != 1:
                    raise ConstructionError(
                        f"order is not a lattice: {labels[a]!r}, {labels[b]!r} have no meet"
                    )
                if len(lub) != 1:
                    raise ConstructionError(
                        f"order is not a lattice: {labels[a]!r}, {labels[b]!r} have no join"
                    )
                meet[a, b] = glb[0]
                join[a, b] = lub[0]
        return cls(labels, leq, meet, join, star, hash, neg, name=name)

    def element(self, label) -> int:
        """Carrier index of a label such as ``"1/2"``; ints pass through checked."""
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            return self.check_element(label)
        key = str(label).strip()
        if key in self._lookup:
            return self._lookup[key]
        try:
            frac = Fraction(key)
        except (ValueError, ZeroDivisionError):
            frac = None
        if frac is not None and frac in self._lookup:
            return self._lookup[frac]
        raise InvalidArgument(f"{label!r} is not an element of {self.name}")

    def label(self, a) -> str:
        return self.labels[self.check_element(a)]

    def check_element(self, a) -> int:
        if not isinstance(a, (int, np.integer)) or isinstance(a, bool):
            raise InvalidArgument(f"lattice elements are integer indices, got {a!r}")
        if not 0 <= a < self.size:
            raise InvalidArgument(f"element index {a} outside carrier of {self.name}")
        return int(a)

    def check_array(self, arr) -> np.ndarray:
        """Coerce to an integer index array, rejecting foreign indices."""
        out = np.asarray(arr)
        if out.size and not np.issubdtype(out.dtype, np.integer):
            raise InvalidArgument(f"lattice elements are integer indices, got dtype {out.dtype}")
        out = out.astype(np.intp, copy=False)
        if out.size and (out.min() < 0 or out.max() >= self.size):
            raise InvalidArgument(f"array has entries outside carrier of {self.name}")
        return out

    def eval(self, op: str, a, b=None):
        """Apply one named operation to scalar elements."""
        if op not in OPS:
            raise InvalidArgument(f"unknown operation {op!r}; expected one of {OPS}")
        a = self.check_element(a)
        if op == "neg":
            if b is not None:
                raise InvalidArgument("neg takes a single argument")
            return int(self.neg[a])
        if b is None:
            raise InvalidArgument(f"{op} takes two arguments")
        b = self.check_element(b)
        if op == "leq":
            return bool(self.leq[a, b])
        return int(getattr(self, op)[a, b])

    @property
    def is_chain(self) -> bool:
        return bool((self.leq | self.leq.T).all())

    def meet_reduce(self, arr, axis=-1):
        """Fold ``∧`` along ``axis``; an empty axis gives the top element."""
        arr = np.asarray(arr, dtype=np.intp)
        if self._index_chain:
            return np.min(arr, axis=axis, initial=self.top)
        arr = np.moveaxis(arr, axis, 0)
        acc = np.full(arr.shape[1:], self.top, dtype=np.intp)
        for k in range(arr.shape[0]):
            acc = self.meet[acc, arr[k]]
        return acc

    def join_reduce(self, arr, axis=-1):
        """Fold ``∨`` along ``axis``; an empty axis gives the bottom element."""
        arr = np.asarray(arr, dtype=np.intp)
        if self._index_chain:
            return np.max(arr, axis=axis, initial=self.bottom)
        arr = np.moveaxis(arr, axis, 0)
        acc = np.full(arr.shape[1:], self.bottom, dtype=np.intp)
        for k in range(arr.shape[0]):
            acc = self.join[acc, arr[k]]
        return acc

    def leq_all(self, a, b) -> bool:
        return bool(self.leq[a, b].all())

    def _key(self):
        return (
            self.labels,
            self.leq.tobytes(),
            self.meet.tobytes(),
            self.join.tobytes(),
            self.star.tobytes(),
            self.hash.tobytes(),
            self.neg.tobytes(),
        )

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Lattice):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Lattice({self.name}, labels={list(self.labels)})"


def make_lukasiewicz_chain(n: int) -> Lattice:
    """The chain ``{0, 1/n, ..., 1}`` with Łukasiewicz operations.

    ``a⁎b = max(0, a+b-1)``, ``a#b = min(1, a+b)``, ``¬a = 1-a``, evaluated on
    the numerators so element ``k/n`` has index ``k``.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidArgument(f"Łukasiewicz chain needs n >= 1, got {n!r}")
    n = int(n)
    k = np.arange(n + 1)
    a, b = k[:, None], k[None, :]
    labels = [str(Fraction(int(i), n)) for i in k]
    return Lattice(
        labels,
        leq=a <= b,
        meet=np.minimum(a, b),
        join=np.maximum(a, b),
        star=np.maximum(0, a + b - n),
        hash=np.minimum(n, a + b),
        neg=n - k,
        name=f"Łuk{n + 1}",
    )


def product_lattice(first: Lattice, second: Lattice) -> Lattice:
    """Componentwise product; element ``(i, j)`` has index ``i * |second| + j``."""
    m = second.size
    pairs = [(i, j) for i in range(first.size) for j in range(m)]
    n = len(pairs)
    labels = [f"({first.labels[i]},{second.labels[j]})" for i, j in pairs]
    pi = np.array([p[0] for p in pairs])
    pj = np.array([p[1] for p in pairs])

    def lift(t1, t2):
        return t1[pi[:, None], pi[None, :]] * m + t2[pj[:, None], pj[None, :]]

    leq = first.leq[pi[:, None], pi[None, :]] & second.leq[pj[:, None], pj[None, :]]
    return Lattice(
        labels,
        leq=leq,
        meet=lift(first.meet, second.meet),
        join=lift(first.join, second.join),
        star=lift(first.star, second.star),
        hash=lift(first.hash, second.hash),
        neg=first.neg[pi] * m + second.neg[pj],
        name=f"{first.name}x{second.name}",
    )


def evaluate(lat: Lattice, op: str, a, b=None):
    return lat.eval(op, a, b)


def fold_meet(lat: Lattice, elems: Iterable[int]) -> int:
    return reduce(lambda x, y: int(lat.meet[x, y]), (lat.check_element(e) for e in elems), lat.top)


def fold_join(lat: Lattice, elems: Iterable[int]) -> int:
    return reduce(lambda x, y: int(lat.join[x, y]), (lat.check_element(e) for e in elems), lat.bottom)


def _witness(lat: Lattice, bad: np.ndarray, names: Sequence[str]):
    hits = np.argwhere(bad)
    if not len(hits):
        return None
    return {name: lat.labels[int(i)] for name, i in zip(names, hits[0])}


def validate_lattice(lat: Lattice) -> ValidationReport:
    """Check every law of the algebra exhaustively over all pairs and triples.

    Join-distributivity of ⁎ (and meet-distributivity of #) is checked in its
    binary and nullary forms, which is equivalent to the arbitrary-family law
    on a finite carrier.
    """
    report = ValidationReport(f"lattice {lat.name}")
    with timed(report):
        n = lat.size
        k = np.arange(n)
        a, b, c = k[:, None, None], k[None, :, None], k[None, None, :]
        a2, b2 = k[:, None], k[None, :]
        L, M, J = lat.leq, lat.meet, lat.join
        S, H, N = lat.star, lat.hash, lat.neg
        one, zero = lat.top, lat.bottom

        def check(name, ok, names):
            ok = np.broadcast_to(ok, (n,) * len(names))
            report.add(name, ok.all(), _witness(lat, ~ok, names))

        check("leq reflexive", L[k, k], "a")
        check("leq antisymmetric", ~(L & L.T) | (a2 == b2), "ab")
        check("leq transitive", ~(L[a, b] & L[b, c]) | L[a, c], "abc")
        check("0 is least", L[zero, k], "a")
        check("1 is greatest", L[k, one], "a")
        check("meet is lower bound", L[M, a2] & L[M, b2], "ab")
        check("meet is greatest lower bound", ~(L[c, a] & L[c, b]) | L[c, M[a, b]], "abc")
        check("join is upper bound", L[a2, J] & L[b2, J], "ab")
        check("join is least upper bound", ~(L[a, c] & L[b, c]) | L[J[a, b], c], "abc")

        for op, T, unit, dist, dname, absorb in (
            ("star", S, one, J, "join", zero),
            ("hash", H, zero, M, "meet", one),
        ):
            check(f"{op} commutative", T == T.T, "ab")
            check(f"{op} associative", T[T[a, b], c] == T[a, T[b, c]], "abc")
            check(f"{op} identity", T[unit, k] == k, "a")
            check(f"{op} monotone", ~L[b, c] | L[T[a, b], T[a, c]], "abc")
            check(f"{op} distributes over {dname}", T[a, dist[b, c]] == dist[T[a, b], T[a, c]], "abc")
            check(f"{op} nullary distributivity", T[k, absorb] == absorb, "a")

        check("neg antitone", ~L | L[N[b2], N[a2]], "ab")
        check("neg 0 = 1", np.array(N[zero] == one), "")
        check("neg 1 = 0", np.array(N[one] == zero), "")
        check("neg involutive", N[N] == k, "a")
        check("absorption (a#b)*c <= a#(b*c)", L[S[H[a, b], c], H[a, S[b, c]]], "abc")
        check("duality neg a * neg b = neg(a#b)", S[N[a2], N[b2]] == N[H], "ab")
    return report
