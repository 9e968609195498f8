"""Generic finite poset engine.

The order relation is stored densely as a boolean matrix and the cover
relation as its transitive reduction.  Elements are sorted
lexicographically by display label at construction time, so every derived
artifact (cover lists, ideal enumerations, DOT text) is bit-stable across
runs.  Posets are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Optional

import numpy as np

from .errors import (
    AntisymmetryViolation,
    NotALattice,
    SizeBoundExceeded,
    TransitivityViolation,
    UnknownElement,
)

# Relation matrices are dense; anything bigger than this is outside the
# desk scale this package targets.
MAX_POSET_SIZE = 4096

# Ideal enumeration is 2^|p| in the worst case.
MAX_IDEAL_ENUM_SIZE = 20


def _bool_compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Relation composition; int64 accumulators, path counts can exceed 255."""
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def _transitive_reduction(leq: np.ndarray) -> np.ndarray:
    """Covers: x < y with no z strictly between."""
    n = len(leq)
    lt = leq & ~np.eye(n, dtype=bool)
    return lt & ~_bool_compose(lt, lt)


@dataclass(frozen=True)
class LatticeCheckResult:
    """Outcome of the pairwise join/meet search plus the distributive law.

    ``join_table``/``meet_table`` are index matrices into ``poset.elements``
    and are only present when ``is_lattice`` holds.
    """

    is_lattice: bool
    is_distributive: bool
    poset: "Poset"
    join_table: Optional[np.ndarray] = None
    meet_table: Optional[np.ndarray] = None

    def join(self, x, y):
        if not self.is_lattice:
            raise NotALattice("join undefined: not a lattice")
        return self.poset.elements[self.join_table[self.poset.index(x), self.poset.index(y)]]

    def meet(self, x, y):
        if not self.is_lattice:
            raise NotALattice("meet undefined: not a lattice")
        return self.poset.elements[self.meet_table[self.poset.index(x), self.poset.index(y)]]


class Poset:
    """Immutable finite partially ordered set.

    Construct with :meth:`build` (validates the order axioms against a
    predicate) or :meth:`from_leq` (trusted relation matrix).
    """

    __slots__ = (
        "elements",
        "labels",
        "_index",
        "_leq",
        "_covers",
        "_heights",
        "_coheights",
        "_lattice_check",
    )

    def __init__(self, elements, labels, leq, covers):
        # Trusted internal constructor; callers go through build/from_leq.
        self.elements: tuple = elements
        self.labels: tuple = labels
        self._index = {e: i for i, e in enumerate(elements)}
        self._leq = leq
        self._covers = covers
        self._heights = None
        self._coheights = None
        self._lattice_check = None

    # -- construction ---------------------------------------------------

    @classmethod
    def build(cls, elements: Iterable, leq: Callable, label: Callable = str) -> "Poset":
        """Validated construction from an element iterable and a <= predicate.

        The predicate is consulted for ordered pairs of *distinct* elements;
        reflexivity holds by definition.  Raises AntisymmetryViolation or
        TransitivityViolation for a bad generator predicate.
        """
        elems = list(elements)
        labels = [label(e) for e in elems]
        n = len(elems)
        mat = np.eye(n, dtype=bool)
        for i, x in enumerate(elems):
            for j, y in enumerate(elems):
                if i != j and leq(x, y):
                    mat[i, j] = True
        return cls.from_leq(elems, labels, mat, validate=True)

    @classmethod
    def from_leq(cls, elements, labels, leq: np.ndarray, validate: bool = False) -> "Poset":
        """Construction from a relation matrix (diagonal is forced True)."""
        elems = list(elements)
        labels = [str(l) for l in labels]
        n = len(elems)
        if n > MAX_POSET_SIZE:
            raise SizeBoundExceeded(f"poset size {n} exceeds cap {MAX_POSET_SIZE}")
        if len(set(elems)) != n:
            raise ValueError("duplicate element identifiers")
        if len(set(labels)) != n:
            raise ValueError("duplicate element labels")
        order = sorted(range(n), key=labels.__getitem__)
        elems = tuple(elems[i] for i in order)
        labels = tuple(labels[i] for i in order)
        mat = leq[np.ix_(order, order)].astype(bool)
        np.fill_diagonal(mat, True)
        if validate:
            cls._validate_axioms(mat, labels)
        covers = _transitive_reduction(mat)
        mat.setflags(write=False)
        covers.setflags(write=False)
        return cls(elems, labels, mat, covers)

    @staticmethod
    def _validate_axioms(mat: np.ndarray, labels) -> None:
        sym = mat & mat.T & ~np.eye(len(mat), dtype=bool)
        if sym.any():
            i, j = map(int, np.argwhere(sym)[0])
            raise AntisymmetryViolation(f"{labels[i]} <= {labels[j]} and {labels[j]} <= {labels[i]}")
        closure = _bool_compose(mat, mat)
        gap = closure & ~mat
        if gap.any():
            i, j = map(int, np.argwhere(gap)[0])
            raise TransitivityViolation(f"missing {labels[i]} <= {labels[j]} implied by a chain")

    # -- basic access ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {int(self._covers.sum())} covers)"

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"element not in poset: {x!r}") from None

    def label(self, x) -> str:
        return self.labels[self.index(x)]

    def leq(self, x, y) -> bool:
        return bool(self._leq[self.index(x), self.index(y)])

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def leq_matrix(self) -> np.ndarray:
        """Copy of the relation matrix, indexed like ``elements``."""
        return self._leq.copy()

    def cover_matrix(self) -> np.ndarray:
        return self._covers.copy()

    def cover_pairs(self) -> list:
        """All pairs (x, y) with x covered by y, in element order."""
        return [
            (self.elements[int(i)], self.elements[int(j)])
            for i, j in np.argwhere(self._covers)
        ]

    def lower_covers(self, x) -> list:
        j = self.index(x)
        return [self.elements[int(i)] for i in np.flatnonzero(self._covers[:, j])]

    def upper_covers(self, x) -> list:
        i = self.index(x)
        return [self.elements[int(j)] for j in np.flatnonzero(self._covers[i, :])]

    def minimal_elements(self) -> list:
        has_lower = self._covers.any(axis=0)
        return [e for e, low in zip(self.elements, has_lower) if not low]

    def maximal_elements(self) -> list:
        has_upper = self._covers.any(axis=1)
        return [e for e, up in zip(self.elements, has_upper) if not up]

    # -- chains and ranks --------------------------------------------------

    def linear_extension(self) -> list:
        """Topological order of the cover graph, smallest label first."""
        n = len(self)
        indeg = self._covers.sum(axis=0).tolist()
        ready = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(ready)
        out = []
        while ready:
            i = heapq.heappop(ready)
            out.append(i)
            for j in np.flatnonzero(self._covers[i, :]):
                j = int(j)
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(ready, j)
        if len(out) != n:
            raise TransitivityViolation("cover graph has a cycle")
        return out

    def _height_array(self) -> np.ndarray:
        if self._heights is None:
            n = len(self)
            h = np.zeros(n, dtype=np.int64)
            for i in self.linear_extension():
                below = np.flatnonzero(self._covers[:, i])
                if below.size:
                    h[i] = h[below].max() + 1
            h.setflags(write=False)
            self._heights = h
        return self._heights

    def _coheight_array(self) -> np.ndarray:
        if self._coheights is None:
            n = len(self)
            c = np.zeros(n, dtype=np.int64)
            for i in reversed(self.linear_extension()):
                above = np.flatnonzero(self._covers[i, :])
                if above.size:
                    c[i] = c[above].max() + 1
            c.setflags(write=False)
            self._coheights = c
        return self._coheights

    def height(self, x) -> int:
        """Length in edges of the longest chain descending from x."""
        return int(self._height_array()[self.index(x)])

    def coheight(self, x) -> int:
        """Length in edges of the longest chain ascending from x."""
        return int(self._coheight_array()[self.index(x)])

    def rank(self) -> int:
        """Length in edges of the longest chain; -1 for the empty poset."""
        if len(self) == 0:
            return -1
        return int(self._height_array().max())

    # -- derived posets ----------------------------------------------------

    def subposet(self, keep: Iterable) -> "Poset":
        """Induced subposet on a subset of elements."""
        idx = sorted(self.index(x) for x in keep)
        if len(set(idx)) != len(idx):
            raise ValueError("duplicate elements in subposet selection")
        sub = self._leq[np.ix_(idx, idx)]
        return Poset.from_leq(
            [self.elements[i] for i in idx], [self.labels[i] for i in idx], sub
        )

    def map_elements(self, fn: Callable, label: Callable = str) -> "Poset":
        """Transport the order along a bijective relabeling of elements."""
        new = [fn(e) for e in self.elements]
        return Poset.from_leq(new, [label(e) for e in new], self._leq.copy())

    def product(self, other: "Poset") -> "Poset":
        """Componentwise order on pairs; rank adds, sizes multiply."""
        if len(self) * len(other) > MAX_POSET_SIZE:
            raise SizeBoundExceeded(
                f"product size {len(self)}*{len(other)} exceeds cap {MAX_POSET_SIZE}"
            )
        elems = [(x, y) for x in self.elements for y in other.elements]
        labels = [f"({lx}|{ly})" for lx in self.labels for ly in other.labels]
        mat = np.kron(self._leq, other._leq)
        return Poset.from_leq(elems, labels, mat)

    def disjoint_union(self, other: "Poset") -> "Poset":
        """Side-by-side union with no relations across the two parts."""
        n, m = len(self), len(other)
        if n + m > MAX_POSET_SIZE:
            raise SizeBoundExceeded(f"union size {n + m} exceeds cap {MAX_POSET_SIZE}")
        elems = [(0, x) for x in self.elements] + [(1, y) for y in other.elements]
        labels = [f"0:{l}" for l in self.labels] + [f"1:{l}" for l in other.labels]
        mat = np.zeros((n + m, n + m), dtype=bool)
        mat[:n, :n] = self._leq
        mat[n:, n:] = other._leq
        return Poset.from_leq(elems, labels, mat)

    # -- ideals --------------------------------------------------------------

    def ideals(self, limit: int = MAX_IDEAL_ENUM_SIZE) -> list:
        """All down-closed subsets, as frozensets sorted by (size, members).

        Enumeration walks a linear extension, including an element only when
        all of its lower covers are already in; every leaf of the walk is a
        distinct ideal, so the cost is O(|ideals| * |p|).
        """
        n = len(self)
        if n > limit:
            raise SizeBoundExceeded(f"ideal enumeration needs |p| <= {limit}, got {n}")
        order = self.linear_extension()
        lower = [np.flatnonzero(self._covers[:, i]).tolist() for i in range(n)]
        masks: list[int] = []

        def walk(pos: int, mask: int) -> None:
            if pos == n:
                masks.append(mask)
                return
            i = order[pos]
            walk(pos + 1, mask)
            if all(mask >> c & 1 for c in lower[i]):
                walk(pos + 1, mask | (1 << i))

        walk(0, 0)
        keyed = sorted(
            (bin(m).count("1"), tuple(i for i in range(n) if m >> i & 1)) for m in masks
        )
        return [frozenset(self.elements[i] for i in idx) for _, idx in keyed]

    # -- lattice structure ----------------------------------------------------

    def lattice_check(self) -> LatticeCheckResult:
        """Decide lattice-ness and, if a lattice, the distributive law.

        The result is cached; the poset is immutable.
        """
        if self._lattice_check is None:
            self._lattice_check = self._run_lattice_check()
        return self._lattice_check

    def _run_lattice_check(self) -> LatticeCheckResult:
        n = len(self)
        if n == 0:
            return LatticeCheckResult(True, True, self)
        leq = self._leq
        row_of = {leq[i].tobytes(): i for i in range(n)}
        col_of = {leq[:, i].tobytes(): i for i in range(n)}
        join = np.zeros((n, n), dtype=np.int64)
        meet = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                up = row_of.get((leq[i] & leq[j]).tobytes())
                dn = col_of.get((leq[:, i] & leq[:, j]).tobytes())
                if up is None or dn is None:
                    return LatticeCheckResult(False, False, self)
                join[i, j] = join[j, i] = up
                meet[i, j] = meet[j, i] = dn
        distributive = True
        for i in range(n):
            lhs = meet[i, join]
            rhs = join[np.ix_(meet[i], meet[i])]
            if not np.array_equal(lhs, rhs):
                distributive = False
                break
        join.setflags(write=False)
        meet.setflags(write=False)
        return LatticeCheckResult(True, distributive, self, join, meet)

    def join_irreducibles(self) -> "Poset":
        """Induced subposet of elements with exactly one lower cover."""
        if not self.lattice_check().is_lattice:
            raise NotALattice("join-irreducibles are defined for lattices only")
        counts = self._covers.sum(axis=0)
        keep = [e for e, c in zip(self.elements, counts) if c == 1]
        return self.subposet(keep)

    # -- rendering ---------------------------------------------------------------

    def to_dot(self, name: str = "poset") -> str:
        """Hasse diagram as DOT text; cover edges point at the covered element,
        so sinks are the minimal elements."""
        esc = lambda s: s.replace("\\", "\\\\").replace('"', '\\"')
        lines = [f"digraph {name} {{"]
        for l in self.labels:
            lines.append(f'  "{esc(l)}";')
        edges = sorted(
            ((int(j), int(i)) for i, j in np.argwhere(self._covers)),
        )
        for j, i in edges:
            lines.append(f'  "{esc(self.labels[j])}" -> "{esc(self.labels[i])}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def is_order_isomorphism(p: Poset, q: Poset, mapping: dict) -> bool:
    """True when ``mapping`` is a bijection p -> q with x <= y iff f(x) <= f(y)."""
    if len(p) != len(q) or len(mapping) != len(p):
        return False
    if set(mapping.keys()) != set(p.elements):
        return False
    values = list(mapping.values())
    if len(set(values)) != len(values) or any(v not in q for v in values):
        return False
    perm = [q.index(mapping[x]) for x in p.elements]
    return bool(np.array_equal(q._leq[np.ix_(perm, perm)], p._leq))


def build_poset(elements: Iterable, leq: Callable, label: Callable = str) -> Poset:
    """Module-level alias for :meth:`Poset.build`."""
    return Poset.build(elements, leq, label)
