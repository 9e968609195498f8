"""Lattices of pinned index tuples and their join-irreducible posets.

A problem spec fixes row bounds a, column bounds b, a row cutoff u and the
derived minor size k.  The admissible row tuples (strictly increasing,
entrywise at least the bound, capped by u) form a distributive lattice
under the componentwise order; columns are the mirror image with b and n.
Their product is the lattice of k-minors the invariants live on.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Literal, NamedTuple, Optional

import numpy as np

from .errors import InvalidSpec, NoMaximalMinors, NotJoinIrreducible
from .posets import Poset

Side = Literal["rows", "columns"]
SIDES: tuple[Side, Side] = ("rows", "columns")


def determine_k(a: tuple, u: int) -> int:
    """The unique k with a_k <= u < a_{k+1} (a beyond its end reads as +inf)."""
    if not a or u < a[0]:
        raise NoMaximalMinors(f"u={u} is below the first row bound a_1={a[0] if a else '?'}")
    return bisect_right(a, u)


def _check_bounds(name: str, seq, length_cap: int) -> tuple:
    seq = tuple(seq)
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in seq):
        raise InvalidSpec(f"{name} must be a sequence of integers")
    if any(x >= y for x, y in zip(seq, seq[1:])):
        raise InvalidSpec(f"{name} must be strictly increasing: {list(seq)}")
    if seq and (seq[0] < 1 or seq[-1] > length_cap):
        raise InvalidSpec(f"{name} must lie in [1, {length_cap}]: {list(seq)}")
    return seq


@dataclass(frozen=True)
class ProblemSpec:
    """Input tuple (m, n, r, a, b, u) with the derived minor size k.

    All indices are 1-based, matching the wire format.
    """

    m: int
    n: int
    r: int
    a: tuple
    b: tuple
    u: int
    k: int = field(init=False, compare=False)

    def __post_init__(self):
        for name in ("m", "n", "r", "u"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidSpec(f"{name} must be an integer, got {v!r}")
        if self.m < 1 or self.n < 1:
            raise InvalidSpec(f"matrix shape must be positive, got m={self.m}, n={self.n}")
        if not 1 <= self.r <= min(self.m, self.n):
            raise InvalidSpec(f"r={self.r} outside [1, min(m,n)={min(self.m, self.n)}]")
        object.__setattr__(self, "a", _check_bounds("a", self.a, self.m))
        object.__setattr__(self, "b", _check_bounds("b", self.b, self.n))
        if len(self.a) != self.r or len(self.b) != self.r:
            raise InvalidSpec(f"a and b must each have r={self.r} entries")
        if not 1 <= self.u <= self.m:
            raise InvalidSpec(f"u={self.u} outside [1, m={self.m}]")
        object.__setattr__(self, "k", determine_k(self.a, self.u))

    @classmethod
    def from_mapping(cls, doc: dict) -> "ProblemSpec":
        if not isinstance(doc, dict):
            raise InvalidSpec("spec document must be a JSON object")
        missing = [f for f in ("m", "n", "r", "a", "b", "u") if f not in doc]
        if missing:
            raise InvalidSpec(f"spec document missing fields: {missing}")
        a, b = doc["a"], doc["b"]
        if not isinstance(a, (list, tuple)) or not isinstance(b, (list, tuple)):
            raise InvalidSpec("a and b must be arrays of integers")
        return cls(doc["m"], doc["n"], doc["r"], tuple(a), tuple(b), doc["u"])

    def to_mapping(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "a": list(self.a),
            "b": list(self.b),
            "u": self.u,
        }

    def side_bounds(self, side: Side) -> tuple[tuple, int]:
        """(first k bound entries, entry cap) for one side of the minor."""
        if side == "rows":
            return self.a[: self.k], self.u
        if side == "columns":
            return self.b[: self.k], self.n
        raise ValueError(f"side must be 'rows' or 'columns', got {side!r}")


class Minor(NamedTuple):
    """A k-minor: its row tuple and column tuple."""

    rows: tuple
    cols: tuple


class JoinIrredProfile(NamedTuple):
    """Grid coordinates of a join-irreducible tuple plus the pivot entry
    that makes it one.  p counts the slack above the pivot entry, q the
    entries below the pivot; both are nonnegative."""

    p: int
    q: int
    pivot: int


def tuple_label(t: tuple) -> str:
    return "[" + ",".join(map(str, t)) + "]"


def minor_label(gamma: Minor) -> str:
    return "[" + ",".join(map(str, gamma.rows)) + "|" + ",".join(map(str, gamma.cols)) + "]"


def admissible_tuples(spec: ProblemSpec, side: Side) -> list:
    """All strictly increasing k-tuples above the bound sequence, within the
    cap, in lexicographic order."""
    base, cap = spec.side_bounds(side)
    k = spec.k
    out: list[tuple] = []

    def extend(i: int, prev: int, acc: list) -> None:
        if i == k:
            out.append(tuple(acc))
            return
        lo = max(base[i], prev + 1)
        hi = cap - (k - i - 1)
        for c in range(lo, hi + 1):
            acc.append(c)
            extend(i + 1, c, acc)
            acc.pop()

    extend(0, 0, [])
    return out


def _tuple_lattice(spec: ProblemSpec, side: Side) -> Poset:
    tuples = admissible_tuples(spec, side)
    arr = np.asarray(tuples, dtype=np.int64)
    leq = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
    poset = Poset.from_leq(tuples, [tuple_label(t) for t in tuples], leq)
    check = poset.lattice_check()
    assert check.is_lattice and check.is_distributive, (
        f"tuple lattice for {side} is not a distributive lattice; "
        "the componentwise-order construction is broken"
    )
    return poset


def build_d1(spec: ProblemSpec) -> Poset:
    """Lattice of admissible row tuples under the componentwise order."""
    return _tuple_lattice(spec, "rows")


def build_d2(spec: ProblemSpec) -> Poset:
    """Lattice of admissible column tuples (b and n in place of a and u)."""
    return _tuple_lattice(spec, "columns")


def bottom_tuple(spec: ProblemSpec, side: Side) -> tuple:
    base, _ = spec.side_bounds(side)
    return tuple(base)


def top_tuple(spec: ProblemSpec, side: Side) -> tuple:
    _, cap = spec.side_bounds(side)
    return tuple(range(cap - spec.k + 1, cap + 1))


def build_theta(
    spec: ProblemSpec, d1: Optional[Poset] = None, d2: Optional[Poset] = None
) -> Poset:
    """The minor lattice: product of the row and column tuple lattices,
    with elements relabeled as minors [rows|cols]."""
    d1 = build_d1(spec) if d1 is None else d1
    d2 = build_d2(spec) if d2 is None else d2
    prod = d1.product(d2)
    return prod.map_elements(lambda pair: Minor(pair[0], pair[1]), label=minor_label)


def join_irreducible_pivot(t: tuple, spec: ProblemSpec, side: Side) -> Optional[int]:
    """The unique 1-based position i where t exceeds its bound and sits
    strictly above its predecessor + 1, or None when no unique i exists.

    Agrees with the cover-count definition of join-irreducibility: lowering
    entry i by one is the only cover below t exactly when i is unique.
    """
    base, _ = spec.side_bounds(side)
    pivots = [
        i
        for i in range(1, spec.k + 1)
        if t[i - 1] > base[i - 1] and (i == 1 or t[i - 1] > t[i - 2] + 1)
    ]
    return pivots[0] if len(pivots) == 1 else None


def profile(t: tuple, spec: ProblemSpec, side: Side) -> JoinIrredProfile:
    """Profile of a join-irreducible tuple.  The (p, q) map is injective
    and order-reversing in each coordinate; p + q is the coheight of t in
    the join-irreducible subposet."""
    i = join_irreducible_pivot(t, spec, side)
    if i is None:
        raise NotJoinIrreducible(f"{tuple_label(t)} is not join-irreducible on {side}")
    _, cap = spec.side_bounds(side)
    p = cap - t[i - 1] - (spec.k - i)
    q = i - 1
    assert p >= 0 and q >= 0
    return JoinIrredProfile(p, q, i)


def l_indices(spec: ProblemSpec, side: Side) -> tuple:
    """Positions whose entry can be bumped by one and stay admissible:
    below k the next bound must leave a gap, at k the cap must leave room."""
    base, cap = spec.side_bounds(side)
    k = spec.k
    out = []
    for i in range(1, k):
        if base[i - 1] + 1 < base[i]:
            out.append(i)
    if base[k - 1] < cap:
        out.append(k)
    return tuple(out)


def l_indices_literal(spec: ProblemSpec, side: Side) -> tuple:
    """The uncorrected index set: compares against the full bound sequence
    (with the one-past-the-end convention) even at position k, where the
    tuple has no entry to collide with.  Kept only so regressions can
    document where it disagrees with ``l_indices``."""
    if side == "rows":
        seq, cap, sentinel = spec.a, spec.u, spec.m + 1
    else:
        seq, cap, sentinel = spec.b, spec.n, spec.n + 1
    k = spec.k
    out = []
    for i in range(1, k + 1):
        nxt = seq[i] if i < spec.r else sentinel
        if seq[i - 1] + 1 < nxt and seq[i - 1] < cap:
            out.append(i)
    return tuple(out)


def bumped_tuple(spec: ProblemSpec, side: Side, l: int) -> tuple:
    base, _ = spec.side_bounds(side)
    return tuple(c + 1 if i == l else c for i, c in enumerate(base, start=1))


def coheight_formula(spec: ProblemSpec, side: Side, l: int) -> int:
    base, cap = spec.side_bounds(side)
    return cap - spec.k - base[l - 1] + 2 * l - 2


def minimal_join_irreducibles(spec: ProblemSpec, side: Side) -> list:
    """(tuple, coheight) pairs for the minimal join-irreducible tuples:
    the bottom tuple with one bumpable entry raised by one."""
    return [
        (bumped_tuple(spec, side, l), coheight_formula(spec, side, l))
        for l in l_indices(spec, side)
    ]


def theta_join_irreducibles(
    spec: ProblemSpec, d1: Optional[Poset] = None, d2: Optional[Poset] = None
) -> Poset:
    """Join-irreducible subposet of the minor lattice, built factor by
    factor: a pair is join-irreducible exactly when one coordinate is
    join-irreducible in its tuple lattice and the other sits at bottom.
    This avoids materializing the full product."""
    d1 = build_d1(spec) if d1 is None else d1
    d2 = build_d2(spec) if d2 is None else d2
    bot1 = bottom_tuple(spec, "rows")
    bot2 = bottom_tuple(spec, "columns")
    elems = [Minor(t, bot2) for t in d1.join_irreducibles()] + [
        Minor(bot1, t) for t in d2.join_irreducibles()
    ]
    return Poset.build(
        elems,
        lambda g, h: all(x <= y for x, y in zip(g.rows, h.rows))
        and all(x <= y for x, y in zip(g.cols, h.cols)),
        label=minor_label,
    )
