"""Admissible colorings of the trivalent bases B_T, B_T' and B_Y.

A coloring of B_T is a lattice path a_0 = 1, a_1, ..., a_{2n-3}, a_{2n-2} = 1
with steps of +-1 and heights in [0, r-2].  The bases B_T' and B_Y fuse two
neighbouring strands at position p (p = 1 and p = n-1); the fused label is
0 or 2 and the path may jump by 0 or 2 across it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

BASES = ("T", "T'", "Y")
TYPES = ("TypeI", "TypeII", "TypeIII")


def is_admissible(a: int, b: int, c: int) -> bool:
    return (
        min(a, b, c) >= 0
        and (a + b + c) % 2 == 0
        and a <= b + c
        and b <= a + c
        and c <= a + b
    )


def is_q_admissible(triple, r: int) -> bool:
    a, b, c = triple
    return is_admissible(a, b, c) and max(a, b, c) <= r - 2 and a + b + c <= 2 * (r - 2)


def _check_nr(n: int, r: int):
    if 2 * n < 6:
        raise ValueError(f"need 2n >= 6 punctures, got n={n}")
    if r < 4:
        raise ValueError(f"need r >= 4 (r=3 bases are not supported), got r={r}")


def fused_position(basis: str, n: int):
    if basis == "T":
        return None
    if basis == "T'":
        return 1
    if basis == "Y":
        return n - 1
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


def vertex_triples(basis: str, n: int, labels) -> list[tuple[int, int, int]]:
    """Every trivalent vertex of the basis graph for the given interior labels."""
    L = (1, *labels, 1)
    if len(L) != 2 * n - 1:
        raise ValueError(f"expected {2 * n - 3} labels for n={n}, got {len(labels)}")
    p = fused_position(basis, n)
    if p is None:
        return [(L[i - 1], 1, L[i]) for i in range(1, 2 * n - 1)]
    out = [(L[i - 1], 1, L[i]) for i in range(1, p)]
    out.append((1, 1, L[p]))
    out.append((L[p - 1], L[p], L[p + 1]))
    out.extend((L[i - 1], 1, L[i]) for i in range(p + 2, 2 * n - 1))
    return out


class Cell(NamedTuple):
    """Partition cell such as I_0(a) or II'_2(a)."""

    family: str  # "I" or "II"
    sub: int  # 0 or 2
    a: int
    primed: bool = False

    def sort_key(self):
        return (self.family != "I", self.a, self.sub)

    def __str__(self):
        return f"{self.family}{chr(39) if self.primed else ''}{self.sub}({self.a})"

    @classmethod
    def parse(cls, s: str) -> "Cell":
        primed = "'" in s
        s = s.replace("'", "")
        head, a = s.rstrip(")").split("(")
        return cls(head[:-1], int(head[-1]), int(a), primed)


def cell_of(basis: str, n: int, labels) -> Cell:
    """The unique partition cell containing a B_T or B_Y coloring."""
    L = (1, *labels, 1)
    lo, mid, hi = L[n - 2], L[n - 1], L[n]
    if basis == "T":
        cells = []
        if (lo, hi) == (mid - 1, mid + 1):
            cells.append(Cell("I", 0, mid))
        if (lo, hi) == (mid + 1, mid - 1):
            cells.append(Cell("I", 2, mid))
        if lo == hi == mid - 1:
            cells.append(Cell("II", 0, mid))
        if lo == hi == mid + 1:
            cells.append(Cell("II", 2, mid))
    elif basis == "Y":
        cells = []
        if hi == lo + 2 and mid == 2:
            cells.append(Cell("I", 0, lo + 1, True))
        if lo == hi + 2 and mid == 2:
            cells.append(Cell("I", 2, hi + 1, True))
        if lo == hi:
            cells.append(Cell("II", mid, lo + 1, True))
    else:
        raise ValueError(f"cells are defined for T and Y only, got {basis!r}")
    assert len(cells) == 1, f"partition conditions not exclusive for {labels}: {cells}"
    return cells[0]


def type_of(labels) -> str:
    """Section-2 type from (a_1, a_2)."""
    a1, a2 = labels[0], labels[1]
    if a1 == 0:
        return "TypeI"
    return "TypeII" if a2 == 1 else "TypeIII"


@dataclass(frozen=True)
class Coloring:
    n: int
    labels: tuple[int, ...]
    basis: str = "T"

    def __post_init__(self):
        if any(a < 0 for a in self.labels):
            raise ValueError(f"negative label in {self.labels}")
        for tri in vertex_triples(self.basis, self.n, self.labels):
            if not is_admissible(*tri):
                raise ValueError(f"vertex {tri} of {self.labels} is not admissible")

    @property
    def full(self) -> tuple[int, ...]:
        return (1, *self.labels, 1)

    def is_q_admissible(self, r: int) -> bool:
        return all(is_q_admissible(v, r) for v in vertex_triples(self.basis, self.n, self.labels))


@dataclass
class BasisLayout:
    basis: str
    n: int
    r: int
    scheme: str
    entries: list = field(default_factory=list)  # (Coloring, tag)

    def __len__(self):
        return len(self.entries)

    @property
    def groups(self) -> list[tuple[str, int]]:
        out = []
        for _, tag in self.entries:
            name = str(tag)
            if out and out[-1][0] == name:
                out[-1] = (name, out[-1][1] + 1)
            else:
                out.append((name, 1))
        return out

    def sizes(self) -> dict[str, int]:
        return dict(self.groups)

    def colorings(self) -> list[tuple[int, ...]]:
        return [c.labels for c, _ in self.entries]


def _paths(basis: str, n: int, r: int):
    """All q-admissible label sequences, by depth-first search."""
    length = 2 * n - 3
    cap = r - 2
    p = fused_position(basis, n)
    L = [1] + [None] * length + [1]

    def options(i):
        prev = L[i - 1]
        if p is None or i < p:
            return (prev - 1, prev + 1)
        if i == p:
            return (0, 2)
        if i == p + 1:
            return range(0, cap + 1)
        return (prev - 1, prev + 1)

    def ok(i):
        # check every vertex whose labels are now all known
        if not 0 <= L[i] <= cap:
            return False
        if p is not None and i == p + 1:
            return is_q_admissible((L[p - 1], L[p], L[p + 1]), r)
        if p is not None and i == p:
            return is_q_admissible((1, 1, L[p]), r)
        return is_q_admissible((L[i - 1], 1, L[i]), r)

    def rec(i):
        if i == length + 1:
            if ok(i):
                yield tuple(L[1:-1])
            return
        for v in options(i):
            L[i] = v
            if ok(i):
                yield from rec(i + 1)
        L[i] = None

    yield from rec(1)


def enumerate_basis(basis: str, n: int, r: int, scheme: str | None = None) -> BasisLayout:
    """Brute-force ordered layout of a basis.

    ``scheme`` is "types" (the I/II/III split by (a_1, a_2), default for T')
    or "cells" (I_i(a)/II_i(a) split around a_{n-1}, default for T and Y).
    """
    _check_nr(n, r)
    if scheme is None:
        scheme = "types" if basis == "T'" else "cells"
    if scheme == "types" and basis == "Y":
        raise ValueError("the type split is only defined for B_T and B_T'")
    if scheme == "cells" and basis == "T'":
        raise ValueError("the cell split is only defined for B_T and B_Y")
    entries = []
    for labels in _paths(basis, n, r):
        c = Coloring(n, labels, basis)
        tag = type_of(labels) if scheme == "types" else cell_of(basis, n, labels)
        entries.append((c, tag))
    if scheme == "types":
        entries.sort(key=lambda e: (TYPES.index(e[1]), e[0].labels))
    else:
        entries.sort(key=lambda e: (e[1].sort_key(), e[0].labels))
    return BasisLayout(basis, n, r, scheme, entries)


@dataclass(frozen=True)
class CountProfile:
    n: int
    r: int
    k: int
    k_prime: int
    type_sizes: dict
    k0: dict
    k2: dict
    l0: dict
    l2: dict
    kp0: dict
    kp2: dict
    lp0: dict
    lp2: dict
    total: int

    def cell_sizes(self, basis: str = "T") -> dict[Cell, int]:
        """Nonzero cell sizes keyed by Cell, in layout order."""
        if basis == "T":
            maps = (("I", 0, self.k0), ("I", 2, self.k2), ("II", 0, self.l0), ("II", 2, self.l2))
            primed = False
        elif basis == "Y":
            maps = (("I", 0, self.kp0), ("I", 2, self.kp2), ("II", 0, self.lp0), ("II", 2, self.lp2))
            primed = True
        else:
            raise ValueError(f"no cell split for basis {basis!r}")
        cells = [
            (Cell(fam, sub, a, primed), v) for fam, sub, mp in maps for a, v in mp.items() if v
        ]
        cells.sort(key=lambda cv: cv[0].sort_key())
        return dict(cells)

    def k_agg(self, m: int) -> int:
        """2 * sum of k_0(a) over a <= m with a = m mod 2."""
        return 2 * sum(v for a, v in self.k0.items() if a <= m and (m - a) % 2 == 0)

    def a_values(self) -> list[int]:
        return sorted(a for a in range(0, self.r) if (a - self.n) % 2 == 0)

    def to_json(self) -> dict:
        def s(d):
            return {str(a): v for a, v in sorted(d.items()) if v}

        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "k_prime": self.k_prime,
            "dimension": self.total,
            "types": dict(self.type_sizes),
            "k0": s(self.k0),
            "k2": s(self.k2),
            "l0": s(self.l0),
            "l2": s(self.l2),
            "k0_prime": s(self.kp0),
            "k2_prime": s(self.kp2),
            "l0_prime": s(self.lp0),
            "l2_prime": s(self.lp2),
        }


@lru_cache(maxsize=None)
def _tables(n: int, r: int):
    cap = r - 2
    last = 2 * n - 2
    F = [[0] * (cap + 1) for _ in range(last + 1)]
    B = [[0] * (cap + 1) for _ in range(last + 1)]
    F[0][1] = 1
    B[last][1] = 1
    for p in range(1, last + 1):
        for h in range(cap + 1):
            F[p][h] = (F[p - 1][h - 1] if h >= 1 else 0) + (F[p - 1][h + 1] if h < cap else 0)
    for p in range(last - 1, -1, -1):
        for h in range(cap + 1):
            B[p][h] = (B[p + 1][h - 1] if h >= 1 else 0) + (B[p + 1][h + 1] if h < cap else 0)
    return F, B


@lru_cache(maxsize=None)
def count_profile(n: int, r: int) -> CountProfile:
    """Cell sizes by forward/backward path counting with height cap r-2."""
    _check_nr(n, r)
    cap = r - 2
    F, B = _tables(n, r)

    def f(h):
        return F[n - 2][h] if 0 <= h <= cap else 0

    def b(h):
        return B[n][h] if 0 <= h <= cap else 0

    k0, k2, l0, l2, kp0, kp2, lp0, lp2 = ({} for _ in range(8))
    for a in range(0, cap + 1):
        if (a - n) % 2:
            continue
        k0[a] = f(a - 1) * b(a + 1)
        k2[a] = f(a + 1) * b(a - 1)
        l0[a] = f(a - 1) * b(a - 1)
        l2[a] = f(a + 1) * b(a + 1)
    for a in range(0, cap + 2):
        if (a - n) % 2:
            continue
        kp0[a] = f(a - 1) * b(a + 1) * is_q_admissible((a - 1, 2, a + 1), r) if a >= 1 else 0
        kp2[a] = f(a + 1) * b(a - 1) * is_q_admissible((a + 1, 2, a - 1), r) if a >= 1 else 0
        lp0[a] = f(a - 1) * b(a - 1) * is_q_admissible((a - 1, 0, a - 1), r) if a >= 1 else 0
        lp2[a] = f(a - 1) * b(a - 1) * is_q_admissible((a - 1, 2, a - 1), r) if a >= 1 else 0
    k = B[1][0]
    types = {"TypeI": k, "TypeII": B[2][1], "TypeIII": B[2][3] if cap >= 3 else 0}
    total = F[2 * n - 2][1]
    assert total == sum(types.values()) == sum(k0.values()) + sum(k2.values()) + sum(
        l0.values()
    ) + sum(l2.values())
    return CountProfile(
        n, r, k, types["TypeIII"], types, k0, k2, l0, l2, kp0, kp2, lp0, lp2, total
    )


def label_counts(n: int, r: int, position: int) -> dict[int, int]:
    """Number of q-admissible B_T colorings with a_position = v, for each v."""
    _check_nr(n, r)
    if not 1 <= position <= 2 * n - 3:
        raise ValueError(f"position must be in [1, {2 * n - 3}], got {position}")
    F, B = _tables(n, r)
    return {v: F[position][v] * B[position][v] for v in range(r - 1) if F[position][v] * B[position][v]}


def attained_values(n: int, r: int, position: int) -> set[int]:
    return set(label_counts(n, r, position))


def brute_counts(basis: str, n: int, r: int, scheme: str | None = None) -> dict[str, int]:
    """Cell sizes straight from enumeration (test oracle)."""
    return enumerate_basis(basis, n, r, scheme).sizes()


def all_sequences(n: int, r: int):
    """Every +-1 sequence from 1 to 1, without the height cap (test oracle)."""
    for steps in itertools.product((-1, 1), repeat=2 * n - 2):
        h = [1]
        for s in steps:
            h.append(h[-1] + s)
        if h[-1] == 1 and min(h) >= 0 and max(h) <= r - 2:
            yield tuple(h[1:-1])
