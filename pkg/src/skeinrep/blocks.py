"""Matrices built from scalar multiples of identity blocks.

A ScalarBlockMatrix over groups (name_1, s_1), ..., (name_k, s_k) stands for
the (s_1 + ... + s_k)-square matrix whose (i, j) block is c_ij * I.  A block
can be nonzero only when s_i = s_j.  All algebra happens on the k x k grid.
"""

from __future__ import annotations

from .cyclo import CycloElem, RootChoice


class ScalarBlockMatrix:
    __slots__ = ("N", "groups", "entries")

    def __init__(self, N: int, groups, entries=None):
        self.N = N
        self.groups = tuple((str(g), int(s)) for g, s in groups)
        if any(s <= 0 for _, s in self.groups):
            raise ValueError(f"group sizes must be positive: {self.groups}")
        ent = {}
        for (i, j), v in (entries or {}).items():
            if not isinstance(v, CycloElem):
                v = CycloElem.rational(N, v)
            if v.N != N:
                raise ValueError("entry lives in a different field")
            if v.is_zero():
                continue
            if self.groups[i][1] != self.groups[j][1]:
                raise ValueError(
                    f"nonzero block between groups {self.groups[i]} and {self.groups[j]} of different size"
                )
            ent[(i, j)] = v
        self.entries = ent

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, N: int, groups) -> "ScalarBlockMatrix":
        return cls(N, groups, {(i, i): CycloElem.one(N) for i in range(len(groups))})

    @classmethod
    def diagonal(cls, N: int, groups, values) -> "ScalarBlockMatrix":
        return cls(N, groups, {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_grid(cls, N: int, groups, grid) -> "ScalarBlockMatrix":
        return cls(N, groups, {(i, j): v for i, row in enumerate(grid) for j, v in enumerate(row)})

    @classmethod
    def direct_sum(cls, *parts: "ScalarBlockMatrix") -> "ScalarBlockMatrix":
        N = parts[0].N
        groups, entries, off = [], {}, 0
        for p in parts:
            if p.N != N:
                raise ValueError("direct sum of matrices over different fields")
            groups.extend(p.groups)
            for (i, j), v in p.entries.items():
                entries[(i + off, j + off)] = v
            off += len(p.groups)
        return cls(N, groups, entries)

    # -- basic queries -------------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.groups)

    @property
    def dim(self) -> int:
        return sum(s for _, s in self.groups)

    def __getitem__(self, ij) -> CycloElem:
        return self.entries.get(ij, CycloElem.zero(self.N))

    def grid(self) -> list[list[CycloElem]]:
        return [[self[i, j] for j in range(self.k)] for i in range(self.k)]

    def index(self, name: str) -> int:
        for i, (g, _) in enumerate(self.groups):
            if g == name:
                return i
        raise KeyError(name)

    def _same_shape(self, other: "ScalarBlockMatrix"):
        if self.N != other.N or self.groups != other.groups:
            raise ValueError("block layouts differ")

    def __eq__(self, other):
        if not isinstance(other, ScalarBlockMatrix):
            return NotImplemented
        return self.N == other.N and self.groups == other.groups and self.entries == other.entries

    def __hash__(self):
        return hash((self.N, self.groups, frozenset(self.entries.items())))

    # -- algebra -------------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        ent = dict(self.entries)
        for ij, v in other.entries.items():
            ent[ij] = ent[ij] + v if ij in ent else v
        return ScalarBlockMatrix(self.N, self.groups, ent)

    def __neg__(self):
        return ScalarBlockMatrix(self.N, self.groups, {ij: -v for ij, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ScalarBlockMatrix":
        return ScalarBlockMatrix(self.N, self.groups, {ij: v * c for ij, v in self.entries.items()})

    def __matmul__(self, other):
        self._same_shape(other)
        rows: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        ent = {}
        for (i, k), u in self.entries.items():
            for j, v in rows.get(k, ()):
                ent[(i, j)] = ent[(i, j)] + u * v if (i, j) in ent else u * v
        return ScalarBlockMatrix(self.N, self.groups, ent)

    def components(self) -> list[list[int]]:
        """Connected components of the nonzero pattern (each has one group size)."""
        parent = list(range(self.k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.entries:
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
        comps: dict[int, list[int]] = {}
        for i in range(self.k):
            comps.setdefault(find(i), []).append(i)
        return sorted(comps.values())

    def restrict(self, idx) -> "ScalarBlockMatrix":
        idx = list(idx)
        pos = {g: p for p, g in enumerate(idx)}
        ent = {
            (pos[i], pos[j]): v for (i, j), v in self.entries.items() if i in pos and j in pos
        }
        return ScalarBlockMatrix(self.N, [self.groups[i] for i in idx], ent)

    def inverse(self) -> "ScalarBlockMatrix":
        ent = {}
        for comp in self.components():
            inv = _grid_inverse([[self[i, j] for j in comp] for i in comp], self.N)
            for a, i in enumerate(comp):
                for b, j in enumerate(comp):
                    if not inv[a][b].is_zero():
                        ent[(i, j)] = inv[a][b]
        return ScalarBlockMatrix(self.N, self.groups, ent)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = ScalarBlockMatrix.identity(self.N, self.groups)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def trace(self) -> CycloElem:
        t = CycloElem.zero(self.N)
        for i, (_, s) in enumerate(self.groups):
            if (i, i) in self.entries:
                t = t + self.entries[(i, i)] * s
        return t

    def det(self) -> CycloElem:
        d = CycloElem.one(self.N)
        for comp in self.components():
            size = self.groups[comp[0]][1]
            d = d * _grid_det([[self[i, j] for j in comp] for i in comp], self.N) ** size
        return d

    def scalar_value(self):
        """c if the matrix is c * I, else None."""
        if self.k == 0:
            return CycloElem.one(self.N)
        c = self.entries.get((0, 0))
        if c is None or len(self.entries) != self.k:
            return None
        for i in range(self.k):
            if self.entries.get((i, i)) != c:
                return None
        return c

    def is_scalar(self) -> bool:
        return self.scalar_value() is not None

    def is_identity(self) -> bool:
        return self.scalar_value() == CycloElem.one(self.N)

    def conj(self) -> "ScalarBlockMatrix":
        return ScalarBlockMatrix(self.N, self.groups, {ij: v.conj() for ij, v in self.entries.items()})

    # -- rendering -----------------------------------------------------------

    def to_dense(self) -> list[list[CycloElem]]:
        """Full matrix; only for small test cases."""
        offs, o = [], 0
        for _, s in self.groups:
            offs.append(o)
            o += s
        zero = CycloElem.zero(self.N)
        out = [[zero] * o for _ in range(o)]
        for (i, j), v in self.entries.items():
            for d in range(self.groups[i][1]):
                out[offs[i] + d][offs[j] + d] = v
        return out

    def to_json(self, root: RootChoice | None = None) -> dict:
        return {
            "N": self.N,
            "groups": [{"name": g, "size": s} for g, s in self.groups],
            "blocks": [
                {"row": i, "col": j, "value": v.to_json(root)}
                for (i, j), v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ScalarBlockMatrix":
        groups = [(g["name"], g["size"]) for g in data["groups"]]
        ent = {(b["row"], b["col"]): CycloElem.from_json(b["value"]) for b in data["blocks"]}
        return cls(int(data["N"]), groups, ent)

    def render(self, root: RootChoice, digits: int = 6) -> str:
        names = [f"{g}[{s}]" for g, s in self.groups]
        width = max(len(n) for n in names) if names else 0
        lines = []
        for i in range(self.k):
            cells = []
            for j in range(self.k):
                v = self.entries.get((i, j))
                cells.append("0" if v is None else _fmt(v.to_complex(root), digits))
            lines.append(f"{names[i]:>{width}} | " + "  ".join(cells))
        return "\n".join(lines)

    def __repr__(self):
        return f"ScalarBlockMatrix(N={self.N}, groups={list(self.groups)}, nnz={len(self.entries)})"


def _fmt(z: complex, digits: int) -> str:
    re = round(z.real, digits) + 0.0
    im = round(z.imag, digits) + 0.0
    if im == 0:
        return f"{re:g}"
    if re == 0:
        return f"{im:g}i"
    return f"{re:g}{im:+g}i"


def _grid_inverse(g, N):
    n = len(g)
    one, zero = CycloElem.one(N), CycloElem.zero(N)
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(g)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular block grid")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _grid_det(g, N):
    n = len(g)
    if n == 1:
        return g[0][0]
    if n == 2:
        return g[0][0] * g[1][1] - g[0][1] * g[1][0]
    a = [list(row) for row in g]
    det = CycloElem.one(N)
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return CycloElem.zero(N)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if not a[r][col].is_zero():
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det
