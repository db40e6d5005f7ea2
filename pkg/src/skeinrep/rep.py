"""Representation matrices of the specific mapping classes we need.

Every matrix is a ScalarBlockMatrix over a layout of B_T:
  * the type layout (TypeI, TypeII, TypeIII) for sigma_1 and sigma_2,
  * the cell layout (I_i(a), II_i(a)) for sigma_n, the full twist and M,
  * a label layout (grouped by a_p) for diagonal twist actions.
Exact values never depend on t, so matrices are cached per (n, r).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .blocks import ScalarBlockMatrix
from .coloring import Cell, count_profile, is_admissible, label_counts
from .cyclo import CycloElem, RootChoice, qint, x_pow
from .recoupling import matrix_A, x_entries


class FormulaMismatch(AssertionError):
    """A closed form disagrees with the product it is supposed to equal."""


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def twist_coeff(a: int, b: int, c: int, root: RootChoice) -> CycloElem:
    """(-1)^{(a-b-c)/2} q^{-(a(a+2)-b(b+2)-c(c+2))/8}: the half twist of b, c fusing to a."""
    if not is_admissible(a, b, c):
        raise ValueError(f"triple {(a, b, c)} is not admissible")
    e = a * (a + 2) - b * (b + 2) - c * (c + 2)
    # a+b+c even makes e even, so the exponent is a multiple of 1/4
    assert e % 2 == 0
    return CycloElem.monomial(root.N, -e // 2, _sign((a - b - c) // 2))


def halftwist_eigenvalues(s: int, root: RootChoice) -> tuple[CycloElem, CycloElem]:
    """Eigenvalues of sigma^s on fused label 0 and fused label 2."""
    return (
        CycloElem.monomial(root.N, 3 * s, _sign(s)),
        CycloElem.monomial(root.N, -s),
    )


def trace_f(s: int, root: RootChoice) -> CycloElem:
    """f_s(q), so that tr rho_T(sigma_1^s sigma_2^{-s}) = f_s(q) k + k'."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    N = root.N
    qs = x_pow(root, 4 * s)
    qms = x_pow(root, -4 * s)
    half = x_pow(root, 2 * s) + x_pow(root, -2 * s) * _sign(s + 1)
    ratio = half / qint(root, 2)
    return (qs + qms) * _sign(s) + ratio * ratio * _sign(s + 1) + CycloElem.zero(N)


def full_twist_scalar(m: int, a: int, root: RootChoice) -> CycloElem:
    """Scalar of (sigma_1 ... sigma_{m-1})^m on a coloring with a_{m-1} = a."""
    return CycloElem.monomial(root.N, 3 * m - (a * a + 2 * a), _sign(m + a))


def twist_scalar(a: int, n: int, root: RootChoice) -> CycloElem:
    """q^{3n/4} q^{-(a^2+2a)/4}; equals full_twist_scalar(n, a) since a = n mod 2."""
    return x_pow(root, 3 * n - (a * a + 2 * a))


# -- section 2: sigma_1^s sigma_2^{-s} ------------------------------------------


def rho_halftwist_T(s: int, n: int, root: RootChoice) -> ScalarBlockMatrix:
    """rho_T(sigma_1^s): diagonal on the type layout."""
    A = matrix_A(n, root)
    e0, e2 = halftwist_eigenvalues(s, root)
    return ScalarBlockMatrix.diagonal(root.N, A.groups, [e0] + [e2] * (A.k - 1))


def commutator2_closed(s: int, n: int, root: RootChoice) -> ScalarBlockMatrix:
    N = root.N
    prof = count_profile(n, root.r)
    q2i = qint(root, 2).inverse()
    q3 = qint(root, 3)
    sg = _sign(s)
    qs = x_pow(root, 4 * s) * sg
    qms = x_pow(root, -4 * s) * sg
    entries = {
        (0, 0): (1 + qs * q3) * q2i**2,
        (0, 1): (qs - 1) * q3 * q2i**3,
        (1, 0): (1 - qms) * q2i,
        (1, 1): (1 + qms * q3) * q2i**2,
    }
    groups = [("TypeI", prof.k), ("TypeII", prof.k)]
    if prof.k_prime:
        groups.append(("TypeIII", prof.k_prime))
        entries[(2, 2)] = CycloElem.one(N)
    return ScalarBlockMatrix(N, groups, entries)


def commutator2_product(s: int, n: int, root: RootChoice) -> ScalarBlockMatrix:
    A = matrix_A(n, root)
    return rho_halftwist_T(s, n, root) @ A @ rho_halftwist_T(-s, n, root) @ A


@lru_cache(maxsize=None)
def _commutator2(s: int, n: int, r: int) -> ScalarBlockMatrix:
    root = RootChoice(r)
    closed = commutator2_closed(s, n, root)
    if closed != commutator2_product(s, n, root):
        raise FormulaMismatch(f"sigma_1^{s} sigma_2^-{s}: closed form != D A D A at n={n}, r={r}")
    return closed


def rho_commutator2(s: int, n: int, root: RootChoice) -> ScalarBlockMatrix:
    """rho_T(sigma_1^s sigma_2^{-s}), closed form checked against the product."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    return _commutator2(s, n, root.r)


# -- section 3: sigma_n, full twist, M -----------------------------------------


def _cell_groups(n: int, r: int) -> list[tuple[str, int]]:
    return [(str(c), v) for c, v in count_profile(n, r).cell_sizes("T").items()]


def x_blocks(n: int, r: int) -> list[int]:
    """Values a with a nondegenerate 2x2 block X(a) (a <= r-4, l_2(a) > 0)."""
    prof = count_profile(n, r)
    return [a for a in sorted(prof.l2) if prof.l2[a] and a <= r - 4]


def matrix_Y(a: int, root: RootChoice, size: int = 1) -> ScalarBlockMatrix:
    """Y(a) = -q^{3/4} on II'_0(a), q^{-1/4} on II'_2(a); Y(r-1) keeps only the first."""
    if a < 1 or a > root.r - 1:
        raise ValueError(f"Y(a) needs 1 <= a <= r-1, got {a}")
    e0, e2 = halftwist_eigenvalues(1, root)
    if a == root.r - 1:
        return ScalarBlockMatrix(root.N, [(f"II'0({a})", size)], {(0, 0): e0})
    groups = [(f"II'0({a})", size), (f"II'2({a})", size)]
    return ScalarBlockMatrix.diagonal(root.N, groups, [e0, e2])


def matrix_Z(a: int, n: int, root: RootChoice, size: int = 1) -> ScalarBlockMatrix:
    """Z(a) = f_a on II_2(a), f_{a+2} on II_0(a+2)."""
    if a == root.r - 3:
        return ScalarBlockMatrix(root.N, [(f"II2({a})", size)], {(0, 0): twist_scalar(a, n, root)})
    groups = [(f"II2({a})", size), (f"II0({a + 2})", size)]
    return ScalarBlockMatrix.diagonal(
        root.N, groups, [twist_scalar(a, n, root), twist_scalar(a + 2, n, root)]
    )


def m_block_product(a: int, n: int, root: RootChoice) -> list[list[CycloElem]]:
    """Z X^{-1} Y X Z^{-1} X^{-1} Y^{-1} X as a 2x2 grid."""
    N = root.N
    g = [("u", 1), ("v", 1)]
    X, Xi = (ScalarBlockMatrix.from_grid(N, g, m) for m in x_entries(a, root))
    Y = ScalarBlockMatrix.diagonal(N, g, halftwist_eigenvalues(1, root))
    Z = ScalarBlockMatrix.diagonal(N, g, [twist_scalar(a, n, root), twist_scalar(a + 2, n, root)])
    return (Z @ Xi @ Y @ X @ Z.inverse() @ Xi @ Y.inverse() @ X).grid()


def m_block_closed(a: int, n: int, root: RootChoice) -> list[list[CycloElem]]:
    """The bracketed closed form of M(a)."""
    q = lambda m: qint(root, m)  # noqa: E731
    fa, fa2 = twist_scalar(a, n, root), twist_scalar(a + 2, n, root)
    c = 1 - fa * fa2.conj()
    cb = 1 - fa.conj() * fa2
    K = q(a + 1) * q(a + 3) / q(a + 2) ** 2
    h, hi = x_pow(root, 2), x_pow(root, -2)
    return [
        [
            1 - c * K,
            c * (-h * q(a + 1) + hi * q(a + 3)) * q(a + 1) * q(a + 3) / (q(2) * q(a + 2) ** 3),
        ],
        [cb * (hi * q(a + 1) - h * q(a + 3)) / (q(2) * q(a + 2)), 1 - cb * K],
    ]


def m_block_trace(a: int, root: RootChoice) -> CycloElem:
    """Per-copy trace 2 + (q^{(a+1)/2} - q^{-(a+1)/2})(q^{(a+3)/2} - q^{-(a+3)/2})."""
    u = x_pow(root, 2 * (a + 1)) - x_pow(root, -2 * (a + 1))
    v = x_pow(root, 2 * (a + 3)) - x_pow(root, -2 * (a + 3))
    return 2 + u * v


def m_block(a: int, n: int, root: RootChoice, size: int = 1) -> ScalarBlockMatrix:
    grid = m_block_closed(a, n, root)
    if grid != m_block_product(a, n, root):
        raise FormulaMismatch(f"M({a}) closed form != product form at n={n}, r={root.r}")
    groups = [(f"II2({a})", size), (f"II0({a + 2})", size)]
    return ScalarBlockMatrix.from_grid(root.N, groups, grid)


def _cells_with(n: int, r: int, blocks: dict[int, list[list[CycloElem]]], diag) -> ScalarBlockMatrix:
    """Cell-layout matrix with 2x2 grids on (II2(a), II0(a+2)) and ``diag(cell)`` elsewhere."""
    groups = _cell_groups(n, r)
    N = 4 * r
    pos = {name: i for i, (name, _) in enumerate(groups)}
    entries = {}
    inside = set()
    for a, grid in blocks.items():
        i, j = pos[f"II2({a})"], pos[f"II0({a + 2})"]
        inside.update((i, j))
        for (u, iu), (v, jv) in (((0, i), (0, i)), ((0, i), (1, j)), ((1, j), (0, i)), ((1, j), (1, j))):
            entries[(iu, jv)] = grid[u][v]
    for i, (name, _) in enumerate(groups):
        if i not in inside:
            entries[(i, i)] = diag(Cell.parse(name))
    return ScalarBlockMatrix(N, groups, entries)


def rho_sigma_n(j: int, n: int, root: RootChoice) -> ScalarBlockMatrix:
    """rho_T(sigma_n^j) = X^{-1} rho_Y(sigma_n^j) X on the cell layout."""
    r, N = root.r, root.N
    e0, e2 = halftwist_eigenvalues(j, root)
    g = [("u", 1), ("v", 1)]
    blocks = {}
    for a in x_blocks(n, r):
        X, Xi = (ScalarBlockMatrix.from_grid(N, g, m) for m in x_entries(a, root))
        blocks[a] = (Xi @ ScalarBlockMatrix.diagonal(N, g, [e0, e2]) @ X).grid()

    def diag(c: Cell):
        # I cells fuse to 2; lone II_0(1) and the tail II_2(r-3) fuse to 0
        return e2 if c.family == "I" else e0

    return _cells_with(n, r, blocks, diag)


def rho_fulltwist_T(n: int, root: RootChoice) -> ScalarBlockMatrix:
    """rho_T((sigma_1 ... sigma_{n-1})^n), diagonal on the cell layout."""
    return _cells_with(n, root.r, {}, lambda c: twist_scalar(c.a, n, root))


@lru_cache(maxsize=None)
def _assemble_M(n: int, r: int) -> ScalarBlockMatrix:
    root = RootChoice(r)
    blocks = {}
    for a in x_blocks(n, r):
        grid = m_block_closed(a, n, root)
        if grid != m_block_product(a, n, root):
            raise FormulaMismatch(f"M({a}) closed form != product form at n={n}, r={r}")
        blocks[a] = grid
    one = CycloElem.one(root.N)
    M = _cells_with(n, r, blocks, lambda c: one)
    F = rho_fulltwist_T(n, root)
    S = rho_sigma_n(1, n, root)
    if M != F @ S @ F.inverse() @ S.inverse():
        raise FormulaMismatch(f"assembled M != F sigma_n F^-1 sigma_n^-1 at n={n}, r={r}")
    return M


def assemble_M(n: int, root: RootChoice) -> ScalarBlockMatrix:
    """M = rho_T((s_1..s_{n-1})^n s_n (s_1..s_{n-1})^{-n} s_n^{-1}) on the cell layout."""
    if 2 * n < 6:
        raise ValueError(f"need 2n >= 6, got n={n}")
    if root.r < 4:
        raise ValueError(f"need r >= 4, got r={root.r}")
    return _assemble_M(n, root.r)


def m_block_labels(M: ScalarBlockMatrix) -> list[tuple[int, list[int]]]:
    """(a, group indices) for every 2x2 block M(a) inside an assembled M."""
    out = []
    for comp in M.components():
        if len(comp) == 2:
            a = Cell.parse(M.groups[comp[0]][0]).a
            out.append((a, comp))
    return out


# -- label-diagonal twists -----------------------------------------------------


def label_diagonal(n: int, root: RootChoice, position: int, value) -> ScalarBlockMatrix:
    """Diagonal matrix acting by value(a) on colorings with a_position = a."""
    if position in (0, 2 * n - 2):
        return ScalarBlockMatrix(root.N, [(f"a{position}=1", count_profile(n, root.r).total)], {(0, 0): value(1)})
    counts = label_counts(n, root.r, position)
    groups = [(f"a{position}={v}", c) for v, c in sorted(counts.items())]
    return ScalarBlockMatrix.diagonal(root.N, groups, [value(v) for v in sorted(counts)])


def rho_fulltwist(m: int, n: int, root: RootChoice) -> ScalarBlockMatrix:
    """(sigma_1 ... sigma_{m-1})^m for 1 <= m <= 2n."""
    if not 1 <= m <= 2 * n:
        raise ValueError(f"full twist on m strands needs 1 <= m <= 2n = {2 * n}, got {m}")
    if m == 2 * n:
        # all strands: the total colour is 0
        return label_diagonal(n, root, 0, lambda a: full_twist_scalar(m, 0, root))
    return label_diagonal(n, root, m - 1, lambda a: full_twist_scalar(m, a, root))


def rho_separating_twist(h: int, m: int, n: int, root: RootChoice) -> ScalarBlockMatrix:
    """T_{delta_h}^m = (sigma_1 ... sigma_{2h})^{(4h+2)m}, diagonal by a_{2h}."""
    if not 1 <= h <= n - 2:
        raise ValueError(f"need 1 <= h <= g-1 = {n - 2}, got h={h}")
    return label_diagonal(n, root, 2 * h, lambda a: full_twist_scalar(2 * h + 1, a, root) ** (2 * m))


# -- element descriptors -------------------------------------------------------


@dataclass(frozen=True)
class HalfTwistPow:
    s: int
    i: int = 1


@dataclass(frozen=True)
class Commutator2:
    s: int


@dataclass(frozen=True)
class FullTwist:
    m: int


@dataclass(frozen=True)
class SigmaN:
    j: int


@dataclass(frozen=True)
class CommutatorM:
    pass


@dataclass(frozen=True)
class SeparatingTwistPow:
    h: int
    m: int


SUPPORTED = "HalfTwistPow(s), Commutator2(s), FullTwist(m), SigmaN(j), CommutatorM, SeparatingTwistPow(h, m)"


def element_name(e) -> str:
    if isinstance(e, CommutatorM):
        return "CommutatorM"
    fields = ", ".join(f"{k}={v}" for k, v in e.__dict__.items())
    return f"{type(e).__name__}({fields})"


def parse_element(text: str):
    """Parse 'Commutator2(2)', 'CommutatorM', 'SigmaN(-1)' and friends."""
    text = text.strip()
    name, _, rest = text.partition("(")
    args = [int(v) for v in rest.rstrip(")").split(",") if v.strip()] if rest else []
    kinds = {
        "HalfTwistPow": HalfTwistPow,
        "Commutator2": Commutator2,
        "FullTwist": FullTwist,
        "SigmaN": SigmaN,
        "CommutatorM": CommutatorM,
        "SeparatingTwistPow": SeparatingTwistPow,
    }
    if name not in kinds:
        raise ValueError(f"unsupported element {text!r}; supported: {SUPPORTED}")
    try:
        return kinds[name](*args)
    except TypeError:
        raise ValueError(f"bad arguments for {name}: {args}") from None


def represent(elem, n: int, root: RootChoice) -> ScalarBlockMatrix:
    if isinstance(elem, HalfTwistPow):
        if elem.i != 1:
            raise ValueError("only sigma_1 powers are supported for HalfTwistPow")
        return rho_halftwist_T(elem.s, n, root)
    if isinstance(elem, Commutator2):
        return rho_commutator2(elem.s, n, root)
    if isinstance(elem, FullTwist):
        return rho_fulltwist(elem.m, n, root)
    if isinstance(elem, SigmaN):
        return rho_sigma_n(elem.j, n, root)
    if isinstance(elem, CommutatorM):
        return assemble_M(n, root)
    if isinstance(elem, SeparatingTwistPow):
        return rho_separating_twist(elem.h, elem.m, n, root)
    raise ValueError(f"unsupported element {elem!r}; supported: {SUPPORTED}")
