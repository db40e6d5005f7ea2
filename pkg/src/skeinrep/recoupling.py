"""6j-symbols for the colour-1 fusions used here, and the recoupling matrices A and X(a)."""

from __future__ import annotations

from .blocks import ScalarBlockMatrix
from .coloring import count_profile, is_admissible, is_q_admissible
from .cyclo import CycloElem, RootChoice, qint


class UnsupportedSixJ(NotImplementedError):
    pass


def sixj(key, root: RootChoice) -> CycloElem:
    """Value of the 6j-symbol {x 1 new; 1 y old}.

    Only the instances that re-fuse two colour-1 strands are supported:
    ``old`` is the edge between them before, ``new`` in {0, 2} the fused edge
    after, and x, y the outer labels.
    """
    key = tuple(int(v) for v in key)
    if len(key) != 6:
        raise ValueError(f"6j key needs six entries, got {key}")
    x, one_a, new, one_b, y, old = key
    if (one_a, one_b) != (1, 1) or new not in (0, 2) or abs(x - old) != 1 or abs(y - old) != 1:
        raise UnsupportedSixJ(f"6j key {key} not implemented; general 6j out of scope")
    if not is_admissible(x, new, y):
        raise ValueError(f"6j key {key}: fused triple {(x, new, y)} is not admissible")
    a = old
    if x != y:
        # monotone through old: only the fused label 2 occurs
        return CycloElem.one(root.N)
    if x == a - 1:
        # peak
        if new == 0:
            return qint(root, a + 1) / (qint(root, 2) * qint(root, a))
        return qint(root, a - 1) / qint(root, a)
    # valley
    if new == 0:
        return -qint(root, 2).inverse()
    return CycloElem.one(root.N)


# The five values listed for the first-vertex change of basis.
SECTION2_KEYS = {
    (1, 1, 0, 1, 1, 0): "-1/[2]",
    (1, 1, 2, 1, 1, 0): "1",
    (1, 1, 2, 1, 1, 2): "1/[2]",
    (1, 1, 0, 1, 1, 2): "[3]/[2]^2",
    (1, 1, 2, 1, 3, 2): "1",
}


def fusion(labels, position: int, root: RootChoice) -> list[tuple[tuple[int, ...], CycloElem]]:
    """Re-fuse the strands meeting at a_position; returns (new labels, coefficient)
    for every q-admissible target."""
    L = (1, *labels, 1)
    x, old, y = L[position - 1], L[position], L[position + 1]
    out = []
    for new in (0, 2):
        if not is_q_admissible((x, new, y), root.r):
            continue
        c = sixj((x, 1, new, 1, y, old), root)
        if c.is_zero():
            continue
        tgt = list(labels)
        tgt[position - 1] = new
        out.append((tuple(tgt), c))
    return out


def fusion_BT_to_BY(labels, n: int, root: RootChoice):
    """Expansion of a B_T coloring in B_Y (fusion at a_{n-1})."""
    return fusion(labels, n - 1, root)


def fusion_BT_to_BTp(labels, root: RootChoice):
    """Expansion of a B_T coloring in B_T' (fusion at a_1)."""
    return fusion(labels, 1, root)


def matrix_A(n: int, root: RootChoice) -> ScalarBlockMatrix:
    """B_T -> B_T' change of coordinates over the Type I/II/III layout."""
    prof = count_profile(n, root.r)
    N = root.N
    inv2 = qint(root, 2).inverse()
    groups = [("TypeI", prof.k), ("TypeII", prof.k)]
    entries = {
        (0, 0): -inv2,
        (0, 1): qint(root, 3) * inv2 * inv2,
        (1, 0): CycloElem.one(N),
        (1, 1): inv2,
    }
    if prof.k_prime:
        groups.append(("TypeIII", prof.k_prime))
        entries[(2, 2)] = CycloElem.one(N)
    return ScalarBlockMatrix(N, groups, entries)


def x_entries(a: int, root: RootChoice):
    """The 2x2 grid of X(a) and of its inverse, for a < r-3."""
    q = lambda m: qint(root, m)  # noqa: E731
    inv2 = q(2).inverse()
    s = q(a + 3) / (q(2) * q(a + 2))
    X = [[-inv2, s], [CycloElem.one(root.N), q(a + 1) / q(a + 2)]]
    Xinv = [[-q(a + 1) / q(a + 2), s], [CycloElem.one(root.N), inv2]]
    return X, Xinv


def matrix_X(a: int, root: RootChoice, n: int | None = None):
    """(X(a), X(a)^{-1}) from II_2(a) u II_0(a+2) to II'_0(a+2) u II'_2(a+2).

    Groups carry the B_T cell names; the rows are the primed cells in the
    same positions.  Without ``n`` the blocks have size 1.
    """
    r = root.r
    if a < 0 or a > r - 3:
        raise ValueError(f"X(a) needs 0 <= a <= r-3 = {r - 3}, got a={a}")
    size = 1
    if n is not None:
        prof = count_profile(n, r)
        size = prof.l2.get(a, 0)
        if size == 0:
            raise ValueError(f"X({a}) is degenerate for n={n}, r={r}: l_2({a}) = 0")
    N = root.N
    if a == r - 3:
        g = [(f"II2({a})", size)]
        v = -qint(root, 2).inverse()
        return (
            ScalarBlockMatrix(N, g, {(0, 0): v}),
            ScalarBlockMatrix(N, g, {(0, 0): v.inverse()}),
        )
    if n is not None:
        assert prof.l0.get(a + 2, 0) == size, "II_0(a+2) and II_2(a) differ in size"
    g = [(f"II2({a})", size), (f"II0({a + 2})", size)]
    X, Xinv = x_entries(a, root)
    return ScalarBlockMatrix.from_grid(N, g, X), ScalarBlockMatrix.from_grid(N, g, Xinv)
