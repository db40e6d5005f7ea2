import random
from fractions import Fraction

import pytest

from skeinrep.blocks import ScalarBlockMatrix
from skeinrep.cyclo import CycloElem, RootChoice, qint


N = 28  # r = 7


def _rand(rng):
    return CycloElem(N, [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(12)])


def _dense_mul(a, b):
    n = len(a)
    zero = CycloElem.zero(N)
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = zero
            for k in range(n):
                s = s + a[i][k] * b[k][j]
            out[i][j] = s
    return out


def _example(rng):
    groups = [("a", 2), ("b", 2), ("c", 1), ("d", 3)]
    ent = {(0, 0): _rand(rng), (0, 1): _rand(rng), (1, 0): _rand(rng), (1, 1): _rand(rng),
           (2, 2): _rand(rng), (3, 3): _rand(rng)}
    return ScalarBlockMatrix(N, groups, ent)


def test_matmul_matches_dense():
    rng = random.Random(1)
    A, B = _example(rng), _example(rng)
    assert (A @ B).to_dense() == _dense_mul(A.to_dense(), B.to_dense())


def test_inverse_det_trace():
    rng = random.Random(2)
    A = _example(rng)
    assert (A @ A.inverse()).is_identity()
    g = A.grid()
    d2 = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    assert A.det() == d2**2 * g[2][2] * g[3][3] ** 3
    assert A.trace() == 2 * (g[0][0] + g[1][1]) + g[2][2] + 3 * g[3][3]
    assert A**3 == A @ A @ A
    assert A**-1 == A.inverse()


def test_mismatched_sizes_rejected():
    with pytest.raises(ValueError):
        ScalarBlockMatrix(N, [("a", 1), ("b", 2)], {(0, 1): CycloElem.one(N)})
    with pytest.raises(ValueError):
        ScalarBlockMatrix(N, [("a", 0)])


def test_scalar_and_components():
    root = RootChoice(7)
    c = qint(root, 3)
    S = ScalarBlockMatrix.identity(N, [("a", 2), ("b", 5)]).scale(c)
    assert S.scalar_value() == c and not S.is_identity()
    A = _example(random.Random(3))
    assert A.components() == [[0, 1], [2], [3]]
    assert A.restrict([0, 1]).dim == 4


def test_json_roundtrip_and_render():
    A = _example(random.Random(4))
    assert ScalarBlockMatrix.from_json(A.to_json()) == A
    txt = A.render(RootChoice(7))
    assert txt.count("\n") == 3


def test_direct_sum():
    A = _example(random.Random(5))
    B = ScalarBlockMatrix.identity(N, [("z", 4)])
    S = ScalarBlockMatrix.direct_sum(A, B)
    assert S.dim == A.dim + 4 and S.det() == A.det()
