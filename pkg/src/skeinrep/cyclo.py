"""Exact arithmetic in the cyclotomic field Q(zeta_N), N = 4r.

Every element is stored as a polynomial in a formal generator ``x`` of
multiplicative order N, reduced modulo the N-th cyclotomic polynomial.
The generator plays the role of q^{1/4}; a :class:`RootChoice` fixes which
complex primitive N-th root it is sent to (``x -> exp(2 pi i t / N)``).
All algebraic identities are checked on the exact representation, which
does not depend on ``t``; only sign decisions and float renderings do.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

import mpmath
from mpmath import iv

MAX_PREC = 4096


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Integer coefficients of the N-th cyclotomic polynomial, constant term first."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    p = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            p = _exact_div(p, cyclotomic_poly(d))
    return tuple(p)


def _exact_div(p: list[int], m: tuple[int, ...]) -> list[int]:
    # m is monic
    p = list(p)
    dm = len(m) - 1
    quot = [0] * (len(p) - dm)
    for i in range(len(p) - 1, dm - 1, -1):
        c = p[i]
        if c:
            quot[i - dm] = c
            for j in range(dm + 1):
                p[i - dm + j] -= c * m[j]
    assert not any(p), "inexact cyclotomic division"
    return quot


def euler_phi(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


@lru_cache(maxsize=None)
def _reducer(N: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    phi = cyclotomic_poly(N)
    d = len(phi) - 1
    return d, tuple((j, c) for j, c in enumerate(phi[:-1]) if c)


def _reduce(N: int, nums: list[int]) -> list[int]:
    """Reduce an integer coefficient list modulo Phi_N (in place where possible)."""
    d, terms = _reducer(N)
    if len(nums) > N:
        folded = [0] * N
        for k, c in enumerate(nums):
            folded[k % N] += c
        nums = folded
    for i in range(len(nums) - 1, d - 1, -1):
        c = nums[i]
        if c:
            nums[i] = 0
            base = i - d
            for j, pc in terms:
                nums[base + j] -= c * pc
    if len(nums) < d:
        nums = nums + [0] * (d - len(nums))
    return nums[:d]


class CycloElem:
    """Immutable element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("N", "_num", "_den", "_hash")

    def __init__(self, N: int, coeffs=()):
        fr = [Fraction(c) for c in coeffs]
        den = reduce(math.lcm, (c.denominator for c in fr), 1)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._init(N, _reduce(N, nums), den)

    def _init(self, N, nums, den):
        g = reduce(math.gcd, nums, den)
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
        self.N = N
        self._num = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, N: int, nums: list[int], den: int = 1) -> "CycloElem":
        obj = object.__new__(cls)
        obj._init(N, _reduce(N, nums), den)
        return obj

    @classmethod
    def zero(cls, N: int) -> "CycloElem":
        return cls._raw(N, [])

    @classmethod
    def one(cls, N: int) -> "CycloElem":
        return cls._raw(N, [1])

    @classmethod
    def rational(cls, N: int, value) -> "CycloElem":
        value = Fraction(value)
        return cls._raw(N, [value.numerator], value.denominator)

    @classmethod
    def monomial(cls, N: int, k: int, coeff=1) -> "CycloElem":
        """coeff * x^k for any integer k (negative powers wrap around mod N)."""
        coeff = Fraction(coeff)
        k %= N
        nums = [0] * (k + 1)
        nums[k] = coeff.numerator
        return cls._raw(N, nums, coeff.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self) -> int:
        return len(self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._num[0] if self._num else 0, self._den)

    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.N != self.N:
                raise ValueError(f"field mismatch: Q(zeta_{self.N}) vs Q(zeta_{other.N})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.rational(self.N, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        nums = [a * db + b * da for a, b in zip(self._num, other._num)]
        return CycloElem._raw(self.N, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem._raw(self.N, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        A, B = self._num, other._num
        out = [0] * (len(A) + len(B) - 1)
        for i, a in enumerate(A):
            if a:
                for j, b in enumerate(B):
                    if b:
                        out[i + j] += a * b
        return CycloElem._raw(self.N, out, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElem.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "CycloElem":
        cached = _INVERSES.get(self)
        if cached is not None:
            return cached
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        nz = [k for k, c in enumerate(self._num) if c]
        if len(nz) == 1:
            k = nz[0]
            inv = CycloElem.monomial(self.N, -k, Fraction(self._den, self._num[k]))
        else:
            inv = _xgcd_inverse(self)
        if len(_INVERSES) < 100_000:
            _INVERSES[self] = inv
        return inv

    def conj(self) -> "CycloElem":
        """Image under x -> x^{-1} (complex conjugation in every embedding)."""
        N = self.N
        nums = [0] * N
        for k, c in enumerate(self._num):
            nums[(-k) % N] += c
        return CycloElem._raw(N, nums, self._den)

    def is_real(self) -> bool:
        return self.conj() == self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElem.rational(self.N, other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.N == other.N and self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.N, self._num, self._den))
        return self._hash

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*x^{k}")
        return f"CycloElem(N={self.N}: {' + '.join(terms) or '0'})"

    # -- embeddings -------------------------------------------------------

    def embed(self, root: "RootChoice", prec: int = 53) -> mpmath.mpc:
        """Complex value at x = exp(2 pi i t / N), computed at ``prec`` bits."""
        _check_modulus(self, root)
        with mpmath.workprec(prec):
            z = mpmath.mpc(0)
            for k, c in enumerate(self._num):
                if c:
                    z += c * mpmath.expjpi(mpmath.mpf(2 * root.t * k) / self.N)
            return z / self._den

    def to_complex(self, root: "RootChoice") -> complex:
        return complex(self.embed(root, prec=64))

    def embed_interval(self, root: "RootChoice", prec: int, imag: bool = True):
        """Rigorous enclosures (re, im) of the embedded value at ``prec`` bits."""
        _check_modulus(self, root)
        N, t = self.N, root.t
        with _IV_LOCK:
            old = iv.prec
            iv.prec = prec
            try:
                cos_t = _trig_table(N, prec, "cos")
                re = iv.mpf(0)
                for k, c in enumerate(self._num):
                    if c:
                        re += c * cos_t[(t * k) % N]
                re = re / self._den
                if not imag:
                    return re, None
                sin_t = _trig_table(N, prec, "sin")
                im = iv.mpf(0)
                for k, c in enumerate(self._num):
                    if c:
                        im += c * sin_t[(t * k) % N]
                return re, im / self._den
            finally:
                iv.prec = old

    def real_interval(self, root: "RootChoice", prec: int):
        return self.embed_interval(root, prec, imag=False)[0]

    def to_json(self, root: "RootChoice | None" = None) -> dict:
        out = {"N": self.N, "coeffs": [str(c) for c in self.coeffs]}
        if root is not None:
            z = self.to_complex(root)
            out["t"] = root.t
            out["float"] = [z.real, z.imag]
            out["precision_bits"] = 53
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CycloElem":
        return cls(int(data["N"]), [Fraction(c) for c in data["coeffs"]])


_INVERSES: dict[CycloElem, CycloElem] = {}
_IV_LOCK = threading.Lock()


def _check_modulus(x: CycloElem, root: "RootChoice"):
    if x.N != root.N:
        raise ValueError(f"element lives in Q(zeta_{x.N}) but the embedding is for N={root.N}")


@lru_cache(maxsize=4096)
def _trig_table(N: int, prec: int, kind: str):
    # caller holds _IV_LOCK with iv.prec == prec
    f = iv.cos if kind == "cos" else iv.sin
    two_pi = 2 * iv.pi
    return tuple(f(two_pi * j / N) for j in range(N))


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c / lead
            quot[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return _poly_trim(quot), _poly_trim(a[:db] if db > 0 else [])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return _poly_trim(a)


def _xgcd_inverse(x: CycloElem) -> CycloElem:
    """Inverse via the extended Euclidean algorithm against Phi_N over Q."""
    N = x.N
    r0 = [Fraction(c) for c in cyclotomic_poly(N)]
    r1 = _poly_trim([Fraction(c, x._den) for c in x._num])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element shares a factor with Phi_N")
    c = r1[0]
    return CycloElem(N, [s / c for s in s1])


@dataclass(frozen=True)
class RootChoice:
    """q^{1/4} := exp(2 pi i t / 4r), so q is a primitive r-th root of unity."""

    r: int
    t: int = 1

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"r must be >= 3, got {self.r}")
        if not 1 <= self.t < 4 * self.r or math.gcd(self.t, 4 * self.r) != 1:
            raise ValueError(
                f"t={self.t} does not give a primitive {4 * self.r}-th root; "
                f"need 1 <= t < {4 * self.r} and gcd(t, {4 * self.r}) = 1"
            )

    @property
    def N(self) -> int:
        return 4 * self.r

    @property
    def theta(self) -> float:
        """Angle of q in [0, 2 pi)."""
        return 2 * math.pi * ((4 * self.t) % self.N) / self.N

    def __str__(self):
        return f"(r={self.r}, t={self.t})"


def primitive_roots(r: int) -> list[RootChoice]:
    """All root choices for a given r, in increasing t."""
    N = 4 * r
    return [RootChoice(r, t) for t in range(1, N) if math.gcd(t, N) == 1]


def qpow(root: RootChoice, num: int, den: int = 1) -> CycloElem:
    """q^{num/den} for den in {1, 2, 4}."""
    if den not in (1, 2, 4):
        raise ValueError(f"den must be 1, 2 or 4, got {den}")
    return CycloElem.monomial(root.N, num * (4 // den))


def x_pow(root: RootChoice, k: int) -> CycloElem:
    """q^{k/4}."""
    return CycloElem.monomial(root.N, k)


@lru_cache(maxsize=None)
def _qint(N: int, n: int) -> CycloElem:
    if n < 0:
        return -_qint(N, -n)
    nums = [0] * N
    for i in range(n):
        nums[(2 * (n - 1 - 2 * i)) % N] += 1
    return CycloElem._raw(N, nums)


def qint(root: RootChoice, n: int) -> CycloElem:
    """Quantum integer [n] as the geometric sum of q^{(n-1-2i)/2}."""
    return _qint(root.N, n)


def conj_q(x: CycloElem) -> CycloElem:
    """The Galois map q -> q^{-1}."""
    return x.conj()


def sign_real(x: CycloElem, root: RootChoice, max_prec: int = MAX_PREC) -> int:
    """Sign of a real element under the embedding fixed by ``root``.

    Exact zero test first, then interval evaluation with doubling precision.
    """
    _check_modulus(x, root)
    if not x.is_real():
        raise ValueError("sign_real needs a conjugation-fixed (real) element")
    if x.is_zero():
        return 0
    prec = 64
    while prec <= max_prec:
        re = x.real_interval(root, prec)
        if re.a > 0:
            return 1
        if re.b < 0:
            return -1
        prec *= 2
    raise ArithmeticError(f"could not separate {x!r} from 0 within {max_prec} bits")
