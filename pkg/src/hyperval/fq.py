"""Residue-field arithmetic: F_{p^f} presented by an irreducible polynomial,
and rational functions over F_p used by the Gauss-valuation model.

Elements of F_{p^f} are coefficient tuples of length f (little-endian in the
generator x). Everything is exact integer arithmetic.
"""

from __future__ import annotations

from functools import reduce

from .errors import DivisionByZero, NotIrreducible

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic far beyond."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def int_val(c: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if c == 0:
        raise ValueError("valuation of integer 0 is infinite")
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


def _polymul_mod(a, b, modpoly, p):
    # dense little-endian multiplication followed by reduction mod a monic poly
    f = len(modpoly) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for k in range(len(out) - 1, f - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for i in range(f):
                out[k - f + i] = (out[k - f + i] - c * modpoly[i]) % p
    out = out[:f] if len(out) >= f else out + [0] * (f - len(out))
    return tuple(c % p for c in out)


class Fq:
    """The finite field F_{p^f} = F_p[x]/(hbar), hbar monic irreducible of degree f."""

    def __init__(self, p: int, hbar):
        self.p = p
        self.hbar = tuple(c % p for c in hbar)
        if self.hbar[-1] != 1:
            raise NotIrreducible("defining polynomial must be monic")
        self.f = len(self.hbar) - 1
        self.order = p ** self.f
        if not self._irreducible():
            raise NotIrreducible(f"{list(self.hbar)} is reducible mod {p}")

    def _irreducible(self) -> bool:
        # exhaustive factor search; adequate for f <= 3 (no factors means no roots
        # for f in {2,3}, and degree-1 polys are always irreducible)
        if self.f == 1:
            return True
        if self.f > 3:
            raise NotIrreducible("unramified degrees above 3 are not supported")
        return all(self._eval_int(a) % self.p != 0 for a in range(self.p))

    def _eval_int(self, a):
        acc = 0
        for c in reversed(self.hbar):
            acc = acc * a + c
        return acc

    # ---- element constructors -------------------------------------------------

    def zero(self):
        return (0,) * self.f

    def one(self):
        return (1,) + (0,) * (self.f - 1)

    def gen(self):
        if self.f == 1:
            raise ValueError("prime field has no generator element x")
        return (0, 1) + (0,) * (self.f - 2)

    def from_int(self, c: int):
        return (c % self.p,) + (0,) * (self.f - 1)

    def elem(self, coeffs):
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.f:
            raise ValueError(f"expected {self.f} coefficients")
        return coeffs

    def elements(self):
        def rec(i):
            if i == self.f:
                yield ()
                return
            for tail in rec(i + 1):
                for c in range(self.p):
                    yield (c,) + tail
        return list(rec(0))

    # ---- arithmetic -------------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        if self.f == 1:
            return (a[0] * b[0] % self.p,)
        return _polymul_mod(a, b, self.hbar, self.p)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        acc, base = self.one(), a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def inv(self, a):
        if a == self.zero():
            raise DivisionByZero("inverse of 0 in residue field")
        # a^(q-2) = a^{-1} in F_q
        return self.pow(a, self.order - 2)

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def frobenius_inverse(self, a, l: int = 1):
        """The unique b with b^(p^l) = a; Frobenius has order f."""
        k = (-l) % self.f
        return self.pow(a, self.p ** k) if k else a

    def eval_poly(self, coeffs, a):
        """Evaluate a polynomial with Fq coefficients (little-endian) at a."""
        acc = self.zero()
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, a), c)
        return acc

    def roots_of_int_poly(self, intcoeffs):
        """All roots in F_q of a polynomial with integer coefficients."""
        coeffs = [self.from_int(c) for c in intcoeffs]
        return [a for a in self.elements() if self.is_zero(self.eval_poly(coeffs, a))]

    def render(self, a) -> str:
        if self.is_zero(a):
            return "0"
        parts = []
        for j, c in enumerate(a):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            elif j == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{j}" if c != 1 else f"x^{j}")
        return " + ".join(parts)


# ---- polynomials and rational functions over F_p ---------------------------------


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_add(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim((x + y) % p for x, y in zip(a, b))


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim((x - y) % p for x, y in zip(a, b))


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return poly_trim(out)


def poly_divmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    binv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * binv % p
        if c:
            q[k] = c
            for i, bi in enumerate(b):
                a[k + i] = (a[k + i] - c * bi) % p
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b, p):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple(c * inv % p for c in a)
    return a


class RatFunc:
    """A rational function over F_p in lowest terms with monic denominator."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p, num, den=(1,)):
        num = poly_trim(c % p for c in num)
        den = poly_trim(c % p for c in den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        g = poly_gcd(num, den, p)
        if g and g != (1,):
            num = poly_divmod(num, g, p)[0]
            den = poly_divmod(den, g, p)[0]
        if den:
            inv = pow(den[-1], -1, p)
            num = tuple(c * inv % p for c in num)
            den = tuple(c * inv % p for c in den)
        self.p, self.num, self.den = p, num, den

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.p == other.p
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.p, self.num, self.den))

    def is_zero(self):
        return not self.num

    def add(self, other):
        return RatFunc(self.p,
                       poly_add(poly_mul(self.num, other.den, self.p),
                                poly_mul(other.num, self.den, self.p), self.p),
                       poly_mul(self.den, other.den, self.p))

    def mul(self, other):
        return RatFunc(self.p, poly_mul(self.num, other.num, self.p),
                       poly_mul(self.den, other.den, self.p))

    def neg(self):
        return RatFunc(self.p, tuple((-c) % self.p for c in self.num), self.den)

    def sub(self, other):
        return self.add(other.neg())

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.p, self.den, self.num)

    def pow(self, k):
        acc = RatFunc(self.p, (1,))
        base = self
        if k < 0:
            base, k = base.inv(), -k
        while k:
            if k & 1:
                acc = acc.mul(base)
            base = base.mul(base)
            k >>= 1
        return acc

    def render(self):
        def poly_str(c):
            if not c:
                return "0"
            parts = []
            for j, cj in enumerate(c):
                if cj == 0:
                    continue
                if j == 0:
                    parts.append(str(cj))
                elif j == 1:
                    parts.append("t" if cj == 1 else f"{cj}*t")
                else:
                    parts.append(f"t^{j}" if cj == 1 else f"{cj}*t^{j}")
            return " + ".join(parts)
        if self.den == (1,):
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __repr__(self):
        return f"RatFunc({self.render()} over F_{self.p})"


def lcm_int(values):
    from math import gcd
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)
