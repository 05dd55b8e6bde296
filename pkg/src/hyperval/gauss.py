"""Q_p(t) with the Gauss valuation: unramified, residue field F_p(t).

This is the imperfect-residue instance: {t} is a p-basis of the residue
field, so the p-basis expansions have a nonempty monomial part. Elements are
fractions of integer polynomials in t with coefficients mod p^N; the
denominator keeps unit content, equality is cross-multiplication (there is no
canonical form over Z/p^N, which is not a domain). nu(f/g) is the minimal
p-adic valuation of the numerator coefficients; value group Z with nu(p) = 1
and nu(t) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    NonUnitDenominator,
    PrecisionExhausted,
)
from .fq import RatFunc, int_val, is_prime, poly_trim

MAX_INPUT_DEGREE = 8


class GaussModel:
    """Parameters of the Gauss-valued field: the prime p and precision N."""

    def __init__(self, p, N=12):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        self.p = p
        self.N = N

    def __eq__(self, other):
        return isinstance(other, GaussModel) and (self.p, self.N) == (other.p, other.N)

    def __hash__(self):
        return hash((self.p, self.N))

    def __repr__(self):
        return f"GaussModel(p={self.p}, N={self.N})"

    def elem(self, num, den=(1,), prec=None, _internal=False):
        prec = self.N if prec is None else prec
        num = tuple(int(c) for c in num)
        den = tuple(int(c) for c in den)
        if not _internal:
            if len(poly_trim(num)) - 1 > MAX_INPUT_DEGREE or \
               len(poly_trim(den)) - 1 > MAX_INPUT_DEGREE:
                raise BudgetExceeded(f"input degree cap is {MAX_INPUT_DEGREE}")
        return GaussElem(self, num, den, prec)

    def zero(self):
        return self.elem((0,))

    def one(self):
        return self.elem((1,))

    def t(self):
        return self.elem((0, 1))

    def from_int(self, c):
        return self.elem((c,))

    def lift_ratfunc(self, r: RatFunc, prec=None):
        """Coefficient-wise lift of a residue fraction."""
        return self.elem(r.num or (0,), r.den, prec, _internal=True)


def _pmul(a, b, m):
    if not a or not b:
        return (0,)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % m
    return tuple(out)


def _padd(a, b, m):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return tuple((x + y) % m for x, y in zip(a, b))


def _content(poly, p):
    vals = [int_val(c, p) for c in poly if c != 0]
    return min(vals) if vals else None


class GaussElem:
    """A fraction num/den at precision prec; den has unit content."""

    __slots__ = ("model", "num", "den", "prec")

    def __init__(self, model, num, den, prec):
        if prec < 1:
            raise PrecisionExhausted("Gauss element would carry no precision")
        m = model.p ** prec
        num = tuple(c % m for c in num)
        den = tuple(c % m for c in den)
        if _content(den, model.p) != 0:
            raise NonUnitDenominator(f"denominator {list(den)} lacks unit content")
        self.model, self.num, self.den, self.prec = model, num, den, prec

    def _m(self):
        return self.model.p ** self.prec

    def add(self, other):
        prec = min(self.prec, other.prec)
        m = self.model.p ** prec
        num = _padd(_pmul(self.num, other.den, m), _pmul(other.num, self.den, m), m)
        return GaussElem(self.model, num, _pmul(self.den, other.den, m), prec)

    def neg(self):
        return GaussElem(self.model, tuple((-c) % self._m() for c in self.num),
                         self.den, self.prec)

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        prec = min(self.prec, other.prec)
        m = self.model.p ** prec
        return GaussElem(self.model, _pmul(self.num, other.num, m),
                         _pmul(self.den, other.den, m), prec)

    def inv(self):
        c = _content(self.num, self.model.p)
        if c is None:
            raise DivisionByZero("inverse of zero at working precision")
        if c > 0:
            raise NonUnitDenominator(
                f"inverse of a valuation-{c} element leaves the valuation ring")
        return GaussElem(self.model, self.den, self.num, self.prec)

    def pow(self, k):
        out = GaussElem(self.model, (1,), (1,), self.prec)
        base = self
        if k < 0:
            base, k = base.inv(), -k
        while k:
            if k & 1:
                out = out.mul(base)
            base = base.mul(base)
            k >>= 1
        return out

    def valuation(self):
        c = _content(self.num, self.model.p)
        if c is None:
            return float("inf")
        return c

    def residue(self) -> RatFunc:
        if self.valuation() >= 1:
            return RatFunc(self.model.p, (0,))
        return RatFunc(self.model.p, self.num, self.den)

    def divide_by_p(self):
        """Exact division by p; requires positive valuation, costs 1 precision."""
        if self.valuation() < 1:
            raise NonUnitDenominator("element is a unit, not divisible by p")
        return GaussElem(self.model, tuple(c // self.model.p for c in self.num),
                         self.den, self.prec - 1)

    def scale_t_power(self, j):
        return GaussElem(self.model, (0,) * j + self.num, self.den, self.prec)

    def eq_mod(self, other, k):
        """Cross-multiplication equality mod p^k."""
        m = self.model.p ** k
        left = _pmul(self.num, other.den, m)
        right = _pmul(other.num, self.den, m)
        return poly_trim(c % m for c in _padd(left, tuple(-c for c in right), m)) == ()

    def __eq__(self, other):
        if not isinstance(other, GaussElem) or other.model != self.model:
            return NotImplemented
        return self.eq_mod(other, min(self.prec, other.prec))

    __hash__ = None

    def render(self):
        def poly_str(c):
            c = poly_trim(c)
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
        if poly_trim(self.den) == (1,):
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __repr__(self):
        return f"GaussElem({self.render()} mod {self.model.p}^{self.prec})"


def parse_gauss(model, text: str) -> GaussElem:
    """Parse '(num)/(den)' or a plain polynomial in t."""
    text = text.strip()
    num_txt, den_txt = text, "1"
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            num_txt, den_txt = text[:i], text[i + 1:]
            break
    return model.elem(_parse_poly(num_txt), _parse_poly(den_txt))


def _parse_poly(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    coeffs = {}
    for chunk in text.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:].strip()
        coef, power = 1, 0
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"cannot parse polynomial term {chunk!r}")
            if factor[0] == "t":
                tail = factor[1:].strip()
                if not tail:
                    power += 1
                elif tail.startswith("^"):
                    power += int(tail[1:])
                else:
                    raise ValueError(f"cannot parse polynomial term {chunk!r}")
            else:
                coef *= int(factor)
        coeffs[power] = coeffs.get(power, 0) + sign * coef
    top = max(coeffs) if coeffs else 0
    return tuple(coeffs.get(i, 0) for i in range(top + 1))


# ---- p-independence ------------------------------------------------------------------


def _is_pth_power(r: RatFunc) -> bool:
    # over F_p a reduced fraction is a p-th power iff both supports sit in pZ
    if r.is_zero():
        return True
    p = r.p
    return (all(c == 0 or j % p == 0 for j, c in enumerate(r.num))
            and all(c == 0 or j % p == 0 for j, c in enumerate(r.den)))


def p_independent_check(elems) -> bool:
    """p-independence over the prime field of one or two Gauss units.

    A single unit b is p-independent iff res(b) is not in F_p(t)^p = F_p(t^p),
    decided by exponent support of the reduced fraction. Since [F_p(t) :
    F_p(t)^p] = p, any single independent element already generates the whole
    field over F_p(t)^p, so no pair can reach degree p^2: pairs fail either
    because the first element is a p-th power or because the second lies in
    F_p(t)^p(b1) = F_p(t).
    """
    if isinstance(elems, GaussElem):
        elems = [elems]
    elems = list(elems)
    for b in elems:
        if b.valuation() != 0:
            raise ValueError("p-independence applies to units")
    if len(elems) == 1:
        return not _is_pth_power(elems[0].residue())
    if len(elems) == 2:
        b1, b2 = elems
        if _is_pth_power(b1.residue()):
            return False
        # b1 independent forces F_p(t^p)(b1) = F_p(t), which contains res(b2)
        return False
    raise BudgetExceeded("p-independence is implemented for at most two elements")


# ---- p-basis expansion with B = (t) ----------------------------------------------------


@dataclass(frozen=True)
class GaussExpansion:
    """Digits c[i][j] (i <= level, j < p^level) of a with
    a = sum_i (sum_j lift(c[i][j])^(p^level) t^j) p^i mod p^(level+1)."""

    level: int
    digits: tuple  # tuple over i of tuples over j of RatFunc


def pbasis_expand_t(a: GaussElem, l: int) -> GaussExpansion:
    """Digit expansion along the p-basis {t}.

    Denominators are cleared up front: a * G^(p^l) is a polynomial whose
    subtract-and-divide induction stays polynomial (exponent-digit grouping
    mod p^l at each level), and the digits of a are the polynomial digits
    divided by res(G).
    """
    model = a.model
    p = model.p
    if p not in (2, 3) or l > 2:
        raise BudgetExceeded("pbasis_expand_t budget: p in {2,3} and l <= 2")
    if a.valuation() < 0:
        raise ValueError("expansion needs valuation >= 0")
    if l + 1 > a.prec:
        raise PrecisionExhausted(f"need precision {l + 1}, element carries {a.prec}")
    q = p ** l
    m = p ** (l + 1)
    gden = RatFunc(p, a.den)
    cleared = _pmul(a.num, _intpow_mod(a.den, q - 1, m), m)  # a * G^q as a polynomial
    rows = []
    rem = list(cleared)
    for _ in range(l + 1):
        hbar = tuple(c % p for c in rem)
        row = []
        term = (0,)
        for j in range(q):
            cj = tuple(hbar[d] for d in range(j, len(hbar), q)) or (0,)
            row.append(RatFunc(p, cj).mul(gden.inv()) if not gden.is_zero() else RatFunc(p, cj))
            lifted = _intpow_mod(cj, q, m)
            term = _padd(term, (0,) * j + lifted, m)
        rows.append(tuple(row))
        n = max(len(rem), len(term))
        rem = [(x - y) % m for x, y in
               zip(tuple(rem) + (0,) * (n - len(rem)), term + (0,) * (n - len(term)))]
        rem = [c // p for c in rem]
        m //= p
        rem = [c % m for c in rem] if m > 1 else [0 for c in rem]
    return GaussExpansion(level=l, digits=tuple(rows))


def _intpow_mod(poly, k, m):
    out = (1,)
    base = tuple(poly)
    while k:
        if k & 1:
            out = _pmul(out, base, m)
        base = _pmul(base, base, m)
        k >>= 1
    return out


def pbasis_assemble(model, exp: GaussExpansion) -> GaussElem:
    """Reassemble sum_i (sum_j c[i][j]^(p^l) t^j) p^i over the lcm denominator."""
    from .fq import poly_divmod, poly_gcd, poly_mul
    p = model.p
    l = exp.level
    q = p ** l
    m = p ** (l + 1)
    dens = [c.den for row in exp.digits for c in row]
    D = (1,)
    for d in dens:
        g = poly_gcd(D, d, p)
        D = poly_divmod(poly_mul(D, d, p), g, p)[0]
    num = (0,)
    for i, row in enumerate(exp.digits):
        pk = pow(p, i, m)
        for j, c in enumerate(row):
            mult = poly_divmod(D, c.den, p)[0]
            common_num = poly_mul(c.num, mult, p)
            lifted = _intpow_mod(common_num, q, m)
            scaled = tuple(v * pk % m for v in lifted)
            num = _padd(num, (0,) * j + scaled, m)
    den = _intpow_mod(D, q, m)
    return GaussElem(model, num, den, l + 1)


def expansion_as_json(exp: GaussExpansion):
    return {
        "level": exp.level,
        "basis": ["t"],
        "digits": [[c.render() for c in row] for row in exp.digits],
    }
