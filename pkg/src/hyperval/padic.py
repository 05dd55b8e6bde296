"""Exact truncated arithmetic in finitely ramified extensions of Q_p.

A field model is K = W[pi]/(P) where W is the unramified subring presented by
a degree-f polynomial h irreducible mod p, and P is Eisenstein of degree e
over W. The valuation is normalized so nu(pi) = 1 and nu(p) = e (value group
Z). An element of O_K is a coefficient vector over the basis {x^j pi^i},
0 <= j < f, 0 <= i < e, with the pi^i coefficient canonical mod
p^ceil((prec - i)/e). Operations are exact at the tracked precision; division
by a valuation-v element costs v units of precision and operations raise
PrecisionExhausted instead of silently truncating.

Everything here is immutable and pure; safe for concurrent use.
"""

from __future__ import annotations

import itertools
import json
from functools import cached_property

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    HenselPreconditionFailed,
    MixedFields,
    NegativeValuation,
    NotEisenstein,
    NotIrreducible,
    PrecisionExhausted,
    PrecisionTooSmall,
    ZeroAtPrecision,
)
from .fq import Fq, int_val, is_prime

INFINITY = float("inf")

DEFAULT_UNIT_CAP = 20000

# caps keeping the exhaustive oracles at desk scale
MAX_F = 3
MAX_EF = 8


def _as_wcoeff(c, f):
    """Normalize an int or little-endian sequence to a length-f tuple of ints."""
    if isinstance(c, int):
        return (c,) + (0,) * (f - 1)
    c = tuple(int(v) for v in c)
    if len(c) > f:
        raise ValueError(f"W coefficient has degree >= {f}")
    return c + (0,) * (f - len(c))


class FieldModel:
    """A finitely ramified p-adic field at fixed working precision.

    Identity (for MixedFields checks and equality) is the defining data
    (p, f, e, eis, h, N); the default hyperfield level n is a knob, not
    part of the identity.
    """

    def __init__(self, p, f, e, eis, h, N, n=1):
        if not is_prime(p):
            raise NotEisenstein(f"p={p} is not prime")
        if f < 1 or e < 1:
            raise ValueError("f and e must be >= 1")
        if f > MAX_F or e * f > MAX_EF:
            raise BudgetExceeded(f"f <= {MAX_F} and e*f <= {MAX_EF} required")
        if n < 1:
            raise ValueError("hyperfield level n must be >= 1")
        if N < n + e * 4:
            raise PrecisionTooSmall(f"N={N} < n + 4e = {n + 4 * e}")
        self.p, self.f, self.e, self.N, self.n = p, f, e, N, n

        h = tuple(int(c) for c in h)
        if len(h) != f + 1 or h[-1] != 1:
            raise NotIrreducible(f"h must be monic of degree f={f}")
        self.h = h
        self.residue_field = Fq(p, h)  # raises NotIrreducible if h factors mod p

        eis = tuple(_as_wcoeff(c, f) for c in eis)
        if len(eis) != e + 1:
            raise NotEisenstein(f"Eisenstein polynomial must have degree e={e}")
        if eis[-1] != _as_wcoeff(1, f):
            raise NotEisenstein("Eisenstein polynomial must be monic")
        for c in eis[:-1]:
            if self._wval(c) < 1:
                raise NotEisenstein(f"coefficient {c} is a unit; all lower "
                                    "coefficients need positive valuation")
        if self._wval(eis[0]) != 1:
            raise NotEisenstein(f"constant term {eis[0]} must have nu_p exactly 1")
        self.eis = eis

    # ---- W = Z_p[x]/(h) arithmetic on exact coefficient tuples ----------------

    def _wadd(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def _wneg(self, u):
        return tuple(-a for a in u)

    def _wmul(self, u, v):
        f = self.f
        if f == 1:
            return (u[0] * v[0],)
        out = [0] * (2 * f - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    out[i + j] += a * b
        for k in range(2 * f - 2, f - 1, -1):
            c = out[k]
            if c:
                out[k] = 0
                for i in range(f):
                    out[k - f + i] -= c * self.h[i]
        return tuple(out[:f])

    def _wval(self, u):
        vals = [int_val(c, self.p) for c in u if c != 0]
        return min(vals) if vals else INFINITY

    def _wmod(self, u, pk):
        m = self.p ** pk
        return tuple(c % m for c in u)

    def _winv(self, u, pk):
        """Inverse of a unit of W mod p^pk, by Newton from the residue inverse."""
        k = self.residue_field
        r = k.inv(k.elem(u))
        y = tuple(r)
        known = 1
        while known < pk:
            known = min(2 * known, pk)
            prod = self._wmod(self._wmul(u, y), known)
            two_minus = self._wadd(_as_wcoeff(2, self.f), self._wneg(prod))
            y = self._wmod(self._wmul(y, two_minus), known)
        return y

    @cached_property
    def _pi_div_unit(self):
        # (eis_0/p)^{-1} in W, used to rewrite p/pi through the Eisenstein relation
        t = tuple(c // self.p for c in self.eis[0])
        return self._winv(t, self._mtop)

    @cached_property
    def _mtop(self):
        return (self.N + self.e - 1) // self.e + 2

    # ---- coefficient bookkeeping ----------------------------------------------

    def coeff_modulus_exp(self, i, prec):
        return max(0, (prec - i + self.e - 1) // self.e)

    def _canonical(self, rows, prec):
        out = []
        for i in range(self.e):
            m = self.p ** self.coeff_modulus_exp(i, prec)
            out.extend(c % m for c in rows[i])
        return tuple(out)

    def _rows(self, coeffs):
        f = self.f
        return [tuple(coeffs[i * f:(i + 1) * f]) for i in range(self.e)]

    # ---- element constructors ---------------------------------------------------

    def elem(self, rows, prec=None, exact_zero=False):
        prec = self.N if prec is None else prec
        rows = [_as_wcoeff(r, self.f) for r in rows]
        return self._elem_raw(rows, prec, exact_zero)

    def _elem_raw(self, rows, prec, exact_zero=False):
        # rows must already be length-f integer tuples
        if prec < 1:
            raise PrecisionExhausted("element would carry no precision")
        prec = min(prec, self.N)
        return FieldElem(self, self._canonical(rows, prec), prec, exact_zero)

    def from_coeffs(self, coeffs, prec=None):
        coeffs = list(coeffs)
        if len(coeffs) != self.e * self.f:
            raise ValueError(f"expected {self.e * self.f} coefficients")
        return self.elem(self._rows(coeffs), prec)

    def zero(self):
        return self.elem([(0,) * self.f] * self.e, self.N, exact_zero=True)

    def one(self):
        return self.from_int(1)

    def from_int(self, c, prec=None):
        rows = [_as_wcoeff(c, self.f)] + [(0,) * self.f] * (self.e - 1)
        if c == 0:
            return self.zero()
        return self.elem(rows, prec)

    def pi(self):
        if self.e == 1:
            # pi = -eis_0 is the uniformizer of an unramified model
            return self.elem([self._wneg(self.eis[0])])
        rows = [(0,) * self.f, _as_wcoeff(1, self.f)] + [(0,) * self.f] * (self.e - 2)
        return self.elem(rows)

    def x_gen(self):
        if self.f == 1:
            raise ValueError("f=1 model has no unramified generator")
        rows = [(0, 1) + (0,) * (self.f - 2)] + [(0,) * self.f] * (self.e - 1)
        return self.elem(rows)

    def from_w(self, w, prec=None):
        rows = [_as_wcoeff(w, self.f)] + [(0,) * self.f] * (self.e - 1)
        return self.elem(rows, prec)

    # ---- serialization ----------------------------------------------------------

    def _ident(self):
        return (self.p, self.f, self.e, self.eis, self.h, self.N)

    def __eq__(self, other):
        return isinstance(other, FieldModel) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return (f"FieldModel(p={self.p}, f={self.f}, e={self.e}, "
                f"N={self.N}, n={self.n})")

    def to_json(self):
        def wc(c):
            return c[0] if self.f == 1 else list(c)
        return {
            "p": self.p, "f": self.f, "e": self.e,
            "eis": [wc(c) for c in self.eis],
            "h": list(self.h), "N": self.N, "n": self.n,
        }

    @classmethod
    def from_json(cls, data):
        return make_field(data["p"], data["f"], data["e"], data["eis"],
                          data["h"], data["N"], data.get("n", 1))

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def make_field(p, f, e, eis, h, N, n=1) -> FieldModel:
    """Validate and build a FieldModel; see FieldModel for conventions."""
    return FieldModel(p, f, e, eis, h, N, n)


class FieldElem:
    """An element of O_K known mod m^prec, canonical coefficient vector.

    exact_zero marks true zeros (from the zero constructor, or sums and
    differences that cancel at full working precision).
    """

    __slots__ = ("owner", "coeffs", "prec", "exact_zero")

    def __init__(self, owner, coeffs, prec, exact_zero=False):
        self.owner = owner
        self.coeffs = coeffs
        self.prec = prec
        self.exact_zero = exact_zero

    # hash deliberately disabled: equality is "equal at the coarser precision",
    # which is not hash-compatible across precisions; use .key() at fixed prec
    __hash__ = None

    def key(self):
        return (self.coeffs, self.prec, self.exact_zero)

    def _rows(self):
        f = self.owner.f
        return [self.coeffs[i * f:(i + 1) * f] for i in range(self.owner.e)]

    def is_zero_at_prec(self):
        return self.exact_zero or all(c == 0 for c in self.coeffs)

    def _check(self, other):
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected FieldElem, got {type(other).__name__}")
        if other.owner != self.owner:
            raise MixedFields(f"{self.owner!r} vs {other.owner!r}")

    def __add__(self, other):
        self._check(other)
        K = self.owner
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        prec = min(self.prec, other.prec)
        rows = [K._wadd(a, b) for a, b in zip(self._rows(), other._rows())]
        out = K._elem_raw(rows, prec)
        if prec == K.N and all(c == 0 for c in out.coeffs):
            out = FieldElem(K, out.coeffs, prec, exact_zero=True)
        return out

    def __neg__(self):
        K = self.owner
        if self.exact_zero:
            return self
        rows = [K._wneg(r) for r in self._rows()]
        return K._elem_raw(rows, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        K = self.owner
        if self.exact_zero or other.exact_zero:
            return K.zero()
        e = K.e
        prec = min(self.prec, other.prec)
        acc = [(0,) * K.f for _ in range(2 * e - 1)]
        rows_a, rows_b = self._rows(), other._rows()
        for i, wa in enumerate(rows_a):
            if any(wa):
                for j, wb in enumerate(rows_b):
                    if any(wb):
                        acc[i + j] = K._wadd(acc[i + j], K._wmul(wa, wb))
        # reduce pi^k for k >= e through the Eisenstein relation
        for k in range(2 * e - 2, e - 1, -1):
            c = acc[k]
            if any(c):
                acc[k] = (0,) * K.f
                for i in range(e):
                    acc[k - e + i] = K._wadd(acc[k - e + i],
                                             K._wneg(K._wmul(c, K.eis[i])))
        return K._elem_raw(acc[:e], prec)

    def __pow__(self, k):
        if k < 0:
            return inv(self ** (-k))
        out = self.owner.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.owner != self.owner:
            return False
        if self.exact_zero and other.exact_zero:
            return True
        return (self - other).is_zero_at_prec()

    def __repr__(self):
        return f"<{render_elem(self)} + O(m^{self.prec})>"


# ---- spec operations ---------------------------------------------------------------


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def sub(a, b):
    return a - b


def valuation(a):
    """Exact pi-adic valuation; INFINITY iff exact zero."""
    if a.exact_zero:
        return INFINITY
    K = a.owner
    best = None
    for i, row in enumerate(a._rows()):
        for c in row:
            if c != 0:
                v = K.e * int_val(c, K.p) + i
                if best is None or v < best:
                    best = v
    if best is None:
        raise ZeroAtPrecision(f"element is 0 mod m^{a.prec} but not an exact zero")
    return best


def _val_or_none(a):
    try:
        return valuation(a)
    except ZeroAtPrecision:
        return None


def pi_shift_down(a):
    """Exact division by pi; requires valuation >= 1, costs 1 unit of precision."""
    K = a.owner
    if a.exact_zero:
        return a
    if a.prec <= 1:
        raise PrecisionExhausted("cannot divide by pi at precision 1")
    v = _val_or_none(a)
    if v is not None and v < 1:
        raise NegativeValuation("element has valuation 0, not divisible by pi")
    rows = a._rows()
    q0 = tuple(c // K.p for c in rows[0])
    s = K._wmul(q0, K._pi_div_unit)
    out = [rows[i] for i in range(1, K.e)] + [K._wneg(s)]
    for i in range(1, K.e):
        out[i - 1] = K._wadd(out[i - 1], K._wneg(K._wmul(s, K.eis[i])))
    return K._elem_raw(out, a.prec - 1)


def pi_shift_up(a, k=1):
    """Multiplication by pi^k as coefficient rotations through the Eisenstein
    relation; O(k e f) instead of full products, one canonicalization."""
    K = a.owner
    if a.exact_zero or k == 0:
        return a
    rows = list(a._rows())
    for _ in range(k):
        top = rows[K.e - 1]
        out = [None] * K.e
        if any(top):
            out[0] = K._wneg(K._wmul(top, K.eis[0]))
            for i in range(1, K.e):
                out[i] = K._wadd(rows[i - 1], K._wneg(K._wmul(top, K.eis[i])))
        else:
            out[0] = (0,) * K.f
            for i in range(1, K.e):
                out[i] = rows[i - 1]
        rows = out
    return K._elem_raw(rows, min(a.prec + k, K.N))


def inv(a):
    """Inverse of a unit (valuation 0), by Newton iteration on 1/y - a."""
    K = a.owner
    if a.is_zero_at_prec():
        raise DivisionByZero("inverse of zero")
    if valuation(a) != 0:
        raise NegativeValuation("inv is defined for units; use div for quotients")
    r = K.residue_field.inv(residue(a))
    y = K.from_w(r, a.prec)
    two = K.from_int(2, a.prec)
    for _ in range(a.prec.bit_length() + 2):
        prod = a * y
        if prod == K.one():
            return y
        y = y * (two - prod)
    if a * y == K.one():
        return y
    raise PrecisionExhausted("Newton inversion failed to converge")


def div(a, b):
    """Quotient a/b within O_K; requires valuation(a) >= valuation(b)."""
    K = a.owner
    if b.is_zero_at_prec():
        raise DivisionByZero("division by zero (at working precision)")
    if a.exact_zero:
        return a
    v = valuation(b)
    if v > 0:
        va = _val_or_none(a)
        if va is not None and va < v:
            raise NegativeValuation(f"quotient has valuation {va - v} < 0")
        if a.prec - v < 1 or b.prec - v < 1:
            raise PrecisionExhausted(f"dividing by valuation-{v} element "
                                     f"exhausts precision")
        for _ in range(v):
            a = pi_shift_down(a)
            b = pi_shift_down(b)
    return a * inv(b)


def residue(a):
    """Image in the residue field F_{p^f}."""
    K = a.owner
    if a.is_zero_at_prec():
        return K.residue_field.zero()
    if valuation(a) >= 1:
        return K.residue_field.zero()
    return K.residue_field.elem(a._rows()[0])


def reduce_mod(a, k):
    """The class of a in O/m^k with canonical coefficient representative."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > a.prec:
        raise PrecisionExhausted(f"element known mod m^{a.prec} only, need m^{k}")
    K = a.owner
    out = K.elem(a._rows(), k)
    if a.exact_zero:
        out = FieldElem(K, out.coeffs, k, exact_zero=True)
    return out


def lift_to_prec(a, prec):
    """The canonical lift of a class in O/m^k to precision prec (same vector)."""
    K = a.owner
    if prec < a.prec:
        return reduce_mod(a, prec)
    return FieldElem(K, K._canonical(a._rows(), prec), min(prec, K.N), a.exact_zero)


def lifts_of(a, to_prec):
    """All canonical representatives at precision to_prec of the class a + m^prec."""
    K = a.owner
    ranges = []
    for i in range(K.e):
        lo = K.p ** K.coeff_modulus_exp(i, a.prec)
        hi = K.p ** K.coeff_modulus_exp(i, to_prec)
        step = hi // lo
        ranges.extend([(c, lo, step) for c in a.coeffs[i * K.f:(i + 1) * K.f]])
    for tails in itertools.product(*(range(step) for _, _, step in ranges)):
        coeffs = tuple(c + lo * t for (c, lo, _), t in zip(ranges, tails))
        yield FieldElem(K, coeffs, to_prec)


def unit_count(field, k):
    return (field.p ** field.f - 1) * field.p ** (field.f * (k - 1))


def enumerate_units(field, k, cap=DEFAULT_UNIT_CAP):
    """Canonical representatives of (O/m^k)^*, lexicographic coefficient order."""
    if k < 1 or k > field.N:
        raise ValueError("need 1 <= k <= N")
    if cap is not None and unit_count(field, k) > cap:
        raise BudgetExceeded(f"(O/m^{k})^* has {unit_count(field, k)} elements, "
                             f"cap is {cap}")
    ranges = []
    for i in range(field.e):
        m = field.p ** field.coeff_modulus_exp(i, k)
        ranges.extend([m] * field.f)
    out = []
    for coeffs in itertools.product(*(range(m) for m in ranges)):
        row0 = coeffs[:field.f]
        if all(c % field.p == 0 for c in row0):
            continue
        out.append(FieldElem(field, coeffs, k))
    return out


def render_elem(a) -> str:
    """Canonical rendering 'c + c*x + c*pi + c*x*pi + ...' with base-10 integers."""
    K = a.owner
    parts = []
    for i, row in enumerate(a._rows()):
        for j, c in enumerate(row):
            if c == 0:
                continue
            factors = []
            if j == 1:
                factors.append("x")
            elif j > 1:
                factors.append(f"x^{j}")
            if i == 1:
                factors.append("pi")
            elif i > 1:
                factors.append(f"pi^{i}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts) if parts else "0"


# ---- polynomials over O_K -----------------------------------------------------------


class OPoly:
    """Dense polynomial over O_K, little-endian coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero_at_prec():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(c) for c in ints])

    @classmethod
    def from_w_coeffs(cls, field, wcoeffs):
        return cls(field, [field.from_w(c) for c in wcoeffs])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        K = self.field
        if self.degree == 0:
            return OPoly(K, [K.zero()])
        return OPoly(K, [K.from_int(k) * c
                         for k, c in enumerate(self.coeffs)][1:])

    def shifted(self, c):
        """The polynomial P(X + c), by repeated synthetic division by (X - c)."""
        work = list(self.coeffs)
        out = []
        while work:
            d = len(work) - 1
            if d == 0:
                out.append(work[0])
                break
            q = [None] * d
            q[d - 1] = work[d]
            for i in range(d - 1, 0, -1):
                q[i - 1] = work[i] + c * q[i]
            out.append(work[0] + c * q[0])
            work = q
        return OPoly(self.field, out)

    def divide_by_x(self):
        """Exact division by X; the constant term must vanish at its precision."""
        c0 = self.coeffs[0]
        if not c0.is_zero_at_prec():
            raise ValueError("constant term does not vanish; not divisible by X")
        return OPoly(self.field, self.coeffs[1:] or [self.field.zero()])

    def __repr__(self):
        terms = [f"({render_elem(c)})*X^{k}" for k, c in enumerate(self.coeffs)]
        return " + ".join(terms)


def eis_poly(field) -> OPoly:
    return OPoly.from_w_coeffs(field, field.eis)


def hensel_root(Q: OPoly, x0: FieldElem) -> FieldElem:
    """The unique root c of Q with nu(c - x0) > nu(Q'(x0)).

    Requires nu(Q(x0)) > 2 nu(Q'(x0)); Newton iteration with quadratic
    convergence, stopping when the increment valuation reaches the working
    precision of the iterate.
    """
    K = x0.owner
    fx = Q(x0)
    if fx.is_zero_at_prec():
        return x0
    dfx = Q.derivative()(x0)
    if dfx.is_zero_at_prec():
        raise HenselPreconditionFailed("Q'(x0) is zero at working precision")
    vf, vd = valuation(fx), valuation(dfx)
    if not vf > 2 * vd:
        raise HenselPreconditionFailed(
            f"nu(Q(x0)) = {vf} is not > 2*nu(Q'(x0)) = {2 * vd}")
    x = x0
    for _ in range(64):
        fx = Q(x)
        if fx.is_zero_at_prec():
            return x
        step = div(fx, Q.derivative()(x))
        x = x - step
        if step.is_zero_at_prec() or valuation(step) >= x.prec:
            return x
    raise PrecisionExhausted("Newton iteration did not converge in 64 steps")


# ---- element expression parsing (CLI and tests) --------------------------------------


def parse_elem(field, text: str) -> FieldElem:
    """Parse expressions like '10', '2*pi + 3', 'x*pi^2 - 1' into a FieldElem."""
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif text.startswith("pi", i):
            tokens.append(("pi", None))
            i += 2
        elif ch == "x":
            tokens.append(("x", None))
            i += 1
        elif ch in "+-*^()":
            tokens.append((ch, None))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in element expression")
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take(kind=None):
        nonlocal pos
        if pos >= len(tokens) or (kind and tokens[pos][0] != kind):
            raise ValueError(f"malformed element expression near token {pos}")
        tok = tokens[pos]
        pos += 1
        return tok

    def atom():
        kind = peek()
        if kind == "int":
            return field.from_int(take()[1])
        if kind == "pi":
            take()
            return field.pi()
        if kind == "x":
            take()
            return field.x_gen()
        if kind == "(":
            take()
            v = expr()
            take(")")
            return v
        if kind == "-":
            take()
            return -atom()
        raise ValueError("malformed element expression")

    def factor():
        v = atom()
        if peek() == "^":
            take()
            k = take("int")[1]
            v = v ** k
        return v

    def term():
        v = factor()
        while peek() == "*":
            take()
            v = v * factor()
        return v

    def expr():
        v = term()
        while peek() in ("+", "-"):
            op = take()[0]
            w = term()
            v = v + w if op == "+" else v - w
        return v

    out = expr()
    if pos != len(tokens):
        raise ValueError("trailing tokens in element expression")
    return out
