"""Representative machinery for perfect residue fields F_{p^f}: the unique
p-power representative maps lambda_{l+1} and eta_{l+1}, the p-power
congruence strengthening, and digit expansions along pi-powers (all of O)
and p-powers (the unramified subring W).

The map lambda_{l+1} sends a residue element to (lift of its p^l-th root)^(p^l)
mod m^(l+1); lift-independence is exactly the p-power congruence. Digit values
are lambda_{l+1}(alpha) for alpha in k, reading the digit at the base of the
p^l-th power tower (the perfect-residue specialization where the p-basis is
empty).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CongruenceFailed, PrecisionExhausted
from .hyperfield import HfClass, Hyperfield
from .padic import (
    FieldElem,
    lift_to_prec,
    pi_shift_down,
    reduce_mod,
    residue,
    valuation,
)


@dataclass(frozen=True)
class DigitExpansion:
    """Digits of an element: a ~ sum_i digit_value(alpha_i) * base^i mod m^(level+1),
    base pi (kind "pi") or p (kind "p", Cohen-ring variant, i <= s). Digits are
    residue-field elements; basis is the p-basis representative tuple, empty
    for perfect residue fields."""

    kind: str
    level: int
    digits: tuple
    basis: tuple = ()

    def digit_count(self):
        return len(self.digits)


def lambda_rep(field, alpha, l: int) -> FieldElem:
    """lambda_{l+1}(alpha) = (lift of Frobenius^{-l}(alpha))^(p^l) in O/m^(l+1).

    Independent of the chosen lift of the root; the canonical coefficient lift
    is used.
    """
    if l < 0:
        raise ValueError("l must be >= 0")
    if l + 1 > field.N:
        raise PrecisionExhausted(f"level {l + 1} exceeds working precision {field.N}")
    k = field.residue_field
    if k.is_zero(alpha):
        return reduce_mod(field.zero(), l + 1)
    beta = k.frobenius_inverse(alpha, l)
    lift = field.from_w(beta)
    return reduce_mod(lift ** (field.p ** l), l + 1)


def eta_rep(field, alpha, l: int) -> HfClass:
    """The unique representative [lambda_{l+1}(alpha)]_{l+1} in H_{nu,l+1}(S)."""
    H = Hyperfield(field, l + 1)
    if field.residue_field.is_zero(alpha):
        return H.zero_class()
    return H.class_of(lambda_rep(field, alpha, l))


def p_power_congruence_check(a: FieldElem, b: FieldElem, imax: int) -> dict:
    """Verify a = b mod m implies a^(p^i) = b^(p^i) mod m^(i+1) for i <= imax.

    This is the strengthened modulus m^(i+1); the margin recorded per i is the
    actual valuation of the difference (capped at the carried precision).
    Raises CongruenceFailed on a counterexample, which would signal an
    implementation bug.
    """
    field = a.owner
    d0 = a - b
    if not d0.is_zero_at_prec() and valuation(d0) < 1:
        raise ValueError("precondition a = b mod m fails")
    margins = []
    pa, pb = a, b
    for i in range(1, imax + 1):
        pa = pa ** field.p
        pb = pb ** field.p
        diff = pa - pb
        if diff.is_zero_at_prec():
            margin = diff.prec
        else:
            margin = valuation(diff)
        if margin < i + 1:
            raise CongruenceFailed(i, (a, b, margin))
        margins.append({"i": i, "required": i + 1, "margin": margin})
    return {"imax": imax, "strengthened": True, "margins": margins}


def digit_expand(a: FieldElem, l: int) -> DigitExpansion:
    """Greedy pi-power digit extraction: alpha_i = res((a - partial) / pi^i)."""
    field = a.owner
    if l + 1 > a.prec:
        raise PrecisionExhausted(f"need precision {l + 1}, element carries {a.prec}")
    v = None if a.is_zero_at_prec() else valuation(a)
    if v is not None and v < 0:
        raise ValueError("digit expansion needs valuation >= 0")
    digits = []
    rem = a
    for i in range(l + 1):
        if rem.is_zero_at_prec():
            digits.extend([field.residue_field.zero()] * (l + 1 - i))
            break
        alpha = residue(rem)
        digits.append(alpha)
        dval = lift_to_prec(lambda_rep(field, alpha, l), rem.prec)
        rem = pi_shift_down(rem - dval)
    return DigitExpansion(kind="pi", level=l, digits=tuple(digits))


def cohen_expand(a: FieldElem, l: int) -> DigitExpansion:
    """p-power digit expansion of an element of the unramified subring W,
    following the inductive subtract-divide construction; s is determined by
    nu(p^s) < l+1 <= nu(p^(s+1))."""
    field = a.owner
    if l + 1 > a.prec:
        raise PrecisionExhausted(f"need precision {l + 1}, element carries {a.prec}")
    rows = a._rows()
    if any(any(c != 0 for c in row) for row in rows[1:]):
        raise ValueError("cohen_expand expects an element of the unramified subring W")
    s = l // field.e
    k = field.residue_field
    w = rows[0]
    digits = []
    for i in range(s + 1):
        alpha = k.elem(tuple(c % field.p for c in w))
        digits.append(alpha)
        beta = k.frobenius_inverse(alpha, l)
        dlift = _w_power(field, beta, field.p ** l)
        w = tuple((c - d) // field.p for c, d in zip(w, dlift))
    return DigitExpansion(kind="p", level=l, digits=tuple(digits))


def _w_power(field, w, k):
    out = (1,) + (0,) * (field.f - 1)
    base = tuple(w)
    while k:
        if k & 1:
            out = field._wmul(out, base)
        base = field._wmul(base, base)
        k >>= 1
    return out


def digit_assemble(field, exp: DigitExpansion) -> FieldElem:
    """Reassemble a DigitExpansion into its class in O/m^(level+1)."""
    l = exp.level
    base = field.pi() if exp.kind == "pi" else field.from_int(field.p)
    acc = field.zero()
    power = field.one()
    for alpha in exp.digits:
        term = lift_to_prec(lambda_rep(field, alpha, l), field.N)
        acc = acc + term * power
        power = power * base
    return reduce_mod(acc, l + 1)


def digits_as_json(field, exp: DigitExpansion):
    k = field.residue_field
    return {
        "kind": exp.kind,
        "level": exp.level,
        "digits": [k.render(d) for d in exp.digits],
        "basis": list(exp.basis),
    }
