"""Ramification invariants and constructive root refinement.

d(e) = e(1 + nu_p(e)). M is the maximal valuation of a difference of distinct
conjugate uniformizers, computed exactly from the Newton polygon of
Q(X) = P(X + pi)/X with integer coefficient valuations (no floating point);
it is reported in both normalizations (m_p1 with nu(p) = 1, m_int with
nu(pi) = 1, m_int = e * m_p1).

The threshold for the wild lifting level is exposed in two readings because
the normalization of M in the n > e^2 M bound is ambiguous: n_min_paper uses
m_p1, n_min_conservative uses m_int and is the artifact default. The stated
comparison M <= d(e)/e^2 is evaluated and flagged when it fails (it does fail
for X^2 - 2 over Q_2 under the nu(p)=1 reading); only the reporting behavior
is asserted, not the inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoRootFound, PrecisionExhausted
from .fq import int_val
from .padic import FieldElem, OPoly, div, eis_poly, valuation


@dataclass(frozen=True)
class RamificationReport:
    p: int
    e: int
    d_e: int
    m_p1: Fraction
    m_int: Fraction
    n_min_paper: int
    n_min_conservative: int
    tame: bool
    de_over_e2_violated: bool
    de_over_e_ok: bool

    def to_json(self):
        return {
            "p": self.p, "e": self.e, "d_e": self.d_e,
            "m_p1": str(self.m_p1), "m_int": str(self.m_int),
            "n_min_paper": self.n_min_paper,
            "n_min_conservative": self.n_min_conservative,
            "tame": self.tame,
            "de_over_e2_violated": self.de_over_e2_violated,
            "de_over_e_ok": self.de_over_e_ok,
        }


def d_of(e: int, p: int) -> int:
    if e < 1:
        raise ValueError("e must be >= 1")
    return e * (1 + (int_val(e, p) if e % p == 0 else 0))


def newton_polygon_max_root_valuation(points) -> Fraction:
    """Maximal root valuation from the lower Newton polygon: the steepest
    initial descent max_k (v_0 - v_k)/k over the coefficient points."""
    pts = dict(points)
    if 0 not in pts:
        raise ValueError("polygon needs the constant-term point")
    v0 = pts[0]
    best = None
    for k, vk in pts.items():
        if k == 0:
            continue
        cand = Fraction(v0 - vk, k)
        if best is None or cand > best:
            best = cand
    if best is None:
        raise ValueError("polygon needs at least two points")
    return best


def m_nu_at(field, pi0: FieldElem, minpoly: OPoly) -> Fraction:
    """M in the nu(p)=1 normalization for a uniformizer pi0 with the given
    monic minimal polynomial over W."""
    Q = minpoly.shifted(pi0).divide_by_x()
    points = []
    for k, c in enumerate(Q.coeffs):
        if c.exact_zero:
            continue
        if c.is_zero_at_prec():
            raise PrecisionExhausted(
                f"coefficient {k} of the conjugate-difference polynomial is zero "
                f"at working precision")
        points.append((k, valuation(c)))
    m_int = newton_polygon_max_root_valuation(points)
    return m_int / field.e


def m_nu(field) -> Fraction:
    """M of the field's defining uniformizer; 0 by convention when e = 1."""
    if field.e == 1:
        return Fraction(0)
    return m_nu_at(field, field.pi(), eis_poly(field))


def n_threshold(field) -> RamificationReport:
    p, e = field.p, field.e
    tame = e % p != 0
    d_e = d_of(e, p)
    m_p1 = m_nu(field)
    m_int = m_p1 * e
    if tame:
        n_paper = n_cons = 1
    else:
        n_paper = math.floor(e * e * m_p1) + 1
        n_cons = math.floor(e * e * m_int) + 1
    return RamificationReport(
        p=p, e=e, d_e=d_e, m_p1=m_p1, m_int=m_int,
        n_min_paper=n_paper, n_min_conservative=n_cons, tame=tame,
        de_over_e2_violated=(e > 1 and m_p1 > Fraction(d_e, e * e)),
        de_over_e_ok=(m_p1 <= Fraction(d_e, e)),
    )


def krasner_refine_detailed(P: OPoly, b: FieldElem, l: int) -> dict:
    """Refine an approximate root b of P (Eisenstein of degree e) to an exact
    root at working precision, given P(b) in m^(l+1) with l >= e' d(e)/e.

    Newton iteration with a monotonicity safeguard: the valuation of P(x)
    must strictly increase every step, otherwise NoRootFound.
    """
    field = b.owner
    e_poly = P.degree
    d_e = d_of(e_poly, field.p)
    fb = P(b)
    if fb.is_zero_at_prec():
        return {"root": b, "steps": 0, "trace": []}
    v = valuation(fb)
    if v < l + 1:
        raise NoRootFound(f"P(b) has valuation {v} < l+1 = {l + 1}")
    if Fraction(l) < Fraction(field.e * d_e, e_poly):
        raise NoRootFound(
            f"l = {l} below the refinement threshold e'*d(e)/e = "
            f"{Fraction(field.e * d_e, e_poly)}")
    x = b
    dP = P.derivative()
    trace = [v]
    steps = 0
    for _ in range(64):
        fx = P(x)
        if fx.is_zero_at_prec():
            return {"root": x, "steps": steps, "trace": trace}
        vf = valuation(fx)
        if steps and vf <= trace[-1]:
            raise NoRootFound(f"Newton stalled: nu(P(x)) went {trace[-1]} -> {vf}")
        if steps:
            trace.append(vf)
        x = x - div(fx, dP(x))
        steps += 1
    raise NoRootFound("no convergence within 64 Newton steps")


def krasner_refine(P: OPoly, b: FieldElem, l: int) -> FieldElem:
    return krasner_refine_detailed(P, b, l)["root"]
