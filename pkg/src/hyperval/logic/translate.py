"""Translation of hyperfield sentences into valued-field sentences, uniform
in p, e, and n.

Atom translations (division-free forms, multiplied through by the candidate
denominator):

  x | y          ->   nu(x) <= nu(y)
  plus(x, y, z)  ->   exists w, u, v : K ( nu(w^e) = nu(p)
                        and nu(w^n) <= nu(u) and nu(w^n) <= nu(v)
                        and z = x*(1 + u) + y*(1 + v) )
  x = y          ->   (x = 0 and y = 0) or
                      (not (y = 0) and exists w : K ( nu(w^e) = nu(p)
                        and nu(y*w^n) <= nu(x - y) ))

The equality form is derived from the product definition specialized to
[x]*[1] = [y]; the zero cases are carried as a positive disjunction rather
than an implication, which keeps positive-existential inputs translating to
existential sentences (negations land on atoms only).
"""

from __future__ import annotations

from ..errors import SortError
from . import nodes as N


class _Fresh:
    def __init__(self, used):
        self.used = set(used)
        self.counter = 0

    def take(self, stem):
        while True:
            self.counter += 1
            name = f"{stem}{self.counter}"
            if name not in self.used:
                self.used.add(name)
                return name


def _fpow(term, k):
    out = term
    for _ in range(k - 1):
        out = N.FMul(out, term)
    return out


def _tr_term(t):
    if isinstance(t, N.VVar):
        return N.FVar(t.name)
    if isinstance(t, N.VZero):
        return N.FZero()
    if isinstance(t, N.VOne):
        return N.FOne()
    if isinstance(t, N.VPhat):
        return N.FPConst()
    if isinstance(t, N.VMul):
        return N.FMul(_tr_term(t.left), _tr_term(t.right))
    raise SortError(f"not a hyperfield term: {t!r}")


def _uniformizer_constraint(w, e):
    return N.GEq(N.GNu(_fpow(N.FVar(w), e)), N.GNu(N.FPConst()))


def translate(phi, p, e, n):
    """The valued-field sentence tracking phi over any field with residue
    characteristic p, ramification index e, at hyperfield level n."""
    fresh = _Fresh(N.all_var_names(phi))

    def tr(node):
        if isinstance(node, N.VDivides):
            return N.GLe(N.GNu(_tr_term(node.t1)), N.GNu(_tr_term(node.t2)))
        if isinstance(node, N.VPlus):
            x, y, z = (_tr_term(node.t1), _tr_term(node.t2), _tr_term(node.t3))
            w, u, v = fresh.take("w"), fresh.take("u"), fresh.take("v")
            wn = N.GNu(_fpow(N.FVar(w), n))
            eq = N.FEq(z, N.FAdd(N.FMul(x, N.FAdd(N.FOne(), N.FVar(u))),
                                 N.FMul(y, N.FAdd(N.FOne(), N.FVar(v)))))
            # each guard sits at its own binder so failed candidates are
            # discarded before the inner quantifiers open
            inner_v = N.LExists(v, "K", N.LAnd(N.GLe(wn, N.GNu(N.FVar(v))), eq))
            inner_u = N.LExists(u, "K", N.LAnd(N.GLe(wn, N.GNu(N.FVar(u))), inner_v))
            return N.LExists(w, "K", N.LAnd(_uniformizer_constraint(w, e), inner_u))
        if isinstance(node, N.VEq):
            x, y = _tr_term(node.t1), _tr_term(node.t2)
            w = fresh.take("w")
            both_zero = N.LAnd(N.FEq(x, N.FZero()), N.FEq(y, N.FZero()))
            near = N.LExists(w, "K", N.LAnd(
                _uniformizer_constraint(w, e),
                N.GLe(N.GNu(N.FMul(y, _fpow(N.FVar(w), n))),
                      N.GNu(N.FAdd(x, N.FNeg(y))))))
            return N.LOr(both_zero,
                         N.LAnd(N.LNot(N.FEq(y, N.FZero())), near))
        if isinstance(node, N.LAnd):
            return N.LAnd(tr(node.left), tr(node.right))
        if isinstance(node, N.LOr):
            return N.LOr(tr(node.left), tr(node.right))
        if isinstance(node, N.LNot):
            return N.LNot(tr(node.body))
        if isinstance(node, N.LImp):
            return N.LImp(tr(node.left), tr(node.right))
        if isinstance(node, N.LExists):
            return N.LExists(node.var, "K", tr(node.body))
        if isinstance(node, N.LForall):
            return N.LForall(node.var, "K", tr(node.body))
        raise SortError(f"not a hyperfield formula: {node!r}")

    return tr(phi)
