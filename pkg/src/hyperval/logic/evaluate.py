"""Bounded three-valued evaluation of hyperfield and valued-field sentences.

Quantifiers range over finite windows: hyperfield classes with |valuation|
<= V (plus zero), field elements pi^g * u with |g| <= V and u a canonical
unit representative at the model's hyperfield level n (plus 0), all residue
elements, and a bounded integer window with infinity for the group sort.

Results are honest about boundedness: True carries a checkable witness (and
is only claimed for formulas without universal quantifiers, whose witnesses
are absolute); FalseWithinRadius records exhaustive failure over the window;
anything universal comes back Unknown.

Field-sort equality is judged at hyperfield-class resolution: s = t holds
when nu(s - t) >= n + min(nu(s), nu(t)). The bounded field model is the
precision-n shadow of K, which is what makes exhaustive search meaningful;
nu and res atoms are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BudgetExceeded, SortError
from ..hyperfield import Hyperfield
from ..padic import (
    INFINITY,
    FieldElem,
    lift_to_prec,
    pi_shift_down,
    pi_shift_up,
    residue as elem_residue,
    valuation as elem_valuation,
)
from . import nodes as N

MAX_VHF_DEPTH = 4
MAX_VAL_DEPTH = 10


@dataclass
class TriBool:
    status: str                  # "true" | "false_within_radius" | "unknown"
    radius: int
    witness: dict | None = None         # rendered assignment for True results
    witness_values: dict | None = None  # the underlying domain values

    @property
    def definite(self):
        return self.status in ("true", "false_within_radius")

    def to_json(self):
        return {"status": self.status, "radius": self.radius,
                "witness": self.witness}


# ---- K-elements: the evaluator's fraction-field domain ---------------------------------


class KElem:
    """An element u * pi^shift of K with u in O; shift may be negative."""

    __slots__ = ("unit", "shift")

    def __init__(self, unit: FieldElem, shift: int = 0):
        self.unit = unit
        self.shift = shift

    @classmethod
    def zero(cls, field):
        return cls(field.zero(), 0)

    def is_zero_at_prec(self):
        return self.unit.is_zero_at_prec()

    def valuation(self):
        if self.unit.is_zero_at_prec():
            return INFINITY
        return elem_valuation(self.unit) + self.shift

    def mul(self, other):
        return KElem(self.unit * other.unit, self.shift + other.shift)

    def neg(self):
        return KElem(-self.unit, self.shift)

    def add(self, other):
        s = min(self.shift, other.shift)
        a = pi_shift_up(self.unit, self.shift - s)
        b = pi_shift_up(other.unit, other.shift - s)
        return KElem(a + b, s)

    def residue(self, field):
        # the residue map is the constant 0 outside the valuation ring
        v = self.valuation()
        if v != 0:
            return field.residue_field.zero()
        u = self.unit
        for _ in range(-self.shift if self.shift < 0 else 0):
            u = pi_shift_down(u)
        if self.shift > 0:
            u = pi_shift_up(u, self.shift)
        return elem_residue(u)

    def key(self):
        # representational identity; sufficient for memoization
        return (self.unit.coeffs, self.unit.prec, self.unit.exact_zero, self.shift)

    def render(self):
        from ..padic import render_elem
        body = render_elem(self.unit)
        if self.shift == 0:
            return body
        return f"pi^{self.shift} * ({body})"


def _class_equal(a: KElem, b: KElem, n: int) -> bool:
    diff = a.add(b.neg())
    if diff.is_zero_at_prec():
        return True
    va, vb = a.valuation(), b.valuation()
    if va == INFINITY and vb == INFINITY:
        return True
    return diff.valuation() >= n + min(va, vb)


# ---- hyperfield evaluation ----------------------------------------------------------------


def _vhf_term_value(t, H, env):
    if isinstance(t, N.VVar):
        if t.name not in env:
            raise SortError(f"unbound variable {t.name!r}")
        return env[t.name]
    if isinstance(t, N.VZero):
        return H.zero_class()
    if isinstance(t, N.VOne):
        return H.one_class()
    if isinstance(t, N.VPhat):
        return H.p_class()
    if isinstance(t, N.VMul):
        return H.mul(_vhf_term_value(t.left, H, env),
                     _vhf_term_value(t.right, H, env))
    raise SortError(f"bad hyperfield term {t!r}")


def _vhf_domain(H, radius):
    # unit classes first, then zero, then outward by |valuation|: quantifier
    # search finds the common witnesses early
    from ..hyperfield import HfClass
    out = [HfClass(H, 0, u) for u in H.units()]
    out.append(H.zero_class())
    for g in range(1, radius + 1):
        out.extend(HfClass(H, g, u) for u in H.units())
        out.extend(HfClass(H, -g, u) for u in H.units())
    return out


def _free_var_cache(root):
    cache = {}

    def walk(node):
        cache[id(node)] = frozenset(N.free_vars(node))
        for attr in ("left", "right", "body"):
            child = getattr(node, attr, None)
            if child is not None and not isinstance(child, str):
                if isinstance(child, (N.LAnd, N.LOr, N.LNot, N.LImp,
                                      N.LExists, N.LForall) + N.ATOMS):
                    walk(child)
    walk(root)
    return cache


def _make_vhf_sat(H, domain):
    memo = {}
    fv_cache = {}

    def free_of(node):
        key = id(node)
        if key not in fv_cache:
            fv_cache[key] = tuple(sorted(N.free_vars(node)))
        return fv_cache[key]

    def env_key(node, env):
        return (id(node), tuple(env[v] for v in free_of(node) if v in env))

    def sat(node, env):
        if isinstance(node, N.VPlus):
            a = _vhf_term_value(node.t1, H, env)
            b = _vhf_term_value(node.t2, H, env)
            c = _vhf_term_value(node.t3, H, env)
            return H.sum_contains(H.multiadd(a, b), c), {}
        if isinstance(node, N.VDivides):
            a = _vhf_term_value(node.t1, H, env)
            b = _vhf_term_value(node.t2, H, env)
            return H.valuation(a) <= H.valuation(b), {}
        if isinstance(node, N.VEq):
            return (_vhf_term_value(node.t1, H, env)
                    == _vhf_term_value(node.t2, H, env)), {}
        if isinstance(node, N.LAnd):
            ok1, w1 = sat(node.left, env)
            if not ok1:
                return False, None
            ok2, w2 = sat(node.right, env)
            return ok2, ({**w1, **w2} if ok2 else None)
        if isinstance(node, N.LOr):
            ok1, w1 = sat(node.left, env)
            if ok1:
                return True, w1
            return sat(node.right, env)
        if isinstance(node, N.LNot):
            ok, _ = sat(node.body, env)
            return not ok, {}
        if isinstance(node, N.LImp):
            ok1, _ = sat(node.left, env)
            if not ok1:
                return True, {}
            return sat(node.right, env)
        if isinstance(node, N.LExists):
            key = env_key(node, env)
            if key in memo:
                return memo[key]
            out = (False, None)
            for val in domain:
                ok, w = sat(node.body, {**env, node.var: val})
                if ok:
                    out = (True, {node.var: val, **w})
                    break
            memo[key] = out
            return out
        if isinstance(node, N.LForall):
            key = env_key(node, env)
            if key in memo:
                return memo[key]
            out = (True, {})
            for val in domain:
                ok, _ = sat(node.body, {**env, node.var: val})
                if not ok:
                    out = (False, None)
                    break
            memo[key] = out
            return out
        raise SortError(f"bad hyperfield formula {node!r}")
    return sat


def eval_vhf(phi, H: Hyperfield, radius: int) -> TriBool:
    """Bounded evaluation over classes with |valuation| <= radius."""
    if radius < H.n:
        raise ValueError(f"radius {radius} below the hyperfield level {H.n}")
    if N.quantifier_depth(phi) > MAX_VHF_DEPTH:
        raise BudgetExceeded(f"quantifier depth exceeds {MAX_VHF_DEPTH}")
    sat = _make_vhf_sat(H, _vhf_domain(H, radius))
    ok, values = sat(phi, {})
    out = _classify(phi, ok, values and
                    {k: H.render_class(v) for k, v in values.items()}, radius)
    if out.status == "true":
        out.witness_values = values
    return out


def _classify(phi, ok, witness, radius):
    has_forall = _contains_forall(phi)
    if ok:
        if has_forall:
            return TriBool("unknown", radius)
        return TriBool("true", radius, witness)
    if has_forall:
        return TriBool("unknown", radius)
    return TriBool("false_within_radius", radius)


def _contains_forall(phi):
    if isinstance(phi, N.LForall):
        return True
    if isinstance(phi, (N.LAnd, N.LOr, N.LImp)):
        return _contains_forall(phi.left) or _contains_forall(phi.right)
    if isinstance(phi, (N.LExists, N.LNot)):
        return _contains_forall(phi.body)
    return False


def verify_vhf_witness(phi, H: Hyperfield, radius: int, witness_values: dict) -> bool:
    """Re-check a True result: pin the outermost existential chain to the
    witness classes and re-evaluate the remaining formula against the model's
    atomic relations."""
    env = {}
    node = phi
    while isinstance(node, N.LExists) and node.var in witness_values:
        env[node.var] = witness_values[node.var]
        node = node.body
    sat = _make_vhf_sat(H, _vhf_domain(H, radius))
    ok, _ = sat(node, env)
    return ok


# ---- valued-field evaluation -----------------------------------------------------------------


def _field_domain(field, n, radius):
    # same ordering idea as the hyperfield domain: units, zero, then outward
    H = Hyperfield(field, n)
    lifts = [lift_to_prec(FieldElem(field, u, n), field.N) for u in H.units()]
    out = [KElem(u, 0) for u in lifts]
    out.append(KElem.zero(field))
    for g in range(1, radius + 1):
        out.extend(KElem(pi_shift_up(u, g), 0) for u in lifts)
        out.extend(KElem(u, -g) for u in lifts)
    return out


def eval_val(phi, field, radius: int, n=None) -> TriBool:
    """Bounded evaluation over the three-sorted structure of the field model."""
    n = field.n if n is None else n
    if radius < n:
        raise ValueError(f"radius {radius} below the hyperfield level {n}")
    if N.quantifier_depth(phi) > MAX_VAL_DEPTH:
        raise BudgetExceeded(f"quantifier depth exceeds {MAX_VAL_DEPTH}")
    k = field.residue_field
    domains = {
        "K": _field_domain(field, n, radius),
        "k": k.elements(),
        "G": [INFINITY] + list(range(-field.e * (radius + n + 1),
                                     field.e * (radius + n + 1) + 1)),
    }
    p_elem = KElem(field.from_int(field.p), 0)
    memo = {}
    fv_cache = {}

    def free_of(node):
        nid = id(node)
        if nid not in fv_cache:
            fv_cache[nid] = tuple(sorted(N.free_vars(node)))
        return fv_cache[nid]

    def env_key(node, env):
        vals = []
        for v in free_of(node):
            if v in env:
                val = env[v]
                vals.append(val.key() if isinstance(val, KElem) else val)
        return (id(node), tuple(vals))

    tmemo = {}
    tvar_cache = {}

    def _tvars(t):
        nid = id(t)
        if nid not in tvar_cache:
            out = set()
            stack = [t]
            while stack:
                cur = stack.pop()
                if isinstance(cur, N.FVar):
                    out.add(cur.name)
                for attr in ("left", "right", "body"):
                    child = getattr(cur, attr, None)
                    if child is not None:
                        stack.append(child)
            tvar_cache[nid] = tuple(sorted(out))
        return tvar_cache[nid]

    def fterm(t, env):
        if isinstance(t, N.FVar):
            return env[t.name]
        if isinstance(t, N.FZero):
            return KElem.zero(field)
        if isinstance(t, N.FOne):
            return KElem(field.one(), 0)
        if isinstance(t, N.FPConst):
            return p_elem
        key = (id(t), tuple(env[v].key() for v in _tvars(t) if v in env))
        out = tmemo.get(key)
        if out is not None:
            return out
        if isinstance(t, N.FAdd):
            out = fterm(t.left, env).add(fterm(t.right, env))
        elif isinstance(t, N.FMul):
            out = fterm(t.left, env).mul(fterm(t.right, env))
        elif isinstance(t, N.FNeg):
            out = fterm(t.body, env).neg()
        else:
            raise SortError(f"bad field term {t!r}")
        tmemo[key] = out
        return out

    def rterm(t, env):
        if isinstance(t, N.RVar):
            return env[t.name]
        if isinstance(t, N.RZero):
            return k.zero()
        if isinstance(t, N.ROne):
            return k.one()
        if isinstance(t, N.RRes):
            return fterm(t.body, env).residue(field)
        if isinstance(t, N.RAdd):
            return k.add(rterm(t.left, env), rterm(t.right, env))
        if isinstance(t, N.RMul):
            return k.mul(rterm(t.left, env), rterm(t.right, env))
        raise SortError(f"bad residue term {t!r}")

    def gterm(t, env):
        if isinstance(t, N.GVar):
            return env[t.name]
        if isinstance(t, N.GNu):
            return fterm(t.body, env).valuation()
        if isinstance(t, N.GInf):
            return INFINITY
        if isinstance(t, N.GZero):
            return 0
        if isinstance(t, N.GAdd):
            a, b = gterm(t.left, env), gterm(t.right, env)
            return INFINITY if INFINITY in (a, b) else a + b
        raise SortError(f"bad group term {t!r}")

    def render_value(val, sort):
        if sort == "K":
            return val.render()
        if sort == "k":
            return k.render(val)
        return "inf" if val == INFINITY else str(val)

    def sat(node, env):
        if isinstance(node, N.FEq):
            return _class_equal(fterm(node.left, env), fterm(node.right, env), n), {}
        if isinstance(node, N.REq):
            return rterm(node.left, env) == rterm(node.right, env), {}
        if isinstance(node, N.GEq):
            return gterm(node.left, env) == gterm(node.right, env), {}
        if isinstance(node, N.GLe):
            return gterm(node.left, env) <= gterm(node.right, env), {}
        if isinstance(node, N.GLt):
            return gterm(node.left, env) < gterm(node.right, env), {}
        if isinstance(node, N.LAnd):
            ok1, w1 = sat(node.left, env)
            if not ok1:
                return False, None
            ok2, w2 = sat(node.right, env)
            return ok2, ({**w1, **w2} if ok2 else None)
        if isinstance(node, N.LOr):
            ok1, w1 = sat(node.left, env)
            if ok1:
                return True, w1
            return sat(node.right, env)
        if isinstance(node, N.LNot):
            ok, _ = sat(node.body, env)
            return not ok, {}
        if isinstance(node, N.LImp):
            ok1, _ = sat(node.left, env)
            if not ok1:
                return True, {}
            return sat(node.right, env)
        if isinstance(node, (N.LExists, N.LForall)):
            key = env_key(node, env)
            if key in memo:
                return memo[key]
            dom = domains[node.sort]
            if isinstance(node, N.LExists):
                out = (False, None)
                for val in dom:
                    ok, w = sat(node.body, {**env, node.var: val})
                    if ok:
                        out = (True, {node.var: render_value(val, node.sort), **w})
                        break
            else:
                out = (True, {})
                for val in dom:
                    ok, _ = sat(node.body, {**env, node.var: val})
                    if not ok:
                        out = (False, None)
                        break
            memo[key] = out
            return out
        raise SortError(f"bad valued-field formula {node!r}")

    ok, witness = sat(phi, {})
    return _classify(phi, ok, witness, radius)
