"""Finite presentation, verification, and search of hyperfield homomorphisms
over p, and the constructive lifting of such homomorphisms to field
embeddings (unramified, tame, and wild cases).

A HomSpec presents a candidate homomorphism H_1 -> H_2 by the images of an
independent generating set of (O_1/m^n)^* and of a valuation-1 class for pi.
Checking reduces to finitely many conditions: multiplicativity holds by
construction once generator relations are preserved, and the additive
containment only needs unit-class pairs at valuation gaps in [0, n] (larger
gaps give singleton sums on both sides, and everything else is a class
multiple of a checked pair).

Search spaces are enumerated deterministically and results are sorted
canonically, so repeated runs are byte-identical.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    HomViolation,
    IncompatibleResidueEmbedding,
    NotNormalForm,
    NotTame,
    NoRootFound,
    RestrictionMismatch,
    ThresholdNotMet,
)
from .hyperfield import HfClass, Hyperfield
from .padic import (
    INFINITY,
    FieldElem,
    OPoly,
    div,
    hensel_root,
    inv as elem_inv,
    lift_to_prec,
    make_field,
    reduce_mod,
    render_elem,
    residue,
    valuation,
)
from .ramification import d_of, krasner_refine_detailed, n_threshold

DEFAULT_GROUP_CAP = 8192
DEFAULT_PAIR_BUDGET = 40000
DEFAULT_SEARCH_CAP = 50000


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class UnitGroup:
    """Structure of (O/m^n)^* by exhaustive order computation: an independent
    generating tuple with orders, plus exponent coordinates for every unit."""

    def __init__(self, H: Hyperfield, cap=DEFAULT_GROUP_CAP):
        self.H = H
        units = H.units()
        if cap is not None and len(units) > cap:
            raise BudgetExceeded(f"unit group has {len(units)} elements, cap {cap}")
        self.elements = list(units)
        self.order = len(units)
        self.identity = reduce_mod(H.field.one(), H.n).coeffs
        self._mul_memo = {}
        self._factors = _factorize(self.order)
        self.orders_map = {u: self.elem_order(u) for u in self.elements}
        self.generators, self.gen_orders = self._find_basis()
        self.coords = self._exponent_table()

    def mul(self, u, v):
        key = (u, v)
        out = self._mul_memo.get(key)
        if out is None:
            H = self.H
            out = (FieldElem(H.field, u, H.n) * FieldElem(H.field, v, H.n)).coeffs
            self._mul_memo[key] = out
        return out

    def power(self, u, k):
        out = self.identity
        base = u
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def elem_order(self, u):
        o = self.order
        for q in self._factors:
            while o % q == 0 and self.power(u, o // q) == self.identity:
                o //= q
        return o

    def _find_basis(self):
        # greedy max-order generators with trivial intersection against the
        # running span; each step adds a direct factor, so the orders multiply
        orders = self.orders_map
        span = {self.identity}
        gens, gen_orders = [], []
        candidates = sorted(self.elements, key=lambda u: (-orders[u], u))
        while len(span) < self.order:
            for g in candidates:
                if g in span:
                    continue
                cyc = []
                x = g
                trivial = True
                while x != self.identity:
                    if x in span:
                        trivial = False
                        break
                    cyc.append(x)
                    x = self.mul(x, g)
                if not trivial:
                    continue
                gens.append(g)
                gen_orders.append(orders[g])
                new_span = set()
                for s in span:
                    new_span.add(s)
                    for c in cyc:
                        new_span.add(self.mul(s, c))
                span = new_span
                break
            else:
                raise BudgetExceeded("unit group basis construction failed")
        total = 1
        for o in gen_orders:
            total *= o
        if total != self.order:
            raise BudgetExceeded("unit group basis is not direct")
        return gens, gen_orders

    def _exponent_table(self):
        coords = {self.identity: (0,) * len(self.generators)}
        frontier = [(self.identity, (0,) * len(self.generators))]
        for i, (g, d) in enumerate(zip(self.generators, self.gen_orders)):
            new = []
            for u, vec in frontier:
                x = u
                for k in range(1, d):
                    x = self.mul(x, g)
                    v2 = vec[:i] + (k,) + vec[i + 1:]
                    coords[x] = v2
                    new.append((x, v2))
            frontier.extend(new)
        return coords

    def presentation(self):
        return {"order": self.order,
                "generators": [list(g) for g in self.generators],
                "gen_orders": list(self.gen_orders)}


_GROUP_CACHE = {}


def unit_group_for(H: Hyperfield, cap=DEFAULT_GROUP_CAP) -> UnitGroup:
    key = (H, cap)
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = UnitGroup(H, cap)
    return _GROUP_CACHE[key]


def unit_group_gens(field, n, cap=DEFAULT_GROUP_CAP):
    """Independent generators with orders for (O/m^n)^*."""
    return unit_group_for(Hyperfield(field, n), cap).presentation()


# ---- homomorphism specifications -----------------------------------------------------


class HomSpec:
    """A finite presentation of a candidate homomorphism H1 -> H2."""

    def __init__(self, H1: Hyperfield, H2: Hyperfield, unit_images, pi_image: HfClass,
                 over_p=True, _group=None):
        if H1.n != H2.n:
            raise ValueError("source and target must share the level n")
        self.H1, self.H2 = H1, H2
        self.group = _group if _group is not None else unit_group_for(H1)
        self.unit_images = dict(unit_images)  # generator coeffs -> target HfClass
        self.pi_image = pi_image
        self.over_p = over_p
        if pi_image.is_zero or pi_image.gamma != 1:
            raise ValueError("pi must map to a valuation-1 class")
        missing = [g for g in self.group.generators if g not in self.unit_images]
        if missing:
            raise ValueError(f"missing images for generators {missing}")
        for g, d in zip(self.group.generators, self.group.gen_orders):
            img = self.unit_images[g]
            if img.is_zero or img.gamma != 0:
                raise HomViolation(2, f"generator image {img!r} is not a unit class")
            if not self.H2.pow(img, d) == self.H2.one_class():
                raise HomViolation(2, (g, img, d))
        self._img_powers = [
            [self.H2.pow(self.unit_images[g], k) for k in range(d)]
            for g, d in zip(self.group.generators, self.group.gen_orders)]
        self._pi_pow_memo = {0: self.H2.one_class(), 1: pi_image}
        self._unit_apply_memo = {}

    def _pi_image_pow(self, k):
        out = self._pi_pow_memo.get(k)
        if out is None:
            out = self.H2.pow(self.pi_image, k)
            self._pi_pow_memo[k] = out
        return out

    def unit_apply(self, ucoeffs):
        out = self._unit_apply_memo.get(ucoeffs)
        if out is None:
            vec = self.group.coords[ucoeffs]
            out = self.H2.one_class()
            for pows, k in zip(self._img_powers, vec):
                if k:
                    out = self.H2.mul(out, pows[k])
            self._unit_apply_memo[ucoeffs] = out
        return out

    def apply(self, cls: HfClass) -> HfClass:
        if cls.is_zero:
            return self.H2.zero_class()
        out = self.unit_apply(cls.ucoeffs)
        if cls.gamma:
            out = self.H2.mul(out, self._pi_image_pow(cls.gamma))
        return out

    def sort_key(self):
        return (tuple(sorted((g, img.sort_key())
                             for g, img in self.unit_images.items())),
                self.pi_image.sort_key())

    def to_json(self):
        def cls_json(c):
            return {"gamma": c.gamma, "u": list(c.ucoeffs)}
        return {
            "n": self.H1.n,
            "src": self.H1.field.to_json(),
            "dst": self.H2.field.to_json(),
            "unit_images": [
                {"gen": list(g), "order": d, "image": cls_json(self.unit_images[g])}
                for g, d in zip(self.group.generators, self.group.gen_orders)],
            "pi_image": cls_json(self.pi_image),
            "over_p": self.over_p,
        }


def identity_hom(H: Hyperfield) -> HomSpec:
    group = unit_group_for(H)
    images = {g: HfClass(H, 0, g) for g in group.generators}
    return HomSpec(H, H, images, H.class_of(H.field.pi()), over_p=True, _group=group)


# ---- the Krasner F_2 target -----------------------------------------------------------


class KrasnerF2:
    """The two-element Krasner hyperfield: 1 + 1 = {0, 1}, trivial valuation."""

    ZERO, ONE = "0", "1"

    def mul(self, a, b):
        return self.ONE if a == self.ONE and b == self.ONE else self.ZERO

    def multiadd(self, a, b):
        if a == self.ZERO:
            return frozenset({b})
        if b == self.ZERO:
            return frozenset({a})
        return frozenset({self.ZERO, self.ONE})

    def sum_contains(self, s, c):
        return c in s

    def sum_contains_zero(self, s):
        return self.ZERO in s

    def valuation(self, a):
        return INFINITY if a == self.ZERO else 0

    def zero_class(self):
        return self.ZERO

    def one_class(self):
        return self.ONE


class KrasnerQuotientMap:
    """The quotient H_{nu,1} -> F_2 sending every nonzero class to 1."""

    def __init__(self, H1: Hyperfield):
        self.H1 = H1
        self.H2 = KrasnerF2()

    def apply(self, cls):
        return self.H2.ZERO if cls.is_zero else self.H2.ONE


# ---- condition checking ----------------------------------------------------------------


@dataclass(frozen=True)
class HomBudget:
    window: int = 4
    pair_budget: int = DEFAULT_PAIR_BUDGET
    seed: int = 31337


def _target_ops(H2):
    if isinstance(H2, KrasnerF2):
        return (H2.mul, H2.multiadd, H2.sum_contains, H2.sum_contains_zero,
                H2.valuation, H2.one_class())
    return (H2.mul, H2.multiadd, H2.sum_contains,
            lambda s: s.contains_zero, H2.valuation, H2.one_class())


def check_hom(spec, budget: HomBudget = None, raise_on_fail=False):
    """Verify the homomorphism conditions (1) identities, (2) multiplicativity,
    (3) additive containment, (4) valuation-order equivalence.

    (3) is checked on unit-class pairs at valuation gaps k in [0, n]; gaps
    beyond n give singleton sums equal to the lower class on both sides, and
    general pairs are class multiples of checked ones (multiplicativity is
    exact from the presentation). Pairs are sampled deterministically when the
    exhaustive count exceeds the budget.
    """
    budget = budget or HomBudget()
    H1, H2 = spec.H1, spec.H2
    t_mul, t_add, t_contains, t_zero, t_val, t_one = _target_ops(H2)
    rng = random.Random(budget.seed)
    conditions = []

    def record(cid, ok, witness=None):
        conditions.append({"id": cid, "status": "pass" if ok else "fail",
                           "witness": None if ok else repr(witness)})
        if not ok and raise_on_fail:
            raise HomViolation(cid, witness)

    # (1) identities
    ok = (spec.apply(H1.zero_class()) == (H2.zero_class() if not isinstance(H2, KrasnerF2)
                                          else H2.ZERO)
          and spec.apply(H1.one_class()) == t_one)
    record(1, ok, "identities")

    apply_memo = {}

    def fapply(cls):
        key = (cls.gamma, cls.ucoeffs)
        out = apply_memo.get(key)
        if out is None:
            out = spec.apply(cls)
            apply_memo[key] = out
        return out

    units = H1.units()
    # (2) multiplicativity: exact from the presentation; sampled re-verification
    ok, wit = True, None
    for _ in range(min(400, len(units) ** 2)):
        u = HfClass(H1, rng.randrange(-2, 3), rng.choice(units))
        v = HfClass(H1, rng.randrange(-2, 3), rng.choice(units))
        if spec.apply(H1.mul(u, v)) != t_mul(fapply(u), fapply(v)):
            ok, wit = False, (u, v)
            break
    record(2, ok, wit)

    # (3) additive containment on unit pairs x gaps [0, n]; member sets of
    # zero-free sums are enumerated up to 128 classes and sampled beyond
    total = len(units) ** 2 * (H1.n + 1)
    if total <= budget.pair_budget:
        pair_iter = ((u, w, k) for u in units for w in units
                     for k in range(H1.n + 1))
    else:
        pair_iter = ((rng.choice(units), rng.choice(units), rng.randrange(H1.n + 1))
                     for _ in range(budget.pair_budget))
    ok, wit = True, None
    for u, w, k in pair_iter:
        a = HfClass(H1, 0, u)
        b = HfClass(H1, k, w)
        s = H1.multiadd(a, b)
        t = t_add(fapply(a), fapply(b))
        if s.kind == "single":
            if not t_contains(t, fapply(s.single_class())):
                ok, wit = False, (a, b)
                break
        elif s.contains_zero:
            if not t_zero(t):
                ok, wit = False, (a, b)
                break
        else:
            delta = valuation(s.center)
            if H1.field.p ** (H1.field.f * delta) <= 128:
                members = H1.sum_members(s, s.radius)
            else:
                members = H1.sample_members(s, 48, rng)
            if not all(t_contains(t, fapply(m)) for m in members):
                ok, wit = False, (a, b)
                break
    record(3, ok, wit)

    # (4) valuation-order equivalence, pairs scanned in canonical order
    # (small nonnegative valuations first) so witnesses are reproducible
    gammas = list(range(0, budget.window + 1)) + list(range(-1, -budget.window - 1, -1))
    scan = [HfClass(H1, g, u) for g in gammas for u in units[:4]]
    pairs = sorted(itertools.product(scan, scan),
                   key=lambda ab: (max(abs(ab[0].gamma), abs(ab[1].gamma)),
                                   ab[0].gamma < 0 or ab[1].gamma < 0,
                                   ab[0].sort_key(), ab[1].sort_key()))
    pairs = [(H1.zero_class(), scan[0]), (scan[0], H1.zero_class())] + pairs
    ok, wit = True, None
    for a, b in pairs:
        lhs = H1.valuation(a) <= H1.valuation(b)
        rhs = t_val(fapply(a)) <= t_val(fapply(b))
        if lhs != rhs:
            ok, wit = False, (a, b)
            break
    record(4, ok, wit)

    return {"conditions": conditions,
            "ok": all(c["status"] == "pass" for c in conditions)}


def krasner_f2_example_report(H1: Hyperfield, budget: HomBudget = None):
    """The quotient map H_{nu,1}(Q_2) -> Krasner F_2: passes (1)-(3), fails (4)."""
    if H1.n != 1:
        raise ValueError("the quotient example is a level-1 map")
    qmap = KrasnerQuotientMap(H1)
    budget = budget or HomBudget()
    spec = _FunctionHom(H1, qmap.H2, qmap.apply)
    return check_hom(spec, budget)


class _FunctionHom:
    """Adapter presenting a plain function as a checkable hom candidate."""

    def __init__(self, H1, H2, fn):
        self.H1, self.H2 = H1, H2
        self._fn = fn

    def apply(self, cls):
        return self._fn(cls)


# ---- search ------------------------------------------------------------------------------


def search_homs(H1: Hyperfield, H2: Hyperfield, over_p=True,
                budget: HomBudget = None, search_cap=DEFAULT_SEARCH_CAP):
    """Exhaustive search over generator-image assignments and valuation-1
    pi images, filtered by check_hom; canonical order."""
    budget = budget or HomBudget()
    g1 = unit_group_for(H1)
    g2 = unit_group_for(H2)
    unit_classes2 = [HfClass(H2, 0, u) for u in g2.elements]
    candidates_per_gen = []
    for g, d in zip(g1.generators, g1.gen_orders):
        cands = [c for c in unit_classes2 if d % g2.orders_map[c.ucoeffs] == 0]
        candidates_per_gen.append(cands)
    pi_candidates = [HfClass(H2, 1, u) for u in g2.elements]
    total = len(pi_candidates)
    for c in candidates_per_gen:
        total *= len(c)
    if total > search_cap:
        raise BudgetExceeded(f"{total} candidate assignments exceed cap {search_cap}")

    p_src = H1.p_class()
    p_dst = H2.p_class()
    found = []
    for images in itertools.product(*candidates_per_gen):
        unit_images = dict(zip(g1.generators, images))
        for pi_img in pi_candidates:
            try:
                spec = HomSpec(H1, H2, unit_images, pi_img, over_p, _group=g1)
            except HomViolation:
                continue
            if over_p and spec.apply(p_src) != p_dst:
                continue
            if check_hom(spec, budget)["ok"]:
                found.append(spec)
    found.sort(key=lambda s: s.sort_key())
    return found


def is_bijective(spec: HomSpec) -> bool:
    units1 = spec.H1.units()
    units2 = set(spec.H2.units())
    image = {spec.unit_apply(u).ucoeffs for u in units1}
    return len(image) == len(units1) and image == units2


def search_isos(H1: Hyperfield, H2: Hyperfield, budget: HomBudget = None,
                search_cap=DEFAULT_SEARCH_CAP):
    return [s for s in search_homs(H1, H2, True, budget, search_cap)
            if is_bijective(s)]


# ---- embeddings ---------------------------------------------------------------------------


class EmbeddingSpec:
    """A field embedding determined by the images of the unramified generator
    and the uniformizer; evaluation maps Sum c_ij x^j pi^i through them."""

    def __init__(self, src, dst, x_image, pi_image_elem):
        self.src, self.dst = src, dst
        self.x_image = x_image              # FieldElem in dst, or None when f = 1
        self.pi_image_elem = pi_image_elem  # FieldElem in dst
        if src.f > 1 and x_image is None:
            raise ValueError("unramified generator image required for f > 1")

    def apply_w(self, wcoords):
        out = self.dst.zero()
        if self.src.f == 1:
            return self.dst.from_int(wcoords[0])
        xpow = self.dst.one()
        for c in wcoords:
            if c:
                out = out + self.dst.from_int(c) * xpow
            xpow = xpow * self.x_image
        return out

    def apply(self, a: FieldElem) -> FieldElem:
        if a.exact_zero:
            return self.dst.zero()
        out = self.dst.zero()
        pipow = self.dst.one()
        for row in a._rows():
            if any(row):
                out = out + self.apply_w(row) * pipow
            pipow = pipow * self.pi_image_elem
        return out

    def residue_map(self):
        """The induced embedding of residue fields."""
        k1, k2 = self.src.residue_field, self.dst.residue_field
        if self.src.f == 1:
            return {a: k2.from_int(a[0]) for a in k1.elements()}
        ximg_res = residue(self.x_image)
        table = {}
        for a in k1.elements():
            acc = k2.zero()
            xp = k2.one()
            for c in a:
                acc = k2.add(acc, k2.mul(k2.from_int(c), xp))
                xp = k2.mul(xp, ximg_res)
            table[a] = acc
        return table

    def to_json(self):
        return {
            "src": self.src.to_json(), "dst": self.dst.to_json(),
            "x_image": None if self.x_image is None else {
                "coeffs": list(self.x_image.coeffs),
                "render": render_elem(self.x_image)},
            "pi_image": {"coeffs": list(self.pi_image_elem.coeffs),
                         "render": render_elem(self.pi_image_elem)},
        }


def verify_embedding(emb: EmbeddingSpec, samples=200, seed=7) -> dict:
    """Ring-hom, valuation, and residue-compatibility checks on random pairs."""
    rng = random.Random(seed)
    K, L = emb.src, emb.dst
    res_map = emb.residue_map()
    issues = []
    for _ in range(samples):
        a = K.from_coeffs([rng.randrange(K.p ** 4) for _ in range(K.e * K.f)])
        b = K.from_coeffs([rng.randrange(K.p ** 4) for _ in range(K.e * K.f)])
        fa, fb = emb.apply(a), emb.apply(b)
        if emb.apply(a + b) != fa + fb or emb.apply(a * b) != fa * fb:
            issues.append(("ring_hom", render_elem(a), render_elem(b)))
            continue
        va = INFINITY if a.is_zero_at_prec() else valuation(a)
        wa = INFINITY if fa.is_zero_at_prec() else valuation(fa)
        if va != wa and not (va != INFINITY and va >= a.prec):
            issues.append(("valuation", render_elem(a), va, wa))
        if va == 0 and res_map[residue(a)] != residue(fa):
            issues.append(("residue_compat", render_elem(a)))
    return {"samples": samples, "ok": not issues, "issues": issues[:5]}


def verify_embedding_induces(emb: EmbeddingSpec, spec, samples=100, seed=11) -> dict:
    """Measure agreement f([x]_n) = [Phi(x)]_n on random elements."""
    rng = random.Random(seed)
    H1, H2 = spec.H1, spec.H2
    K = emb.src
    mismatches = []
    for _ in range(samples):
        a = K.from_coeffs([rng.randrange(K.p ** 3) for _ in range(K.e * K.f)])
        if a.is_zero_at_prec():
            continue
        if valuation(a) + H1.n > min(a.prec, emb.apply(a).prec):
            continue
        lhs = spec.apply(H1.class_of(a))
        rhs = H2.class_of(emb.apply(a))
        if lhs != rhs:
            mismatches.append(render_elem(a))
    return {"samples": samples, "agree": not mismatches, "mismatches": mismatches[:5]}


# ---- lifting -------------------------------------------------------------------------------


def _residue_embedding_from_hom(spec) -> dict:
    """The residue embedding induced by a hom over p, as a table k1 -> k2,
    with field-hom verification."""
    H1, H2 = spec.H1, spec.H2
    k1, k2 = H1.field.residue_field, H2.field.residue_field
    table = {k1.zero(): k2.zero()}
    for a in k1.elements():
        if k1.is_zero(a):
            continue
        cls = H1.class_of(lift_to_prec(H1.field.from_w(a), H1.field.N))
        img = spec.apply(cls)
        table[a] = residue(H2.unit_elem(img))
    for a in k1.elements():
        for b in k1.elements():
            if table[k1.mul(a, b)] != k2.mul(table[a], table[b]) or \
               table[k1.add(a, b)] != k2.add(table[a], table[b]):
                raise IncompatibleResidueEmbedding(
                    f"induced residue map is not a field embedding at ({a}, {b})")
    return table


def lift_unramified(spec, basis=(), basis_image=()) -> EmbeddingSpec:
    """Lift a hom over p between unramified fields to the unique compatible
    field embedding: the unramified generator goes to the Hensel root of h
    matching the induced residue image. The p-basis arguments are part of the
    general interface; perfect residue fields have an empty p-basis."""
    H1, H2 = spec.H1, spec.H2
    K, L = H1.field, H2.field
    if K.e != 1:
        raise NotTame("lift_unramified requires an unramified source")
    if basis or basis_image:
        raise IncompatibleResidueEmbedding(
            "perfect residue fields have an empty p-basis")
    phi = _residue_embedding_from_hom(spec)
    if K.f == 1:
        x_img = None
    else:
        target_res = phi[K.residue_field.gen()]
        h_poly = OPoly.from_ints(L, K.h)
        seed = lift_to_prec(L.from_w(target_res), L.N)
        x_img = hensel_root(h_poly, seed)
    emb = EmbeddingSpec(K, L, x_img, _w_image(L, x_img, K, tuple(-c for c in K.eis[0])))
    report = verify_embedding_induces(emb, spec, samples=25)
    if not report["agree"]:
        raise HomViolation("induced_map", report["mismatches"])
    return emb


def _w_image(dst, x_image, src, wcoords):
    if src.f == 1:
        return dst.from_int(wcoords[0])
    out = dst.zero()
    xp = dst.one()
    for c in wcoords:
        if c:
            out = out + dst.from_int(c) * xp
        xp = xp * x_image
    return out


def tame_normal_form(field):
    """Renormalize a tame Eisenstein model to X^e - pa form.

    Returns (new_field, pi1) where pi1, expressed in the original model, is a
    root of the new Eisenstein polynomial: pi1 = pi u with u the Hensel e-th
    root of pi^e / (-a0). Raises NotNormalForm for wild inputs not already in
    normal form.
    """
    e = field.e
    if all(not any(c) for c in field.eis[1:-1]):
        return field, field.pi()
    if e % field.p == 0:
        raise NotNormalForm("wild Eisenstein polynomial not in X^e - pa form")
    a0 = field.from_w(field.eis[0])
    z = div(field.pi() ** e, -a0)            # z = 1 mod m
    Q = OPoly(field, [-elem_inv(z)] + [field.zero()] * (e - 1) + [field.one()])
    u = hensel_root(Q, field.one())
    pi1 = field.pi() * u
    new_eis = [tuple(field.eis[0])] + [0] * (e - 1) + [1]
    new_field = make_field(field.p, field.f, e, new_eis, field.h, field.N, field.n)
    return new_field, pi1


def lift_tame(spec) -> EmbeddingSpec:
    """Lift a hom over p with p not dividing e to the unique embedding
    inducing it; requires the source in normal form X^e - pa."""
    H1, H2 = spec.H1, spec.H2
    K, L = H1.field, H2.field
    if K.e % K.p == 0:
        raise NotTame(f"p={K.p} divides e={K.e}")
    if K.e == 1:
        return lift_unramified(spec)
    if any(any(c) for c in K.eis[1:-1]):
        raise NotNormalForm("source Eisenstein polynomial must be X^e - pa; "
                            "use tame_normal_form first")
    report = check_hom(spec)
    if not report["ok"]:
        raise HomViolation("check_hom", report)

    if K.f == 1:
        x_img = None
    else:
        phi = _residue_embedding_from_hom(spec)
        target_res = phi[K.residue_field.gen()]
        x_img = hensel_root(OPoly.from_ints(L, K.h),
                            lift_to_prec(L.from_w(target_res), L.N))
    # a = -a0/p in W^x; its image under the unramified part of the embedding
    a_w = tuple(-c // K.p for c in K.eis[0])
    phi_a = _w_image(L, x_img, K, a_w)
    pi0 = H2.rep(spec.pi_image)
    rhs = div(L.from_int(L.p) * phi_a, pi0 ** K.e)
    Q = OPoly(L, [-rhs] + [L.zero()] * (K.e - 1) + [L.one()])
    b = hensel_root(Q, L.one())
    pi_prime = b * pi0
    if pi_prime ** K.e != L.from_int(L.p) * phi_a:
        raise NoRootFound("lifted uniformizer does not satisfy X^e = p a")
    if H2.class_of(pi_prime) != spec.pi_image:
        raise NoRootFound("lifted uniformizer left its hyperfield class")
    emb = EmbeddingSpec(K, L, x_img, pi_prime)
    rep = verify_embedding_induces(emb, spec, samples=25)
    if not rep["agree"]:
        raise HomViolation("induced_map", rep["mismatches"])
    return emb


def lift_wild(spec) -> EmbeddingSpec:
    """Lift a hom over p with p | e: refine a representative of the pi image
    to an exact root of the mapped Eisenstein polynomial by Krasner/Newton
    refinement. Existence only; whether the embedding induces the hom beyond
    the unramified part is measured by verify_embedding_induces, not asserted."""
    H1, H2 = spec.H1, spec.H2
    K, L = H1.field, H2.field
    if K.e % K.p != 0:
        raise NotTame(f"lift_wild requires p | e, got p={K.p}, e={K.e}")
    n = H1.n
    threshold = n_threshold(K).n_min_conservative
    if n < threshold:
        raise ThresholdNotMet(f"level n={n} below conservative threshold {threshold}")
    report = check_hom(spec)
    if not report["ok"]:
        raise HomViolation("check_hom", report)

    if K.f == 1:
        x_img = None
    else:
        phi = _residue_embedding_from_hom(spec)
        x_img = hensel_root(OPoly.from_ints(L, K.h),
                            lift_to_prec(L.from_w(phi[K.residue_field.gen()]), L.N))
    mapped = OPoly(L, [_w_image(L, x_img, K, c) for c in K.eis])
    pi0 = H2.rep(spec.pi_image)
    val0 = valuation(mapped(pi0)) if not mapped(pi0).is_zero_at_prec() else INFINITY
    if val0 < n:
        raise NoRootFound(f"mapped Eisenstein value has valuation {val0} < n={n}; "
                          "spec is not a homomorphism over p")
    pi_prime = krasner_refine_detailed(mapped, pi0, n - 1)["root"]
    return EmbeddingSpec(K, L, x_img, pi_prime)


def lift_over(phi0: EmbeddingSpec, spec) -> EmbeddingSpec:
    """Extend an embedding of a subfield (Q_p or the unramified subfield) to
    the whole field along a hom over p that restricts to the one phi0 induces
    (tame case)."""
    H1, H2 = spec.H1, spec.H2
    K, L = H1.field, H2.field
    K0 = phi0.src
    if K.e % K.p == 0:
        raise NotTame("lift_over is a tame-case construction")
    if K0.e != 1 or K0.p != K.p:
        raise RestrictionMismatch("base must be Q_p or the unramified subfield")

    def include(a0):
        # canonical inclusion of K0 = Q_p or W into K
        return _w_image(K, K.x_gen() if K.f > 1 else None, K0, a0._rows()[0])

    rng = random.Random(13)
    for _ in range(40):
        a0 = K0.from_coeffs([rng.randrange(K0.p ** 3) for _ in range(K0.f)])
        if a0.is_zero_at_prec():
            continue
        a = include(a0)
        img = phi0.apply(a0)
        if valuation(a) + H1.n > min(a.prec, img.prec):
            continue
        if spec.apply(H1.class_of(a)) != H2.class_of(img):
            raise RestrictionMismatch(
                f"hom does not restrict to the embedding at {render_elem(a0)}")

    emb = lift_tame(spec) if K.e > 1 else lift_unramified(spec)
    for gen0 in ([K0.x_gen()] if K0.f > 1 else [K0.from_int(K0.p)]):
        if emb.apply(include(gen0)) != phi0.apply(gen0):
            raise RestrictionMismatch("lifted embedding does not extend the base map")
    return emb
