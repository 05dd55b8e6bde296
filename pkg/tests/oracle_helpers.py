"""Brute-force coset-sum oracle used by the hyperfield tests and the
acceptance suite.

The oracle never touches the ball formula: it enumerates exact coset
representatives at relative precision n + slack with the padic primitives,
adds them pairwise, and classifies each exact sum. Comparison against a
multiadd ball description is exact set equality up to the enumeration
cutoff plus agreement on whether the sum reaches beyond it.
"""

from hyperval.hyperfield import HfClass
from hyperval.padic import (
    lift_to_prec,
    lifts_of,
    pi_shift_down,
    reduce_mod,
    valuation,
)


def class_reps(H, cls, rel_prec, m):
    """Exact representatives of cls, normalized by pi^m, covering the class
    mod m^(m + rel_prec). Representatives are carried at full working
    precision; only their enumeration density depends on rel_prec."""
    K = H.field
    d = cls.gamma - m
    if d >= rel_prec:
        return [K.zero()]
    pid = K.pi() ** d
    need = max(rel_prec - d, H.n)
    return [lift_to_prec(w, K.N) * pid for w in lifts_of(H.unit_elem(cls), need)]


def _class_key(field, n, s, m):
    v = valuation(s)
    u = s
    for _ in range(v):
        u = pi_shift_down(u)
    return (m + v, reduce_mod(u, n).coeffs)


def coset_sum_oracle(H, a_cls, b_cls, slack=3):
    """All classes of exact representative sums, with depth cutoff m + slack.

    Returns (found, deep, cutoff): found is the set of (gamma, ucoeffs) class
    keys of sums with valuation <= cutoff; deep is True when some exact sum
    lies beyond the cutoff (for cutoff >= radius this happens iff the sum
    contains zero).
    """
    n = H.n
    m = min(a_cls.gamma, b_cls.gamma)
    q = n + slack
    xs = class_reps(H, a_cls, q, m)
    ys = class_reps(H, b_cls, q, m)
    found = set()
    deep = False
    for x in xs:
        for y in ys:
            s = x + y
            if s.is_zero_at_prec():
                deep = True
                continue
            v = valuation(s)
            if v + n > q:
                deep = True
                continue
            found.add(_class_key(H.field, n, s, m))
    return found, deep, m + slack


def ball_description_key_set(H, s, cutoff):
    """(member class keys up to cutoff, reaches-beyond-cutoff flag) of a sum ball."""
    if s.kind == "single":
        cls = s.single_class()
        keys = {(cls.gamma, cls.ucoeffs)} if cls.gamma <= cutoff else set()
        return keys, cls.gamma > cutoff
    members = H.sum_members(s, max(cutoff, s.radius))
    keys = {(c.gamma, c.ucoeffs) for c in members
            if not c.is_zero and c.gamma <= cutoff}
    if s.contains_zero:
        beyond = True
    else:
        layer = s.min_val + valuation(s.center)
        beyond = layer > cutoff
    return keys, beyond


def assert_multiadd_matches_oracle(H, a_cls, b_cls, slack=3):
    s = H.multiadd(a_cls, b_cls)
    found, deep, cutoff = coset_sum_oracle(H, a_cls, b_cls, slack)
    keys, beyond = ball_description_key_set(H, s, cutoff)
    assert keys == found, (
        f"member mismatch for {a_cls!r} + {b_cls!r}: ball {sorted(keys)} "
        f"vs oracle {sorted(found)}")
    assert beyond == deep, (
        f"zero/depth mismatch for {a_cls!r} + {b_cls!r}: ball says {beyond}, "
        f"oracle says {deep}")
    return s


def windowed_pair_sweep(H, gap_range, slack=3):
    """Oracle-check multiadd on all unit-normalized pairs ([1], (gap, u)).

    Together with the exact scaling equivariance of multiadd (tested
    separately), this covers every pair of classes whose valuation gap lies
    in gap_range: any such pair is a class multiple of a swept one.
    """
    one = H.one_class()
    count = 0
    for gap in gap_range:
        for u in H.units():
            assert_multiadd_matches_oracle(H, one, HfClass(H, gap, u), slack)
            count += 1
    return count


def scaling_identity_sweep(H, V, rng, samples=150):
    """Exact test of multiadd(s*a, s*b) == s*multiadd(a, b) on ball parameters."""
    units = H.units()
    one = H.one_class()
    checked = 0
    for _ in range(samples):
        a = HfClass(H, rng.randrange(0, H.n + 2), rng.choice(units))
        b = HfClass(H, rng.randrange(0, H.n + 2), rng.choice(units))
        base = H.multiadd(a, b)
        for g in (-V, -1, 1, V):
            s = HfClass(H, g, rng.choice(units))
            assert H.multiadd(H.mul(s, a), H.mul(s, b)) == H.ball_scale(base, s)
            checked += 1
    return checked
