"""Integer-tuple specialization of the brute-force coset-sum oracle for
f = 1 models with e <= 2 (all fields of the acceptance grid).

Same semantics as oracle_helpers.coset_sum_oracle, an order of magnitude
faster: representatives are plain integer tuples, addition is componentwise
modular arithmetic, and class extraction is an explicit pi-shift. The
acceptance suite cross-checks this path against the generic FieldElem oracle
on random pairs before trusting it.
"""

from hyperval.fq import int_val


class FastOracle:
    def __init__(self, H):
        K = H.field
        if K.f != 1 or K.e > 2:
            raise ValueError("fast oracle supports f = 1 and e <= 2")
        self.H = H
        self.K = K
        self.p, self.e, self.n, self.N = K.p, K.e, H.n, K.N
        self.mods = [K.p ** K.coeff_modulus_exp(i, K.N) for i in range(K.e)]
        self.nmods = [K.p ** K.coeff_modulus_exp(i, H.n) for i in range(K.e)]
        self.eis0 = K.eis[0][0]
        self.eis1 = K.eis[1][0] if K.e == 2 else 0
        # (eis0/p)^{-1} mod the top modulus, for division by pi
        self.u0inv = pow(self.eis0 // self.p, -1, self.mods[0] * self.p)

    def val(self, vec):
        best = None
        for i, c in enumerate(vec):
            if c:
                v = self.e * int_val(c, self.p) + i
                if best is None or v < best:
                    best = v
        return best

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.mods))

    def shift_down(self, vec):
        # divide by pi: valuation must be >= 1
        if self.e == 1:
            return ((-(vec[0] // self.p) * self.u0inv) % self.mods[0],)
        s = (vec[0] // self.p) * self.u0inv
        return ((vec[1] - s * self.eis1) % self.mods[0], (-s) % self.mods[1])

    def shift_up(self, vec):
        if self.e == 1:
            return ((vec[0] * -self.eis0) % self.mods[0],)
        c0, c1 = vec
        return ((-c1 * self.eis0) % self.mods[0], (c0 - c1 * self.eis1) % self.mods[1])

    def class_key(self, vec, v, base_val):
        u = vec
        for _ in range(v):
            u = self.shift_down(u)
        return (base_val + v, tuple(c % m for c, m in zip(u, self.nmods)))

    def unit_lifts(self, ucoeffs, level):
        """All canonical unit vectors at the given level congruent to the
        class mod m^n, as exact integers at full precision."""
        K = self.K
        lifts = [tuple(ucoeffs)]
        for i in range(K.e):
            lo = K.p ** K.coeff_modulus_exp(i, self.n)
            hi = K.p ** K.coeff_modulus_exp(i, max(level, self.n))
            step = hi // lo
            if step > 1:
                new = []
                for vec in lifts:
                    for t in range(step):
                        v2 = list(vec)
                        v2[i] += lo * t
                        new.append(tuple(v2))
                lifts = new
        return lifts

    def class_reps(self, cls, rel_prec, m):
        d = cls.gamma - m
        if d >= rel_prec:
            return [(0,) * self.e]
        need = max(rel_prec - d, self.n)
        out = self.unit_lifts(cls.ucoeffs, need)
        for _ in range(d):
            out = [self.shift_up(v) for v in out]
        return out

    def sum_oracle(self, a_cls, b_cls, slack=3):
        """(found class keys, deep flag, cutoff): exact representative sums."""
        m = min(a_cls.gamma, b_cls.gamma)
        q = self.n + slack
        xs = self.class_reps(a_cls, q, m)
        ys = self.class_reps(b_cls, q, m)
        cutoff = m + slack
        found = set()
        deep = False
        val = self.val
        add = self.add
        for x in xs:
            for y in ys:
                s = add(x, y)
                v = val(s)
                if v is None or v + self.n > q:
                    deep = True
                    continue
                found.add(self.class_key(s, v, m))
        return found, deep, cutoff
