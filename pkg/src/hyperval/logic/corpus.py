"""Seeded generation of positive-existential hyperfield sentences and the
translation agreement harness.

Generated sentences are closed, have quantifier depth at most 3, and build
their ground terms from 1 and phat only, so witnesses (when they exist) are
value-bounded by construction: every term valuation is within a couple of
multiples of e of the quantified window.
"""

from __future__ import annotations

import random

from ..errors import TranslationDisagreement
from . import nodes as N
from .evaluate import eval_val, eval_vhf
from .nodes import is_positive_existential, render_val, render_vhf
from .translate import translate


def _gen_term(rng, variables):
    choices = ["var"] * 4 + ["one", "phat", "phatphat", "varvar", "varphat"]
    if not variables:
        choices = ["one", "phat", "phatphat"]
    kind = rng.choice(choices)
    if kind == "var":
        return N.VVar(rng.choice(variables))
    if kind == "one":
        return N.VOne()
    if kind == "phat":
        return N.VPhat()
    if kind == "phatphat":
        return N.VMul(N.VPhat(), N.VPhat())
    if kind == "varvar":
        v = rng.choice(variables)
        w = rng.choice(variables)
        return N.VMul(N.VVar(v), N.VVar(w))
    return N.VMul(N.VVar(rng.choice(variables)), N.VPhat())


def _gen_atom(rng, variables):
    kind = rng.choice(["plus", "plus", "div", "eq"])
    if kind == "plus":
        return N.VPlus(_gen_term(rng, variables), _gen_term(rng, variables),
                       _gen_term(rng, variables))
    if kind == "div":
        return N.VDivides(_gen_term(rng, variables), _gen_term(rng, variables))
    return N.VEq(_gen_term(rng, variables), _gen_term(rng, variables))


def _gen_matrix(rng, variables, atoms):
    phi = _gen_atom(rng, variables)
    for _ in range(atoms - 1):
        conn = N.LAnd if rng.random() < 0.6 else N.LOr
        phi = conn(phi, _gen_atom(rng, variables))
    return phi


def generate_corpus(count=50, seed=1729, max_depth=3):
    """Deterministic positive-existential sentences, deduplicated by their
    canonical rendering."""
    rng = random.Random(seed)
    out = []
    seen = set()
    names = ["x", "y", "z", "s"]
    while len(out) < count:
        depth = rng.choices(range(0, max_depth + 1), weights=[2, 5, 3, 1])[0]
        variables = names[:depth]
        atoms = rng.randrange(1, 3 if depth >= 2 else 4)
        phi = _gen_matrix(rng, variables, atoms)
        for var in reversed(variables):
            phi = N.LExists(var, "", phi)
        text = render_vhf(phi)
        if text in seen:
            continue
        if not is_positive_existential(phi):
            continue
        seen.add(text)
        out.append(phi)
    return out


def agreement_harness(corpus, field, n=None, radius=4, raise_on_disagreement=True):
    """Evaluate each sentence on H_{nu,n} and its translation on the field
    model; any definite disagreement is a hard failure."""
    from ..hyperfield import Hyperfield
    n = field.n if n is None else n
    H = Hyperfield(field, n)
    rows = []
    disagreements = []
    for phi in corpus:
        tr = translate(phi, field.p, field.e, n)
        left = eval_vhf(phi, H, radius)
        right = eval_val(tr, field, radius, n)
        row = {
            "sentence": render_vhf(phi),
            "translated": render_val(tr),
            "vhf": left.to_json(),
            "val": right.to_json(),
            "both_definite": left.definite and right.definite,
            "agree": (not (left.definite and right.definite))
                     or left.status == right.status,
        }
        rows.append(row)
        if not row["agree"]:
            disagreements.append(row)
    report = {
        "count": len(rows),
        "definite_pairs": sum(1 for r in rows if r["both_definite"]),
        "disagreements": len(disagreements),
        "rows": rows,
    }
    if disagreements and raise_on_disagreement:
        first = disagreements[0]
        raise TranslationDisagreement(first["sentence"],
                                      {"vhf": first["vhf"], "val": first["val"]})
    return report
