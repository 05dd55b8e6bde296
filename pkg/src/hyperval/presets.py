"""Reproducible experiment presets with digest checking.

A preset names a runner plus its parameters and the expected sha256 of the
canonical JSON result. Every runner is deterministic given the seed in its
parameters, so a digest mismatch means behavior changed.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass

from .hyperfield import CheckBudget, Hyperfield, check_hyperfield_axioms, check_valued_axioms
from .logic import agreement_harness, generate_corpus
from .morphisms import (
    identity_hom,
    lift_tame,
    lift_wild,
    search_isos,
    verify_embedding,
    verify_embedding_induces,
)
from .padic import FieldModel, eis_poly, render_elem
from .ramification import krasner_refine_detailed, n_threshold

DEFAULT_PRESET_DIR = os.path.normpath(
    os.path.join(os.path.dirname(__file__), "..", "..", "presets"))


@dataclass(frozen=True)
class ExperimentPreset:
    name: str
    description: str
    kind: str
    params: dict
    expected_digest: str | None

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            data = json.load(fh)
        return cls(name=data["name"], description=data.get("description", ""),
                   kind=data["kind"], params=data["params"],
                   expected_digest=data.get("expected_digest"))


def _sanitize(obj):
    if isinstance(obj, float):
        return "inf" if obj == float("inf") else obj
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def result_digest(result) -> str:
    blob = json.dumps(_sanitize(result), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def _run_quadratic_isos(params):
    fields = {k: FieldModel.from_json(v) for k, v in params["fields"].items()}
    n = params.get("n", 1)
    out = {"pairs": []}
    for a, b in params["pairs"]:
        H1, H2 = Hyperfield(fields[a], n), Hyperfield(fields[b], n)
        isos = search_isos(H1, H2)
        entry = {"src": a, "dst": b, "iso_count": len(isos)}
        if isos:
            emb = lift_tame(isos[0])
            entry["pi_image"] = render_elem(emb.pi_image_elem)
            entry["pi_image_squared"] = render_elem(
                emb.pi_image_elem * emb.pi_image_elem)
            entry["embedding_ok"] = verify_embedding(emb)["ok"]
            entry["induces_hom"] = verify_embedding_induces(
                emb, isos[0], samples=100)["agree"]
        out["pairs"].append(entry)
    return out


def _run_wild_lift(params):
    field = FieldModel.from_json(params["field"])
    n = params["n"]
    H = Hyperfield(field, n)
    spec = identity_hom(H)
    emb = lift_wild(spec)
    seed_expr = field.pi() * (field.one() + field.pi() ** params["perturb_exponent"])
    refine = krasner_refine_detailed(eis_poly(field), seed_expr, n)
    return {
        "threshold": n_threshold(field).to_json(),
        "n": n,
        "pi_image": render_elem(emb.pi_image_elem),
        "pi_image_squared": render_elem(emb.pi_image_elem * emb.pi_image_elem),
        "induces_hom": verify_embedding_induces(emb, spec, samples=50)["agree"],
        "perturbed_seed_steps": refine["steps"],
        "perturbed_root_squared": render_elem(refine["root"] * refine["root"]),
    }


def _run_agreement(params):
    field = FieldModel.from_json(params["field"])
    corpus = generate_corpus(params.get("count", 50), params.get("seed", 1729))
    report = agreement_harness(corpus, field, n=params.get("n"),
                               radius=params.get("radius", 4),
                               raise_on_disagreement=False)
    return report


def _run_hf_axioms(params):
    field = FieldModel.from_json(params["field"])
    H = Hyperfield(field, params.get("n", field.n))
    budget = CheckBudget(window=params.get("window", 2 * H.n + 2))
    return {
        "hyperfield": check_hyperfield_axioms(H, budget, raise_on_fail=False),
        "valued": check_valued_axioms(H, budget, raise_on_fail=False),
    }


_RUNNERS = {
    "quadratic_isos": _run_quadratic_isos,
    "wild_lift": _run_wild_lift,
    "agreement": _run_agreement,
    "hf_axioms": _run_hf_axioms,
}


def run_preset(preset: ExperimentPreset) -> dict:
    result = _RUNNERS[preset.kind](preset.params)
    digest = result_digest(result)
    return {
        "name": preset.name,
        "digest": digest,
        "expected_digest": preset.expected_digest,
        "digest_ok": preset.expected_digest is None or digest == preset.expected_digest,
        "result": _sanitize(result),
    }


def list_presets(directory=DEFAULT_PRESET_DIR):
    if not os.path.isdir(directory):
        return []
    out = []
    for name in sorted(os.listdir(directory)):
        if name.endswith(".json"):
            out.append(ExperimentPreset.from_file(os.path.join(directory, name)))
    return out


def find_preset(name, directory=DEFAULT_PRESET_DIR) -> ExperimentPreset:
    for preset in list_presets(directory):
        if preset.name == name:
            return preset
    raise FileNotFoundError(f"no preset named {name!r} in {directory}")
