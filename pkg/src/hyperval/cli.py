"""Command-line front end.

Subcommands: field, hf, expand, gauss, bounds, hom, logic, preset. Machine
output is JSON with deterministic key ordering (--json where both formats
exist). Exit codes: 0 success, 2 domain error, 3 budget error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, DomainError
from .gauss import GaussModel, expansion_as_json, p_independent_check, parse_gauss, pbasis_expand_t
from .hyperfield import CheckBudget, HfClass, Hyperfield, check_hyperfield_axioms, check_valued_axioms
from .logic import (
    agreement_harness,
    eval_val,
    eval_vhf,
    generate_corpus,
    parse_val,
    parse_vhf,
    render_val,
    render_vhf,
    translate,
)
from .morphisms import (
    HomSpec,
    lift_tame,
    lift_unramified,
    lift_wild,
    search_homs,
    search_isos,
    unit_group_for,
    verify_embedding,
    verify_embedding_induces,
)
from .padic import FieldModel, parse_elem, render_elem, valuation
from .presets import DEFAULT_PRESET_DIR, find_preset, list_presets, run_preset
from .ramification import n_threshold
from .reps import cohen_expand, digit_expand, digits_as_json


def _emit(data, as_json=True):
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(data)


def _load_field(path) -> FieldModel:
    return FieldModel.from_file(path)


def cmd_field(args):
    K = _load_field(args.field)
    _emit({"ok": True, "field": K.to_json(),
           "description": repr(K)})
    return 0


def cmd_hf(args):
    K = _load_field(args.field)
    n = args.n or K.n
    H = Hyperfield(K, n)
    if args.hf_cmd == "class":
        cls = H.class_of(parse_elem(K, args.elem))
        _emit({"elem": args.elem, "n": n, "class": H.render_class(cls)})
        return 0
    if args.hf_cmd == "add":
        a = H.class_of(parse_elem(K, args.a))
        b = H.class_of(parse_elem(K, args.b))
        s = H.multiadd(a, b)
        data = {"a": H.render_class(a), "b": H.render_class(b), "sum": repr(s)}
        if args.cutoff is not None:
            data["members"] = [H.render_class(c)
                               for c in H.sum_members(s, args.cutoff)]
        _emit(data)
        return 0
    if args.hf_cmd == "axioms":
        budget = CheckBudget(window=args.window or 2 * n + 2)
        hrep = check_hyperfield_axioms(H, budget, raise_on_fail=False)
        vrep = check_valued_axioms(H, budget, raise_on_fail=False)
        _emit({"hyperfield": hrep, "valued": vrep,
               "ok": hrep["ok"] and vrep["ok"]})
        return 0 if hrep["ok"] and vrep["ok"] else 2
    raise DomainError(f"unknown hf subcommand {args.hf_cmd!r}")


def cmd_expand(args):
    K = _load_field(args.field)
    a = parse_elem(K, args.elem)
    exp = cohen_expand(a, args.level) if args.cohen else digit_expand(a, args.level)
    _emit(digits_as_json(K, exp))
    return 0


def cmd_gauss(args):
    model = GaussModel(args.p, args.N)
    if args.gauss_cmd == "expand":
        a = parse_gauss(model, args.elem)
        exp = pbasis_expand_t(a, args.level)
        _emit(expansion_as_json(exp))
        return 0
    if args.gauss_cmd == "check":
        elems = [parse_gauss(model, text) for text in args.elem.split(";")]
        ok = p_independent_check(elems if len(elems) > 1 else elems[0])
        _emit({"elems": [e.render() for e in elems], "p_independent": ok})
        return 0
    raise DomainError(f"unknown gauss subcommand {args.gauss_cmd!r}")


def cmd_bounds(args):
    K = _load_field(args.field)
    _emit(n_threshold(K).to_json())
    return 0


def _hom_spec_from_json(data) -> HomSpec:
    src = FieldModel.from_json(data["src"])
    dst = FieldModel.from_json(data["dst"])
    n = data["n"]
    H1, H2 = Hyperfield(src, n), Hyperfield(dst, n)
    group = unit_group_for(H1)
    unit_images = {}
    for entry in data["unit_images"]:
        gen = tuple(entry["gen"])
        img = entry["image"]
        unit_images[gen] = HfClass(H2, img["gamma"], tuple(img["u"]))
    pi = data["pi_image"]
    return HomSpec(H1, H2, unit_images,
                   HfClass(H2, pi["gamma"], tuple(pi["u"])),
                   over_p=data.get("over_p", True), _group=group)


def cmd_hom(args):
    if args.hom_cmd == "search":
        src = _load_field(args.src)
        dst = _load_field(args.dst)
        n = args.n or src.n
        H1, H2 = Hyperfield(src, n), Hyperfield(dst, n)
        finder = search_isos if args.iso else search_homs
        found = finder(H1, H2) if args.iso else search_homs(H1, H2, args.over_p)
        _emit({"count": len(found), "homs": [s.to_json() for s in found]})
        return 0
    if args.hom_cmd == "lift":
        with open(args.spec) as fh:
            spec = _hom_spec_from_json(json.load(fh))
        K = spec.H1.field
        if K.e == 1:
            emb = lift_unramified(spec)
        elif K.e % K.p != 0:
            emb = lift_tame(spec)
        else:
            emb = lift_wild(spec)
        _emit({
            "embedding": emb.to_json(),
            "verification": verify_embedding(emb),
            "induces_hom": verify_embedding_induces(emb, spec),
        })
        return 0
    raise DomainError(f"unknown hom subcommand {args.hom_cmd!r}")


def cmd_logic(args):
    if args.logic_cmd == "parse":
        phi = parse_vhf(args.sentence) if args.lang == "vhf" else parse_val(args.sentence)
        render = render_vhf if args.lang == "vhf" else render_val
        _emit({"canonical": render(phi)})
        return 0
    if args.logic_cmd == "translate":
        phi = parse_vhf(args.sentence)
        tr = translate(phi, args.p, args.e, args.n)
        _emit({"sentence": render_vhf(phi), "translated": render_val(tr)})
        return 0
    if args.logic_cmd == "eval":
        K = _load_field(args.model)
        n = args.n or K.n
        if args.side == "vhf":
            phi = parse_vhf(args.sentence)
            out = eval_vhf(phi, Hyperfield(K, n), args.radius)
        else:
            phi = parse_val(args.sentence)
            out = eval_val(phi, K, args.radius, n)
        _emit(out.to_json())
        return 0
    if args.logic_cmd == "agree":
        K = _load_field(args.model)
        corpus = generate_corpus(args.count, args.seed)
        report = agreement_harness(corpus, K, n=args.n, radius=args.radius,
                                   raise_on_disagreement=False)
        summary = {k: report[k] for k in ("count", "definite_pairs", "disagreements")}
        if args.full:
            summary["rows"] = report["rows"]
        _emit(summary)
        return 0 if report["disagreements"] == 0 else 2
    raise DomainError(f"unknown logic subcommand {args.logic_cmd!r}")


def cmd_preset(args):
    if args.preset_cmd == "list":
        _emit([{"name": p.name, "kind": p.kind, "description": p.description}
               for p in list_presets(args.dir)])
        return 0
    if args.preset_cmd == "run":
        preset = find_preset(args.name, args.dir)
        outcome = run_preset(preset)
        _emit(outcome)
        if not outcome["digest_ok"]:
            print(f"preset {preset.name}: DIGEST MISMATCH", file=sys.stderr)
            return 2
        print(f"preset {preset.name}: pass", file=sys.stderr)
        return 0
    raise DomainError(f"unknown preset subcommand {args.preset_cmd!r}")


def build_parser():
    top = argparse.ArgumentParser(
        prog="hyperval",
        description="Exact workbench for finitely ramified p-adic fields and "
                    "their valued hyperfield quotients.")
    top.add_argument("--threads", type=int, default=1,
                     help="reserved; current checkers are single-process "
                          "and deterministic")
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("field", help="validate and show a field definition file")
    p.add_argument("--field", required=True)
    p.set_defaults(fn=cmd_field)

    p = sub.add_parser("hf", help="hyperfield classes, sums, axioms")
    hs = p.add_subparsers(dest="hf_cmd", required=True)
    q = hs.add_parser("class")
    q.add_argument("--field", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--elem", required=True)
    q = hs.add_parser("add")
    q.add_argument("--field", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--cutoff", type=int)
    q = hs.add_parser("axioms")
    q.add_argument("--field", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--window", type=int)
    p.set_defaults(fn=cmd_hf)

    p = sub.add_parser("expand", help="digit expansions")
    p.add_argument("--field", required=True)
    p.add_argument("--elem", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--cohen", action="store_true",
                   help="p-power expansion of an unramified-subring element")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("gauss", help="the Gauss-valuation model")
    gs = p.add_subparsers(dest="gauss_cmd", required=True)
    q = gs.add_parser("expand")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--N", type=int, default=12)
    q.add_argument("--level", type=int, required=True)
    q.add_argument("--elem", required=True)
    q = gs.add_parser("check")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--N", type=int, default=12)
    q.add_argument("--elem", required=True,
                   help="one element, or several separated by ';'")
    p.set_defaults(fn=cmd_gauss)

    p = sub.add_parser("bounds", help="ramification invariants and thresholds")
    p.add_argument("--field", required=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("hom", help="hyperfield homomorphism search and lifting")
    hs = p.add_subparsers(dest="hom_cmd", required=True)
    q = hs.add_parser("search")
    q.add_argument("--src", required=True)
    q.add_argument("--dst", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--over-p", dest="over_p", action="store_true", default=True)
    q.add_argument("--iso", action="store_true")
    q = hs.add_parser("lift")
    q.add_argument("--spec", required=True, help="HomSpec JSON file")
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("logic", help="parse, translate, evaluate sentences")
    ls = p.add_subparsers(dest="logic_cmd", required=True)
    q = ls.add_parser("parse")
    q.add_argument("--lang", choices=("vhf", "val"), required=True)
    q.add_argument("--sentence", required=True)
    q = ls.add_parser("translate")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--sentence", required=True)
    q = ls.add_parser("eval")
    q.add_argument("--model", required=True)
    q.add_argument("--side", choices=("vhf", "val"), required=True)
    q.add_argument("--radius", type=int, default=4)
    q.add_argument("--n", type=int)
    q.add_argument("--sentence", required=True)
    q = ls.add_parser("agree")
    q.add_argument("--model", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--radius", type=int, default=4)
    q.add_argument("--count", type=int, default=50)
    q.add_argument("--seed", type=int, default=1729)
    q.add_argument("--full", action="store_true")
    p.set_defaults(fn=cmd_logic)

    p = sub.add_parser("preset", help="reproducible experiment presets")
    ps = p.add_subparsers(dest="preset_cmd", required=True)
    q = ps.add_parser("list")
    q.add_argument("--dir", default=DEFAULT_PRESET_DIR)
    q = ps.add_parser("run")
    q.add_argument("name")
    q.add_argument("--dir", default=DEFAULT_PRESET_DIR)
    p.set_defaults(fn=cmd_preset)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as err:
        print(f"budget error: {err}", file=sys.stderr)
        return 3
    except (DomainError, ValueError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
