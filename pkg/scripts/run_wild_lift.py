"""Wild lifting over Q_2(sqrt 2) at the conservative level n = 13: the
identity homomorphism of H_{nu,13} lifts to an embedding whose uniformizer
image squares to 2 exactly, and Krasner refinement recovers an exact root
from a perturbed seed pi (1 + pi^13) in a handful of Newton steps.

Run: python3 scripts/run_wild_lift.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hyperval.hyperfield import Hyperfield
from hyperval.morphisms import identity_hom, lift_wild, verify_embedding_induces
from hyperval.padic import eis_poly, make_field, render_elem
from hyperval.ramification import krasner_refine_detailed, n_threshold


def main():
    K = make_field(2, 1, 2, [-2, 0, 1], [0, 1], N=44, n=13)
    print("thresholds:", json.dumps(n_threshold(K).to_json(), sort_keys=True))

    spec = identity_hom(Hyperfield(K, 13))
    emb = lift_wild(spec)
    sq = emb.pi_image_elem * emb.pi_image_elem
    print("pi' =", render_elem(emb.pi_image_elem))
    print("(pi')^2 =", render_elem(sq))
    print("induces the hom on samples:",
          verify_embedding_induces(emb, spec, samples=50)["agree"])

    seed = K.pi() * (K.one() + K.pi() ** 13)
    refine = krasner_refine_detailed(eis_poly(K), seed, 13)
    print(f"perturbed seed pi(1+pi^13) refines in {refine['steps']} Newton steps; "
          f"root^2 = {render_elem(refine['root'] * refine['root'])}")


if __name__ == "__main__":
    main()
