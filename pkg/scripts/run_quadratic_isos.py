"""The quadratic experiment over Q_5: hyperfield isomorphism search at level
n = 1 decides which of the ramified quadratic extensions are isomorphic, and
a found isomorphism lifts to an explicit field embedding with an exact
uniformizer image.

Run: python3 scripts/run_quadratic_isos.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hyperval.hyperfield import Hyperfield
from hyperval.morphisms import lift_tame, search_isos, verify_embedding_induces
from hyperval.padic import make_field, render_elem


def main():
    sqrt5 = make_field(5, 1, 2, [-5, 0, 1], [0, 1], 16, n=1)
    sqrt20 = make_field(5, 1, 2, [-20, 0, 1], [0, 1], 16, n=1)
    sqrt10 = make_field(5, 1, 2, [-10, 0, 1], [0, 1], 16, n=1)
    H5 = Hyperfield(sqrt5, 1)

    for name, other in (("Q5(sqrt20)", sqrt20), ("Q5(sqrt10)", sqrt10)):
        isos = search_isos(H5, Hyperfield(other, 1))
        print(f"Q5(sqrt5) ~ {name}: {len(isos)} isomorphism(s) over p")
        if isos:
            emb = lift_tame(isos[0])
            sq = emb.pi_image_elem * emb.pi_image_elem
            agree = verify_embedding_induces(emb, isos[0], samples=100)
            print(json.dumps({
                "pi_image": render_elem(emb.pi_image_elem),
                "pi_image_squared": render_elem(sq),
                "induces_hom_on_100_samples": agree["agree"],
            }, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
