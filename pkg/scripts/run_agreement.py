"""Translation agreement experiment: evaluate the generated 50-sentence
positive-existential corpus on the hyperfield side and its translation on the
valued-field side, over Q_2 (level 2) and Q_5(sqrt 5) (level 1) at radius 4.

Run: python3 scripts/run_agreement.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hyperval.logic import agreement_harness, generate_corpus
from hyperval.padic import make_field


def main():
    corpus = generate_corpus(50)
    models = [
        ("Q_2, n=2", make_field(2, 1, 1, [-2, 1], [0, 1], 12, n=2)),
        ("Q_5(sqrt5), n=1", make_field(5, 1, 2, [-5, 0, 1], [0, 1], 16, n=1)),
    ]
    for name, K in models:
        report = agreement_harness(corpus, K, radius=4, raise_on_disagreement=False)
        print(f"{name}: {report['count']} sentences, "
              f"{report['definite_pairs']} definite pairs, "
              f"{report['disagreements']} disagreements")
        for row in report["rows"]:
            if not row["agree"]:
                print("  DISAGREE:", row["sentence"])


if __name__ == "__main__":
    main()
