"""Regenerate the expected digests of all presets in presets/.

Run after an intentional behavior change; the suite treats any digest drift
as a failure otherwise.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hyperval.presets import DEFAULT_PRESET_DIR, ExperimentPreset, run_preset


def main():
    directory = sys.argv[1] if len(sys.argv) > 1 else DEFAULT_PRESET_DIR
    for name in sorted(os.listdir(directory)):
        if not name.endswith(".json"):
            continue
        path = os.path.join(directory, name)
        preset = ExperimentPreset.from_file(path)
        outcome = run_preset(preset)
        with open(path) as fh:
            data = json.load(fh)
        data["expected_digest"] = outcome["digest"]
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"{preset.name}: {outcome['digest']}")


if __name__ == "__main__":
    main()
