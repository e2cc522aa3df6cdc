"""Print both inequality-breaking measurements in human-readable form."""

import numpy as np

from decobs.entropy import entropy, expected_entropy, to_bits, von_neumann
from decobs.povm import apply_povm, counterexample_1, counterexample_2, is_purity_preserving
from decobs.processes import ensemble_average


def show(name, measurement, initial, broken_side):
    vn = von_neumann()
    ensemble = apply_povm(initial, measurement)
    before = entropy(initial, vn)
    after_observation = expected_entropy(ensemble, vn)
    after_average = entropy(ensemble_average(ensemble), vn)

    print(f"=== {name} (breaks the {broken_side} inequality) ===")
    print(f"input state:\n{np.array_str(initial.mat, precision=3, suppress_small=True)}")
    print(f"branch probabilities: {[round(o.probability, 12) for o in ensemble]}")
    for k, outcome in enumerate(ensemble):
        if outcome.probability > 0:
            mat = np.array_str(outcome.state.mat, precision=3, suppress_small=True)
            print(f"branch {k}:\n{mat}")
    print(f"entropy before:                {before:.6f} nats ({to_bits(before):.3f} bits)")
    print(f"expected entropy (observation): {after_observation:.6f} nats ({to_bits(after_observation):.3f} bits)")
    print(f"entropy of average (decoherence): {after_average:.6f} nats ({to_bits(after_average):.3f} bits)")
    print(f"purity preserving: {is_purity_preserving(measurement)}")
    print()


def main() -> int:
    m1, r1 = counterexample_1()
    show("Bell-basis joint readout", m1, r1, "observation")
    m2, r2 = counterexample_2()
    show("swap-and-read ancilla overwrite", m2, r2, "decoherence")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
