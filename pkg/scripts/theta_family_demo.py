"""Explore the family of minimal logarithms of a special unitary matrix.

Prints the descriptor (winding, boundary eigenvalue, Grassmannian shape),
then draws random members of the family and shows that they all
exponentiate back to the matrix with the same minimal norm while being
genuinely different points.
"""

import argparse

import numpy as np

from sungeo import (
    expm_skew,
    frobenius_norm,
    grassmann_label,
    m_value,
    random_unitary,
    spectral_summary,
    theta_descriptor,
    theta_sample,
    validate_special_unitary,
)


EXAMPLES = {
    "antipode4": -np.eye(4),
    "boundary-pair": np.diag([-1.0, -1.0, 1.0, 1.0]),
    "quarter-turns": np.diag([1j, 1j, 1j, 1j]),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--example", choices=sorted(EXAMPLES), default="antipode4")
    parser.add_argument("--samples", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    q = validate_special_unitary(np.asarray(EXAMPLES[args.example], dtype=complex))
    sd = spectral_summary(q)
    td = theta_descriptor(q)
    print(f"example {args.example}: order {q.n}, winding {sd.zeta}, "
          f"s {sd.s}, m {m_value(sd):.6f}")
    if td.is_singleton:
        print("the set of minimal logarithms is a single point")
        return
    print(f"family: {grassmann_label(*td.grassmannian)} "
          f"(nu1 {td.nu1}, nu2 {td.nu2}, boundary argument {td.beta_arg:+.6f})")

    rng = np.random.default_rng(args.seed)
    block = td.nu1 + td.nu2
    samples = [theta_sample(td, q, random_unitary(block, rng))
               for _ in range(args.samples)]
    print(f"{'sample':>6} {'norm':>12} {'exp residual':>14} {'dist to base':>14}")
    for i, x in enumerate(samples):
        resid = np.linalg.norm(expm_skew(x).entries - q.entries)
        gap = np.linalg.norm(x.entries - td.base_log.entries)
        print(f"{i:>6} {frobenius_norm(x.entries):>12.8f} {resid:>14.2e} {gap:>14.6f}")
    pairwise = max(np.linalg.norm(a.entries - b.entries)
                   for i, a in enumerate(samples) for b in samples[i + 1:])
    print(f"largest pairwise separation: {pairwise:.6f}")


if __name__ == "__main__":
    main()
