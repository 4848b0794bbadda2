#!/usr/bin/env python3
"""Grover search demo: mark one address in a 16-word memory and watch the
success probability grow with the iteration count."""

from uqram.registers import MemoryConfig, make_params
from uqram.simulator import optimal_iterations, run_grover

N, K = 16, 1
MARKED = 11
TARGET = 1


def main():
    params = make_params(N, K)
    words = tuple(TARGET if a == MARKED else 0 for a in range(N))
    data = MemoryConfig(words)
    best = optimal_iterations(N, 1)
    print(f"N={N} K={K}, marked address {MARKED}, "
          f"optimal iterations {best}\n")
    print("iters  p(marked)")
    for iters in range(best + 3):
        dist = run_grover(params, data, TARGET, iters)
        tag = "  <- optimal" if iters == best else ""
        print(f"{iters:>5}  {dist.probs[MARKED]:.6f}{tag}")


if __name__ == "__main__":
    main()
