#!/usr/bin/env python3
"""The two random placement models and the exact odd-stack distribution.

Maxwell-Boltzmann: t labeled pebbles, each on an independent uniform vertex.
Bose-Einstein: unlabeled pebbles, every composition equally likely; sampled
sequentially with a Polya urn (draw a ball, return it plus a copy).  The
number of odd stacks X drives cover solvability on complete graphs, and
under Bose-Einstein its distribution has a closed form.
"""

from collections import Counter

import coverpebbling as cp
from coverpebbling import SeededStream

print("Ten Bose-Einstein draws of 6 pebbles on 4 vertices (seed 1, streams 0..9):")
for i in range(10):
    print("  ", cp.sample_be_polya(4, 6, SeededStream(1, i)).pebbles)

print("\nSame stream twice gives the identical configuration:")
print("  ", cp.sample_be_polya(4, 6, SeededStream(1, 3)).pebbles,
      cp.sample_be_polya(4, 6, SeededStream(1, 3)).pebbles)

n, t, samples = 3, 4, 30_000
print(f"\nEmpirical frequencies vs the flat 1/15 over compositions (n={n}, t={t}):")
freq = Counter(cp.sample_be_polya(n, t, SeededStream(2, i)).pebbles
               for i in range(samples))
for pebbles in sorted(freq):
    print(f"   {pebbles}: {freq[pebbles] / samples:.4f}")

print("\nExact odd-stack pmf for n=4, t=6 (zero off the parity-matched support):")
for x in range(0, 7):
    p = cp.be_odd_stack_pmf(4, 6, x)
    print(f"   P(X={x}) = {p.numerator}/{p.denominator} = {float(p):.6f}")

print("\nMean odd stacks, exact vs leading order nt/(n+2t):")
for n, t in [(10, 16), (100, 162), (1000, 1618)]:
    exact = float(cp.be_expected_odd_stacks_exact(n, t))
    approx = cp.be_expected_odd_stacks_approx(n, t)
    print(f"   n={n:5d} t={t:5d}: exact {exact:9.4f}   approx {approx:9.4f}")

print("\nMaxwell-Boltzmann moments from the closed forms, checked by sampling:")
n, t, samples = 30, 45, 20_000
xs = [sum(1 for p in cp.sample_mb(n, t, SeededStream(3, i)).pebbles if p % 2)
      for i in range(samples)]
mean = sum(xs) / samples
var = sum((x - mean) ** 2 for x in xs) / samples
print(f"   E(X): formula {cp.mb_expected_odd_stacks(n, t):.4f}   sampled {mean:.4f}")
print(f"   V(X): formula {cp.mb_variance_odd_stacks(n, t):.4f}   sampled {var:.4f}")

print("\nThe two transition constants:")
print(f"   Maxwell-Boltzmann: A0 = {cp.mb_threshold_constant():.10f}"
      "   (root of A - exp(-2A)/2 = 3/2)")
print(f"   Bose-Einstein:  gamma = {cp.be_threshold_constant():.10f}"
      "   (the golden ratio)")
