"""Distorted uniform ensembles.

Take Haar-random pure states |psi>, rotate them by a fixed unitary, and
squeeze them through sqrt(rho'): the unnormalized vectors
|phi> = sqrt(rho') U |psi>, each carrying weight <phi|phi>, form the
"distortion" of the uniform ensemble by rho'. Its defining property is
that the weighted mean state recovers rho' itself:

    N * E[ |phi><phi| ] = rho',        N * E[ <phi|phi> ] = 1.

This matters because the posterior ensembles left behind by a general
measurement on the uniform ensemble are exactly of this form, with an
accessible information equal to Q[rho'].
"""

import numpy as np

from qbound import (DensityOperator, distorted_moments_mc, distorted_sample,
                    haar_unitary, trial_rng)

rng = np.random.default_rng(5)
g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
w = g @ g.conj().T
rho = DensityOperator(w / np.trace(w).real)
unitary = haar_unitary(3, trial_rng(5, 0))

print("Target state rho' (real part):")
print(np.round(rho.matrix.real, 4))

phi, weight = distorted_sample(rho, unitary, trial_rng(5, 1))
print("\nOne draw: |phi| = %.4f, weight <phi|phi> = %.4f" %
      (np.linalg.norm(phi), weight))

moments = distorted_moments_mc(rho, unitary, trials=50_000, seed=6)
dev = np.abs(moments.mean_state - rho.matrix)
sigma = np.sqrt(moments.stderr_real ** 2 + moments.stderr_imag ** 2)
print("\nAfter 50k draws:")
print("  max entrywise |N*mean - rho'|: %.2e" % dev.max())
print("  max entrywise std error:       %.2e" % sigma.max())
print("  N * E[weight] = %.6f +- %.6f" %
      (moments.weight_mean, moments.weight_stderr))

assert np.all(dev <= 4.0 * sigma + 1e-12)
assert abs(moments.weight_mean - 1.0) <= 4.0 * moments.weight_stderr + 1e-12
print("mean-state identity verified.")
