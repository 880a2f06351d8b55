"""Randomized verification of the full inequality chain.

Draws random ensembles (mixed and pure) and random complete measurements
across dimensions 2-6, evaluates every quantity, and confirms on each
instance that

    0 <= info_i <= sww rhs <= chi        and   info_i <= info_f,
    sww rhs (two evaluation routes) agree,
    dual rhs == info_f,
    per outcome, spec(sqrt(rho) E_j sqrt(rho)) == spec(Q_j rho'_j).

The last identity is why the dual bound and the entropy-reduction gain
coincide: both operators share a spectrum, so they share an entropy.
"""

import numpy as np

from qbound import bound_report, random_instance

rng = np.random.default_rng(2024)
worst_slack = np.inf
worst_eq = 0.0
rows = 0

print("%4s %6s %9s %9s %9s %9s %9s %11s" %
      ("dim", "pure", "info_i", "info_f", "sww", "chi", "min slack", "eq dev"))
for dim in (2, 3, 4, 5, 6):
    for t in range(40):
        seed = int(rng.integers(2 ** 63))
        ens, meas = random_instance(dim, int(rng.integers(2, 9)),
                                    int(rng.integers(2, 10)), bool(t % 2), seed)
        rep = bound_report(ens, meas, seed=seed)
        eq_dev = max(abs(rep.sww - rep.sww_alt), abs(rep.eqx - rep.sww),
                     abs(rep.dual - rep.info_f), rep.spectrum_identity_dev)
        worst_slack = min(worst_slack, rep.min_slack())
        worst_eq = max(worst_eq, eq_dev)
        rows += 1
        if t < 2:
            print("%4d %6s %9.5f %9.5f %9.5f %9.5f %9.2e %11.2e" %
                  (dim, str(ens.is_pure), rep.info_i, rep.info_f, rep.sww,
                   rep.chi, rep.min_slack(), eq_dev))

print()
print("instances checked:      %d" % rows)
print("worst inequality slack: %.2e   (>= -1e-8 required)" % worst_slack)
print("worst equality dev:     %.2e   (<= 1e-9 required)" % worst_eq)
assert worst_slack >= -1e-8 and worst_eq <= 1e-9
print("chain verified.")
