"""Two kinds of information gain, on a worked qubit example.

A sender encodes a classical symbol in a quantum state; the receiver
measures. Two natural scores for the measurement:

* index information (mutual information): how much the outcome record
  says about WHICH state was sent;
* state-entropy gain: how much the receiver's von Neumann entropy for
  the quantum system itself drops on average.

For efficient measurements the first never exceeds the second, and both
sit under the Holevo quantity of the encoding. This script walks the
classic {|0>, |+>} encoding through several measurements and prints the
whole chain.
"""

import numpy as np

from qbound import (Ensemble, Measurement, apply_measurement, dual_holevo_rhs,
                    ensemble_state, holevo_chi, info_gain_f, mutual_information,
                    pure_state, sww_rhs, von_neumann)

KET0 = [1.0, 0.0]
PLUS = [1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0)]

ensemble = Ensemble([0.5, 0.5], [pure_state(KET0), pure_state(PLUS)])
rho = ensemble_state(ensemble)
print("Encoding: 1/2 |0><0|, 1/2 |+><+|")
print("Average state:\n", np.round(rho.matrix.real, 4))
print("S[rho]  = %.6f nats" % von_neumann(rho))
print("chi     = %.6f nats (Holevo quantity; pure states, so chi = S[rho])"
      % holevo_chi(ensemble))
print()

z_basis = Measurement([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])])
x_plus = np.outer(PLUS, PLUS)
x_basis = Measurement([x_plus, np.eye(2) - x_plus])
sym = Measurement([a / np.sqrt(2) for a in z_basis.kraus] +
                  [a / np.sqrt(2) for a in x_basis.kraus])

print("%-28s %10s %10s %10s %10s" %
      ("measurement", "info_i", "info_f", "sww rhs", "dual rhs"))
for name, meas in (("Z projectors", z_basis),
                   ("X projectors", x_basis),
                   ("half Z / half X (4 Kraus)", sym),
                   ("identity (no measurement)", Measurement([np.eye(2)]))):
    analysis = apply_measurement(meas, ensemble)
    row = (mutual_information(analysis), info_gain_f(analysis),
           sww_rhs(analysis), dual_holevo_rhs(rho, meas))
    print("%-28s %10.6f %10.6f %10.6f %10.6f" % (name, *row))

print("""
Reading the table: info_i <= sww rhs <= chi, and info_i <= info_f with
info_f equal to the dual bound for every efficient measurement. Rank-one
projective measurements purify completely, so their info_f saturates
S[rho]; the identity measurement learns nothing and purifies nothing.""")
