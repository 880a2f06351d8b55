"""Lower bounds on the accessible information by direct search over
rank-one POVMs, plus an independent brute-force oracle for the
two-pure-state case.

The search space is K unnormalized complex vectors v_j; the induced POVM
E_j = S^(-1/2) v_j v_j† S^(-1/2) with S = sum_j v_j v_j† is complete by
construction, so every iterate is feasible. The optimizer is a multistart
coordinate search with shrinking step: derivative-free, deterministic for
a fixed seed, and its output is always a certified lower bound (the value
of an explicitly constructed measurement).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .infomeasures import mutual_information, shannon
from .qobjects import Ensemble, Measurement, apply_measurement


class BudgetTooSmallError(ValueError):
    """Evaluation budget below the supported minimum."""


@dataclass
class OptResult:
    """Outcome of a search: best value (nats), the measurement achieving
    it, and the best-so-far trace (evaluation count, value)."""

    best_value: float
    best_measurement: Measurement
    trace: list[tuple[int, float]]
    restarts: int
    seed: int


def povm_from_vectors(vectors) -> Measurement:
    """Measurement with rank-one Kraus operators induced by K vectors.

    Vectors of negligible norm after the completeness normalization are
    dropped. Raises if the vectors do not span the space (no rank-one
    completion exists on a deficient span).
    """
    v = np.asarray(vectors, dtype=np.complex128)
    if v.ndim != 2:
        raise ValueError("expected a (K, dim) array of vectors")
    s = v.T @ v.conj()
    w, u = np.linalg.eigh(s)
    if w[0] <= 1e-12 * w[-1]:
        raise ValueError("vectors do not span the space; POVM cannot be complete")
    inv_root = (u / np.sqrt(w)) @ u.conj().T
    kraus = []
    for row in v @ inv_root.T:
        nrm = np.linalg.norm(row)
        if nrm > 1e-12:
            kraus.append(np.outer(row, row.conj()) / nrm)
    return Measurement(kraus)


def _objective(v: np.ndarray, probs: np.ndarray, states: np.ndarray) -> float:
    """Mutual information of the POVM induced by vector rows v, or -inf
    when the rows do not span the space."""
    s = v.T @ v.conj()
    w, u = np.linalg.eigh(s)
    if w[0] <= 1e-10 * w[-1]:
        return -np.inf
    inv_root = (u / np.sqrt(w)) @ u.conj().T
    wv = v @ inv_root.T
    cond = np.einsum("ja,iab,jb->ji", wv.conj(), states, wv).real
    cond = np.clip(cond, 0.0, None)
    joint = cond * probs[np.newaxis, :]
    qj = joint.sum(axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        h_joint = np.where(joint > 0.0, joint * np.log(joint), 0.0).sum()
        h_q = np.where(qj > 0.0, qj * np.log(qj), 0.0).sum()
    return shannon(probs) + h_joint - h_q


def maximize_mutual_info(ensemble: Ensemble, n_outcomes: int | None = None,
                         budget: int = 4000, restarts: int = 4,
                         seed: int = 0) -> OptResult:
    """Maximize the index information over rank-one POVMs.

    Multistart coordinate search: each restart perturbs one real parameter
    at a time by +/- step, keeping improvements, and halves the step after
    a sweep with no improvement. The budget counts objective evaluations
    and is split evenly across restarts; for a fixed seed the evaluation
    schedule of a larger budget extends that of a smaller one, so the best
    value is monotone in the budget.
    """
    if budget < 100:
        raise BudgetTooSmallError("budget must be at least 100 evaluations")
    dim = ensemble.dim
    k = n_outcomes if n_outcomes is not None else dim * dim
    if k < dim:
        raise ValueError("need at least dim outcomes for a complete rank-one POVM")
    probs = ensemble.probs
    states = np.stack([s.matrix for s in ensemble.states])
    per_restart = max(1, budget // restarts)

    best_val = -np.inf
    best_v = None
    trace: list[tuple[int, float]] = []
    evals_total = 0
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        v = (rng.normal(size=(k, dim)) + 1j * rng.normal(size=(k, dim))) / np.sqrt(2)
        val = _objective(v, probs, states)
        evals = 1
        evals_total += 1
        if val > best_val:
            best_val, best_v = val, v.copy()
            trace.append((evals_total, val))
        step = 1.0
        view = v.view(float).reshape(-1)
        while evals < per_restart and step > 1e-9:
            improved = False
            for c in range(view.size):
                if evals >= per_restart:
                    break
                for delta in (step, -step):
                    old = view[c]
                    view[c] = old + delta
                    cand = _objective(v, probs, states)
                    evals += 1
                    evals_total += 1
                    if cand > val:
                        val = cand
                        improved = True
                        if val > best_val:
                            best_val, best_v = val, v.copy()
                            trace.append((evals_total, val))
                        break
                    view[c] = old
                    if evals >= per_restart:
                        break
            if not improved:
                step *= 0.5

    measurement = povm_from_vectors(best_v)
    value = mutual_information(apply_measurement(measurement, ensemble))
    return OptResult(best_value=value, best_measurement=measurement,
                     trace=trace, restarts=restarts, seed=seed)


def _two_state_mi(phi: float, alpha: float) -> float:
    """Index information of the projective measurement at basis angle phi
    for equiprobable real qubit states at angles +/- alpha."""
    p_plus = np.cos(phi - alpha) ** 2
    p_minus = np.cos(phi + alpha) ** 2
    joint = 0.5 * np.array([[p_plus, 1.0 - p_plus], [p_minus, 1.0 - p_minus]])
    qj = joint.sum(axis=0)
    h_cond = 0.0
    for j in range(2):
        if qj[j] > 0.0:
            h_cond += qj[j] * shannon(joint[:, j] / qj[j])
    return float(np.log(2.0) - h_cond)


def two_state_reference(overlap: float, grid: int = 10000) -> float:
    """Brute-force optimum of the index information for two equiprobable
    pure states with overlap modulus ``overlap``.

    Sweeps projective measurements in the span over a uniform angle grid
    and refines the best bracket by golden-section search. This is an
    independent oracle, deliberately not a closed form.
    """
    if not 0.0 <= overlap <= 1.0:
        raise ValueError("overlap must lie in [0, 1]")
    alpha = np.arccos(np.clip(overlap, 0.0, 1.0)) / 2.0
    phis = np.linspace(0.0, np.pi, grid, endpoint=False)
    values = [_two_state_mi(phi, alpha) for phi in phis]
    best = int(np.argmax(values))
    span = np.pi / grid
    lo, hi = phis[best] - span, phis[best] + span
    res = minimize_scalar(lambda phi: -_two_state_mi(phi, alpha),
                          bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-12})
    return max(float(values[best]), float(-res.fun))
