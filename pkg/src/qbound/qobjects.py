"""Ensembles, generalized measurements, and the measurement-application engine.

The objects here are immutable after construction and validate their
defining invariants eagerly (Hermiticity, positivity, unit trace,
completeness, partition structure). :func:`apply_measurement` produces the
full joint outcome statistics — outcome probabilities, likelihoods,
posteriors, and post-measurement states — that every information quantity
downstream consumes.

JSON wire formats (shared with the command-line layer):

* matrix:      ``{"dim": N, "rows": [[[re, im], ...], ...]}`` row-major
* ensemble:    ``{"probs": [...], "states": [matrix, ...]}``
* measurement: ``{"kraus": [matrix, ...], "groups": [[i, ...], ...]}``
  (``groups`` optional)
"""

from __future__ import annotations

import numpy as np

from .matrixcore import as_square_complex, frobenius_scale, hermitize

# Outcomes with probability below this are kept in the records but carry
# zero weight: no posterior state is formed and entropy averages skip them.
PROB_FLOOR = 1e-12

PURITY_TOL = 1e-8


class DimensionMismatchError(ValueError):
    """Operands act on different Hilbert-space dimensions."""


class EmptyGroupError(ValueError):
    """An outcome group in a coarse-graining is empty."""


class DensityOperator:
    """A positive semidefinite, unit-trace operator."""

    __slots__ = ("_matrix", "_eigenvalues")

    def __init__(self, matrix, _eigenvalues: np.ndarray | None = None):
        m = as_square_complex(matrix)
        scale = frobenius_scale(m)
        if np.linalg.norm(m - m.conj().T) > 1e-8 * scale:
            raise ValueError("density operator must be Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-8 or abs(np.trace(m).imag) > 1e-8:
            raise ValueError(f"density operator must have unit trace, got {np.trace(m)}")
        if _eigenvalues is None:
            _eigenvalues = np.linalg.eigvalsh(m)
        if _eigenvalues[0] < -1e-8 * scale:
            raise ValueError(f"density operator has eigenvalue {_eigenvalues[0]:.3e} < -1e-8")
        m = m.copy()
        m.setflags(write=False)
        self._matrix = m
        self._eigenvalues = np.where(_eigenvalues < 0.0, 0.0, _eigenvalues)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues, ascending, with negative roundoff clipped to zero."""
        return self._eigenvalues

    @property
    def is_pure(self) -> bool:
        return bool(self._eigenvalues[-1] >= 1.0 - PURITY_TOL)

    def __repr__(self):
        return f"DensityOperator(dim={self.dim}, pure={self.is_pure})"


def pure_state(vector) -> DensityOperator:
    """Density operator |v><v| / <v|v> for a state vector."""
    v = np.asarray(vector, dtype=np.complex128).reshape(-1)
    nrm2 = float(np.vdot(v, v).real)
    if nrm2 <= 0.0:
        raise ValueError("cannot normalize the zero vector")
    return DensityOperator(np.outer(v, v.conj()) / nrm2)


class Ensemble:
    """Probability-weighted collection of density operators on one space."""

    __slots__ = ("_probs", "_states")

    def __init__(self, probs, states):
        p = np.asarray(probs, dtype=float)
        states = tuple(
            s if isinstance(s, DensityOperator) else DensityOperator(s) for s in states
        )
        if p.ndim != 1 or len(p) != len(states):
            raise ValueError("probs and states must have equal length")
        if len(states) == 0:
            raise ValueError("ensemble must contain at least one state")
        if np.any(p < -1e-12):
            raise ValueError("ensemble probabilities must be non-negative")
        if abs(p.sum() - 1.0) > 1e-10:
            raise ValueError(f"ensemble probabilities sum to {p.sum()}, expected 1")
        dim = states[0].dim
        if any(s.dim != dim for s in states):
            raise DimensionMismatchError("all ensemble states must share one dimension")
        p = np.where(p < 0.0, 0.0, p)
        p.setflags(write=False)
        self._probs = p
        self._states = states

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    @property
    def states(self) -> tuple[DensityOperator, ...]:
        return self._states

    @property
    def dim(self) -> int:
        return self._states[0].dim

    @property
    def size(self) -> int:
        return len(self._states)

    @property
    def is_pure(self) -> bool:
        return all(s.is_pure for s in self._states)

    def __repr__(self):
        return f"Ensemble(size={self.size}, dim={self.dim}, pure={self.is_pure})"


class Measurement:
    """Generalized measurement given by Kraus operators with sum A†A = I.

    ``groups`` optionally partitions the outcome indices: an observer who
    only learns which group fired holds the group-averaged state (an
    inefficient measurement). ``labels`` carries provenance for outcomes
    created by mixing measurements.
    """

    __slots__ = ("_kraus", "_groups", "_labels")

    def __init__(self, kraus, groups=None, labels=None):
        ops = tuple(as_square_complex(a) for a in kraus)
        if not ops:
            raise ValueError("measurement needs at least one Kraus operator")
        dim = ops[0].shape[0]
        if any(a.shape[0] != dim for a in ops):
            raise DimensionMismatchError("all Kraus operators must share one dimension")
        total = sum(a.conj().T @ a for a in ops)
        if np.linalg.norm(total - np.eye(dim)) > 1e-8:
            raise ValueError("Kraus operators do not satisfy completeness")
        ops = tuple(a.copy() for a in ops)
        for a in ops:
            a.setflags(write=False)
        if groups is not None:
            groups = tuple(tuple(int(i) for i in g) for g in groups)
            if any(len(g) == 0 for g in groups):
                raise EmptyGroupError("outcome groups must be non-empty")
            flat = sorted(i for g in groups for i in g)
            if flat != list(range(len(ops))):
                raise ValueError("groups must partition the outcome indices exactly")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(ops):
                raise ValueError("labels must match the number of outcomes")
        self._kraus = ops
        self._groups = groups
        self._labels = labels

    @property
    def kraus(self) -> tuple[np.ndarray, ...]:
        return self._kraus

    @property
    def dim(self) -> int:
        return self._kraus[0].shape[0]

    @property
    def size(self) -> int:
        return len(self._kraus)

    @property
    def groups(self):
        return self._groups

    @property
    def labels(self):
        return self._labels

    def povm_elements(self) -> list[np.ndarray]:
        """The POVM elements E_j = A_j† A_j."""
        return [a.conj().T @ a for a in self._kraus]

    def __repr__(self):
        g = f", groups={len(self._groups)}" if self._groups else ""
        return f"Measurement(outcomes={self.size}, dim={self.dim}{g})"


class OutcomeAnalysis:
    """Joint statistics of one measurement applied to one ensemble.

    Index conventions: ``i`` runs over ensemble members, ``j`` over
    (possibly coarse-grained) outcomes.

    Attributes
    ----------
    outcome_probs : (J,) outcome probabilities Q_j
    cond_probs : (J, I) likelihoods Q(j|i)
    posteriors : (J, I) posterior distributions P(i|j); zero rows for
        outcomes below the probability floor
    post_states : length-J list of post-measurement states (None for
        outcomes below the floor)
    cond_post_states : J x I nested list of per-member post states
        (None where Q(j|i) is below the floor)
    """

    __slots__ = ("ensemble", "measurement", "outcome_probs", "cond_probs",
                 "posteriors", "post_states", "cond_post_states", "coarse",
                 "groups")

    def __init__(self, ensemble, measurement, outcome_probs, cond_probs,
                 posteriors, post_states, cond_post_states, coarse=False,
                 groups=None):
        self.ensemble = ensemble
        self.measurement = measurement
        self.outcome_probs = outcome_probs
        self.cond_probs = cond_probs
        self.posteriors = posteriors
        self.post_states = post_states
        self.cond_post_states = cond_post_states
        self.coarse = coarse
        self.groups = groups

    @property
    def n_outcomes(self) -> int:
        return len(self.outcome_probs)

    def effective_outcomes(self) -> np.ndarray:
        """Indices of outcomes carrying more than the probability floor."""
        return np.flatnonzero(self.outcome_probs >= PROB_FLOOR)

    def posterior_ensemble(self, j: int) -> Ensemble:
        """The ensemble of per-member post states conditioned on outcome j."""
        if self.outcome_probs[j] < PROB_FLOOR:
            raise ValueError(f"outcome {j} has negligible probability")
        probs, states = [], []
        for i in range(len(self.ensemble.states)):
            if self.posteriors[j, i] >= PROB_FLOOR and self.cond_post_states[j][i] is not None:
                probs.append(self.posteriors[j, i])
                states.append(self.cond_post_states[j][i])
        p = np.asarray(probs)
        return Ensemble(p / p.sum(), states)

    def __repr__(self):
        kind = "coarse" if self.coarse else "efficient"
        return (f"OutcomeAnalysis({kind}, outcomes={self.n_outcomes}, "
                f"members={self.ensemble.size})")


def ensemble_state(ensemble: Ensemble) -> DensityOperator:
    """Average state sum_i P_i rho_i of an ensemble."""
    acc = np.zeros((ensemble.dim, ensemble.dim), dtype=np.complex128)
    for p, s in zip(ensemble.probs, ensemble.states):
        acc += p * s.matrix
    return DensityOperator(hermitize(acc))


def _analysis_from_pieces(ensemble, measurement, pieces, coarse, groups):
    """Assemble an OutcomeAnalysis from unnormalized conditional states.

    ``pieces[j][i]`` is the unnormalized post state of member i under
    outcome j (the Kraus conjugation, already summed over a group when
    coarse). All probabilities derive from their traces, which keeps the
    Bayes identity Q_j P(i|j) = P_i Q(j|i) exact by construction.
    """
    n_out = len(pieces)
    n_mem = ensemble.size
    probs = ensemble.probs
    cond = np.empty((n_out, n_mem), dtype=float)
    for j in range(n_out):
        for i in range(n_mem):
            cond[j, i] = max(float(np.trace(pieces[j][i]).real), 0.0)
    outcome_probs = cond @ probs
    posteriors = np.zeros((n_out, n_mem), dtype=float)
    post_states: list[DensityOperator | None] = []
    cond_post_states: list[list[DensityOperator | None]] = []
    for j in range(n_out):
        qj = outcome_probs[j]
        row: list[DensityOperator | None] = []
        if qj >= PROB_FLOOR:
            posteriors[j] = probs * cond[j] / qj
            total = np.zeros_like(pieces[j][0])
            for i in range(n_mem):
                total += probs[i] * pieces[j][i]
                if cond[j, i] >= PROB_FLOOR:
                    row.append(DensityOperator(hermitize(pieces[j][i]) / cond[j, i]))
                else:
                    row.append(None)
            post_states.append(DensityOperator(hermitize(total) / qj))
        else:
            row = [None] * n_mem
            post_states.append(None)
        cond_post_states.append(row)
    return OutcomeAnalysis(ensemble, measurement, outcome_probs, cond, posteriors,
                           post_states, cond_post_states, coarse=coarse, groups=groups)


def apply_measurement(measurement: Measurement, ensemble: Ensemble) -> OutcomeAnalysis:
    """Apply an efficient measurement: the observer learns the exact outcome."""
    if measurement.dim != ensemble.dim:
        raise DimensionMismatchError(
            f"measurement dim {measurement.dim} != ensemble dim {ensemble.dim}")
    pieces = [[a @ s.matrix @ a.conj().T for s in ensemble.states]
              for a in measurement.kraus]
    return _analysis_from_pieces(ensemble, measurement, pieces, False, None)


def coarse_grain(measurement: Measurement, ensemble: Ensemble) -> OutcomeAnalysis:
    """Apply an inefficient measurement: outcomes are known only up to their group.

    Group k carries probability Q_k = sum of its members' Q_l and the
    averaged state (sum over the group of Kraus conjugations) / Q_k.
    """
    if measurement.groups is None:
        raise ValueError("coarse_grain requires a measurement with outcome groups")
    if measurement.dim != ensemble.dim:
        raise DimensionMismatchError(
            f"measurement dim {measurement.dim} != ensemble dim {ensemble.dim}")
    pieces = []
    for group in measurement.groups:
        row = []
        for s in ensemble.states:
            acc = np.zeros((ensemble.dim, ensemble.dim), dtype=np.complex128)
            for l in group:
                a = measurement.kraus[l]
                acc += a @ s.matrix @ a.conj().T
            row.append(acc)
        pieces.append(row)
    return _analysis_from_pieces(ensemble, measurement, pieces, True,
                                 measurement.groups)


def mix_measurements(m1: Measurement, m2: Measurement, lam: float) -> Measurement:
    """Probabilistic mixture of two measurements.

    The result has Kraus operators sqrt(lam) A_j alongside sqrt(1-lam) B_k;
    operators that vanish (at lam exactly 0 or 1) are dropped. Labels
    record (parent, parent outcome index) so groupings can merge outcomes
    across the parents.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError("mixing weight must lie in [0, 1]")
    if m1.dim != m2.dim:
        raise DimensionMismatchError("mixed measurements must share one dimension")
    kraus, labels = [], []
    if lam > 0.0:
        for j, a in enumerate(m1.kraus):
            kraus.append(np.sqrt(lam) * a)
            labels.append((0, j))
    if lam < 1.0:
        for k, b in enumerate(m2.kraus):
            kraus.append(np.sqrt(1.0 - lam) * b)
            labels.append((1, k))
    return Measurement(kraus, labels=labels)


def random_instance(dim: int, n_states: int, n_outcomes: int, pure: bool,
                    seed) -> tuple[Ensemble, Measurement]:
    """Draw a random ensemble and a random complete measurement.

    States are Haar-random pure states, or trace-normalized Wishart states
    when ``pure`` is false; probabilities come from the uniform simplex via
    sorted uniform spacings. The measurement takes ``n_outcomes`` Ginibre
    factors G_j with random rank <= dim (rows zeroed) and sets
    A_j = G_j S^(-1/2) with S = sum_j G_j† G_j, which is complete up to
    roundoff by construction. Deterministic for a fixed seed.
    """
    if dim < 2 or n_states < 1 or n_outcomes < 1:
        raise ValueError("need dim >= 2, n_states >= 1, n_outcomes >= 1")
    rng = np.random.default_rng(seed)

    spacings = np.sort(rng.uniform(size=n_states - 1))
    probs = np.diff(np.concatenate(([0.0], spacings, [1.0])))

    states = []
    for _ in range(n_states):
        if pure:
            v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
            states.append(pure_state(v))
        else:
            g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            w = g @ g.conj().T
            states.append(DensityOperator(w / np.trace(w).real))

    while True:
        ranks = rng.integers(1, dim + 1, size=n_outcomes)
        while ranks.sum() < dim:  # the factors must jointly span the space
            pick = int(rng.integers(n_outcomes))
            if ranks[pick] < dim:
                ranks[pick] += 1
        factors = []
        for rank in ranks:
            g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            g[rank:, :] = 0.0
            factors.append(g)
        s = sum(g.conj().T @ g for g in factors)
        w, v = np.linalg.eigh(s)
        if w[0] > 1e-4 * w[-1]:  # redraw rare ill-conditioned totals
            break
    inv_root = (v / np.sqrt(w)) @ v.conj().T
    kraus = [g @ inv_root for g in factors]
    return Ensemble(probs, states), Measurement(kraus)


# ---------------------------------------------------------------------------
# JSON wire formats

def matrix_to_json(m) -> dict:
    m = as_square_complex(m)
    return {"dim": m.shape[0],
            "rows": [[[float(x.real), float(x.imag)] for x in row] for row in m]}


def matrix_from_json(obj) -> np.ndarray:
    dim = int(obj["dim"])
    rows = obj["rows"]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError("matrix JSON has inconsistent dimensions")
    m = np.array([[complex(re, im) for re, im in row] for row in rows],
                 dtype=np.complex128)
    return m


def ensemble_to_json(e: Ensemble) -> dict:
    return {"probs": [float(p) for p in e.probs],
            "states": [matrix_to_json(s.matrix) for s in e.states]}


def ensemble_from_json(obj) -> Ensemble:
    return Ensemble(obj["probs"], [matrix_from_json(s) for s in obj["states"]])


def measurement_to_json(m: Measurement) -> dict:
    out = {"kraus": [matrix_to_json(a) for a in m.kraus]}
    if m.groups is not None:
        out["groups"] = [list(g) for g in m.groups]
    return out


def measurement_from_json(obj) -> Measurement:
    return Measurement([matrix_from_json(a) for a in obj["kraus"]],
                       groups=obj.get("groups"))
