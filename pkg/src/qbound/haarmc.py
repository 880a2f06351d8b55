"""Haar-measure sampling and Monte Carlo checks of the uniform-ensemble
identities.

Reproducibility contract: trial ``t`` of a run seeded with ``seed`` draws
from a counter-based generator keyed by ``(seed, t)``, and reductions
accumulate in trial order. Results are therefore bit-identical for any
worker count, and trials can be farmed out freely.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .infomeasures import shannon, subentropy
from .matrixcore import sqrt_psd
from .qobjects import DensityOperator, Measurement, PROB_FLOOR

_CHUNK = 4096
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class MCEstimate:
    """A Monte Carlo mean with its standard error (both in nats)."""

    mean: float
    std_error: float
    trials: int
    seed: int

    def within(self, target: float, n_sigma: float = 3.0) -> bool:
        return abs(self.mean - target) <= n_sigma * self.std_error


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Counter-based generator for one trial, derived from (seed, trial)."""
    return np.random.Generator(np.random.Philox(key=[seed & _MASK64, trial & _MASK64]))


def haar_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unit vector: normalized vector of standard complex Gaussians."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    while True:
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        nrm = np.linalg.norm(v)
        if nrm > 1e-12:
            return v / nrm


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a Ginibre matrix with phase fixing."""
    g = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d)).conj()


def default_workers() -> int:
    """Worker count: QBOUND_THREADS if set, else 1 (serial)."""
    try:
        return max(1, int(os.environ.get("QBOUND_THREADS", "1")))
    except ValueError:
        return 1


def _chunks(trials: int):
    return [(lo, min(lo + _CHUNK, trials)) for lo in range(0, trials, _CHUNK)]


def _map_chunks(fn, trials: int, workers: int | None):
    """Evaluate fn over trial chunks, returning results in chunk order."""
    spans = _chunks(trials)
    workers = workers if workers is not None else default_workers()
    if workers <= 1 or len(spans) <= 1:
        return [fn(lo, hi) for lo, hi in spans]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda span: fn(*span), spans))


def uniform_ensemble_info_mc(measurement: Measurement, trials: int, seed: int,
                             workers: int | None = None) -> MCEstimate:
    """Index information extracted from the uniform pure-state ensemble.

    Estimates H[Q_j] - E_psi H[Q(j|psi)] over Haar-random states. The
    outcome distribution of the uniform ensemble is exact, Q_j = Tr[E_j]/N,
    so only the conditional-entropy average is sampled.
    """
    if measurement.groups is not None:
        raise ValueError("uniform-ensemble sampling applies to efficient measurements")
    if trials < 100:
        raise ValueError("need at least 100 trials")
    dim = measurement.dim
    es = np.stack(measurement.povm_elements())
    q = np.real(np.trace(es, axis1=1, axis2=2)) / dim
    h_prior = shannon(q)

    def run(lo: int, hi: int) -> np.ndarray:
        psi = np.empty((hi - lo, dim), dtype=np.complex128)
        for t in range(lo, hi):
            psi[t - lo] = haar_state(dim, trial_rng(seed, t))
        probs = np.einsum("td,jde,te->tj", psi.conj(), es, psi).real
        probs = np.clip(probs, 0.0, None)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(probs > 0.0, probs * np.log(probs), 0.0)
        return -terms.sum(axis=1)

    h = np.concatenate(_map_chunks(run, trials, workers))
    mean_h = float(h.mean())
    stderr = float(h.std(ddof=1) / np.sqrt(trials))
    return MCEstimate(mean=h_prior - mean_h, std_error=stderr,
                      trials=trials, seed=seed)


def uniform_ensemble_info_exact(measurement: Measurement) -> float:
    """Closed form of the same quantity: Q[I/N] - sum_j Q_j Q[rho'_j],
    with rho'_j = A_j A_j† / Tr[E_j]."""
    dim = measurement.dim
    out = subentropy(DensityOperator(np.eye(dim) / dim))
    for a in measurement.kraus:
        w = a @ a.conj().T
        tr = float(np.trace(w).real)
        qj = tr / dim
        if qj < PROB_FLOOR:
            continue
        out -= qj * subentropy(DensityOperator(w / tr))
    return out


def distorted_sample(rho_prime: DensityOperator, unitary: np.ndarray,
                     rng: np.random.Generator) -> tuple[np.ndarray, float]:
    """One member of the distorted uniform ensemble for the state rho'.

    Returns the unnormalized vector sqrt(rho') U |psi> with psi Haar random,
    together with its weight <phi|phi> (the probability density of that
    member relative to the Haar measure).
    """
    root = sqrt_psd(rho_prime.matrix)
    phi = root @ (unitary @ haar_state(rho_prime.dim, rng))
    return phi, float(np.vdot(phi, phi).real)


@dataclass(frozen=True)
class DistortedMoments:
    """Monte Carlo first moments of a distorted uniform ensemble.

    ``mean_state`` estimates N * E[|phi><phi|] (which should equal rho'),
    with entrywise standard errors for the real and imaginary parts;
    ``weight_mean`` estimates N * E[<phi|phi>] (which should equal 1).
    """

    mean_state: np.ndarray
    stderr_real: np.ndarray
    stderr_imag: np.ndarray
    weight_mean: float
    weight_stderr: float
    trials: int
    seed: int


def distorted_moments_mc(rho_prime: DensityOperator, unitary: np.ndarray,
                         trials: int, seed: int,
                         workers: int | None = None) -> DistortedMoments:
    """Sample the distorted ensemble and accumulate its first moments."""
    if trials < 2:
        raise ValueError("need at least 2 trials")
    dim = rho_prime.dim
    bmat = sqrt_psd(rho_prime.matrix) @ unitary

    def run(lo: int, hi: int):
        psi = np.empty((hi - lo, dim), dtype=np.complex128)
        for t in range(lo, hi):
            psi[t - lo] = haar_state(dim, trial_rng(seed, t))
        phi = psi @ bmat.T
        outer = dim * np.einsum("ta,tb->tab", phi, phi.conj())
        w = dim * np.einsum("ta,ta->t", phi, phi.conj()).real
        re, im = outer.real, outer.imag
        return (re.sum(axis=0), im.sum(axis=0),
                (re * re).sum(axis=0), (im * im).sum(axis=0),
                w.sum(), (w * w).sum())

    parts = _map_chunks(run, trials, workers)
    sum_re = sum(p[0] for p in parts)
    sum_im = sum(p[1] for p in parts)
    sq_re = sum(p[2] for p in parts)
    sq_im = sum(p[3] for p in parts)
    sum_w = sum(p[4] for p in parts)
    sq_w = sum(p[5] for p in parts)

    def stderr(s, sq):
        var = (sq - s * s / trials) / (trials - 1)
        return np.sqrt(np.clip(var, 0.0, None) / trials)

    mean = (sum_re + 1j * sum_im) / trials
    return DistortedMoments(mean_state=mean,
                            stderr_real=stderr(sum_re, sq_re),
                            stderr_imag=stderr(sum_im, sq_im),
                            weight_mean=float(sum_w / trials),
                            weight_stderr=float(stderr(sum_w, sq_w)),
                            trials=trials, seed=seed)


def haar_moment_mc(dim: int, trials: int, seed: int,
                   workers: int | None = None) -> DistortedMoments:
    """First moment of the raw uniform ensemble via the identity distortion:
    the estimated mean state should equal I/dim."""
    return distorted_moments_mc(DensityOperator(np.eye(dim) / dim),
                                np.eye(dim, dtype=np.complex128),
                                trials, seed, workers=workers)
