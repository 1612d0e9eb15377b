"""Dual event-discrimination views: 2D PCA projection + DBSCAN clustering.

A batch of typed mentions is projected onto its top two principal
components; the same 2D coordinates feed two scatter views, one labeled by
predicted event type and one by density cluster, so a human can judge which
mentions describe the same real-world event.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .classify import TypedMention
from .errors import DegenerateInput, DimensionMismatch, NoConvergence
from .ingest import MentionText

POWER_TOL = 1e-10  # on successive-iterate cosine
POWER_MAX_ITERS = 10_000

NOISE = -1


@dataclass(frozen=True)
class PCAModel:
    mean: np.ndarray
    components: np.ndarray  # shape (2, D), orthonormal rows
    eigenvalues: tuple[float, float]  # descending, non-negative


@dataclass(frozen=True)
class DbscanParams:
    eps: float = 0.35  # in PCA space
    min_pts: int = 3

    def __post_init__(self):
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        if self.min_pts < 1:
            raise ValueError("min_pts must be >= 1")


@dataclass(frozen=True)
class VizPoint:
    x: float
    y: float
    title: MentionText
    event_type: str
    cluster_id: int


def _fix_sign(v: np.ndarray) -> np.ndarray:
    # Largest-magnitude coordinate made positive; ties pick the lowest index,
    # which argmax already does.
    pivot = int(np.argmax(np.abs(v)))
    return -v if v[pivot] < 0 else v


def _power_iteration(cov: np.ndarray, ortho_to: np.ndarray | None, rng) -> tuple[np.ndarray, float]:
    """Dominant eigenpair of a PSD matrix, optionally within a deflated subspace.

    Returns a unit eigenvector and its Rayleigh-quotient eigenvalue. When the
    operator is (numerically) zero on the working subspace the eigenvalue is 0
    and a deterministic orthogonal direction is returned.
    """
    d = cov.shape[0]
    scale = float(np.abs(cov).max())

    def orthogonalize(u):
        if ortho_to is not None:
            u = u - np.dot(u, ortho_to) * ortho_to
        return u

    def fallback_direction():
        # deterministic unit vector orthogonal to ortho_to
        if ortho_to is None:
            e = np.zeros(d)
            e[0] = 1.0
            return e
        pivot = int(np.argmin(np.abs(ortho_to)))
        e = np.zeros(d)
        e[pivot] = 1.0
        e = e - np.dot(e, ortho_to) * ortho_to
        return e / np.linalg.norm(e)

    if scale == 0.0:
        return fallback_direction(), 0.0

    v = orthogonalize(rng.standard_normal(d))
    norm = np.linalg.norm(v)
    if norm < 1e-12:
        return fallback_direction(), 0.0
    v = v / norm

    for _ in range(POWER_MAX_ITERS):
        w = orthogonalize(cov @ v)
        norm = np.linalg.norm(w)
        if norm <= scale * 1e-14:
            # operator vanishes on this subspace: zero eigenvalue
            return fallback_direction(), 0.0
        w = w / norm
        if abs(float(np.dot(w, v))) >= 1.0 - POWER_TOL:
            v = w
            value = float(v @ cov @ v)
            return _fix_sign(v), max(value, 0.0)
        v = w
    raise NoConvergence(f"power iteration did not settle in {POWER_MAX_ITERS} steps")


def fit_pca(vectors: list[np.ndarray] | np.ndarray) -> PCAModel:
    """Top-2 principal components of the batch (sample covariance, n-1 divisor).

    Power iteration with deflation; component signs follow the
    largest-magnitude-coordinate-positive convention. Raises DegenerateInput
    when fewer than two distinct vectors are supplied.
    """
    X = np.asarray(vectors, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 2:
        raise DegenerateInput("PCA needs at least two vectors")
    if (X == X[0]).all():
        raise DegenerateInput("PCA needs at least two distinct vectors")

    mean = X.mean(axis=0)
    centered = X - mean
    cov = centered.T @ centered / (X.shape[0] - 1)

    rng = np.random.default_rng(0)  # fixed seed: deterministic fits
    c0, lam0 = _power_iteration(cov, None, rng)
    c1, lam1 = _power_iteration(cov, c0, rng)
    if lam1 > lam0:  # numerically possible only for near-equal eigenvalues
        c0, c1, lam0, lam1 = c1, c0, lam1, lam0
    return PCAModel(mean=mean, components=np.stack([c0, c1]), eigenvalues=(lam0, lam1))


def project(model: PCAModel, v: np.ndarray) -> tuple[float, float]:
    v = np.asarray(v, dtype=np.float64)
    if v.shape != model.mean.shape:
        raise DimensionMismatch(f"expected dimension {model.mean.shape[0]}, got {v.shape}")
    centered = v - model.mean
    return float(centered @ model.components[0]), float(centered @ model.components[1])


def project_batch(model: PCAModel, vectors) -> np.ndarray:
    X = np.asarray(vectors, dtype=np.float64)
    if X.shape[1:] != model.mean.shape:
        raise DimensionMismatch(f"expected dimension {model.mean.shape[0]}, got {X.shape[1:]}")
    return (X - model.mean) @ model.components.T


def dbscan(points: list[tuple[float, float]] | np.ndarray, params: DbscanParams) -> list[int]:
    """Density-based cluster labels over 2D points; -1 marks noise.

    A point is core when its eps-ball (inclusive, Euclidean) holds at least
    min_pts points counting itself. Clusters are the connected components of
    core points; ids run 0, 1, 2, ... in input-scan discovery order. A
    non-core point within eps of a core joins its nearest core's cluster,
    distance ties resolved by the core's coordinates (co-located cores are
    density-connected, so the rule is unambiguous); this keeps the partition
    invariant under input permutation, unlike first-scan border capture.
    """
    P = np.asarray(points, dtype=np.float64)
    n = P.shape[0]
    if n == 0:
        return []

    diff = P[:, None, :] - P[None, :, :]
    dist_sq = (diff ** 2).sum(axis=2)
    within = dist_sq <= params.eps ** 2
    core = within.sum(axis=1) >= params.min_pts

    labels = [NOISE] * n
    cluster_id = 0
    for i in range(n):
        if not core[i] or labels[i] != NOISE:
            continue
        queue = deque([i])
        labels[i] = cluster_id
        while queue:
            j = queue.popleft()
            for k in np.flatnonzero(within[j]):
                if core[k] and labels[k] == NOISE:
                    labels[k] = cluster_id
                    queue.append(k)
        cluster_id += 1

    # border points: nearest core within eps, ties broken by core coordinates
    for i in range(n):
        if core[i]:
            continue
        best = None
        for k in np.flatnonzero(within[i]):
            if not core[k]:
                continue
            key = (dist_sq[i, k], P[k, 0], P[k, 1])
            if best is None or key < best[0]:
                best = (key, labels[k])
        if best is not None:
            labels[i] = best[1]
    return labels


def build_views(
    mentions: list[TypedMention], params: DbscanParams = DbscanParams()
) -> tuple[list[VizPoint], list[VizPoint]]:
    """PCA-project the batch and return (classification view, clustering view).

    Both views share coordinates, titles, event types, and cluster ids; they
    exist as two lists because they are rendered as two separate scatters.
    """
    vectors = np.stack([m.vector for m in mentions]) if mentions else np.zeros((0, 1))
    model = fit_pca(vectors)
    coords = project_batch(model, vectors)
    labels = dbscan(coords, params)
    points = [
        VizPoint(
            x=float(coords[i, 0]),
            y=float(coords[i, 1]),
            title=m.mention,
            event_type=m.event_type,
            cluster_id=labels[i],
        )
        for i, m in enumerate(mentions)
    ]
    return points, list(points)
