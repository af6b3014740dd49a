"""Brute-force numerical cross-checks for witnesses and product enumeration.

Independent of the algebraic engine: identifiability is decided by a dense
grid search over all product states (four Bloch angles, two per qubit) with
local refinement, and product enumeration by scanning |det| over the
projective parameterization of a 2-D subspace.  Built to over- rather than
under-report disagreement: grids are calibrated on certified-positive cases
and abort when too coarse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .ensembles import OrthogonalSet
from .errors import BadCardinality, BadDimension, ResolutionTooCoarse
from .products import Subspace
from .states import PureState, make_state

PENALTY = 1e3
# Seeding uses a much gentler penalty: at coarse-cell distance from a true
# witness the orthogonality leak is O(cell), and the full penalty would bury
# the basin below witness-free zeros of the constraint determinant.
SEED_PENALTY = 10.0
_TOP_K = 5


@dataclass(frozen=True)
class GridSpec:
    """Resolution and refinement schedule of the angle grids."""

    resolution: int = 64
    rounds: int = 3
    threshold: float = 1e-6

    def __post_init__(self):
        if self.resolution < 8:
            raise ValueError(f"resolution must be >= 8, got {self.resolution}")
        if self.rounds < 1:
            raise ValueError("at least one refinement round is required")


@dataclass(frozen=True)
class OracleVerdict:
    identifiable: bool
    witness: PureState | None
    residual: float
    overlap: float


@dataclass(frozen=True)
class ProductScanResult:
    all_product_suspect: bool
    states: tuple[PureState, ...]


def _bloch(theta, phi):
    """Single-qubit states for arrays of angles; shape (..., 2)."""
    theta = np.asarray(theta)
    phi = np.asarray(phi)
    return np.stack(
        [np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)], axis=-1
    )


def _angle_grids(resolution):
    theta = np.linspace(0.0, np.pi, resolution)
    phi = np.linspace(0.0, 2.0 * np.pi, resolution, endpoint=False)
    return theta, phi


def _pair_grid(theta, phi):
    """All (theta, phi) combinations flattened; returns angles and states."""
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    t = tt.ravel()
    p = pp.ravel()
    return t, p, _bloch(t, p)


def _score_grid(left_overlaps, i, others, penalty=SEED_PENALTY):
    """Witness score: target overlap minus penalized leak to the others."""
    score = np.abs(left_overlaps[i])
    for j in others:
        score = score - penalty * np.abs(left_overlaps[j])
    return score


def _coarse_candidates(conj_mats, i, others, grid):
    """Top scoring, mutually separated angle quadruples from the dense scan."""
    theta, phi = _angle_grids(grid.resolution)
    ta, pa, lefts = _pair_grid(theta, phi)
    tb, pb, rights = _pair_grid(theta, phi)
    n_left = lefts.shape[0]
    n_right = rights.shape[0]
    half = [lefts @ m for m in conj_mats]  # per state: (n_left, 2)
    scores = np.empty((n_left, n_right), dtype=np.float32)
    block = 1024
    for lo in range(0, n_right, block):
        hi = min(lo + block, n_right)
        chunk = rights[lo:hi].T  # (2, b)
        overlaps = [h @ chunk for h in half]
        scores[:, lo:hi] = _score_grid(overlaps, i, others)

    flat = scores.ravel()
    pool = 40 * _TOP_K
    part = np.argpartition(-flat, pool)[:pool]
    order = part[np.argsort(-flat[part], kind="stable")]
    picked = []
    min_sep = 4.0 * np.pi / grid.resolution
    for idx in order:
        li, ri = divmod(int(idx), n_right)
        cand = np.array([ta[li], pa[li], tb[ri], pb[ri]])
        if all(np.max(np.abs(cand - c)) > min_sep for c in picked):
            picked.append(cand)
        if len(picked) == _TOP_K:
            break
    return picked


def _refine(conj_mats, i, others, angles, grid):
    """Local grid refinement around one candidate, shrinking 4x per round."""
    theta, _ = _angle_grids(grid.resolution)
    width = 2.0 * (theta[1] - theta[0])
    best = np.asarray(angles, dtype=float)
    sub = 9
    for _ in range(grid.rounds):
        axes = [np.linspace(a - width, a + width, sub) for a in best]
        ga, gb, gc, gd = np.meshgrid(*axes, indexing="ij")
        lefts = _bloch(ga.ravel(), gb.ravel())
        rights = _bloch(gc.ravel(), gd.ravel())
        overlaps = [
            np.einsum("nr,rc,nc->n", lefts, m, rights) for m in conj_mats
        ]
        score = _score_grid(overlaps, i, others)
        k = int(np.argmax(score))
        best = np.array([ga.ravel()[k], gb.ravel()[k], gc.ravel()[k], gd.ravel()[k]])
        width /= 4.0
    return best


def _polish(conj_mats, i, others, angles):
    """Drive the orthogonality residual to machine precision.

    For a fixed left factor a the two orthogonality constraints on the right
    factor are linear, so a nonzero solution exists exactly where the 2x2
    determinant of the stacked constraints vanishes; that determinant is
    root-found over the left-qubit angles and the right factor recovered as
    the null vector.
    """
    mj, mk = conj_mats[others[0]], conj_mats[others[1]]

    def residual_fn(x):
        a = _bloch(x[0], x[1])
        d = np.linalg.det(np.stack([a @ mj, a @ mk]))
        return [d.real, d.imag]

    sol = least_squares(residual_fn, x0=angles[:2], method="lm", xtol=1e-15, ftol=1e-15)
    a = _bloch(sol.x[0], sol.x[1])
    stacked = np.stack([a @ mj, a @ mk])
    _, _, vh = np.linalg.svd(stacked)
    b = vh[-1].conj()
    witness = make_state(np.outer(a, b).reshape(4))
    return witness


def _chefles_check(ensemble, i, witness, grid):
    others = [j for j in range(len(ensemble)) if j != i]
    leak = sum(abs(witness.overlap(ensemble[j])) ** 2 for j in others)
    overlap = abs(witness.overlap(ensemble[i]))
    ok = leak < grid.threshold**2 and overlap > PENALTY * grid.threshold
    return ok, leak, overlap


def _search(ensemble, i, grid):
    conj_mats = [s.matrix.conj() for s in ensemble.states]
    others = [j for j in range(len(ensemble)) if j != i]
    best = OracleVerdict(False, None, np.inf, 0.0)
    for cand in _coarse_candidates(conj_mats, i, others, grid):
        refined = _refine(conj_mats, i, others, cand, grid)
        witness = _polish(conj_mats, i, others, refined)
        ok, leak, overlap = _chefles_check(ensemble, i, witness, grid)
        if ok:
            return OracleVerdict(True, witness, leak, overlap)
        if overlap > best.overlap:
            best = OracleVerdict(False, witness, leak, overlap)
    return best


_BELL_TRIPLE_AMPS = (
    (1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, 1, 1, 0),
)
_calibrated: set[GridSpec] = set()


def _calibrate(grid: GridSpec):
    """Fail loudly if a certified-positive case is not found at this grid.

    A grid oracle can only under-detect, so the schedule is validated on a
    triple of Bell states, where every member is known identifiable.
    """
    if grid in _calibrated:
        return
    triple = OrthogonalSet(tuple(make_state(a) for a in _BELL_TRIPLE_AMPS))
    for i in range(3):
        if not _search(triple, i, grid).identifiable:
            raise ResolutionTooCoarse(
                f"grid {grid} missed a certified witness (state {i} of a Bell triple)"
            )
    _calibrated.add(grid)


def oracle_identifiable(
    ensemble: OrthogonalSet, i: int, grid: GridSpec | None = None
) -> OracleVerdict:
    """Grid-search version of the product-witness test for cardinality-3 sets."""
    if len(ensemble) != 3:
        raise BadCardinality(f"oracle needs cardinality 3, got {len(ensemble)}")
    if not 0 <= i < 3:
        raise BadCardinality(f"index {i} out of range")
    grid = grid or GridSpec()
    _calibrate(grid)
    return _search(ensemble, i, grid)


def _det_on_circle(sub: Subspace, t, phi):
    """det of cos(t) u + e^{i phi} sin(t) v over angle arrays (complex)."""
    u, v = sub.basis
    mu, mv = u.matrix, v.matrix
    du = np.linalg.det(mu)
    dv = np.linalg.det(mv)
    cross = np.linalg.det(mu + mv) - du - dv
    a = np.cos(t)
    b = np.exp(1j * phi) * np.sin(t)
    return a * a * du + a * b * cross + b * b * dv


def _projective_angle(w1, w2):
    ip = abs(np.vdot(w1, w2))
    return float(np.arccos(min(1.0, ip)))


def oracle_product_scan(sub: Subspace, grid: GridSpec | None = None) -> ProductScanResult:
    """Scan the projective line of a 2-D subspace for product states.

    Local |det| minima are polished to machine precision and clustered; a
    subspace where |det| is negligible everywhere is flagged AllProduct-
    suspect instead of enumerated.
    """
    if sub.dim != 2:
        raise BadDimension(f"expected dim 2, got {sub.dim}")
    grid = grid or GridSpec()
    t_ax = np.linspace(0.0, np.pi / 2.0, grid.resolution)
    p_ax = np.linspace(0.0, 2.0 * np.pi, grid.resolution, endpoint=False)
    tt, pp = np.meshgrid(t_ax, p_ax, indexing="ij")
    t = tt.ravel()
    p = pp.ravel()
    dets = np.abs(_det_on_circle(sub, t, p))

    if float(dets.max()) < grid.threshold:
        return ProductScanResult(all_product_suspect=True, states=())

    u, v = sub.basis

    def polish(t0, p0):
        def fn(x):
            d = _det_on_circle(sub, x[0], x[1])
            return [d.real, d.imag]

        sol = least_squares(fn, x0=[t0, p0], method="lm", xtol=1e-15, ftol=1e-15)
        return sol.x

    coords = np.stack([np.cos(t) * np.ones_like(p), np.exp(1j * p) * np.sin(t)], axis=-1)
    found = []  # (projective coord 2-vector, state)
    masked = np.array(dets)
    for _ in range(3):  # a quadratic has at most two roots; third pass is slack
        k = int(np.argmin(masked))
        if not np.isfinite(masked[k]):
            break
        tk, pk = polish(t[k], p[k])
        a = np.cos(tk)
        b = np.exp(1j * pk) * np.sin(tk)
        if abs(_det_on_circle(sub, tk, pk)) < grid.threshold:
            w = np.array([a, b])
            w = w / np.linalg.norm(w)
            if all(_projective_angle(w, w0) > 1e-4 for w0, _ in found):
                found.append((w, make_state(a * u.amps + b * v.amps)))
        # mask out the basin of this minimum before the next pass
        ips = np.abs(coords @ np.array([a, b]).conj())
        masked[ips > 0.95] = np.inf
    return ProductScanResult(all_product_suspect=False, states=tuple(s for _, s in found))
