"""Coupled-dynamics analysis on a graph.

The coupling matrix is the adjacency matrix with its diagonal replaced by
the negated degrees (equivalently, the negated graph Laplacian), so every
row sums to zero and the all-ones vector is an equilibrium direction. A
synchronized state is exponentially stable when the spectrum is 0 =
lambda_1 > lambda_2 with a clear gap; the simulator integrates

    dx_i/dt = f(x_i) + c * sum_j a_ij * Gamma @ (x_j - x_i)

with a fixed-step RK4 scheme and tracks the worst-case deviation from the
state mean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DivergenceError, InputError, NumericalError
from .graph import Graph

MAX_EIGEN_N = 5000

Dynamics = Callable[[np.ndarray], np.ndarray]


def coupling_matrix(g: Graph) -> np.ndarray:
    """Dense coupling matrix: a_ij = 1 on edges, a_ii = -k_i.

    Assembled in integer arithmetic so row sums are exactly zero before the
    cast to float.
    """
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = 1
        a[v, u] = 1
    for i in range(g.n):
        a[i, i] = -len(g.adjacency[i])
    return a.astype(np.float64)


@dataclass(frozen=True)
class SpectralReport:
    lambda1: float
    lambda2: float
    gap: float
    stable: bool
    zero_multiplicity: int
    closeness_threshold: float


def default_closeness_threshold(g: Graph) -> float:
    """0.1 * max(1, mean degree); overridable wherever a report is built."""
    mean_degree = 2.0 * g.m / g.n if g.n else 0.0
    return 0.1 * max(1.0, mean_degree)


def spectral_stability(
    g: Graph, closeness_threshold: float | None = None
) -> SpectralReport:
    """Full symmetric eigensolve of the coupling matrix (LAPACK's
    tridiagonalization-based solver via numpy.linalg.eigvalsh).

    Stable means: lambda_1 vanishes (relative to the largest degree),
    lambda_2 is negative, and the gap clears the closeness threshold.
    """
    if g.n < 2:
        raise InputError("spectral stability needs at least 2 nodes")
    if g.n > MAX_EIGEN_N:
        raise InputError(
            f"full spectrum limited to n <= {MAX_EIGEN_N}, got {g.n}"
        )
    if closeness_threshold is None:
        closeness_threshold = default_closeness_threshold(g)
    try:
        w = np.linalg.eigvalsh(coupling_matrix(g))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed to converge: {exc}") from exc
    lam1 = float(w[-1])
    lam2 = float(w[-2])
    scale = float(max((len(nbrs) for nbrs in g.adjacency), default=0))
    zero_tol = 1e-8 * max(1.0, scale)
    stable = (
        abs(lam1) <= 1e-8 * scale
        and lam2 < 0.0
        and (lam1 - lam2) >= closeness_threshold
    )
    return SpectralReport(
        lambda1=lam1,
        lambda2=lam2,
        gap=lam1 - lam2,
        stable=bool(stable),
        zero_multiplicity=int(np.sum(np.abs(w) <= zero_tol)),
        closeness_threshold=float(closeness_threshold),
    )


# -- node dynamics registry ----------------------------------------------------


def _zero() -> Dynamics:
    return lambda x: np.zeros_like(x)


def _linear(alpha: float) -> Dynamics:
    return lambda x: alpha * x


def _logistic(r: float) -> Dynamics:
    return lambda x: r * x * (1.0 - x)


DYNAMICS_REGISTRY: dict[str, Callable[..., Dynamics]] = {
    "zero": _zero,
    "linear": _linear,
    "logistic": _logistic,
}


def make_dynamics(spec: str) -> Dynamics:
    """Resolve a dynamics spec string: 'zero', 'linear:0.5', 'logistic(2.0)'."""
    text = spec.strip().rstrip(")")
    if ":" in text:
        name, _, arg = text.partition(":")
    elif "(" in text:
        name, _, arg = text.partition("(")
    else:
        name, arg = text, ""
    name = name.strip()
    if name not in DYNAMICS_REGISTRY:
        known = ", ".join(sorted(DYNAMICS_REGISTRY))
        raise InputError(f"unknown dynamics {spec!r}; known: {known}")
    factory = DYNAMICS_REGISTRY[name]
    if arg:
        try:
            return factory(float(arg))
        except TypeError:
            raise InputError(f"dynamics {name!r} takes no parameter") from None
    try:
        return factory()
    except TypeError:
        raise InputError(f"dynamics {name!r} needs a parameter, e.g. {name}:0.5") from None


@dataclass
class SyncConfig:
    """Simulation settings for the coupled state equation.

    The optional intra/inter split of the per-node state vector is carried
    as metadata only; it does not alter the integration.
    """

    c: float = 1.0
    dt: float = 0.01
    t_max: float = 10.0
    tol: float = 1e-6
    state_dim: int = 1
    dynamics: str | Dynamics = "zero"
    inner_coupling: np.ndarray | None = None
    intra_dims: int | None = None
    inter_dims: int | None = None

    def validate(self) -> None:
        if self.dt <= 0:
            raise InputError(f"dt must be positive, got {self.dt}")
        if self.t_max <= self.dt:
            raise InputError(f"t_max must exceed dt, got t_max={self.t_max}")
        if self.c <= 0:
            raise InputError(f"coupling strength must be positive, got {self.c}")
        if self.state_dim < 1:
            raise InputError(f"state_dim must be >= 1, got {self.state_dim}")
        if (self.intra_dims is None) != (self.inter_dims is None):
            raise InputError("intra_dims and inter_dims must be given together")
        if self.intra_dims is not None:
            if self.intra_dims < 0 or self.inter_dims < 0:
                raise InputError("state split parts must be non-negative")
            if self.intra_dims + self.inter_dims != self.state_dim:
                raise InputError(
                    f"state split {self.intra_dims}+{self.inter_dims} "
                    f"!= state_dim {self.state_dim}"
                )
        if self.inner_coupling is not None:
            gamma = np.asarray(self.inner_coupling)
            if gamma.shape != (self.state_dim, self.state_dim):
                raise InputError(
                    f"inner coupling must be {self.state_dim}x{self.state_dim}, "
                    f"got shape {gamma.shape}"
                )

    def resolve_dynamics(self) -> Dynamics:
        if callable(self.dynamics):
            return self.dynamics
        return make_dynamics(self.dynamics)


@dataclass
class SyncTrajectory:
    times: np.ndarray
    states: np.ndarray  # (steps + 1, n_nodes, state_dim)
    sync_error: np.ndarray
    synchronized_at: float | None = None
    config: SyncConfig | None = field(default=None, repr=False)


def _max_deviation(x: np.ndarray) -> float:
    return float(np.abs(x - x.mean(axis=0)).max())


def simulate(g: Graph, cfg: SyncConfig, x0: np.ndarray) -> SyncTrajectory:
    """Integrate the coupled network with fixed-step RK4 and record the
    per-step worst-case deviation from the state mean."""
    cfg.validate()
    x = np.array(x0, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    if x.shape != (g.n, cfg.state_dim):
        raise InputError(
            f"x0 must have shape ({g.n}, {cfg.state_dim}), got {x.shape}"
        )
    f = cfg.resolve_dynamics()
    gamma = (
        np.eye(cfg.state_dim)
        if cfg.inner_coupling is None
        else np.asarray(cfg.inner_coupling, dtype=np.float64)
    )
    coupling = coupling_matrix(g)
    c = cfg.c
    identity_gamma = np.allclose(gamma, np.eye(cfg.state_dim))

    def deriv(state: np.ndarray) -> np.ndarray:
        mixed = coupling @ state
        if not identity_gamma:
            mixed = mixed @ gamma.T
        return f(state) + c * mixed

    steps = int(round(cfg.t_max / cfg.dt))
    times = np.arange(steps + 1) * cfg.dt
    states = np.empty((steps + 1, g.n, cfg.state_dim))
    errors = np.empty(steps + 1)
    states[0] = x
    errors[0] = _max_deviation(x)
    h = cfg.dt
    # overflow on the way to divergence is reported via DivergenceError,
    # not as a numpy warning
    with np.errstate(over="ignore", invalid="ignore"):
        for step in range(1, steps + 1):
            k1 = deriv(x)
            k2 = deriv(x + 0.5 * h * k1)
            k3 = deriv(x + 0.5 * h * k2)
            k4 = deriv(x + h * k3)
            x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            if not np.all(np.isfinite(x)):
                raise DivergenceError(
                    f"state became non-finite at t={times[step]:.6g}",
                    time=float(times[step]),
                )
            states[step] = x
            errors[step] = _max_deviation(x)
    hits = np.nonzero(errors < cfg.tol)[0]
    synchronized_at = float(times[hits[0]]) if hits.size else None
    return SyncTrajectory(times, states, errors, synchronized_at, cfg)


def fit_decay_rate(
    times: np.ndarray,
    errors: np.ndarray,
    t_start: float,
    t_end: float,
) -> float:
    """Exponential decay rate of an error series over [t_start, t_end],
    from a least-squares line through log(error)."""
    times = np.asarray(times, dtype=np.float64)
    errors = np.asarray(errors, dtype=np.float64)
    mask = (times >= t_start) & (times <= t_end) & (errors > 0)
    if mask.sum() < 2:
        raise InputError("decay window contains fewer than 2 usable points")
    slope, _ = np.polyfit(times[mask], np.log(errors[mask]), deg=1)
    return float(-slope)
