"""Error- and attack-tolerance sweeps.

One node is removed per step: uniformly at random (error tolerance, seeded)
or the currently highest-degree node with ties broken by smallest id
(attack tolerance, fully deterministic; degrees are recomputed after every
removal). Trace rows are recorded at a configurable removal-fraction
granularity. After fragmentation, the diameter reported is that of the
largest remaining component, and 0 once that component is a single node.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .generators import rng_from_seed
from .graph import Graph, connected_components, induced_subgraph
from .metrics import all_pairs_distances


@dataclass(frozen=True)
class RandomError:
    seed: int = 0


@dataclass(frozen=True)
class TargetedAttack:
    pass


RemovalStrategy = RandomError | TargetedAttack


@dataclass(frozen=True)
class TraceRow:
    fraction_removed: float
    diameter: int
    lcc_size: int
    components: int


@dataclass
class ResilienceTrace:
    strategy: str
    seed: int | None
    initial_n: int
    rows: list[TraceRow]

    def fraction_when_lcc_below(self, threshold: int) -> float | None:
        """First recorded removal fraction with largest component < threshold."""
        for row in self.rows:
            if row.lcc_size < threshold:
                return row.fraction_removed
        return None

    def diameter_at(self, fraction: float) -> int:
        """Diameter at the last recorded row with fraction <= the requested one."""
        best = self.rows[0]
        for row in self.rows:
            if row.fraction_removed <= fraction:
                best = row
        return best.diameter


def _snapshot(fraction: float, g: Graph) -> TraceRow:
    parts = connected_components(g)
    lcc = parts.largest()
    if len(lcc) >= 2:
        sub = g if len(lcc) == g.n else induced_subgraph(g, lcc)
        d = all_pairs_distances(sub)
        diam = int(d[np.isfinite(d)].max())
    else:
        diam = 0
    return TraceRow(
        fraction_removed=fraction,
        diameter=diam,
        lcc_size=len(lcc),
        components=parts.count,
    )


def run_resilience(
    g: Graph,
    strategy: RemovalStrategy,
    record_every: float = 0.02,
) -> ResilienceTrace:
    """Remove nodes one per step until at most one remains, recording
    (fraction removed, diameter, largest-component size, component count)
    at the requested granularity."""
    if g.n < 2:
        raise InputError("resilience sweep needs a graph with at least 2 nodes")
    if not (0.0 < record_every <= 1.0):
        raise InputError(f"record_every must be in (0, 1], got {record_every}")

    rng = rng_from_seed(strategy.seed) if isinstance(strategy, RandomError) else None
    n0 = g.n
    stride = max(1, round(record_every * n0))
    rows = [_snapshot(0.0, g)]
    current = g
    for removed in range(1, n0):
        if isinstance(strategy, TargetedAttack):
            degrees = current.degrees()
            target = max(range(current.n), key=lambda i: (degrees[i], -i))
        else:
            target = int(rng.integers(0, current.n))
        current, _ = current.remove_node(target)
        if removed % stride == 0 or removed == n0 - 1:
            rows.append(_snapshot(removed / n0, current))
    return ResilienceTrace(
        strategy="attack" if isinstance(strategy, TargetedAttack) else "error",
        seed=strategy.seed if isinstance(strategy, RandomError) else None,
        initial_n=n0,
        rows=rows,
    )


@dataclass
class EnsembleTrace:
    """Per-row median/min/max over random-error runs, merged in seed order."""

    seeds: list[int]
    initial_n: int
    fractions: list[float]
    diameter_median: list[float]
    diameter_min: list[int]
    diameter_max: list[int]
    lcc_median: list[float]
    lcc_min: list[int]
    lcc_max: list[int]
    components_median: list[float]
    components_min: list[int]
    components_max: list[int]


def run_error_ensemble(
    g: Graph,
    seeds: list[int],
    record_every: float = 0.02,
) -> EnsembleTrace:
    if not seeds:
        raise InputError("ensemble needs at least one seed")
    traces = [run_resilience(g, RandomError(seed=s), record_every) for s in sorted(seeds)]
    fractions = [row.fraction_removed for row in traces[0].rows]
    diam = np.array([[row.diameter for row in t.rows] for t in traces])
    lcc = np.array([[row.lcc_size for row in t.rows] for t in traces])
    comps = np.array([[row.components for row in t.rows] for t in traces])
    return EnsembleTrace(
        seeds=sorted(seeds),
        initial_n=g.n,
        fractions=fractions,
        diameter_median=[float(v) for v in np.median(diam, axis=0)],
        diameter_min=[int(v) for v in diam.min(axis=0)],
        diameter_max=[int(v) for v in diam.max(axis=0)],
        lcc_median=[float(v) for v in np.median(lcc, axis=0)],
        lcc_min=[int(v) for v in lcc.min(axis=0)],
        lcc_max=[int(v) for v in lcc.max(axis=0)],
        components_median=[float(v) for v in np.median(comps, axis=0)],
        components_min=[int(v) for v in comps.min(axis=0)],
        components_max=[int(v) for v in comps.max(axis=0)],
    )
