"""Cross-definition analysis: correlations and coefficient histograms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coefficients import CCReport


def pearson(xs, ys) -> float | None:
    """Product-moment correlation; None when either variance is zero."""
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.ndim != 1 or len(x) < 2:
        raise ValueError("need two paired 1-d samples of length >= 2")
    xc = x - x.mean()
    yc = y - y.mean()
    sx = float(np.sqrt(xc @ xc))
    sy = float(np.sqrt(yc @ yc))
    if sx == 0.0 or sy == 0.0:
        return None
    r = float((xc @ yc) / (sx * sy))
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class HistogramSpec:
    """Equal-width binning of the fixed range [0, 1], last bin right-inclusive."""

    bin_count: int = 20

    def __post_init__(self):
        if self.bin_count < 1:
            raise ValueError("bin count must be >= 1")

    def edges(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.bin_count + 1)


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation of each prior definition against the proposed one."""

    rho_op: float | None   # opsahl vs proposed
    rho_zp: float | None   # zhou vs proposed
    rho_sp: float | None   # baseline (simple graph) vs proposed

    def as_dict(self) -> dict:
        return {"rho_op": self.rho_op, "rho_zp": self.rho_zp,
                "rho_sp": self.rho_sp}


def correlation_report(report: CCReport) -> CorrelationReport:
    """Pearson correlations over all nodes of a four-column report."""
    proposed = report.column("proposed")
    return CorrelationReport(
        rho_op=pearson(report.column("opsahl"), proposed),
        rho_zp=pearson(report.column("zhou"), proposed),
        rho_sp=pearson(report.column("baseline"), proposed),
    )


def histogram_counts(values, bins: int | HistogramSpec = 20
                     ) -> tuple[np.ndarray, np.ndarray]:
    """Counts over equal bins of [0, 1]; the last bin includes 1.0."""
    spec = bins if isinstance(bins, HistogramSpec) else HistogramSpec(bins)
    counts, edges = np.histogram(np.asarray(values, dtype=np.float64),
                                 bins=spec.bin_count, range=(0.0, 1.0))
    return edges, counts
