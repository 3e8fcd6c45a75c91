"""Per-generation indices of polygyny intensity and wealth inequality, and
cross-seed aggregation of run series."""

import math
from dataclasses import dataclass

import numpy as np

from .core import GenerationState
from .marriage import MatchOutcome


class UndefinedMetricError(ValueError):
    """The metric's formula is undefined for this input (too few men, or
    zero mean wealth)."""


@dataclass
class GenerationMetrics:
    """The two headline indices plus head counts for one generation."""

    generation: int
    polygyny_variance: float
    wealth_gap_ratio: float
    men_count: int
    women_count: int
    unmarried_women: int


def polygyny_variance(wife_counts) -> float:
    """Mean squared deviation of wife counts from 1, normalised by N - 1.

    Deviation is measured from the constant 1, not the sample mean, and
    unmarried men count (a zero contributes 1).  Zero means perfect
    monogamy among the measured men.
    """
    counts = np.asarray(wife_counts, dtype=float)
    n = counts.size
    if n < 2:
        raise UndefinedMetricError("polygyny variance needs at least 2 men")
    return float(np.sum((counts - 1.0) ** 2) / (n - 1))


def wealth_gap_ratio(wealths) -> float:
    """Sample standard deviation of wealth divided by mean wealth."""
    values = np.asarray(wealths, dtype=float)
    n = values.size
    if n < 2:
        raise UndefinedMetricError("wealth gap ratio needs at least 2 men")
    mean = float(np.mean(values))
    if mean == 0.0:
        raise UndefinedMetricError("wealth gap ratio undefined for zero mean wealth")
    std = math.sqrt(float(np.sum((values - mean) ** 2)) / (n - 1))
    return std / mean


def generation_metrics(state: GenerationState, outcome: MatchOutcome) -> GenerationMetrics:
    """Metrics row for one generation, taken after matching and before
    reproduction."""
    return GenerationMetrics(
        generation=state.index,
        polygyny_variance=polygyny_variance(outcome.assignments),
        wealth_gap_ratio=wealth_gap_ratio([man.wealth for man in state.men]),
        men_count=len(state.men),
        women_count=state.women_count,
        unmarried_women=outcome.unmarried_women,
    )


@dataclass
class GenerationSummary:
    """Across-seed statistics for one generation index."""

    generation: int
    runs: int
    men_mean: float
    women_mean: float
    unmarried_women_mean: float
    polygyny_variance_mean: float
    polygyny_variance_median: float
    polygyny_variance_q25: float
    polygyny_variance_q75: float
    wealth_gap_mean: float
    wealth_gap_median: float
    wealth_gap_q25: float
    wealth_gap_q75: float


def aggregate_runs(runs) -> list:
    """Summarise per-seed metric series into per-generation statistics.

    ``runs`` is a sequence of GenerationMetrics sequences, one per seed, in
    ascending seed order (callers sort; the fold is then deterministic).
    Runs may have different lengths (extinction); a generation's cell uses
    only the runs that reached it.  Quantiles are the 25th and 75th
    percentiles with numpy's linear interpolation.
    """
    longest = max((len(series) for series in runs), default=0)
    summary = []
    for position in range(longest):
        rows = [series[position] for series in runs if len(series) > position]
        generation = rows[0].generation
        variances = np.array([r.polygyny_variance for r in rows])
        gaps = np.array([r.wealth_gap_ratio for r in rows])
        summary.append(
            GenerationSummary(
                generation=generation,
                runs=len(rows),
                men_mean=float(np.mean([r.men_count for r in rows])),
                women_mean=float(np.mean([r.women_count for r in rows])),
                unmarried_women_mean=float(np.mean([r.unmarried_women for r in rows])),
                polygyny_variance_mean=float(np.mean(variances)),
                polygyny_variance_median=float(np.median(variances)),
                polygyny_variance_q25=float(np.quantile(variances, 0.25)),
                polygyny_variance_q75=float(np.quantile(variances, 0.75)),
                wealth_gap_mean=float(np.mean(gaps)),
                wealth_gap_median=float(np.median(gaps)),
                wealth_gap_q25=float(np.quantile(gaps, 0.25)),
                wealth_gap_q75=float(np.quantile(gaps, 0.75)),
            )
        )
    return summary
