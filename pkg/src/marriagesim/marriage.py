"""The expected-wife-count curve and the stochastic marriage matching pass."""

import math
from dataclasses import dataclass

from .core import (
    GenerationState,
    Mode,
    RngStream,
    SimConfig,
    round_half_away_from_zero,
)


@dataclass(frozen=True)
class MarriageCurveParams:
    """Shape parameters of the wealth-to-wives curve.

    The curve maps a man's wealth-to-average ratio x to his expected wife
    count:

        amplitude * tanh(x / scale) - amplitude * tanh(1 / scale) + 1

    By construction it passes through (1, 1): a man of exactly average
    wealth expects exactly one wife.  It is increasing, saturates for
    extreme wealth, and (for amplitude < scale) its slope stays below 1 and
    shrinks as wealth grows, so extra wealth buys wives at a diminishing
    rate.
    """

    amplitude: float = 24.0
    scale: float = 30.0

    def __post_init__(self):
        if self.amplitude <= 0 or self.scale <= 0:
            raise ValueError("curve amplitude and scale must be > 0")

    @classmethod
    def from_config(cls, config: SimConfig) -> "MarriageCurveParams":
        return cls(config.curve_amplitude, config.curve_scale)

    def saturation(self) -> float:
        """Upper bound of the curve as the wealth ratio grows without limit."""
        return self.amplitude * (1.0 - math.tanh(1.0 / self.scale)) + 1.0


def expected_wives(wealth_ratio: float, params: MarriageCurveParams) -> float:
    """Expected wife count for a man at ``wealth_ratio`` times average wealth.

    Total on all of R; negative ratios (men in debt) give values below the
    x = 0 intercept and typically round to zero wives downstream.
    """
    a = params.amplitude
    s = params.scale
    return a * math.tanh(wealth_ratio / s) - a * math.tanh(1.0 / s) + 1.0


def sample_wife_count(expected: float, noise_std: float, rng: RngStream) -> int:
    """Noisy realisation of an expected wife count.

    Multiplies by a Gaussian(1, noise_std) idiosyncratic factor and rounds
    half away from zero.  The result may be negative; callers clamp.
    """
    return round_half_away_from_zero(expected * rng.normal(1.0, noise_std))


@dataclass
class MatchOutcome:
    """Result of one generation's marriage matching."""

    assignments: list           # wife count per man, aligned with state.men
    unmarried_women: int
    unmarried_men: int

    def married_counts(self) -> list:
        return [c for c in self.assignments if c > 0]


def match_generation(
    state: GenerationState,
    mode: Mode,
    params: MarriageCurveParams,
    noise_std: float,
    rng: RngStream,
) -> MatchOutcome:
    """Assign this generation's women to men drawn in random order.

    A pool of unmarried men shrinks by one each iteration: a man is drawn
    uniformly, granted a wife count, and never drawn again, which guarantees
    termination.  In polygyny mode the count is the noisy curve sample
    clamped to [0, women still available]; in monogamy mode it is exactly 1.
    Matching stops when the women or the pool run out; leftover women stay
    unmarried (and are excluded from reproduction downstream).

    Requires wealth ratios to be already computed on ``state``.
    """
    men = state.men
    assignments = [0] * len(men)
    pool = list(range(len(men)))
    women_remaining = state.women_count
    monogamous = mode is Mode.MONOGAMY

    while women_remaining > 0 and pool:
        pick = rng.randint(len(pool))
        man = pool[pick]
        # O(1) removal; drawn men never return, married or not
        pool[pick] = pool[-1]
        pool.pop()
        if monogamous:
            count = 1
        else:
            count = sample_wife_count(
                expected_wives(men[man].wealth_ratio, params), noise_std, rng
            )
            if count < 0:
                count = 0
            if count > women_remaining:
                count = women_remaining
        if count > 0:
            assignments[man] = count
            women_remaining -= count

    unmarried_men = sum(1 for c in assignments if c == 0)
    return MatchOutcome(
        assignments=assignments,
        unmarried_women=women_remaining,
        unmarried_men=unmarried_men,
    )
