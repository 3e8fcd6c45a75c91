"""Reproduction with noisy fertility, sex assignment, and patrilineal
equal-division inheritance with career savings."""

from dataclasses import dataclass

from .core import (
    GenerationState,
    ManRecord,
    PopulationCapError,
    RngStream,
    SimConfig,
    round_half_away_from_zero,
)
from .marriage import MatchOutcome


@dataclass
class Family:
    """A married man's household for one generation."""

    father_index: int
    wife_count: int
    children_boys: int = 0
    children_girls: int = 0

    def __post_init__(self):
        if self.wife_count < 1:
            raise ValueError("a family requires at least one wife")


def reproduce(
    family: Family,
    average_fertility: float,
    fertility_noise_std: float,
    rng: RngStream,
) -> Family:
    """Fill in the family's children.

    Total children = round(wife_count * average_fertility * g) with one
    Gaussian(1, fertility_noise_std) noise draw per family, clamped below at
    zero.  Each child is independently a boy or girl with probability 1/2.
    """
    raw = family.wife_count * average_fertility * rng.normal(1.0, fertility_noise_std)
    total = round_half_away_from_zero(raw)
    if total <= 0:
        family.children_boys = 0
        family.children_girls = 0
        return family
    boys = int(rng.coin_flips(total).sum())
    family.children_boys = boys
    family.children_girls = total - boys
    return family


def inherit(
    father_wealth: float,
    son_count: int,
    savings_mean: float,
    savings_std: float,
    rng: RngStream,
) -> list:
    """Wealth of each son: an even share of the estate plus his own career
    savings, Gaussian(savings_mean, savings_std).

    A sonless father returns an empty list; his wealth leaves the economy.
    """
    if son_count < 0:
        raise ValueError("son_count must be >= 0")
    if son_count == 0:
        return []
    share = father_wealth / son_count
    savings = rng.normal_array(savings_mean, savings_std, son_count)
    return [share + float(s) for s in savings]


def advance_generation(
    state: GenerationState,
    outcome: MatchOutcome,
    config: SimConfig,
    rng: RngStream,
) -> GenerationState:
    """Produce the next generation from this one's match outcome.

    Records the realised wife and son counts on ``state``'s men as a side
    effect.  The next generation's men are exactly the union of all sons
    with their inherited wealth; its women count is the total number of
    girls born.  Unmarried men (and the women left unassigned) contribute
    nothing.  Raises PopulationCapError if either sex count breaches the
    configured cap.
    """
    if len(outcome.assignments) != len(state.men):
        raise ValueError("match outcome does not align with generation state")

    girls_total = 0
    for i, man in enumerate(state.men):
        man.wife_count = outcome.assignments[i]
        if man.wife_count < 1:
            man.son_count = 0
            continue
        family = reproduce(
            Family(father_index=i, wife_count=man.wife_count),
            config.average_fertility,
            config.fertility_noise_std,
            rng,
        )
        man.son_count = family.children_boys
        girls_total += family.children_girls

    next_men = []
    total_wealth = 0.0
    for man in state.men:
        if man.son_count < 1:
            continue
        for wealth in inherit(
            man.wealth, man.son_count, config.savings_mean, config.savings_std, rng
        ):
            next_men.append(ManRecord(wealth=wealth))
            total_wealth += wealth

    if len(next_men) > config.population_cap or girls_total > config.population_cap:
        raise PopulationCapError(
            f"generation {state.index + 1} breaches the population cap "
            f"({config.population_cap}): {len(next_men)} men, {girls_total} women"
        )
    return GenerationState(
        index=state.index + 1,
        men=next_men,
        women_count=girls_total,
        total_wealth=total_wealth,
    )
