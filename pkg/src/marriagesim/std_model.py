"""Closed-form model of how a sexually transmitted disease depresses the
birth rate under different marriage systems.

All quantities are per-lifetime, per-generation.  An initially infected
spouse eventually infects the whole family; an infected woman is sterile
with some probability.  The resulting multiplicative coefficients to the
baseline birth rate, and the geometric population growth they induce, are
pure functions of the parameters, so everything here is analytical: no
randomness, no coupling to the agent simulation.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class StdParams:
    """Parameters of the disease birth-rate model."""

    baseline_birth_rate: float = 3.0    # children per woman absent the disease
    wife_infection_prob: float = 0.04   # per-lifetime external infection, wife
    husband_infection_prob: float = 0.04  # same for the husband
    sterility_prob: float = 0.2        # sterility given infection
    wives_per_family: float = 8.0      # average wife count, >= 1 (real-valued)

    def __post_init__(self):
        if self.baseline_birth_rate <= 0:
            raise ValueError("baseline_birth_rate must be > 0")
        for name in ("wife_infection_prob", "husband_infection_prob", "sterility_prob"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be a probability in [0, 1]")
        if self.wives_per_family < 1.0:
            raise ValueError("wives_per_family must be >= 1")


def husband_factor_coefficient(params: StdParams) -> float:
    """Birth-rate coefficient from the husband as the initial infection source.

    A woman's expected births scale by (1 - husband_infection_prob) +
    (1 - sterility_prob) * husband_infection_prob = 1 - husband_infection_prob
    * sterility_prob, independent of how many wives the family has.  Callers
    multiply by the baseline birth rate.
    """
    return 1.0 - params.husband_infection_prob * params.sterility_prob


def wife_factor_coefficient(params: StdParams) -> float:
    """Birth-rate coefficient from a wife as the initial infection source.

        1 + ((1 - wife_infection_prob) ** wives_per_family - 1) * sterility_prob

    where the power term is the probability that none of the wives get
    infected.  Strictly decreasing in the wife count (more wives, more
    chances the family catches the disease), so polygyny pays a fertility
    penalty.
    """
    clean_family = (1.0 - params.wife_infection_prob) ** params.wives_per_family
    return 1.0 + (clean_family - 1.0) * params.sterility_prob


def population_step(xi_k: float, params: StdParams) -> float:
    """One generation of population growth under the wife-infection factor.

    Half the population are women; each bears baseline_birth_rate *
    wife_factor_coefficient children on average.
    """
    return 0.5 * params.baseline_birth_rate * wife_factor_coefficient(params) * xi_k


def population_closed_form(xi_1: float, k: int, params: StdParams) -> float:
    """Population at generation k, equal to k - 1 iterated growth steps.

    Geometric: (baseline_birth_rate / 2)^(k-1) * coefficient^(k-1) * xi_1.
    """
    if k < 1:
        raise ValueError("generation index k must be >= 1")
    rate = 0.5 * params.baseline_birth_rate * wife_factor_coefficient(params)
    return rate ** (k - 1) * xi_1


def monogamy_polygyny_ratio(k: int, params: StdParams) -> float:
    """Ratio of a monogamous to a polygamous population after k generations.

    Both start equal and grow geometrically; the baseline birth rate and the
    starting population cancel, leaving

        ((1 - wife_infection_prob * sterility_prob) / coefficient)^(k-1)

    with the polygamous coefficient in the denominator (the numerator is the
    same coefficient evaluated at one wife per family).  At least 1, and
    nondecreasing in k, whenever wives_per_family >= 1.
    """
    if k < 1:
        raise ValueError("generation index k must be >= 1")
    denominator = wife_factor_coefficient(params)
    if denominator <= 0.0:
        raise ValueError(
            "polygamous birth coefficient is not positive; ratio undefined"
        )
    numerator = 1.0 - params.wife_infection_prob * params.sterility_prob
    return (numerator / denominator) ** (k - 1)


def wife_factor_curve(params: StdParams, q_max: int) -> list:
    """Table of (wife count, birth-rate coefficient) for counts 1..q_max."""
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    return [
        (q, wife_factor_coefficient(replace(params, wives_per_family=float(q))))
        for q in range(1, q_max + 1)
    ]


def monogamy_ratio_curve(k_max: int, params_list) -> list:
    """Table of (generation, [population ratio per parameter set]) for
    generations 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return [
        (k, [monogamy_polygyny_ratio(k, p) for p in params_list])
        for k in range(1, k_max + 1)
    ]
