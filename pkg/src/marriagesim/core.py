"""Domain types, configuration, and deterministic random streams.

Everything stochastic in the simulator draws from an RngStream, a thin
wrapper over a fixed, documented generator, so that a run is fully
reproducible from its 64-bit seed.
"""

import math
from dataclasses import dataclass, field, fields
from enum import Enum

import numpy as np


class SimulationError(Exception):
    """Base class for aborting simulation errors."""


class ConfigError(SimulationError):
    """Invalid configuration value or malformed config file."""


class DegenerateEconomyError(SimulationError):
    """Total wealth of a generation is zero or negative.

    Wealth ratios would be meaningless (sign-flipped), so the run aborts
    with a diagnostic instead of producing them.
    """


class PopulationCapError(SimulationError):
    """A generation breached the configured population cap."""


class Mode(str, Enum):
    """Marriage system under which matching operates."""

    POLYGYNY = "polygyny"
    MONOGAMY = "monogamy"


@dataclass
class SimConfig:
    """Every tunable parameter of the generational model.

    Defaults reproduce the reference parameterisation: curve 24/30,
    12 generations, fertility 3, 100 men and 100 women initially, a 10%
    elite holding a large wealth bonus.
    """

    curve_amplitude: float = 24.0    # marriage-curve amplitude, > 0
    curve_scale: float = 30.0        # marriage-curve saturation scale, > 0
    total_generations: int = 12
    average_fertility: float = 3.0   # children per wife
    initial_men: int = 100
    initial_women: int = 100
    initial_wealth_mean: float = 100.0
    initial_wealth_std: float = 400.0
    elite_fraction: float = 0.1      # per-man probability of the elite bonus
    elite_bonus_mean: float = 5000.0
    elite_bonus_std: float = 3000.0
    marriage_noise_std: float = 0.2
    fertility_noise_std: float = 0.3
    savings_mean: float = 10.0       # career savings added to each inheritance
    savings_std: float = 8.0
    mode: Mode = Mode.POLYGYNY
    seed: int = 0
    population_cap: int = 20000

    def __post_init__(self):
        if isinstance(self.mode, str):
            try:
                self.mode = Mode(self.mode.lower())
            except ValueError:
                raise ConfigError(
                    f"mode must be one of {[m.value for m in Mode]}, got {self.mode!r}"
                ) from None
        problems = []
        if self.curve_amplitude <= 0:
            problems.append("curve_amplitude must be > 0")
        if self.curve_scale <= 0:
            problems.append("curve_scale must be > 0")
        if self.total_generations < 1:
            problems.append("total_generations must be >= 1")
        if self.average_fertility <= 0:
            problems.append("average_fertility must be > 0")
        if self.initial_men < 1:
            problems.append("initial_men must be >= 1")
        if self.initial_women < 1:
            problems.append("initial_women must be >= 1")
        if not 0.0 <= self.elite_fraction <= 1.0:
            problems.append("elite_fraction must be in [0, 1]")
        for name in ("initial_wealth_std", "elite_bonus_std", "marriage_noise_std",
                     "fertility_noise_std", "savings_std"):
            if getattr(self, name) < 0:
                problems.append(f"{name} must be >= 0")
        if not 0 <= self.seed < 2 ** 64:
            problems.append("seed must be an unsigned 64-bit integer")
        if self.population_cap < 1:
            problems.append("population_cap must be >= 1")
        if problems:
            raise ConfigError("; ".join(problems))


class RngStream:
    """Deterministic random stream with documented sub-stream derivation.

    Backed by numpy's PCG64 bit generator seeded through
    ``SeedSequence(seed, spawn_key=path)``.  The same (seed, path) pair
    yields a bit-identical draw sequence on every run and platform for a
    fixed numpy version; distinct paths give independent streams.  Gaussian
    deviates come from numpy's ziggurat transform of the PCG64 uniform
    stream, so they inherit the same reproducibility.

    The simulator derives its streams as:

    * ``(0,)``            initial wealth draws (shared between the two
                          modes of a paired run),
    * ``(1, mode_code)``  all later dynamics, keyed by marriage mode so
                          paired runs diverge by design after generation 1.
    """

    def __init__(self, seed: int, path: tuple = ()):
        seed = int(seed)
        if not 0 <= seed < 2 ** 64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.path = tuple(int(p) for p in path)
        self._gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(seed, spawn_key=self.path))
        )

    def uniform(self) -> float:
        """Uniform real in [0, 1)."""
        return float(self._gen.random())

    def normal(self, mean: float, std: float) -> float:
        """Gaussian deviate; std = 0 returns the mean exactly."""
        return float(self._gen.normal(mean, std))

    def normal_array(self, mean: float, std: float, count: int) -> np.ndarray:
        """``count`` independent Gaussian deviates in one call."""
        return self._gen.normal(mean, std, size=count)

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        return int(self._gen.integers(0, n))

    def coin_flips(self, count: int) -> np.ndarray:
        """``count`` independent fair 0/1 draws."""
        return self._gen.integers(0, 2, size=count)


def round_half_away_from_zero(value: float) -> int:
    """Round with ties going away from zero (2.5 -> 3, -2.5 -> -3).

    This matches the reference implementation's rounding, unlike Python's
    built-in banker's rounding.
    """
    if value >= 0.0:
        return int(math.floor(value + 0.5))
    return int(math.ceil(value - 0.5))


@dataclass(slots=True)
class ManRecord:
    """One man's state within a generation."""

    wealth: float
    wealth_ratio: float = 0.0   # wealth relative to the generation average
    wife_count: int = 0         # 0 until matching
    son_count: int = 0          # 0 until reproduction


@dataclass
class GenerationState:
    """The full male population at one generation step (women are counted,
    not modelled individually)."""

    index: int                  # generation number, 1-based
    men: list
    women_count: int
    total_wealth: float

    def recomputed_total(self) -> float:
        return sum(man.wealth for man in self.men)


def init_generation(config: SimConfig, rng: RngStream) -> GenerationState:
    """Draw the first generation.

    Each man's wealth is Gaussian(initial_wealth_mean, initial_wealth_std);
    independently, with probability elite_fraction, he receives an extra
    Gaussian(elite_bonus_mean, elite_bonus_std) windfall.  Negative draws
    are kept (debt is allowed; the marriage curve is defined on all of R).
    """
    men = []
    total = 0.0
    for _ in range(config.initial_men):
        wealth = rng.normal(config.initial_wealth_mean, config.initial_wealth_std)
        if rng.uniform() < config.elite_fraction:
            wealth += rng.normal(config.elite_bonus_mean, config.elite_bonus_std)
        men.append(ManRecord(wealth=wealth))
        total += wealth
    return GenerationState(
        index=1, men=men, women_count=config.initial_women, total_wealth=total
    )


def compute_wealth_ratios(state: GenerationState) -> GenerationState:
    """Fill in each man's wealth-to-average ratio; ratios sum to the head count.

    ratio_i = wealth_i * N / total_wealth.  Aborts with
    DegenerateEconomyError when total wealth is not positive.
    """
    if not state.men:
        raise ValueError("generation has no men")
    if state.total_wealth <= 0.0:
        raise DegenerateEconomyError(
            f"generation {state.index}: total wealth {state.total_wealth:.6g} "
            "is not positive; wealth ratios are undefined"
        )
    n = len(state.men)
    total = state.total_wealth
    for man in state.men:
        man.wealth_ratio = man.wealth * n / total
    return state


# --- configuration file handling -------------------------------------------
#
# The config file is plain ``key = value`` lines mirroring SimConfig field
# names; '#' starts a comment, blank lines are ignored.

_FIELD_TYPES = {f.name: f.type for f in fields(SimConfig)}


def _coerce(name: str, raw: str):
    kind = _FIELD_TYPES[name]
    try:
        if kind is int:
            return int(raw)
        if kind is float:
            return float(raw)
        if kind is Mode:
            return Mode(raw.lower())
    except ValueError:
        raise ConfigError(f"invalid value for {name}: {raw!r}") from None
    raise ConfigError(f"unsupported config field type for {name}")


def read_config_file(path) -> dict:
    """Parse a key = value config file into a dict of SimConfig fields."""
    try:
        text = open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if key not in _FIELD_TYPES:
            raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = _coerce(key, raw)
    return values


def build_config(file_values: dict = None, overrides: dict = None) -> SimConfig:
    """Construct a SimConfig from file values with CLI overrides on top."""
    merged = {}
    merged.update(file_values or {})
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return SimConfig(**merged)
