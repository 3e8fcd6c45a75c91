"""Simulation drivers: single runs, paired mode comparisons, multi-seed sweeps.

A run is strictly sequential (draw order is part of the determinism
contract); distinct seeds are independent and may execute concurrently.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .core import (
    DegenerateEconomyError,
    Mode,
    PopulationCapError,
    RngStream,
    SimConfig,
    compute_wealth_ratios,
    init_generation,
)
from .demography import advance_generation
from .marriage import MarriageCurveParams, match_generation
from .metrics import GenerationMetrics, generation_metrics

# Sub-stream layout: initial wealth draws live on path (0,) so paired runs
# share them; dynamics live on (1, mode_code) so the modes diverge by design.
_INIT_PATH = 0
_DYNAMICS_PATH = 1
_MODE_CODE = {Mode.POLYGYNY: 0, Mode.MONOGAMY: 1}

STATUS_COMPLETED = "completed"
STATUS_EXTINCT = "extinct"
STATUS_CAP_BREACH = "cap-breach"
STATUS_DEGENERATE = "degenerate-economy"

#: statuses that are normal outcomes (exit code 0 at the CLI)
NORMAL_STATUSES = (STATUS_COMPLETED, STATUS_EXTINCT)


@dataclass
class RunReport:
    """Everything one run produced: config echo, metric rows, and how it ended.

    ``rows`` covers consecutive generations starting at 1.  ``stopped_at``
    is the generation where an anomaly occurred (first extinct generation,
    cap-breaching generation, or the degenerate-economy generation); None
    for a completed run.
    """

    config: SimConfig
    rows: list
    status: str
    stopped_at: int = None

    @property
    def ok(self) -> bool:
        return self.status in NORMAL_STATUSES

    def describe(self) -> str:
        if self.status == STATUS_COMPLETED:
            return f"completed {len(self.rows)} generations"
        return f"{self.status} at generation {self.stopped_at}"


def run_simulation(config: SimConfig) -> RunReport:
    """Run one full simulation from config.seed.

    Per generation: wealth ratios, marriage matching, metrics, then
    reproduction and inheritance into the next generation.  Metrics are
    recorded after matching and before reproduction.  Terminates early on
    extinction (fewer than 2 men, or no women: the metrics and the matching
    market are then undefined), population-cap breach, or a degenerate
    economy.
    """
    init_rng = RngStream(config.seed, (_INIT_PATH,))
    dynamics_rng = RngStream(config.seed, (_DYNAMICS_PATH, _MODE_CODE[config.mode]))
    curve = MarriageCurveParams.from_config(config)

    state = init_generation(config, init_rng)
    rows = []
    for generation in range(1, config.total_generations + 1):
        if len(state.men) < 2 or state.women_count == 0:
            return RunReport(config, rows, STATUS_EXTINCT, stopped_at=state.index)
        try:
            compute_wealth_ratios(state)
        except DegenerateEconomyError:
            return RunReport(config, rows, STATUS_DEGENERATE, stopped_at=state.index)
        outcome = match_generation(
            state, config.mode, curve, config.marriage_noise_std, dynamics_rng
        )
        rows.append(generation_metrics(state, outcome))
        if generation == config.total_generations:
            break
        try:
            state = advance_generation(state, outcome, config, dynamics_rng)
        except PopulationCapError:
            return RunReport(config, rows, STATUS_CAP_BREACH, stopped_at=state.index + 1)
    return RunReport(config, rows, STATUS_COMPLETED)


@dataclass
class PairReport:
    """One seed run under both marriage systems from identical initial wealth."""

    seed: int
    polygyny: RunReport
    monogamy: RunReport


def run_pair(config: SimConfig, seed: int) -> PairReport:
    """Run both modes for one seed, sharing the initialisation sub-stream.

    Generation 1 wealth is bit-identical between the two runs; every later
    draw comes from mode-specific streams.
    """
    polygyny = run_simulation(replace(config, seed=seed, mode=Mode.POLYGYNY))
    monogamy = run_simulation(replace(config, seed=seed, mode=Mode.MONOGAMY))
    return PairReport(seed=seed, polygyny=polygyny, monogamy=monogamy)


def _run_for_seed(args) -> RunReport:
    config, seed = args
    return run_simulation(replace(config, seed=seed))


def run_sweep(config: SimConfig, seeds, jobs: int = 1) -> list:
    """Run one simulation per seed, optionally in parallel processes.

    Results come back ordered by position in ``seeds`` regardless of
    execution interleaving, so output is independent of ``jobs``.
    """
    seeds = list(seeds)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    work = [(config, seed) for seed in seeds]
    if jobs == 1 or len(seeds) <= 1:
        return [_run_for_seed(item) for item in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_for_seed, work))
