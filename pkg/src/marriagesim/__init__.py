"""Agent-based simulator of generational marriage dynamics under
wealth-driven spouse selection and patrilineal inheritance, with a
closed-form model of disease effects on birth rates."""

from .core import (
    ConfigError,
    DegenerateEconomyError,
    GenerationState,
    ManRecord,
    Mode,
    PopulationCapError,
    RngStream,
    SimConfig,
    SimulationError,
    build_config,
    compute_wealth_ratios,
    init_generation,
    read_config_file,
    round_half_away_from_zero,
)
from .demography import Family, advance_generation, inherit, reproduce
from .marriage import (
    MarriageCurveParams,
    MatchOutcome,
    expected_wives,
    match_generation,
    sample_wife_count,
)
from .metrics import (
    GenerationMetrics,
    GenerationSummary,
    UndefinedMetricError,
    aggregate_runs,
    generation_metrics,
    polygyny_variance,
    wealth_gap_ratio,
)
from .runner import PairReport, RunReport, run_pair, run_simulation, run_sweep
from .std_model import (
    StdParams,
    husband_factor_coefficient,
    monogamy_polygyny_ratio,
    monogamy_ratio_curve,
    population_closed_form,
    population_step,
    wife_factor_coefficient,
    wife_factor_curve,
)

__version__ = "0.1.0"
