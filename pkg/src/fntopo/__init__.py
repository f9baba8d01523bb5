"""Orders induced by iterating a function on its own domain."""

__version__ = "0.1.0"

from fntopo.core import (  # noqa: E402
    BudgetExhausted,
    EnteredCycle,
    FiniteFunction,
    OrbitResult,
    ReachedBase,
    SymbolicMap,
    functionally_equal,
    iterate,
    orbit,
    precedes,
)
from fntopo.topology import (  # noqa: E402
    EqClass,
    Topology,
    base_conditions_required,
    build_topology,
    element_rank_paths,
)
from fntopo.isomorphism import (  # noqa: E402
    CanonicalCode,
    ChainClass,
    ChainKind,
    Mode,
    canonical_code,
    classify_chain,
    embeds_into,
    is_ordinally_isomorphic,
)
from fntopo.termination import (  # noqa: E402
    RankMap,
    Status,
    TermVerdict,
    classify_termination,
    classify_termination_symbolic,
    extract_ranking,
    verify_ranking,
)
from fntopo.recurrence import (  # noqa: E402
    AccumulatorState,
    RecurrenceSpec,
    accumulator_step,
    eval_accumulator,
    eval_naive,
    projected_topology,
    step_count,
)
