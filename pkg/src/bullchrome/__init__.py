"""Certificate-producing k-colorability deciders for bull-free graph
families, with exact desk-scale oracles and generators."""

from .errors import (
    AlphaNotTwo,
    BudgetTooSmall,
    BullchromeError,
    CharacterizationMismatch,
    DeskCapExceeded,
    DisconnectedInput,
    EvenLength,
    FreenessViolation,
    InvalidColoring,
    InvalidEdge,
    InvalidVertex,
    NotAnObstruction,
    ParseError,
    SeparationViolation,
    TimeBudgetExceeded,
    TooSmall,
    UnclassifiedNeighbor,
)
from .expansion import (
    CliqueExpansion,
    FeasibilityReport,
    canonical_sizes,
    expansion_color,
    feasibility,
    kcc_assign,
    recognize_clique_expansion,
)
from .graph import (
    Coloring,
    Graph,
    Verdict,
    complement,
    components,
    extend_reduced_coloring,
    induced_subgraph,
    is_connected,
    is_proper_coloring,
    join,
    make_graph,
    reduce_min_degree,
)
from .oracle import (
    chromatic_number,
    clique_number,
    exact_coloring,
    independence_number,
    max_matching,
    max_matching_edges,
)
from .patterns import (
    PatternWitness,
    check_witness,
    find_fixed_pattern,
    find_induced_expansion,
    find_odd_antihole,
    find_odd_hole,
    find_odd_wheel,
    find_spindle,
    is_perfect_desk,
)
from .generators import (
    antihole,
    build_expansion,
    complete,
    cycle,
    exceptional,
    random_hfree,
    spindle,
    wheel,
)
from .deciders import (
    NeighborClass,
    NeighborClassification,
    check_freeness,
    chi_alpha2,
    classify_against,
    decide_3col,
    decide_4col_bull_chair_c5free,
    decide_4col_bull_claw,
    decide_5col_bull_claw_c5free,
    verify_obstruction,
)

__version__ = "0.1.0"
