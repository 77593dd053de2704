"""Solver toolkit for the Maker-Breaker domination game."""

from .certificates import (
    CertificateError,
    Cycle,
    Edge,
    FactorCertificate,
    PairingDominatingSet,
    PartialFactorCertificate,
    TwoUniversal,
    validate_factor,
    validate_pds,
)
from .decide import Decision, decide, dominator_first_star_factor
from .factor import (
    CutFactorWitness,
    Infeasible,
    IncidenceBipartite,
    NoFactor,
    find_cut_factor,
    incidence_bipartite,
    max_partial_12_factor,
    perfect_12_factor,
    refactor_components,
)
from .graph import (
    BlockDecomposition,
    ClassFlags,
    Graph,
    GraphInputError,
    block_decomposition,
    build_graph,
    classify_graph,
)
from .intervals import (
    IntervalRep,
    ProperChainPartition,
    apds_factor_convert,
    interval_rep,
    intersection_graph,
    nestedness_and_chains,
    normalize_representation,
    pds_dp,
    pds_to_apds,
    unit_interval_decide,
)
from .io import (
    Instance,
    InstanceParseError,
    certificate_to_json,
    emit_instance,
    instance_digest,
    parse_instance,
    parse_instance_text,
    verify_certificate,
)
from .oracle import (
    BoundExceeded,
    GamePosition,
    Outcome,
    brute_force_factor,
    brute_force_pds,
    outcome,
    solve_position,
)
from .strategy import (
    DominatorStrategy,
    ExhaustiveReport,
    IllegalMove,
    PlayTranscript,
    StallerStrategy,
    compose_dominator_strategy,
    play_match,
    staller_cut_factor_strategy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
