"""Sum-over-states SHG hyperpolarizability toolkit."""

from ._core import (
    Assembly,
    AssemblyEntry,
    BetaTensor,
    DampingConvention,
    EnvironmentShift,
    EquivalenceReport,
    MolecularModel,
    PhotonMode,
    Representation,
    SHGConfig,
    SignConvention,
    SingularityError,
    Term,
    TimeOrdering,
    ValidationError,
    apply_first_order_shift,
    constants,
    contract_amplitude,
    denominator,
    enumerate_orderings,
    enumerate_terms,
    environment_shift,
    equivalence_report,
    evaluate_beta,
    ground_state_shift,
    load_assembly_file,
    load_model,
    load_model_file,
    max_component_rel_diff,
    mode_energy,
    mode_normalization,
    pair_orientation_factor,
    perturbation_matrix,
    rotate_model,
    serialize_model,
    shg_prefactor,
    symmetrize,
    term_count,
    to_fluctuation,
)

__all__ = [
    "Assembly",
    "AssemblyEntry",
    "BetaTensor",
    "DampingConvention",
    "EnvironmentShift",
    "EquivalenceReport",
    "MolecularModel",
    "PhotonMode",
    "Representation",
    "SHGConfig",
    "SignConvention",
    "SingularityError",
    "Term",
    "TimeOrdering",
    "ValidationError",
    "apply_first_order_shift",
    "constants",
    "contract_amplitude",
    "denominator",
    "enumerate_orderings",
    "enumerate_terms",
    "environment_shift",
    "equivalence_report",
    "evaluate_beta",
    "ground_state_shift",
    "load_assembly_file",
    "load_model",
    "load_model_file",
    "max_component_rel_diff",
    "mode_energy",
    "mode_normalization",
    "pair_orientation_factor",
    "perturbation_matrix",
    "rotate_model",
    "serialize_model",
    "shg_prefactor",
    "symmetrize",
    "term_count",
    "to_fluctuation",
]

__version__ = "0.1.0"
