"""Entanglement teleportation through Bell-mixture channels."""

from bellmix.channel import (
    NotCompletelyPositive,
    PauliLambdas,
    apply_channel_two_sided,
    apply_pauli_channel_1q,
    closed_form_max_entangled_output,
    closed_form_schmidt_output,
    lambdas_from_weights,
    weights_from_lambdas,
)
from bellmix.criteria import (
    CriteriaReport,
    concurrence,
    criteria_report,
    horodecki_m,
    ppt_min_eigenvalue,
    renyi2,
    t_matrix,
    two_e_violates,
)
from bellmix.states import (
    BellKind,
    BellWeights,
    SchmidtState,
    bell_mixture,
    bell_state,
    mef_bell_diagonal,
    schmidt_density,
    werner_weights,
)
from bellmix.teleport import default_correction_table, teleport_1q, teleport_2q

__version__ = "0.1.0"
