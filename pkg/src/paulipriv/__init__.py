"""Pauli-group machinery for private quantum subsystems.

Exact arithmetic on phased tensor products of generalized Pauli operators,
subgroup theory on the phase quotient (character matrices, annihilators,
maximal Abelian extensions), dense operator-algebra computations
(commutants, block structure, conditional expectations), and certification
that channels built from Abelian Pauli subgroups privatize explicitly
constructed subsystem algebras.
"""

from .algebra import (
    Channel,
    OperatorAlgebra,
    StructureType,
    apply_channel,
    choi_equal,
    choi_matrix,
    commutant,
    conditional_expectation,
    diagonal_algebra,
    full_matrix_algebra,
    left_regular_trace,
    scalar_algebra,
    simultaneous_diagonalize,
    span_closure,
    structure_type,
)
from .constructions import (
    EncodedQubitAlgebra,
    TwoQutritReport,
    channel_from_subgroup,
    encoded_qubit_generators,
    max_private_qubits,
    private_algebra_for_abelian,
    private_algebra_for_max_abelian,
    quasiorthogonal_to_diagonal,
    subgroup_algebra,
    two_qutrit_demo,
)
from .errors import FormatError, NumericalAmbiguityError, PreconditionError
from .groups import (
    CharacterMatrix,
    PauliSubgroup,
    all_classes,
    annihilator,
    character_matrix,
    close,
    diagonal_subgroup,
    extend_to_maximal,
    is_abelian,
)
from .pauli import (
    PauliClass,
    PauliElement,
    chi_exponent,
    chi_value,
    format_pauli,
    omega_power,
    parse_pauli,
    zeta_power,
)
from .privacy import (
    PrivacyCertificate,
    QuasiorthogonalityReport,
    check_private_subsystem,
    check_privatized_algebra,
    is_quasiorthogonal,
    kraus_mutually_commuting,
    quasiorth_condition_suite,
)

__version__ = "0.1.0"
