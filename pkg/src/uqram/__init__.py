"""Universal QRAM: closed-form permutation construction, multi-controlled-X
decomposition, exhaustive verification, and a Grover search demo."""

from .registers import (
    MemoryConfig,
    QramParams,
    decode_basis,
    encode_basis,
    make_params,
    qram_map,
)
from .permutation import (
    ConstraintReport,
    PermutationTable,
    build_block,
    build_permutation,
    count_constraints,
    is_involution,
    is_permutation,
    unitarity_residual,
    verify_semantics,
)
from .circuit import (
    Circuit,
    McxGate,
    compose,
    decompose_qram,
    decompose_qrom,
    export_circuit,
    gate_count_report,
    gate_to_permutation,
    parse_circuit_json,
)
from .simulator import (
    AddressDistribution,
    StateVector,
    apply_h,
    apply_permutation,
    apply_phase_flip,
    grover_diffusion,
    grover_oracle,
    init_basis,
    optimal_iterations,
    run_grover,
)
from .harness import (
    DEFAULT_PAIRS,
    VerificationRow,
    run_qrom_equivalence,
    run_verification_suite,
)

__all__ = [
    "AddressDistribution", "Circuit", "ConstraintReport", "DEFAULT_PAIRS",
    "McxGate", "MemoryConfig", "PermutationTable", "QramParams",
    "StateVector", "VerificationRow", "apply_h", "apply_permutation",
    "apply_phase_flip", "build_block", "build_permutation", "compose",
    "count_constraints", "decode_basis", "decompose_qram", "decompose_qrom",
    "encode_basis", "export_circuit", "gate_count_report",
    "gate_to_permutation", "grover_diffusion", "grover_oracle", "init_basis",
    "is_involution", "is_permutation", "make_params", "optimal_iterations",
    "parse_circuit_json", "qram_map", "run_grover", "run_qrom_equivalence",
    "run_verification_suite", "unitarity_residual", "verify_semantics",
]
