"""
Kernelization: modulator, reduction rules, vertex picking and the pipeline
that chains them.
"""

from .modulator import (
    Modulator,
    Phase,
    Provenance,
    approximate,
    phase2_exact_hole_hitting,
    repair_after_contraction,
    repair_after_vertex_deletion,
    validate_modulator,
)
from .reduction import (
    AdjacencyProfile,
    ReductionOutcome,
    ReductionState,
    ReductionTrace,
    RuleApplication,
    TraceStep,
    build_state,
    is_reduced,
    profile,
    reduce_to_fixpoint,
    replay_trace,
    rule1,
    rule2,
    rule3,
)
from .picker import (
    Pattern,
    PickReport,
    assemble_kernel,
    per_block_bound,
    pick_all,
    pick_k0,
    pick_k1,
    pick_k2,
    pick_k3,
    pick_k4,
    pick_v0,
)
from .pipeline import KernelizationPipeline, KernelizationResult, Verdict, verify_batch, verify_instance

__all__ = [
    "Modulator",
    "Phase",
    "Provenance",
    "approximate",
    "phase2_exact_hole_hitting",
    "repair_after_contraction",
    "repair_after_vertex_deletion",
    "validate_modulator",
    "AdjacencyProfile",
    "ReductionOutcome",
    "ReductionState",
    "ReductionTrace",
    "RuleApplication",
    "TraceStep",
    "build_state",
    "is_reduced",
    "profile",
    "reduce_to_fixpoint",
    "replay_trace",
    "rule1",
    "rule2",
    "rule3",
    "Pattern",
    "PickReport",
    "assemble_kernel",
    "per_block_bound",
    "pick_all",
    "pick_k0",
    "pick_k1",
    "pick_k2",
    "pick_k3",
    "pick_k4",
    "pick_v0",
    "KernelizationPipeline",
    "KernelizationResult",
    "Verdict",
    "verify_batch",
    "verify_instance",
]
