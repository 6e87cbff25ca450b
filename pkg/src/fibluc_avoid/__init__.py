"""Verification of arithmetic progressions avoiding p + F(m) and q + L(n)."""
from .builtins import builtin_certificate, builtin_certificates, builtin_covering
from .certificate import (
    AvoidanceCertificate,
    Clause,
    ContradictionWitness,
    Progression,
    VerificationReport,
    consolidate_residues,
    crt_solve,
    verify_certificate,
)
from .covering import CongruenceClass, CoverReport, CoveringSystem, is_covering, lcm_moduli
from .errors import AvoidError, InconsistencyError, InvalidModulusError, ResourceLimitError
from .primality import PrimalityPolicy, is_prime
from .repsets import (
    AvoiderSet,
    RepCounts,
    check_progression,
    enumerate_avoiders,
    is_avoider,
    rep_count,
    rep_counts,
)
from .sequences import (
    FIB,
    LUCAS,
    IndexProgression,
    SequenceKind,
    chi,
    residue_class_set,
    residue_table,
    term,
    term_mod,
)

__version__ = "0.1.0"
