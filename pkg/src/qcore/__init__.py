"""qcore: exact q-series arithmetic and identity verification for the
5-core partition function and its two theta-quotient analogs.

The building blocks:

- ``series``: exact truncated power series over Python integers.
- ``products``: Pochhammer/Euler products, theta functions, the
  Rogers-Ramanujan quotient, and the three generating functions.
- ``partitions``: hook-number oracle counting t-cores by enumeration.
- ``dissection``: residue-class dissections and the four closed-form
  5-dissections.
- ``identities``: a declarative registry of every verified identity,
  congruence and census claim, plus the uniform evaluator.
- ``bfile``: OEIS b-file import/export.
- ``cli``: the ``qcore`` command.
"""

from .bfile import BFile, BFileParseError, first_discrepancy, format_bfile, parse_bfile
from .dissection import (
    Dissection,
    dissect,
    verify_f1_5dissection,
    verify_inv_f1_5dissection,
    verify_phi_5dissection,
    verify_psi_5dissection,
)
from .identities import (
    DEFAULT_KMAX,
    DEFAULT_ORDER,
    CensusResult,
    UnknownIdentity,
    UnknownSequence,
    check_congruence,
    check_recurrence_a5,
    check_recurrence_b5,
    record_ids,
    register,
    sequence,
    sign_census,
    summarize,
    unregister,
    verify,
    verify_all,
)
from .partitions import (
    OracleScaleExceeded,
    Partition,
    conjugate,
    count_t_cores,
    hook_numbers,
    is_t_core,
    partitions_of,
)
from .products import (
    PochhammerFactor,
    QProductSpec,
    ThetaSpec,
    chi,
    euler_f,
    expand_pochhammer,
    expand_qproduct,
    gen_a5bar,
    gen_b5bar,
    gen_c5,
    phi,
    psi,
    rr_quotient,
    theta_general,
    triple_product,
)
from .registry import CORE, EXTENDED, Record, Term
from .reports import EXACT_MATCH, MISMATCH, SKIPPED, VerificationReport
from .series import NonUnitConstantTerm, TruncatedSeries, first_mismatch

__version__ = "0.1.0"
