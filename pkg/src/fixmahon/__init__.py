"""Statistics and class-preserving bijections on zero-padded words and
permutations, with exhaustive and exact-algebraic verification tools."""

from .enumeration import (
    CLAIMS,
    DistributionTable,
    VerificationReport,
    derangement_count,
    enum_derangements,
    enum_permutations,
    enum_shuffle_class,
    joint_distribution,
    verify_claim,
)
from .errors import (
    CapExceededError,
    CoefficientOverflowError,
    FixmahonError,
    NeutralLetterError,
    NoZeroError,
    NotADerangementError,
    WordFormatError,
)
from .permutations import (
    Permutation,
    StatVector,
    der,
    exc_count,
    f3_inv_perm,
    f3_perm,
    f3_phi_inv_perm,
    fix_count,
    fix_set,
    format_permutation,
    parse_permutation,
    perm_stats,
    phi_inv_perm,
    phi_perm,
    zder,
    zder_inv,
)
from .qseries import (
    MultiPoly,
    brute_A_fix_des_maj,
    brute_A_fix_exc_maj,
    qbinom,
    qpoch,
    variable,
    verify_identity_126,
    verify_identity_127,
)
from .transform_f3 import (
    TailDecomposition,
    delta,
    delta_inv,
    f3,
    f3_inv,
    gamma,
    gamma_inv,
    tail_decomposition,
)
from .transform_phi import (
    CanonicalFactorization,
    canonical_factorize,
    phi,
    phi_l,
    phi_via_theta,
    psi,
    psi_l,
)
from .words import (
    IndexSet,
    LetterClass,
    ShuffleClassId,
    Word,
    classify,
    des_set,
    format_index_set,
    format_word,
    is_derangement_word,
    letter_classes,
    maj,
    mafz,
    parse_word,
    pos_subword,
    positive_count,
    red_map,
    rise_bullet_from_classes,
    rise_bullet_set,
    rise_set,
    zero_count,
    zero_set,
)

__version__ = "0.1.0"
