"""Computations with monodromy factorizations of hyperelliptic Lefschetz fibrations.

The package solves the word problems of the sphere braid group, the
mapping class group of the marked sphere, and the hyperelliptic mapping
class group; validates Hurwitz systems over closed bases; computes their
singular-fiber counts, Euler characteristic, localized signature, and the
order-two twist count w; decides stable isomorphism; and manipulates
chart descriptions with their local moves.
"""

from .braid_kernel import (
    BraidWord,
    CombedForm,
    DiracClass,
    PureWord,
    comb,
    delta_word,
    dirac_class,
    free_reduce,
    permutation,
    to_pure_generators,
)
from .mcg_kernel import (
    Alphabet,
    AlphabetKind,
    IotaClass,
    MCWord,
    RelatorTable,
    SymplecticMatrix,
    hg_equal,
    hg_is_trivial,
    iota_class,
    iota_letters,
    is_trivial_M0,
    relators,
    symplectic_rep,
    xi_word,
    zeta_word,
)
from .hurwitz import (
    ChainCore,
    Factor,
    FiberCounts,
    InvariantReport,
    MonodromyData,
    StableDecision,
    TwistCore,
    elementary_transformation,
    euler_characteristic,
    fiber_counts,
    fiber_sum,
    invariant_report,
    signature,
    simultaneous_conjugate,
    stabilize,
    stably_isomorphic,
    validate,
    w_invariant,
)
from .derivation import (
    Derivation,
    SearchBounds,
    centrality_filler,
    check,
    search,
)
from .chart import (
    Chart,
    ChartCounts,
    apply_move,
    counts,
    degree_sum_check,
    from_hurwitz,
    intersection_word,
    validate_chart,
)

__version__ = "0.1.0"
