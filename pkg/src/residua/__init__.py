"""residua: exact polynomial-ring algebra over QQ and prime fields.

Groebner bases and syzygies, minimal graded free resolutions and Betti
tables, Koszul/Ext homology with canonical modules and Bass numbers, Rees
algebras and residual intersections, and a verification suite that checks
Betti-number statements on an explicit ideal corpus.
"""

from .corpus import CorpusEntry, corpus, corpus_entry
from .homology import (
    BassTable,
    KoszulComplex,
    SubquotientModule,
    bass_numbers,
    bass_numbers_hom_oracle,
    canonical_module,
    equidimensional_hull,
    ext_module,
    koszul_complex,
    koszul_homology,
    present_subquotient,
    sliding_depth_check,
    tor_dimensions,
)
from .ideals import (
    Ideal,
    PresentedModule,
    Submodule,
    kernel_of_matrix,
    minors_ideal,
    syzygy_module,
)
from .matrices import FreeModuleMatrix, matrix_compose
from .resolutions import (
    BettiTable,
    ChainComplex,
    betti_table,
    check_exactness,
    depth,
    free_resolution,
    hilbert_numerator,
    is_cohen_macaulay,
    is_perfect_ideal,
    minimize,
    module_rank,
    projective_dimension,
    quotient_is_cohen_macaulay,
    schreyer_complex,
)
from .residual import (
    ReductionData,
    ReesData,
    ResidualData,
    analytic_spread,
    g_infinity_check,
    g_s_check,
    generic_combinations,
    is_regular_sequence,
    link,
    mapping_cone_psi,
    minimal_reduction,
    rees_equations,
    residual_intersection,
)
from .ring import (
    GF,
    QQ,
    BlockElim,
    GrevLex,
    Lex,
    Polynomial,
    PolynomialRing,
    compare_monomials,
)
from .rng import SeedStream
from .suite import (
    STATEMENTS,
    VerificationReport,
    reproduce_example,
    run_all,
    verify_lemma_rank,
    verify_prop1,
    verify_prop_c1,
    verify_prop_canonical,
    verify_thm2a,
    verify_thm2b,
    verify_thm2c,
    verify_thm3_and_cor,
)
from .textio import ParseError, parse_input, parse_polynomial

__version__ = "0.1.0"
