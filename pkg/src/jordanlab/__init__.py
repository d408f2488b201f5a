"""Exact decision procedures for finite-dimensional Jordan algebras.

Algebras are presented by structure constants over the rationals or a prime
field F_p (p odd).  The package decides annihilator-based structural
properties (RJ, BJ, Rickart, Baer, non-degeneracy), computes radicals,
idempotent lattices and Peirce decompositions, and ships a regression corpus
of named algebras together with a command-line front end (``jordanlab``).
"""

from .algfile import (
    DuplicateProduct,
    IndexOutOfRange,
    ParseError,
    dumps,
    load,
    loads,
    save,
)
from .annihilators import (
    BAER,
    BJ,
    NILROOT,
    NONDEG,
    QUAD_NONDEG,
    RICKART,
    RJ,
    ClassReport,
    Verdict,
    baer_check,
    bj_check,
    bj_check_direct,
    bj_check_via_t25,
    element_table,
    idempotent_kernel_identity,
    idempotents,
    left_annihilator,
    nilroot_check,
    nondeg_check,
    quad_nondeg_check,
    quasi_unit,
    rickart_check,
    right_annihilator,
    rj_check,
    squares_set,
    trivial_elements,
)
from .budget import DEFAULT_BUDGET, CharThreeNeedsExhaustive, TooLarge
from .core import (
    Element,
    JordanAlgebra,
    NotAnIdeal,
    NotUnital,
    ValidationReport,
    direct_sum,
    is_ideal,
    quotient,
    special_from_associative,
    unital_hull,
    validate_jordan,
)
from .corpus import algebra_keys, build_algebra, fuzz_sweep, run_corpus
from .fields import BadCoefficient, Field
from .linalg import LinOp, Subspace
from .radlat import (
    IdemLattice,
    NotIdempotent,
    RadicalReport,
    deg_radical,
    idempotent_lattice,
    jacobson_radical,
    nil_radical,
    peirce,
)

__version__ = "0.1.0"

__all__ = [
    "BAER",
    "BJ",
    "BadCoefficient",
    "CharThreeNeedsExhaustive",
    "ClassReport",
    "DEFAULT_BUDGET",
    "DuplicateProduct",
    "Element",
    "Field",
    "IdemLattice",
    "IndexOutOfRange",
    "JordanAlgebra",
    "LinOp",
    "NILROOT",
    "NONDEG",
    "NotAnIdeal",
    "NotIdempotent",
    "NotUnital",
    "ParseError",
    "QUAD_NONDEG",
    "RICKART",
    "RJ",
    "RadicalReport",
    "Subspace",
    "TooLarge",
    "ValidationReport",
    "Verdict",
    "algebra_keys",
    "baer_check",
    "bj_check",
    "bj_check_direct",
    "bj_check_via_t25",
    "build_algebra",
    "deg_radical",
    "direct_sum",
    "dumps",
    "element_table",
    "fuzz_sweep",
    "idempotent_kernel_identity",
    "idempotent_lattice",
    "idempotents",
    "is_ideal",
    "jacobson_radical",
    "left_annihilator",
    "load",
    "loads",
    "nil_radical",
    "nilroot_check",
    "nondeg_check",
    "peirce",
    "quad_nondeg_check",
    "quasi_unit",
    "quotient",
    "rickart_check",
    "right_annihilator",
    "rj_check",
    "run_corpus",
    "save",
    "special_from_associative",
    "squares_set",
    "trivial_elements",
    "unital_hull",
    "validate_jordan",
]
