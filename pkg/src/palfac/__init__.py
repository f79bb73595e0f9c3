"""Morphic words, singular and p-singular words, and their (palindromic) z- and c-factorizations."""

from .errors import (
    AlphabetMismatch,
    BudgetExceeded,
    EmptyInput,
    EmptyWord,
    EmptyWordInSet,
    GenerationFailed,
    IndexBelowRange,
    InputTooLarge,
    InvalidM,
    NonBinaryAlphabet,
    NotAPrefix,
    NotASuffix,
    NotProlongable,
    PalfacError,
    ParseError,
    StripMismatch,
)
from .factorize import (
    Factor,
    Factorization,
    Mode,
    certify_by_agreement,
    factorize,
    factorize_indexed,
    factorize_naive,
)
from .families import (
    BlockFamily,
    FamilyHandle,
    Fibonacci,
    MBonacci,
    MorphicFamily,
    ThueMorse,
    make_family,
    parse_block_template,
    staircase,
)
from .index import OccurrenceIndex, build_index
from .mbonacci import (
    LengthTable,
    PSingularSeq,
    fib_singular,
    flip_last,
    g_prefix,
    h,
    p_word,
    p_word_pal_decomposition,
    phi_m,
    q_block,
    z_length,
    z_singular,
    z_singular_closed,
)
from .words import (
    EPSILON,
    Morphism,
    Word,
    apply_morphism,
    earliest_occurrence_before,
    fixed_point_prefix,
    is_code,
    is_factor,
    is_palindrome,
    is_prolongable,
    parse_morphism,
    render,
    reverse,
    strip_prefix,
    strip_suffix,
)

__version__ = "0.1.0"
