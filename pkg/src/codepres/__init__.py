"""Code presentations of binary uniform codes and coded character sets."""

from .bitword import (
    SplitScheme,
    Word,
    apply_bitwise,
    decimal_value,
    parse_word,
    split_point,
    split_word,
    word_diff,
    word_from_int,
    word_inverse,
    word_product,
    word_sum,
)
from .codemodel import (
    CharacterSet,
    ClosureReport,
    Record,
    Universe,
    build_code,
    closure_check,
    code_inverse,
    subset,
    well_order,
)
from .presentation import (
    Equizone,
    Presentation,
    all_presentations,
    decinumer_set,
    equizone_partition,
    numer_set,
    presentation,
    reconstruct,
    zoned_set,
)
from .render import RenderContext, SetExpression, compact_expression, evaluate, render_table

__version__ = "0.1.0"
