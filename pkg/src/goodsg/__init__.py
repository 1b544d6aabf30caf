"""Exact computations with good semigroups of N^h and their relative ideals."""
from .algebra import (EmptyIdealError, bidual, ideal_difference, ideal_sum, is_relative_ideal,
                      m_minus_e, maximal_ideal, translate)
from .canonical import (Classification, almost_symmetry_criteria, check_duality, classify, delta_union,
                        is_almost_symmetric, is_canonical_ideal, is_med, is_symmetric, std_canonical)
from .fileformat import FormatError, parse, parse_many, read, serialize, serialize_many, write
from .generator import (EnumerationTooLarge, GenConfig, GenerationError, enumerate_good, random_good,
                        random_good_ideal)
from .lattice import Box, DimensionError, Order, Point, compare, in_delta, in_delta_i, join, leq, meet
from .render import RenderError, render_ascii, render_svg
from .report import Report
from .structure import (IDENTITIES, Decomposition, SupportError, UnknownIdentity, decompose, interleave_product,
                        jacobson, multiplicity_vector, product, projection, verify_all, verify_identity)
from .suite import verify_suite
from .truncated import (GoodSemigroup, GoodSemigroupError, InternalDefect, NotGoodError, NotLocalError,
                        RepresentationError, TruncatedSet, ValidationFinding, delta_empty, delta_witness,
                        frobenius, g2_failures, is_good, is_local, multiplicity, validate)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
