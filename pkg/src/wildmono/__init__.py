"""wildmono: exact invariants of wildly ramified local monodromy on the
formal punctured disc, and the classification of rank-7 rigid local systems
with G2 monodromy whose slopes have numerator one."""

__version__ = "0.1.0"

from .gf import Field, FieldElem, field, nth_root, root_of_unity
from .laurent import LaurentTail, TruncSeries, as_reduce, series_nth_root
from .tame import (TameAtom, TameChar, TameRep, char_inv, char_mul,
                   char_order, char_pullback, pushforward_decompose,
                   tame_dual, tame_invariants, tame_tensor)
from .elementary import (ElementaryAtom, LocalRep, ModelError, canonicalize,
                         determinant, dual, formal_monodromy, invariant_dim,
                         is_isomorphic, is_selfdual, tame_local, tensor,
                         torus_data, wild_atom)
from .fourier import (FTResult, TransformError, ft_rank, local_ft_0_inf,
                      reduction_step_rank, stationary_phase,
                      twist_translation)
from .rigidity import (INF, GlobalLocalData, euler_char,
                       index_of_rigidity, is_cohomologically_rigid)
from .g2 import (DEFAULT_PARAMS, G2Witness, RowSpec, VerificationReport,
                 classify, g2_torus_pattern, g2_weight_pattern,
                 pole_exclusion_scan, verify_all_rows, verify_table_row)
from .parser import (GrammarError, InputDocument, parse_document,
                     parse_local_rep, print_local_rep)
