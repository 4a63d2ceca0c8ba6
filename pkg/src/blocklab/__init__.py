"""Exact combinatorics of symmetric-group blocks of weight 2.

Partitions are plain tuples of weakly decreasing positive integers;
everything else (abaci, pyramids, block catalogs, decomposition
matrices, basic sets) is an immutable value computed from them.
"""

from .partitions import (
    Dominance,
    Partition,
    conjugate,
    dominance_cmp,
    enumerate_partitions,
    hooks,
    is_bg_partition,
    is_p_core,
    is_p_regular,
    lex_cmp,
    p_core_weight,
    partition,
    remove_rim_hook,
)
from .abacus import (
    Abacus,
    conjugate_abacus,
    from_partition,
    p_quotient,
    runner_labels,
    slide_bead,
    to_partition,
)
from .pyramid import Pyramid, build_pyramid, delta, entry_extended
from .block import BlockCatalog, enumerate_block
from .decomp import DecompMatrix, d43_reference, decomp_matrix, decomp_number, submatrix
from .mullineux import mullineux, mullineux_symbol, p_rim
from .subs import (
    Ubs,
    build_subs_odd_or_split,
    build_subs_w2,
    self_mullineux_census,
    verify_stability,
    verify_ubs,
    weight1_block,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
