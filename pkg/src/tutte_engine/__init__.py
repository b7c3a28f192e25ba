"""
Tutte Engine Module
Tutte and Negami polynomials, auxiliary terminal-partition polynomials,
spanning forest counts and the identities relating them
"""

from .errors import DisconnectedGraphError, TooLargeError
from .subgraphs import MAX_ORACLE_EDGES, subgraph_profile
from .tutte import DeletionContraction, tutte_at, tutte_dc, tutte_oracle, tutte_value
from .negami import (
    EdgeOrder,
    NegamiMode,
    negami,
    negami_expansion,
    negami_tutte_check,
    negami_tutte_relation,
)
from .auxiliary import aux_T, aux_f
from .forests import ForestCounts, forest_counts, kirchhoff_count
from .identities import (
    aux_limit_lemma_check,
    contraction_negami_identity_check,
    contraction_tutte_identity_check,
    forest_identity_check,
    glue_negami_identity_check,
    glue_tutte_identity_check,
    limit_lemma_check,
    one_point_join_check,
)

__all__ = [
    'DisconnectedGraphError',
    'TooLargeError',
    'MAX_ORACLE_EDGES',
    'subgraph_profile',
    'DeletionContraction',
    'tutte_at',
    'tutte_dc',
    'tutte_oracle',
    'tutte_value',
    'EdgeOrder',
    'NegamiMode',
    'negami',
    'negami_expansion',
    'negami_tutte_check',
    'negami_tutte_relation',
    'aux_T',
    'aux_f',
    'ForestCounts',
    'forest_counts',
    'kirchhoff_count',
    'aux_limit_lemma_check',
    'contraction_negami_identity_check',
    'contraction_tutte_identity_check',
    'forest_identity_check',
    'glue_negami_identity_check',
    'glue_tutte_identity_check',
    'limit_lemma_check',
    'one_point_join_check',
]
