"""
Graph Core Module
Labeled multigraphs, minor operations, terminal identification and gluing
"""

from .errors import (
    GraphFormatError,
    GraphValidationError,
    InvalidPartitionError,
    LoopContractionError,
    NoSuchEdgeError,
    SharedNonTerminalError,
    TerminalMismatchError,
    TerminalMissingError,
)
from .multigraph import (
    Edge,
    EdgeClass,
    Multigraph,
    SplitInstance,
    classify_edge,
    components,
    contract_edge,
    delete_edge,
    edge_key,
    glue,
    identify,
    induced_partition,
)
from .graph_io import (
    graph_from_dict,
    graph_to_dict,
    load_graph,
    load_split,
    parse_graph,
    parse_split,
    serialize_graph,
    serialize_split,
    split_from_dict,
    split_to_dict,
)
from .builders import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    cycle_split,
    dense_block_split,
    edgeless_graph,
    ladder_graph,
    ladder_split,
    path_graph,
    random_connected_part,
)

__all__ = [
    'GraphFormatError',
    'GraphValidationError',
    'InvalidPartitionError',
    'LoopContractionError',
    'NoSuchEdgeError',
    'SharedNonTerminalError',
    'TerminalMismatchError',
    'TerminalMissingError',
    'Edge',
    'EdgeClass',
    'Multigraph',
    'SplitInstance',
    'classify_edge',
    'components',
    'contract_edge',
    'delete_edge',
    'edge_key',
    'glue',
    'identify',
    'induced_partition',
    'graph_from_dict',
    'graph_to_dict',
    'load_graph',
    'load_split',
    'parse_graph',
    'parse_split',
    'serialize_graph',
    'serialize_split',
    'split_from_dict',
    'split_to_dict',
    'bowtie_graph',
    'complete_graph',
    'cycle_graph',
    'cycle_split',
    'dense_block_split',
    'edgeless_graph',
    'ladder_graph',
    'ladder_split',
    'path_graph',
    'random_connected_part',
]
