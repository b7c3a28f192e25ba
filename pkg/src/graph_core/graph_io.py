"""
Graph and Split Files
JSON (de)serialization of multigraphs and two-part splits, validated
against JSON Schemas before any graph is constructed
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

import jsonschema

from .errors import GraphFormatError, GraphValidationError
from .multigraph import Multigraph, SplitInstance

logger = logging.getLogger(__name__)

GRAPH_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['vertices', 'edges'],
    'properties': {
        'vertices': {
            'type': 'array',
            'items': {'type': 'string'},
            'minItems': 1,
        },
        'edges': {
            'type': 'array',
            'items': {
                'type': 'array',
                'items': {'type': 'string'},
                'minItems': 2,
                'maxItems': 2,
            },
        },
        'terminals': {
            'type': 'array',
            'items': {'type': 'string'},
        },
    },
}

SPLIT_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['K', 'H', 'terminals'],
    'properties': {
        'K': GRAPH_SCHEMA,
        'H': GRAPH_SCHEMA,
        'terminals': {
            'type': 'array',
            'items': {'type': 'string'},
            'minItems': 1,
        },
    },
}


def _validate(data: Any, schema: Dict[str, Any], what: str) -> None:
    try:
        jsonschema.validate(instance=data, schema=schema)
    except jsonschema.ValidationError as e:
        location = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise GraphFormatError(f"Invalid {what} at {location}: {e.message}") from None


def graph_from_dict(data: Any) -> Multigraph:
    """
    Build a graph from its JSON object

    Raises:
        GraphFormatError: If the object does not match the graph schema
        GraphValidationError: If the graph violates its invariants
    """
    _validate(data, GRAPH_SCHEMA, 'graph')
    return Multigraph(
        vertices=tuple(data['vertices']),
        edges=tuple(tuple(e) for e in data['edges']),
        terminals=tuple(data.get('terminals', [])),
    )


def graph_to_dict(G: Multigraph) -> Dict[str, Any]:
    return {
        'vertices': list(G.vertices),
        'edges': [list(e) for e in G.edges],
        'terminals': list(G.terminals),
    }


def split_from_dict(data: Any) -> SplitInstance:
    """
    Build a split instance and check that both parts carry its terminal list

    Raises:
        GraphFormatError: If the object does not match the split schema
        GraphValidationError: If a part is invalid or its terminals differ
    """
    _validate(data, SPLIT_SCHEMA, 'split')
    K = graph_from_dict(data['K'])
    H = graph_from_dict(data['H'])
    terminals = tuple(data['terminals'])
    for name, part in (('K', K), ('H', H)):
        if part.terminals != terminals:
            raise GraphValidationError(
                f"Part {name} has terminals {list(part.terminals)}, expected {list(terminals)}"
            )
    return SplitInstance(K, H, terminals)


def split_to_dict(split: SplitInstance) -> Dict[str, Any]:
    return {
        'K': graph_to_dict(split.K),
        'H': graph_to_dict(split.H),
        'terminals': list(split.terminals),
    }


def parse_graph(text: str) -> Multigraph:
    return graph_from_dict(_loads(text))


def parse_split(text: str) -> SplitInstance:
    return split_from_dict(_loads(text))


def serialize_graph(G: Multigraph) -> str:
    return json.dumps(graph_to_dict(G), indent=2)


def serialize_split(split: SplitInstance) -> str:
    return json.dumps(split_to_dict(split), indent=2)


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"Malformed JSON: {e}") from None


def load_graph(path: Union[str, Path]) -> Multigraph:
    """Read and validate a graph file"""
    path = Path(path)
    logger.debug(f"Loading graph from {path}")
    return parse_graph(path.read_text(encoding='utf-8'))


def load_split(path: Union[str, Path]) -> SplitInstance:
    """Read and validate a split file"""
    path = Path(path)
    logger.debug(f"Loading split from {path}")
    split = parse_split(path.read_text(encoding='utf-8'))
    logger.info(
        f"Loaded split {path.name}: |E(K)|={split.K.num_edges}, "
        f"|E(H)|={split.H.num_edges}, n={split.n}"
    )
    return split
