"""Prime ideal sum graphs of finite commutative rings with certified genus bounds.

Thin wrapper over the C++ extension module; heavy lifting stays native and
results cross the boundary as JSON.
"""

import json

try:
    from ._pisgenus import (
        canonical_spec,
        find_subdivision,
        genus_bounds_json,
        kmn_genus,
        kn_genus,
        lattice_json,
        pis_graph_dot,
        pis_graph_json,
        predict_class,
        ring_order,
        trace_faces,
        verify_certificate,
        verify_json,
    )
except ImportError:  # plain cmake build: extension sits on sys.path directly
    from _pisgenus import (
        canonical_spec,
        find_subdivision,
        genus_bounds_json,
        kmn_genus,
        kn_genus,
        lattice_json,
        pis_graph_dot,
        pis_graph_json,
        predict_class,
        ring_order,
        trace_faces,
        verify_certificate,
        verify_json,
    )

__all__ = [
    "canonical_spec",
    "find_subdivision",
    "genus_bounds",
    "genus_bounds_json",
    "ideal_lattice",
    "kmn_genus",
    "kn_genus",
    "lattice_json",
    "pis_graph",
    "pis_graph_dot",
    "pis_graph_json",
    "predict_class",
    "ring_order",
    "trace_faces",
    "verify",
    "verify_certificate",
    "verify_json",
]


def ideal_lattice(spec):
    """All ideals of the ring given by `spec`, with flags and labels."""
    return json.loads(lattice_json(spec))


def pis_graph(spec):
    """The prime ideal sum graph as {"vertices": [...], "edges": [[i, j], ...]}."""
    return json.loads(pis_graph_json(spec))


def genus_bounds(graph, **kwargs):
    """Certified genus bounds for a graph dict or graph JSON string."""
    text = graph if isinstance(graph, str) else json.dumps(graph)
    return json.loads(genus_bounds_json(text, **kwargs))


def verify(spec, **kwargs):
    """Predict the genus class of PIS(spec) and check it against certified bounds."""
    return json.loads(verify_json(spec, **kwargs))
