"""Persistent Hochschild homology of digraphs via connectivity digraphs."""

from .connectivity import ConnSpec, ConnectivityDigraph, apply_connectivity, n_path_digraph, n_path_graph, q_digraph, q_graph
from .digraph import Digraph, Partition, condensation, is_acyclic, line_digraph, strongly_connected_components, weak_components
from .errors import *  # noqa: F401,F403
from .flag import OrderedSimplicialComplex, directed_flag_complex, extended_face, face
from .hochschild import HHSummary, count_paths, count_simple_cycles, hh_dimensions, hochschild_characteristic
from .persistence import (
    PersistenceCurve,
    PersistenceDiagram,
    WeightedDigraph,
    bottleneck_distance,
    characteristic_pipeline,
    critical_values,
    persistence_diagram,
    persistent_betti,
    sublevel_digraph,
)
from .poset_homology import betti_f2, order_complex, q_homotopy_betti, reachability_poset

__version__ = "0.1.0"
