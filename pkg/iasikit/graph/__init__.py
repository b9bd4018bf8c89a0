# Copyright (c) iasikit authors. All rights reserved.
from .simple import Edge, Graph, edge_key, same_up_to_relabel

from .bipartite import (Bipartition, two_coloring, is_bipartite,
                        greedy_coloring, color_classes)

from .transforms import (ElementCorrespondence, edge_vertex_id,
                         contraction_vertex_id, subdivision_vertex_id,
                         line_graph, total_graph, subdivide, contract,
                         topological_reduction, subgraph, apply_transform)

from .family import (path_graph, cycle_graph, star_graph, complete_graph,
                     complete_bipartite_graph, small_graph_family)

from .codec import EdgeListHandler, parse_edge_list, dump_edge_list

__all__ = [k for k in globals().keys() if not k.startswith("_")]
