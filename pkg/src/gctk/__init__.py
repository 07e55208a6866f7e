"""gctk: graph complexes toolkit.

Complexes of directed forests, independence complexes and anti-Rips
complexes, their constructive homotopy machinery (shelling orders, wedge
decompositions with generating faces, fold collapses, connectivity
bounds), and a brute-force mod-2 homology oracle that cross-checks every
prediction.
"""

from .anti_rips import (
    PointSet,
    anti_rips_complex,
    grid_connectivity_bound,
    line_homotopy,
    proximity_graph,
    scale_sweep,
)
from .complexes import (
    HomotopyType,
    ShellingResult,
    SimplicialComplex,
    all_faces,
    cone,
    delete,
    face_set,
    induced_subcomplex,
    intersect,
    is_shelling,
    link,
    reduced_euler,
    star,
    susp,
    wedge,
)
from .errors import ToolkitError
from .forests import (
    ContractibilityReport,
    Partition,
    dag_contractibility_report,
    dag_euler_characteristic,
    dag_homotopy_type,
    find_nice_edge,
    forest_complex,
    forest_roots,
    is_directed_forest,
    is_nice_edge,
    maximal_forests,
    root_path_partition,
    rooted_forest_complex,
    rooted_forests,
    shelling_order,
)
from .graphs import (
    DirectedGraph,
    UndirectedGraph,
    in_degree,
    induced_subgraph,
    is_acyclic,
    neighborhood,
    parse_directed,
    parse_undirected,
    remove_vertices,
    sources,
    topological_order,
)
from .homology import (
    BettiVector,
    CollapseResult,
    MatchReport,
    betti,
    boundary_rank,
    greedy_collapse,
    homological_connectivity,
    matches,
)
from .independence import (
    FoldStep,
    GeneratingFaces,
    StandardFactReport,
    clique_extension_faces,
    clique_neighborhood_faces,
    cycle_family_faces,
    cycle_power_graph,
    find_fold,
    fold_reduce,
    forest_homotopy,
    independence_complex,
    max_degree_connectivity_bound,
    maximal_independent_sets,
    path_family_faces,
    path_power_graph,
    standard_fact_checks,
    verify_generating_faces,
)

__version__ = "0.1.0"
