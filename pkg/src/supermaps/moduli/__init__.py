from .dimensions import (
    ModuliProblem,
    NaturalMaps,
    TruncationReport,
    fermionic_euler_characteristic,
    natural_maps,
    taub_consistency,
    vsdim,
    witten_count,
)
from .graphs import (
    DualGraph,
    GraphError,
    contract_vertex,
    enumerate_stable_graphs,
    forget_point,
    graph_genus,
    is_stable_map_graph,
    moduli_exists,
    parse_graph,
    special_points,
    stabilize_curve,
)
