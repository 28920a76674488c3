//! Finite simple graphs, the parameters `a_i`/`c_i`, and derived constructions.

mod constructions;
mod graph;
mod params;

pub use constructions::{
    bipartite_double, bipartite_parts, complete_graph, cycle_graph, distance2_graph,
    halved_graphs, hypercube, is_locally, path_graph, triangular_graph, HalvedGraphs,
};
pub use graph::{SimpleGraph, UNREACHED};
pub use params::{
    cube_like_from_params, is_cube_like, is_rectagraph, local_params, LocalParams, ParamValue,
};
