//! Graphs, digraphs, the matrices `beta * D + gamma * A` built from them,
//! anchored cycle enumeration and file formats.

pub mod cycles;
pub mod families;
pub mod io;
mod matrix;
mod model;

pub use cycles::{
    cycles_through_edge, cycles_through_vertex, dicycles_through_arc, dicycles_through_vertex,
    CycleRecord,
};
pub use io::{parse_graph, parse_graph6, to_graph6, write_edge_list, GRAPH6_PRACTICAL_LIMIT};
pub use matrix::{build_h, build_h_digraph, build_h_graph, MatrixParams, Preset, RationalMatrix};
pub use model::{AnyGraph, Digraph, Graph, MAX_VERTICES};

pub(crate) use model::bits;
