//! Combinatorial crystal operators on words and the crystal graphs they span.

mod graph;
mod operators;

pub use graph::{
    component, component_for_shape, component_shapes, component_words, word_graph, word_graph_capped,
    CrystalGraph, DEFAULT_VERTEX_CAP,
};
pub use operators::{
    lower, lower_via_tensor, raise, raise_via_tensor, residue, stats, tensor_lower, tensor_raise, Factor,
    Residue, StringStats,
};
