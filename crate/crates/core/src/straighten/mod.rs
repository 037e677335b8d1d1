//! Bitableaux as products of quantum minors, expansion in the bitableau
//! basis, and straightening of tabloids in the flag algebra.

mod bitableau;
mod expand;
mod flag;
mod solver;

pub use bitableau::{
    bitableau_to_ncpoly, bitabloid_to_ncpoly, quantum_tableau, quantum_tabloid, Bitableau, Bitabloid,
};
pub use expand::{
    compositions, expand_in_bitableaux, graded_bitableaux, graded_monomials, graded_rank, graded_solver, gradings,
    q_zero_class, rs_prediction, verify_theorem1, BitabExpansion, Grading, RankReport, Theorem1Input,
    Theorem1Report,
};
pub use flag::{
    exchange_terms, expand_in_quantum_tableaux, garnir_terms, quantum_tableau_solver, sort_column,
    straighten_columns, straighten_flag, FlagExpansion,
};
pub use solver::{invert, rank, Solver};
