//! Planar decompositions of complete multipartite graphs.
//!
//! The crate builds decompositions of `K_{n,n}`, `K_{1,n,n}`, `K_{2,n,n}` and
//! `K_{1,1,n,n}` with the minimum number of planar pages, checks them with an
//! independent verifier, and computes exact thickness for small graphs.

mod error;

pub mod base;
pub mod constructions;
pub mod io;
pub mod multipartite;
pub mod oracle;
pub mod planarity;
pub mod selftest;
pub mod verify;

pub use base::{base_page, base_pages, normalize_subscript};
pub use constructions::{
    add_edge_x1x2, anchor_for, delete_to_n, generate, Case, CaseSelector, Decomposition,
};
pub use error::{Error, Result};
pub use io::{load, save, DecompositionDocument, DotMode};
pub use multipartite::{
    edge_count, thickness_formula, Edge, GraphFamily, Page, Part, PartLayout, VertexRef,
};
pub use oracle::{
    exact_thickness, thickness_lower_bound, OracleKind, OracleResult, DEFAULT_NODE_BUDGET,
};
pub use planarity::{
    is_planar, naive_is_planar, planar_embedding, validate_embedding, RotationSystem, SimpleGraph,
};
pub use verify::{verify_decomposition, verify_partition, VerificationReport};
