//! Exact tools for connected and monotone mixed graph searching.

pub mod bitset;
pub mod blocks;
pub mod canon;
pub mod contraction;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod obstruction;
pub mod recognizer;
pub mod rooted;
pub mod search;
pub mod verify;

pub use bitset::Bits;
pub use error::{Error, Result};
pub use graph::{EdgeIndex, Graph};
pub use rooted::{glue, Enhancement, Piece, RootedGraph};
