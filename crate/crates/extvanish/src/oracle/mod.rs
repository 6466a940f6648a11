//! Independent verification oracle: the exact Hecke algebra `H(S_n)` over
//! `F_r` at parameter `q mod r`, the Specht right ideal
//! `S^λ = x_λ τ_{w0λ} y_{λ'} H`, and a Meataxe irreducibility test.
//!
//! Nothing here consults the hook-graph criterion; agreement between the two
//! routes is checked in tests, and a confirmed disagreement is a failure to
//! be surfaced, not smoothed over.

pub mod fp;
pub mod hecke;
pub mod meataxe;
pub mod perm;
pub mod poly;

use thiserror::Error;

pub use fp::{FpMatrix, PrimeField};
pub use hecke::{
    specht_module, specht_module_bounded, x_element, y_element, HeckeElement, SpechtModuleRep,
    DEFAULT_MAX_RANK,
};
pub use meataxe::meataxe_irreducible;
pub use perm::{all_permutations, Perm, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("rank {n} exceeds the bound {max}; the spanning step works inside the n!-dimensional regular module")]
    RankBound { n: usize, max: usize },
    #[error("Specht dimension mismatch for ({lambda}): spanned {got} but the hook-length count is {expected}; aborting on a convention bug")]
    DimensionMismatch { lambda: String, got: usize, expected: u64 },
    #[error("generator action left the spanned ideal; aborting on a convention bug")]
    NotClosed,
    #[error("oracle inconclusive: random phase exhausted and dimension {dim} is past the exhaustive spin budget")]
    Inconclusive { dim: usize },
}
