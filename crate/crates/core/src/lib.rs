//! Exact edge-isoperimetry of conjugation-invariant sets in the
//! transposition Cayley graph `T_n` on the symmetric group `S_n`.
//!
//! Everything is computed in exact integer (or exact rational) arithmetic:
//! partitions and conjugacy-class sizes, irreducible and permutation
//! characters, the Laplacian spectrum of `T_n`, and the edge-boundary of
//! unions of conjugacy classes by three independent methods (spectral,
//! class-interaction matrix, and brute force over explicit permutation
//! sets). On top of that sit verifiers for the inequality ingredients of
//! the isoperimetric lower bound, and an exact minimizer for the boundary
//! over conjugation-invariant sets of a given size.

pub mod bounds;
pub mod characters;
pub mod counting;
pub mod optimizer;
pub mod partition;
pub mod perm;
pub mod report;
pub mod sets;
pub mod spectral;

pub use partition::{dominates, partitions_of, Partition, PartitionTable};
pub use perm::PermWord;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("n={0} out of supported range (max {1})")]
    NOutOfRange(usize, usize),
    #[error("partitions of different integers: {0} vs {1}")]
    MismatchedN(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation word: {0}")]
    InvalidPermutation(String),
    #[error("rank {rank} out of range for n={n}")]
    RankOutOfRange { n: usize, rank: u64 },
    #[error("determinantal expansion needs n - alpha_1 <= {max}, got {got}")]
    ExpansionTooLarge { got: usize, max: usize },
    #[error("{0} does not divide {1}")]
    NotDivisor(usize, usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("exactness violated: {0}")]
    ExactnessViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
