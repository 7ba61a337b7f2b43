use thiserror::Error;

use crate::lattice::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertices per side must be in 1..={max} (got n = {0})", max = crate::lattice::GridSpec::MAX_N)]
    InvalidGrid(u64),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("points {0}, {1}, {2} do not form an equilateral triangle")]
    NotEquilateral(LatticePoint, LatticePoint, LatticePoint),

    #[error("point {point} lies outside the grid with n = {n}")]
    OutOfGrid { point: LatticePoint, n: u64 },

    #[error("brute-force enumeration refused for n = {n}: safety bound is {bound}")]
    GridTooLarge { n: u64, bound: u64 },

    #[error("invalid subset {elems:?} for n = {n}: need 1 <= a < b < c < d <= {max}", max = n + 2)]
    InvalidSubset { elems: [u64; 4], n: u64 },

    #[error("gap vector {gaps:?} must sum to n - 2 = {expected}")]
    InvalidGaps { gaps: [u64; 5], expected: i128 },

    #[error("invalid inscribed parameters (s={s}, t={t}, p={p}, q={q}, r={r}) for n = {n}")]
    InvalidParams {
        s: u64,
        t: u64,
        p: u64,
        q: u64,
        r: u64,
        n: u64,
    },

    #[error("rank {rank} out of range: n = {n} has {count} subsets")]
    RankOutOfRange { rank: u128, n: u64, count: u128 },

    #[error("circumscription failed: {qualifying} qualifying edges for triangle {triangle} (expected exactly one)")]
    Circumscription { triangle: String, qualifying: usize },
}
