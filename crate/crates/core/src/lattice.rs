//! Exact integer coordinates for the triangular lattice.
//!
//! A point `(x, y)` sits at `x·(1, 0) + y·(1/2, √3/2)` in the plane. The grid
//! with `n` vertices per side is anchored with its corner at the origin and its
//! bottom edge along `+x`, so membership is `x ≥ 0, y ≥ 0, x + y ≤ n − 1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A triangular grid with `n` vertices on each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    n: u64,
}

impl GridSpec {
    /// Largest supported `n`. Keeps every coordinate and every count inside
    /// the 64-bit and 128-bit ranges used below.
    pub const MAX_N: u64 = u32::MAX as u64;

    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n > Self::MAX_N {
            return Err(Error::InvalidGrid(n));
        }
        Ok(GridSpec { n })
    }

    /// Vertices per side.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Side length in edges, `n − 1`.
    pub fn side(&self) -> i64 {
        self.n as i64 - 1
    }

    pub fn vertex_count(&self) -> u64 {
        self.n * (self.n + 1) / 2
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        p.x >= 0 && p.y >= 0 && p.x.checked_add(p.y).is_some_and(|s| s <= self.side())
    }

    /// All grid points ordered by ascending `y`, then ascending `x`.
    pub fn points(&self) -> Vec<LatticePoint> {
        let side = self.side();
        (0..=side)
            .flat_map(|y| (0..=side - y).map(move |x| LatticePoint::new(x, y)))
            .collect()
    }
}

/// Point of the triangular lattice in the 60° basis.
///
/// Ordering is by `(y, x)`, which is the row-major order of [`GridSpec::points`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// The vector from `self` to `to`.
    pub fn delta_to(self, to: LatticePoint) -> Result<Delta> {
        let dx =
            to.x.checked_sub(self.x)
                .ok_or(Error::Overflow("point difference"))?;
        let dy =
            to.y.checked_sub(self.y)
                .ok_or(Error::Overflow("point difference"))?;
        Ok(Delta::new(dx, dy))
    }

    pub fn offset(self, d: Delta) -> Result<LatticePoint> {
        let x = self
            .x
            .checked_add(d.dx)
            .ok_or(Error::Overflow("point offset"))?;
        let y = self
            .y
            .checked_add(d.dy)
            .ok_or(Error::Overflow("point offset"))?;
        Ok(LatticePoint::new(x, y))
    }

    /// Cartesian position of the point for unit edge length.
    pub fn to_cartesian(self) -> (f64, f64) {
        let x = self.x as f64 + 0.5 * self.y as f64;
        let y = self.y as f64 * (3f64.sqrt() / 2.0);
        (x, y)
    }
}

impl Ord for LatticePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for LatticePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Difference of two lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Delta {
    pub dx: i64,
    pub dy: i64,
}

/// Sign of a 2D cross product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn signum(self) -> i32 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

impl Delta {
    pub const ZERO: Delta = Delta::new(0, 0);

    pub const fn new(dx: i64, dy: i64) -> Self {
        Delta { dx, dy }
    }

    pub fn is_zero(self) -> bool {
        self == Delta::ZERO
    }

    /// Counterclockwise rotation by 60°: `(dx, dy) ↦ (−dy, dx + dy)`.
    ///
    /// Panics if a component leaves the `i64` range.
    pub fn rotate60(self) -> Delta {
        self.checked_rotate60().expect("rotate60 overflowed i64")
    }

    pub fn checked_rotate60(self) -> Option<Delta> {
        Some(Delta::new(
            self.dy.checked_neg()?,
            self.dx.checked_add(self.dy)?,
        ))
    }

    /// Clockwise rotation by 60°: `(dx, dy) ↦ (dx + dy, −dx)`.
    ///
    /// Panics if a component leaves the `i64` range.
    pub fn rotate_neg60(self) -> Delta {
        self.checked_rotate_neg60()
            .expect("rotate_neg60 overflowed i64")
    }

    pub fn checked_rotate_neg60(self) -> Option<Delta> {
        Some(Delta::new(
            self.dx.checked_add(self.dy)?,
            self.dx.checked_neg()?,
        ))
    }

    /// Squared Euclidean length, `dx² + dx·dy + dy²`.
    pub fn norm_sq(self) -> Result<u64> {
        let (dx, dy) = (self.dx as i128, self.dy as i128);
        let sum = (dx * dx)
            .checked_add(dx * dy)
            .and_then(|v| v.checked_add(dy * dy))
            .ok_or(Error::Overflow("norm_sq"))?;
        u64::try_from(sum).map_err(|_| Error::Overflow("norm_sq"))
    }

    /// Orientation of `other` relative to `self`.
    pub fn cross_sign(self, other: Delta) -> Result<Orientation> {
        let lhs = self.dx as i128 * other.dy as i128;
        let rhs = other.dx as i128 * self.dy as i128;
        let cross = lhs.checked_sub(rhs).ok_or(Error::Overflow("cross_sign"))?;
        Ok(match cross.cmp(&0) {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::CounterClockwise,
        })
    }
}
