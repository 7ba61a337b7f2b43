//! Bijection between 4-subsets of `{1, …, n+2}` and equilateral triangles of
//! the grid with `n` vertices per side.
//!
//! A subset `{a < b < c < d}` leaves five gaps `(g1, …, g5)` that sum to
//! `n − 2`. The gaps fix a triangle in three steps:
//!
//! * `s = g4 + g5 + 1` is the side of an aligned upward triangle,
//! * `(p, q, r) = (g1, g2, g3)` places that triangle: its corner sits at
//!   `(p, q)` and `r` is the leftover room `N − s − p − q`,
//! * `t = g4` is the tilt. The chosen triangle has one vertex on each side of
//!   the aligned one, `t` steps counterclockwise from each corner.
//!
//! Every equilateral lattice triangle has exactly one such circumscribing
//! upward triangle, which is what makes the map invertible.

use std::fmt;

use serde::Serialize;

use crate::counting::binomial;
use crate::error::{Error, Result};
use crate::lattice::{Delta, GridSpec, LatticePoint, Orientation};
use crate::triangles::{canonicalize, Triangle};

/// Four elements `1 ≤ a < b < c < d ≤ n + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset4([u64; 4]);

impl Subset4 {
    pub fn new(elems: [u64; 4], grid: &GridSpec) -> Result<Self> {
        let subset = Subset4(elems);
        subset.check(grid)?;
        Ok(subset)
    }

    pub fn elements(&self) -> [u64; 4] {
        self.0
    }

    fn check(&self, grid: &GridSpec) -> Result<()> {
        let [a, b, c, d] = self.0;
        if a >= 1 && a < b && b < c && c < d && d <= grid.n() + 2 {
            Ok(())
        } else {
            Err(Error::InvalidSubset {
                elems: self.0,
                n: grid.n(),
            })
        }
    }
}

impl fmt::Display for Subset4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{{{a},{b},{c},{d}}}")
    }
}

/// Sizes of the five runs of unchosen numbers around a 4-subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GapVector([u64; 5]);

impl GapVector {
    pub fn new(gaps: [u64; 5], grid: &GridSpec) -> Result<Self> {
        let expected = grid.n() as i128 - 2;
        let sum: i128 = gaps.iter().map(|&g| g as i128).sum();
        if sum != expected {
            return Err(Error::InvalidGaps { gaps, expected });
        }
        Ok(GapVector(gaps))
    }

    pub fn gaps(&self) -> [u64; 5] {
        self.0
    }
}

/// Side `s` and placement `(p, q, r)` of the circumscribing upward triangle,
/// plus the tilt `t` of the inscribed one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InscribedParams {
    pub s: u64,
    pub t: u64,
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

impl InscribedParams {
    /// Checks `1 ≤ s ≤ N`, `t < s` and `p + q + r = N − s`.
    pub fn validate(&self, grid: &GridSpec) -> Result<()> {
        let side = grid.side() as u128;
        let InscribedParams { s, t, p, q, r } = *self;
        let ok = s >= 1
            && s as u128 <= side
            && t < s
            && p as u128 + q as u128 + r as u128 + s as u128 == side;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams {
                s,
                t,
                p,
                q,
                r,
                n: grid.n(),
            })
        }
    }

    /// Corner of the circumscribing triangle nearest the origin.
    pub fn anchor(&self) -> LatticePoint {
        LatticePoint::new(self.p as i64, self.q as i64)
    }

    /// Corners of the circumscribing upward triangle, counterclockwise from
    /// the anchor.
    pub fn circumscriber(&self) -> [LatticePoint; 3] {
        let (p, q, s) = (self.p as i64, self.q as i64, self.s as i64);
        [
            LatticePoint::new(p, q),
            LatticePoint::new(p + s, q),
            LatticePoint::new(p, q + s),
        ]
    }
}

pub fn subset_to_gaps(subset: Subset4, grid: &GridSpec) -> Result<GapVector> {
    subset.check(grid)?;
    let [a, b, c, d] = subset.0;
    Ok(GapVector([
        a - 1,
        b - a - 1,
        c - b - 1,
        d - c - 1,
        grid.n() + 2 - d,
    ]))
}

pub fn gaps_to_subset(gaps: GapVector, grid: &GridSpec) -> Result<Subset4> {
    let gaps = GapVector::new(gaps.0, grid)?;
    let [g1, g2, g3, g4, _] = gaps.0;
    let a = g1 + 1;
    let b = a + g2 + 1;
    let c = b + g3 + 1;
    let d = c + g4 + 1;
    Subset4::new([a, b, c, d], grid)
}

pub fn gaps_to_params(gaps: GapVector, grid: &GridSpec) -> Result<InscribedParams> {
    let gaps = GapVector::new(gaps.0, grid)?;
    let [g1, g2, g3, g4, g5] = gaps.0;
    let params = InscribedParams {
        s: g4 + g5 + 1,
        t: g4,
        p: g1,
        q: g2,
        r: g3,
    };
    debug_assert!(params.validate(grid).is_ok());
    Ok(params)
}

pub fn params_to_gaps(params: InscribedParams, grid: &GridSpec) -> Result<GapVector> {
    params.validate(grid)?;
    let InscribedParams { s, t, p, q, r } = params;
    GapVector::new([p, q, r, t, s - 1 - t], grid)
}

/// The triangle with vertices `A + (t, 0)`, `A + (s − t, t)`, `A + (0, s − t)`
/// where `A = (p, q)`.
pub fn params_to_triangle(params: InscribedParams, grid: &GridSpec) -> Result<Triangle> {
    params.validate(grid)?;
    let anchor = params.anchor();
    let (s, t) = (params.s as i64, params.t as i64);
    let v1 = anchor.offset(Delta::new(t, 0))?;
    let v2 = anchor.offset(Delta::new(s - t, t))?;
    let v3 = anchor.offset(Delta::new(0, s - t))?;
    let triangle = canonicalize(grid, v1, v2, v3);
    assert!(
        triangle.is_ok(),
        "valid parameters {params:?} produced {triangle:?}"
    );
    triangle
}

/// Recovers the circumscribing upward triangle. With the vertices in
/// counterclockwise order, exactly one directed edge `(dx, dy)` has `dy ≥ 0`
/// and `dx + dy ≥ 1`; it runs from the vertex on the bottom side of the
/// circumscriber to the one on its right side, so `t = dy` and
/// `s = dx + 2·dy`.
pub fn triangle_to_params(triangle: &Triangle, grid: &GridSpec) -> Result<InscribedParams> {
    let [a, mut b, mut c] = triangle.vertices();
    let triangle = canonicalize(grid, a, b, c)?;
    if a.delta_to(b)?.cross_sign(a.delta_to(c)?)? == Orientation::Clockwise {
        std::mem::swap(&mut b, &mut c);
    }
    let mut qualifying = Vec::with_capacity(1);
    for (from, to) in [(a, b), (b, c), (c, a)] {
        let d = from.delta_to(to)?;
        if d.dy >= 0 && d.dx + d.dy >= 1 {
            qualifying.push((from, d));
        }
    }
    let [(start, edge)] = qualifying[..] else {
        return Err(Error::Circumscription {
            triangle: triangle.to_string(),
            qualifying: qualifying.len(),
        });
    };
    let t = edge.dy;
    let s = edge.dx + 2 * edge.dy;
    let anchor = start.offset(Delta::new(-t, 0))?;
    let r = grid.side() - s - anchor.x - anchor.y;
    let params = InscribedParams {
        s: s as u64,
        t: t as u64,
        p: anchor.x as u64,
        q: anchor.y as u64,
        r: r as u64,
    };
    if anchor.x < 0 || anchor.y < 0 || r < 0 || params.validate(grid).is_err() {
        return Err(Error::Circumscription {
            triangle: triangle.to_string(),
            qualifying: 1,
        });
    }
    Ok(params)
}

/// Subset to triangle.
pub fn encode(subset: Subset4, grid: &GridSpec) -> Result<Triangle> {
    let gaps = subset_to_gaps(subset, grid)?;
    let params = gaps_to_params(gaps, grid)?;
    params_to_triangle(params, grid)
}

/// Triangle to subset; inverse of [`encode`].
pub fn decode(triangle: &Triangle, grid: &GridSpec) -> Result<Subset4> {
    let params = triangle_to_params(triangle, grid)?;
    let gaps = params_to_gaps(params, grid)?;
    gaps_to_subset(gaps, grid)
}

/// Colexicographic rank `C(a−1,1) + C(b−1,2) + C(c−1,3) + C(d−1,4)`.
pub fn rank(subset: Subset4, grid: &GridSpec) -> Result<u128> {
    subset.check(grid)?;
    let mut total: u128 = 0;
    for (i, &e) in subset.0.iter().enumerate() {
        total += binomial(e - 1, i as u64 + 1)?;
    }
    Ok(total)
}

/// Inverse of [`rank`]: greedily peels off the largest `C(c, k)` not
/// exceeding what is left of the index, for `k = 4, 3, 2, 1`.
pub fn unrank(index: u128, grid: &GridSpec) -> Result<Subset4> {
    let universe = grid.n() + 2;
    let count = binomial(universe, 4)?;
    if index >= count {
        return Err(Error::RankOutOfRange {
            rank: index,
            n: grid.n(),
            count,
        });
    }
    let mut rest = index;
    let mut elems = [0u64; 4];
    // Zero-based elements satisfy k − 1 ≤ c < bound.
    let mut bound = universe;
    for k in (1..=4u64).rev() {
        let (mut lo, mut hi) = (k - 1, bound - 1);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if binomial(mid, k)? <= rest {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        rest -= binomial(lo, k)?;
        elems[k as usize - 1] = lo + 1;
        bound = lo;
    }
    debug_assert_eq!(rest, 0);
    Subset4::new(elems, grid)
}
