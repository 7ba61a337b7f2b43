//! Equilateral lattice triangles and the brute-force enumeration oracle.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{GridSpec, LatticePoint};

/// Default cap on `n` for [`enumerate_brute_force`]. The triple loop is cubic
/// in the number of grid points (about 5.6 million triples at `n = 25`).
pub const BRUTE_FORCE_BOUND: u64 = 25;

/// An equilateral triangle with vertices sorted by `(y, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    vertices: [LatticePoint; 3],
}

impl Triangle {
    pub fn vertices(&self) -> [LatticePoint; 3] {
        self.vertices
    }

    /// Squared side length.
    pub fn side_sq(&self) -> u64 {
        let [a, b, _] = self.vertices;
        a.delta_to(b)
            .and_then(|d| d.norm_sq())
            .expect("triangle vertices lie in a supported grid")
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "[{a},{b},{c}]")
    }
}

/// True iff the points are distinct and `r − p` is `q − p` turned by ±60°.
///
/// Works in 128-bit arithmetic, so any `i64` input is handled exactly.
pub fn is_equilateral(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> bool {
    let (px, py) = (p.x as i128, p.y as i128);
    let (ux, uy) = (q.x as i128 - px, q.y as i128 - py);
    let (wx, wy) = (r.x as i128 - px, r.y as i128 - py);
    if ux == 0 && uy == 0 {
        return false;
    }
    let ccw = (-uy, ux + uy);
    let cw = (ux + uy, -ux);
    (wx, wy) == ccw || (wx, wy) == cw
}

/// The same predicate stated as "three equal, nonzero squared side lengths".
pub fn is_equilateral_by_norms(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> Result<bool> {
    let a = p.delta_to(q)?.norm_sq()?;
    let b = q.delta_to(r)?.norm_sq()?;
    let c = r.delta_to(p)?.norm_sq()?;
    Ok(a != 0 && a == b && b == c)
}

/// Sorts the vertices into canonical order after checking that they form an
/// equilateral triangle inside `grid`.
pub fn canonicalize(
    grid: &GridSpec,
    p: LatticePoint,
    q: LatticePoint,
    r: LatticePoint,
) -> Result<Triangle> {
    for point in [p, q, r] {
        if !grid.contains(point) {
            return Err(Error::OutOfGrid { point, n: grid.n() });
        }
    }
    if !is_equilateral(p, q, r) {
        return Err(Error::NotEquilateral(p, q, r));
    }
    let mut vertices = [p, q, r];
    vertices.sort();
    Ok(Triangle { vertices })
}

/// Every equilateral triangle of the grid, found by testing all 3-subsets of
/// grid points. Refuses `n` above [`BRUTE_FORCE_BOUND`].
pub fn enumerate_brute_force(grid: &GridSpec) -> Result<BTreeSet<Triangle>> {
    enumerate_brute_force_bounded(grid, BRUTE_FORCE_BOUND)
}

pub fn enumerate_brute_force_bounded(grid: &GridSpec, bound: u64) -> Result<BTreeSet<Triangle>> {
    if grid.n() > bound {
        return Err(Error::GridTooLarge { n: grid.n(), bound });
    }
    let points = grid.points();
    let mut found = BTreeSet::new();
    for (i, &p) in points.iter().enumerate() {
        for (j, &q) in points.iter().enumerate().skip(i + 1) {
            for &r in &points[j + 1..] {
                if is_equilateral(p, q, r) {
                    // Points arrive in grid order, so the triple is already canonical.
                    found.insert(Triangle {
                        vertices: [p, q, r],
                    });
                }
            }
        }
    }
    Ok(found)
}
