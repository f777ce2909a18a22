//! Dyadic squares over a root square Q0 and the tripled squares 3Q used by
//! square-normalized beta numbers.

use crate::error::{Error, Result};

/// Axis-aligned square given by its lower-left corner and side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Square {
    pub corner: [f64; 2],
    pub side: f64,
}

impl Square {
    pub fn new(corner: [f64; 2], side: f64) -> Result<Square> {
        if !(side > 0.0) || !side.is_finite() {
            return Err(Error::InvalidInput(format!("square side must be positive, got {side}")));
        }
        Ok(Square { corner, side })
    }

    /// Smallest axis-aligned square containing all points, inflated by a
    /// hair so boundary points bucket deterministically.
    pub fn bounding(points: &[[f64; 2]]) -> Result<Square> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in points {
            for k in 0..2 {
                min[k] = min[k].min(p[k]);
                max[k] = max[k].max(p[k]);
            }
        }
        let side = ((max[0] - min[0]).max(max[1] - min[1])).max(1e-12) * (1.0 + 1e-9);
        Square::new(min, side)
    }

    pub fn center(&self) -> [f64; 2] {
        [self.corner[0] + self.side / 2.0, self.corner[1] + self.side / 2.0]
    }
}

/// A dyadic sub-square of a root square: depth k and lattice position
/// within the 2^k x 2^k subdivision. Membership uses the half-open
/// convention [x0, x0+s) x [y0, y0+s) so every point lands in exactly one
/// square per depth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyadicSquare {
    pub root: Square,
    pub depth: u32,
    pub ix: u64,
    pub iy: u64,
}

impl DyadicSquare {
    pub fn new(root: Square, depth: u32, ix: u64, iy: u64) -> Result<DyadicSquare> {
        let n = 1u64 << depth.min(63);
        if depth > 60 || ix >= n || iy >= n {
            return Err(Error::InvalidInput(format!(
                "dyadic index out of range: depth {depth}, ix {ix}, iy {iy}"
            )));
        }
        Ok(DyadicSquare { root, depth, ix, iy })
    }

    /// The dyadic square of the given depth containing the point, or None
    /// when the point lies outside the root.
    pub fn containing(root: Square, depth: u32, p: [f64; 2]) -> Option<DyadicSquare> {
        let n = 1u64 << depth;
        let side = root.side / n as f64;
        let fx = (p[0] - root.corner[0]) / side;
        let fy = (p[1] - root.corner[1]) / side;
        if fx < 0.0 || fy < 0.0 {
            return None;
        }
        let ix = fx as u64;
        let iy = fy as u64;
        if ix >= n || iy >= n {
            return None;
        }
        Some(DyadicSquare { root, depth, ix, iy })
    }

    pub fn side(&self) -> f64 {
        self.root.side / (1u64 << self.depth) as f64
    }

    pub fn corner(&self) -> [f64; 2] {
        let s = self.side();
        [self.root.corner[0] + self.ix as f64 * s, self.root.corner[1] + self.iy as f64 * s]
    }

    pub fn center(&self) -> [f64; 2] {
        let s = self.side();
        let c = self.corner();
        [c[0] + s / 2.0, c[1] + s / 2.0]
    }

    /// Closed bounds of the tripled square 3Q (same center, 3x side).
    pub fn triple_bounds(&self) -> ([f64; 2], [f64; 2]) {
        let s = self.side();
        let c = self.corner();
        ([c[0] - s, c[1] - s], [c[0] + 2.0 * s, c[1] + 2.0 * s])
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        let s = self.side();
        let c = self.corner();
        p[0] >= c[0] && p[0] < c[0] + s && p[1] >= c[1] && p[1] < c[1] + s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containing_respects_half_open_convention() {
        let root = Square::new([0.0, 0.0], 1.0).unwrap();
        let q = DyadicSquare::containing(root, 1, [0.5, 0.5]).unwrap();
        assert_eq!((q.ix, q.iy), (1, 1));
        let q = DyadicSquare::containing(root, 1, [0.499999, 0.0]).unwrap();
        assert_eq!((q.ix, q.iy), (0, 0));
        assert!(DyadicSquare::containing(root, 1, [-0.1, 0.5]).is_none());
    }

    #[test]
    fn side_halves_with_depth() {
        let root = Square::new([0.0, 0.0], 2.0).unwrap();
        let q = DyadicSquare::new(root, 3, 5, 2).unwrap();
        assert!((q.side() - 0.25).abs() < 1e-15);
        let (lo, hi) = q.triple_bounds();
        assert!((hi[0] - lo[0] - 0.75).abs() < 1e-15);
        assert!((hi[1] - lo[1] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn nested_squares_contain_their_point() {
        let root = Square::new([-1.0, -1.0], 2.0).unwrap();
        let p = [0.37, -0.21];
        for depth in 0..10 {
            let q = DyadicSquare::containing(root, depth, p).unwrap();
            assert!(q.contains(p), "depth {depth}");
        }
    }
}
