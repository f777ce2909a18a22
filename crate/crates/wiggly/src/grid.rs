//! Uniform-grid spatial index over planar points.
//!
//! Built once per point cloud, immutable afterwards; all queries are
//! read-only and thread-safe. Cell size adapts to point density so that
//! radius queries touch few cells at small radii and degrade gracefully to
//! a full scan at large ones.

/// Immutable uniform grid over a fixed planar point set.
#[derive(Debug, Clone)]
pub struct UniformGrid {
    min: [f64; 2],
    cell: f64,
    cols: usize,
    rows: usize,
    /// CSR layout: `starts[c] .. starts[c+1]` indexes into `entries`.
    starts: Vec<u32>,
    entries: Vec<u32>,
    pts: Vec<[f64; 2]>,
}

impl UniformGrid {
    pub fn build(pts: Vec<[f64; 2]>) -> UniformGrid {
        assert!(!pts.is_empty(), "grid over empty point set");
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in &pts {
            for k in 0..2 {
                min[k] = min[k].min(p[k]);
                max[k] = max[k].max(p[k]);
            }
        }
        let extent = (max[0] - min[0]).max(max[1] - min[1]).max(1e-300);
        // aim for O(1) points per cell without exploding the cell table
        let target = (pts.len() as f64).sqrt().ceil().max(1.0).min(2048.0);
        let cell = extent / target;
        let cols = (((max[0] - min[0]) / cell).floor() as usize + 2).max(1);
        let rows = (((max[1] - min[1]) / cell).floor() as usize + 2).max(1);

        let idx = |p: &[f64; 2]| -> usize {
            let cx = (((p[0] - min[0]) / cell) as usize).min(cols - 1);
            let cy = (((p[1] - min[1]) / cell) as usize).min(rows - 1);
            cy * cols + cx
        };
        let mut counts = vec![0u32; cols * rows + 1];
        for p in &pts {
            counts[idx(p) + 1] += 1;
        }
        for i in 1..counts.len() {
            counts[i] += counts[i - 1];
        }
        let starts = counts.clone();
        let mut cursor = starts.clone();
        let mut entries = vec![0u32; pts.len()];
        for (i, p) in pts.iter().enumerate() {
            let c = idx(p);
            entries[cursor[c] as usize] = i as u32;
            cursor[c] += 1;
        }
        UniformGrid { min, cell, cols, rows, starts, entries, pts }
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.pts
    }

    #[inline]
    pub fn point(&self, i: usize) -> [f64; 2] {
        self.pts[i]
    }

    /// Indices of all points within closed distance `r` of `center`.
    pub fn within(&self, center: [f64; 2], r: f64) -> Vec<u32> {
        let mut out = Vec::new();
        self.for_each_within(center, r, |i, _| out.push(i));
        out
    }

    /// Visits every point with distance <= r of `center` in index order per cell.
    pub fn for_each_within<F: FnMut(u32, [f64; 2])>(&self, center: [f64; 2], r: f64, mut f: F) {
        let r2 = r * r;
        let cx0 = (((center[0] - r - self.min[0]) / self.cell).floor().max(0.0)) as usize;
        let cy0 = (((center[1] - r - self.min[1]) / self.cell).floor().max(0.0)) as usize;
        let cx1 = ((((center[0] + r - self.min[0]) / self.cell).floor()).max(0.0) as usize)
            .min(self.cols - 1);
        let cy1 = ((((center[1] + r - self.min[1]) / self.cell).floor()).max(0.0) as usize)
            .min(self.rows - 1);
        if cx0 > cx1 || cy0 > cy1 {
            return;
        }
        for cy in cy0..=cy1 {
            for cx in cx0..=cx1 {
                let c = cy * self.cols + cx;
                let lo = self.starts[c] as usize;
                let hi = self.starts[c + 1] as usize;
                for &i in &self.entries[lo..hi] {
                    let p = self.pts[i as usize];
                    let dx = p[0] - center[0];
                    let dy = p[1] - center[1];
                    if dx * dx + dy * dy <= r2 {
                        f(i, p);
                    }
                }
            }
        }
    }

    /// True if any point lies within closed distance `r` of `center`.
    pub fn any_within(&self, center: [f64; 2], r: f64) -> bool {
        let r2 = r * r;
        let cx0 = (((center[0] - r - self.min[0]) / self.cell).floor().max(0.0)) as usize;
        let cy0 = (((center[1] - r - self.min[1]) / self.cell).floor().max(0.0)) as usize;
        let cx1 = ((((center[0] + r - self.min[0]) / self.cell).floor()).max(0.0) as usize)
            .min(self.cols - 1);
        let cy1 = ((((center[1] + r - self.min[1]) / self.cell).floor()).max(0.0) as usize)
            .min(self.rows - 1);
        if cx0 > cx1 || cy0 > cy1 {
            return false;
        }
        for cy in cy0..=cy1 {
            for cx in cx0..=cx1 {
                let c = cy * self.cols + cx;
                let lo = self.starts[c] as usize;
                let hi = self.starts[c + 1] as usize;
                for &i in &self.entries[lo..hi] {
                    let p = self.pts[i as usize];
                    let dx = p[0] - center[0];
                    let dy = p[1] - center[1];
                    if dx * dx + dy * dy <= r2 {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Distance to the nearest point, excluding the exact index `skip` when given.
    pub fn nearest_dist(&self, center: [f64; 2], skip: Option<u32>) -> f64 {
        let mut r = self.cell.max(1e-300);
        let limit = {
            let w = self.cols as f64 * self.cell;
            let h = self.rows as f64 * self.cell;
            2.0 * (w * w + h * h).sqrt() + 1.0
        };
        loop {
            let mut best = f64::INFINITY;
            self.for_each_within(center, r, |i, p| {
                if Some(i) == skip {
                    return;
                }
                let d = ((p[0] - center[0]).powi(2) + (p[1] - center[1]).powi(2)).sqrt();
                if d < best {
                    best = d;
                }
            });
            if best.is_finite() && best <= r {
                return best;
            }
            if r > limit {
                return best;
            }
            r *= 2.0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_query_matches_linear_scan() {
        let pts: Vec<[f64; 2]> = (0..500)
            .map(|i| {
                let t = i as f64 * 0.618;
                [(t * 1.3).sin() * 3.0, (t * 0.7).cos() * 2.0]
            })
            .collect();
        let grid = UniformGrid::build(pts.clone());
        for &(c, r) in &[([0.0, 0.0], 1.0), ([1.0, -0.5], 0.3), ([-2.0, 1.5], 2.5)] {
            let mut expect: Vec<u32> = pts
                .iter()
                .enumerate()
                .filter(|(_, p)| ((p[0] - c[0]).powi(2) + (p[1] - c[1]).powi(2)).sqrt() <= r)
                .map(|(i, _)| i as u32)
                .collect();
            let mut got = grid.within(c, r);
            got.sort_unstable();
            expect.sort_unstable();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn nearest_dist_excludes_self() {
        let pts = vec![[0.0, 0.0], [1.0, 0.0], [5.0, 0.0]];
        let grid = UniformGrid::build(pts);
        assert!((grid.nearest_dist([0.0, 0.0], Some(0)) - 1.0).abs() < 1e-12);
        assert!((grid.nearest_dist([5.0, 0.0], Some(2)) - 4.0).abs() < 1e-12);
        assert!((grid.nearest_dist([0.1, 0.0], None) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn single_point_grid() {
        let grid = UniformGrid::build(vec![[2.0, 3.0]]);
        assert_eq!(grid.within([2.0, 3.0], 0.1), vec![0]);
        assert!(grid.within([0.0, 0.0], 0.1).is_empty());
    }
}
