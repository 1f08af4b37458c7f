//! Coarse-grid scan followed by coordinate-wise golden-section refinement.

use rayon::prelude::*;

use super::{Scale, SearchDomain};

/// Outcome of one minimisation.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct SearchResult {
    pub min: f64,
    pub argmin: Vec<f64>,
    pub evaluations: u64,
}

/// Margin evaluations returning NaN are treated as −∞ so that a failed
/// evaluation can never hide behind a passing report.
fn sanitize(v: f64) -> f64 {
    if v.is_nan() {
        f64::NEG_INFINITY
    } else {
        v
    }
}

struct Grid<'a> {
    domain: &'a SearchDomain,
    n: usize,
}

impl Grid<'_> {
    /// Maps a unit coordinate `u ∈ [0, 1]` of dimension `j` to the domain.
    fn map(&self, j: usize, u: f64) -> f64 {
        let d = &self.domain.dims[j];
        let v = match d.scale {
            Scale::Linear => d.lo + u * (d.hi - d.lo),
            Scale::Log => (d.lo.ln() + u * (d.hi.ln() - d.lo.ln())).exp(),
        };
        v.clamp(d.lo, d.hi)
    }

    fn unit(&self, i: usize) -> f64 {
        i as f64 / (self.n - 1) as f64
    }

    fn point(&self, mut flat: usize) -> (Vec<usize>, Vec<f64>) {
        let d = self.domain.dims.len();
        let mut idx = vec![0; d];
        for j in (0..d).rev() {
            idx[j] = flat % self.n;
            flat /= self.n;
        }
        let p = idx.iter().enumerate().map(|(j, &i)| self.map(j, self.unit(i))).collect();
        (idx, p)
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Minimises `f` over the domain. `clip` projects a point onto the feasible
/// set (for example enforcing `x >= q`) before every evaluation.
pub(crate) fn minimize<F, C>(domain: &SearchDomain, k_worst: usize, clip: C, f: F) -> SearchResult
where
    F: Fn(&[f64]) -> f64 + Sync,
    C: Fn(&mut [f64]) + Sync,
{
    let grid = Grid {
        domain,
        n: domain.coarse_points_per_dim,
    };
    let dims = domain.dims.len();
    let total = grid.n.pow(dims as u32);
    let eval = |p: &mut Vec<f64>| {
        clip(p);
        sanitize(f(p))
    };

    let coarse: Vec<f64> = (0..total)
        .into_par_iter()
        .map(|flat| eval(&mut grid.point(flat).1))
        .collect();

    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by(|&a, &b| coarse[a].total_cmp(&coarse[b]).then(a.cmp(&b)));
    order.truncate(k_worst.max(1));

    let refined: Vec<(f64, Vec<f64>, u64)> = order
        .par_iter()
        .map(|&flat| {
            let (idx, start) = grid.point(flat);
            let mut best_p = start.clone();
            clip(&mut best_p);
            let mut best = coarse[flat];
            let mut units: Vec<f64> = idx.iter().map(|&i| grid.unit(i)).collect();
            let mut evals = 0u64;
            let step = 1.0 / (grid.n - 1) as f64;
            // Two sweeps over the coordinates.
            for _ in 0..2 {
                for j in 0..dims {
                    let at = |u: f64| {
                        let mut p: Vec<f64> =
                            (0..dims).map(|i| if i == j { grid.map(j, u) } else { grid.map(i, units[i]) }).collect();
                        let v = eval(&mut p);
                        (v, p)
                    };
                    let (mut a, mut b) = ((units[j] - step).max(0.0), (units[j] + step).min(1.0));
                    let mut c = b - INV_PHI * (b - a);
                    let mut d = a + INV_PHI * (b - a);
                    let (mut fc, mut pc) = at(c);
                    let (mut fd, mut pd) = at(d);
                    evals += 2;
                    for _ in 0..domain.refine_iters {
                        if fc <= fd {
                            b = d;
                            d = c;
                            fd = fc;
                            pd = pc;
                            c = b - INV_PHI * (b - a);
                            (fc, pc) = at(c);
                        } else {
                            a = c;
                            c = d;
                            fc = fd;
                            pc = pd;
                            d = a + INV_PHI * (b - a);
                            (fd, pd) = at(d);
                        }
                        evals += 1;
                    }
                    for (v, p, u) in [(fc, pc, c), (fd, pd, d)] {
                        if v < best {
                            best = v;
                            best_p = p;
                            units[j] = u;
                        }
                    }
                }
            }
            (best, best_p, evals)
        })
        .collect();

    let mut evaluations = total as u64;
    let first = order[0];
    let mut min = coarse[first];
    let mut argmin = {
        let mut p = grid.point(first).1;
        clip(&mut p);
        p
    };
    for (v, p, e) in refined {
        evaluations += e;
        if v < min {
            min = v;
            argmin = p;
        }
    }
    SearchResult {
        min,
        argmin,
        evaluations,
    }
}
