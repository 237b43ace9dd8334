//! Divided differences and k-convexity sampling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{certify_nonneg, CheckConfig, OrderVerdict, SlackPoint};
use crate::Error;

/// Node set for a k-th divided difference; nodes strictly increasing.
#[derive(Debug, Clone)]
pub struct DividedDiffQuery {
    nodes: Vec<f64>,
}

impl DividedDiffQuery {
    pub fn new(nodes: Vec<f64>) -> Result<Self, Error> {
        if nodes.is_empty() || nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::NodesNotIncreasing);
        }
        Ok(DividedDiffQuery { nodes })
    }

    pub fn order(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
}

/// k-th divided difference [x_0, ..., x_k | phi] by the usual recursion.
pub fn divided_difference<F: Fn(f64) -> f64>(phi: F, query: &DividedDiffQuery) -> f64 {
    divided_with_scale(&phi, query.nodes()).0
}

// Runs the recursion twice: once on values, once on absolute values. The
// second pass bounds the magnitude that flowed through the subtractions and
// serves as the cancellation budget for sign certification.
fn divided_with_scale<F: Fn(f64) -> f64>(phi: &F, nodes: &[f64]) -> (f64, f64) {
    let n = nodes.len();
    let mut col: Vec<f64> = nodes.iter().map(|&x| phi(x)).collect();
    let mut mag: Vec<f64> = col.iter().map(|v| v.abs()).collect();
    for j in 1..n {
        for i in 0..n - j {
            let dx = nodes[i + j] - nodes[i];
            col[i] = (col[i + 1] - col[i]) / dx;
            mag[i] = (mag[i + 1] + mag[i]) / dx;
        }
    }
    (col[0], mag[0])
}

/// Grid-plus-random sampling test of k-convexity of `phi` on the open
/// interval `(a, b)`: all consecutive (k+1)-windows of a uniform grid, plus
/// `cfg.kconvex_samples` sorted uniform tuples drawn from a seeded generator.
pub fn kconvex_check<F: Fn(f64) -> f64>(
    phi: F,
    domain: (f64, f64),
    k: usize,
    cfg: &CheckConfig,
) -> OrderVerdict {
    let (a, b) = domain;
    assert!(a < b, "empty domain");
    assert!(k <= 3, "only orders up to 3 are supported");

    // Keep strictly inside the open interval.
    let margin = (b - a) * 1e-9;
    let lo = a + margin;
    let hi = b - margin;

    let grid_n = 512.max(k + 1);
    let step = (hi - lo) / (grid_n - 1) as f64;
    let grid: Vec<f64> = (0..grid_n).map(|i| lo + i as f64 * step).collect();

    let mut points = Vec::new();
    let mut record = |nodes: &[f64]| {
        let (value, scale) = divided_with_scale(&phi, nodes);
        points.push(SlackPoint {
            p: None,
            t: nodes[0],
            value,
            cancel: scale,
            nodes: Some(nodes.to_vec()),
        });
    };

    for w in grid.windows(k + 1) {
        record(w);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tuple = vec![0.0f64; k + 1];
    let min_sep = (hi - lo) * 1e-7;
    'outer: for _ in 0..cfg.kconvex_samples {
        for v in tuple.iter_mut() {
            *v = rng.gen_range(lo..=hi);
        }
        tuple.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for w in tuple.windows(2) {
            if w[1] - w[0] < min_sep {
                continue 'outer;
            }
        }
        record(&tuple);
    }

    certify_nonneg(points.into_iter(), cfg.tol_sign)
}

/// Like `kconvex_check` but for concavity: the negated function must be
/// convex of the same order.
pub fn kconcave_check<F: Fn(f64) -> f64>(
    phi: F,
    domain: (f64, f64),
    k: usize,
    cfg: &CheckConfig,
) -> OrderVerdict {
    kconvex_check(move |t| -phi(t), domain, k, cfg)
}
