//! Probability-level grids.
//!
//! All sweeps are built in probability space and mapped through quantile
//! functions, so bounded and unbounded supports are handled uniformly. Levels
//! are clamped to [eps_p, 1 - eps_p]; the supports are open and all objects
//! of interest live on their interiors.
//!
//! A level is carried in its numerically exact representation: the distance
//! to whichever end of (0, 1) is closer. Storing 1 - 1e-12 as a plain f64
//! keeps only four good digits of the complement, which is what tail
//! quantiles and tail densities actually depend on.

/// A probability level, kept accurate near both ends of (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Level {
    /// The probability itself; the exact form near 0.
    Lower(f64),
    /// The complement 1 - p; the exact form near 1.
    Upper(f64),
}

impl Level {
    /// Canonical representation of a plain probability.
    pub fn from_p(p: f64) -> Level {
        if p <= 0.5 {
            Level::Lower(p)
        } else {
            Level::Upper(1.0 - p)
        }
    }

    /// The probability as a plain f64 (lossy near 1; for display and
    /// reporting only).
    pub fn p(&self) -> f64 {
        match *self {
            Level::Lower(p) => p,
            Level::Upper(q) => 1.0 - q,
        }
    }

    /// Distance to the nearer end of (0, 1).
    pub fn edge_distance(&self) -> f64 {
        match *self {
            Level::Lower(p) => p.min(1.0 - p),
            Level::Upper(q) => q.min(1.0 - q),
        }
    }

    /// The level of the opposite tail, exactly.
    pub fn complement(&self) -> Level {
        match *self {
            Level::Lower(p) => Level::Upper(p),
            Level::Upper(q) => Level::Lower(q),
        }
    }

    /// Clamps the distance to the nearer edge to at least `eps`.
    pub fn clamp_edges(&self, eps: f64) -> Level {
        match *self {
            Level::Lower(p) => {
                if p < eps {
                    Level::Lower(eps)
                } else if p > 0.5 && 1.0 - p < eps {
                    Level::Upper(eps)
                } else {
                    *self
                }
            }
            Level::Upper(q) => {
                if q < eps {
                    Level::Upper(eps)
                } else if q > 0.5 && 1.0 - q < eps {
                    Level::Lower(eps)
                } else {
                    *self
                }
            }
        }
    }
}

/// Grid of probability levels on [eps_p, 1 - eps_p]: a uniform backbone of
/// `points` levels, symmetric by construction (the upper half is generated
/// directly in complement form), plus geometric ladders inside the two edge
/// cells. Without the ladders the smallest complements would jump straight
/// from eps_p to one uniform step, and any sign structure living in between
/// would go unsampled.
#[derive(Debug, Clone)]
pub struct ProbabilityGrid {
    eps_p: f64,
    levels: Vec<Level>,
}

/// Tail-ladder resolution: levels per decade of edge distance.
const TAIL_PER_DECADE: f64 = 8.0;

impl ProbabilityGrid {
    pub fn new(points: usize, eps_p: f64) -> Self {
        assert!(points >= 2, "grid needs at least two points");
        assert!(
            eps_p > 0.0 && eps_p < 0.5,
            "eps_p must be in (0, 0.5), got {eps_p}"
        );
        let step = (1.0 - 2.0 * eps_p) / (points - 1) as f64;
        let mut levels: Vec<Level> = (0..points)
            .map(|i| {
                let from_lo = eps_p + i as f64 * step;
                if from_lo <= 0.5 {
                    Level::Lower(from_lo)
                } else {
                    Level::Upper(eps_p + (points - 1 - i) as f64 * step)
                }
            })
            .collect();
        // Geometric refinement of the edge cells (eps_p, eps_p + step).
        let edge = eps_p + step;
        if edge > eps_p * 1.0001 {
            let decades = (edge / eps_p).log10();
            let m = (decades * TAIL_PER_DECADE).ceil() as usize;
            for j in 1..m {
                let d = eps_p * (edge / eps_p).powf(j as f64 / m as f64);
                levels.push(Level::Lower(d));
                levels.push(Level::Upper(d));
            }
        }
        levels.sort_by(|a, b| a.p().partial_cmp(&b.p()).unwrap());
        ProbabilityGrid { eps_p, levels }
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn eps_p(&self) -> f64 {
        self.eps_p
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_spans_clamped_interval_symmetrically() {
        let g = ProbabilityGrid::new(2001, 1e-6);
        assert!(g.len() >= 2001);
        let last = g.len() - 1;
        assert_eq!(g.levels()[0], Level::Lower(1e-6));
        assert_eq!(g.levels()[last], Level::Upper(1e-6));
        // Exact mirror symmetry of the representations.
        for i in 0..g.len() {
            let (a, b) = (g.levels()[i], g.levels()[last - i].complement());
            assert!((a.p() - b.p()).abs() < 1e-15, "{a:?} vs {b:?}");
        }
        let ps: Vec<f64> = g.levels().iter().map(|l| l.p()).collect();
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        // The edge cells carry a geometric ladder: consecutive edge distances
        // stay within a bounded ratio.
        let d0 = match g.levels()[0] {
            Level::Lower(p) => p,
            _ => unreachable!(),
        };
        let d1 = match g.levels()[1] {
            Level::Lower(p) => p,
            _ => unreachable!(),
        };
        assert!(d1 / d0 < 2.5, "tail ladder too coarse: {d0} -> {d1}");
    }

    #[test]
    fn level_representation() {
        assert_eq!(Level::from_p(0.3), Level::Lower(0.3));
        assert_eq!(Level::from_p(0.75), Level::Upper(0.25));
        assert_eq!(Level::Lower(1e-9).clamp_edges(1e-6), Level::Lower(1e-6));
        assert_eq!(Level::Upper(1e-9).clamp_edges(1e-6), Level::Upper(1e-6));
        assert_eq!(Level::Lower(0.3).clamp_edges(1e-6), Level::Lower(0.3));
    }
}
