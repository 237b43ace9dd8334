//! Certified decisions for the stochastic orders built on the transport map:
//! the hierarchy <=_0 ... <=_3, the concave-convex single-crossing orders,
//! the strict variant, the =_3 equivalence, and inflection values.
//!
//! Verdicts are grid certificates, not proofs: `Holds` means no violation was
//! found at the configured resolution and tolerance. Sign tests are
//! scale-aware per point: each slack carries a cancellation budget, the
//! largest term magnitude that entered its formula (R'' of heavy-tail pairs
//! grows polynomially and density derivatives blow up toward support edges,
//! so a fixed absolute tolerance would be meaningless there). A value inside
//! `max(tol_sign, 1024 eps * budget)` is numerically zero, neither evidence
//! for nor against the order. The budget must stay local: normalizing by a
//! global maximum would mask moderate genuine violations on pairs whose
//! slacks span many orders of magnitude across the grid.

mod divided;

pub use divided::{kconcave_check, kconvex_check, divided_difference, DividedDiffQuery};

use rayon::prelude::*;

use crate::dist::Distribution;
use crate::grid::ProbabilityGrid;
use crate::transport::TransportMap;
use crate::Error;

/// Multiplier on f64::EPSILON for per-point cancellation budgets.
const CANCEL_ULPS: f64 = 1024.0;

/// Outcome of a certified check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Undecided,
}

/// Evidence attached to a failing verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A grid point where the tested quantity is certifiably negative.
    Point { p: Option<f64>, t: f64, value: f64 },
    /// A node tuple with a certifiably negative divided difference.
    Tuple { nodes: Vec<f64>, value: f64 },
    /// An above-threshold point followed by a below-threshold point, which no
    /// single crossing can explain.
    Crossing {
        t_up: f64,
        value_up: f64,
        t_down: f64,
        value_down: f64,
    },
}

/// Tri-valued certified result of an order query.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderVerdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// Minimum signed slack seen over the grid.
    pub margin: f64,
    /// Explanation for `Undecided` verdicts coming from numeric failures.
    pub note: Option<String>,
}

impl OrderVerdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    fn undecided(err: Error) -> Self {
        OrderVerdict {
            status: Status::Undecided,
            witness: None,
            margin: f64::NAN,
            note: Some(err.to_string()),
        }
    }
}

/// Shared knobs for every certified check.
#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub grid_points: usize,
    pub eps_p: f64,
    pub tol_sign: f64,
    pub seed: u64,
    pub kconvex_samples: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            grid_points: crate::DEFAULT_GRID_POINTS,
            eps_p: crate::DEFAULT_EPS_P,
            tol_sign: crate::DEFAULT_TOL_SIGN,
            seed: crate::DEFAULT_SEED,
            kconvex_samples: 10_000,
        }
    }
}

impl CheckConfig {
    fn grid(&self) -> ProbabilityGrid {
        ProbabilityGrid::new(self.grid_points, self.eps_p)
    }
}

/// One sampled slack value with its provenance and cancellation budget.
#[derive(Debug, Clone)]
pub(crate) struct SlackPoint {
    pub p: Option<f64>,
    pub t: f64,
    pub value: f64,
    pub cancel: f64,
    pub nodes: Option<Vec<f64>>,
}

impl SlackPoint {
    fn witness(&self) -> Witness {
        match &self.nodes {
            Some(nodes) => Witness::Tuple {
                nodes: nodes.clone(),
                value: self.value,
            },
            None => Witness::Point {
                p: self.p,
                t: self.t,
                value: self.value,
            },
        }
    }
}

// Per-point tolerance: absolute base plus the point's own cancellation budget.
fn point_tol(tol_base: f64, cancel: f64) -> f64 {
    tol_base.max(CANCEL_ULPS * f64::EPSILON * cancel)
}

/// Certifies "value >= 0 everywhere" over a stream of slack points.
pub(crate) fn certify_nonneg(
    points: impl Iterator<Item = SlackPoint>,
    tol_base: f64,
) -> OrderVerdict {
    let mut margin = f64::INFINITY;
    let mut worst: Option<SlackPoint> = None;
    let mut certified_pos = false;
    let mut seen = false;
    for pt in points {
        if !pt.value.is_finite() || !pt.cancel.is_finite() {
            return OrderVerdict {
                status: Status::Undecided,
                witness: None,
                margin: f64::NAN,
                note: Some(format!("non-finite slack at t={}", pt.t)),
            };
        }
        seen = true;
        margin = margin.min(pt.value);
        let tol = point_tol(tol_base, pt.cancel);
        if pt.value > tol {
            certified_pos = true;
        }
        if pt.value < -tol && worst.as_ref().map_or(true, |w| pt.value < w.value) {
            worst = Some(pt);
        }
    }
    if !seen {
        return OrderVerdict {
            status: Status::Undecided,
            witness: None,
            margin: f64::NAN,
            note: Some("empty sample".into()),
        };
    }
    match worst {
        Some(pt) => OrderVerdict {
            status: Status::Fails,
            witness: Some(pt.witness()),
            margin,
            note: None,
        },
        None => OrderVerdict {
            status: Status::Holds,
            witness: None,
            // Every slack sat inside its numeric tolerance: the series is
            // indistinguishable from the analytic-zero class.
            margin: if certified_pos { margin } else { 0.0 },
            note: None,
        },
    }
}

// One evaluated point of the map on the combined grid.
struct UnionEval {
    p: f64,
    t: f64,
    r: f64,
    derivs: crate::transport::Derivs,
}

// Evaluates the map over the union of both quantile grids, sorted by t.
//
// Sampling only F's quantiles is not enough: when F and G sit far apart, the
// sign structure of R'' and R''' can live where F carries almost no mass but
// G does, and a uniform level grid through F^{-1} never gets near it. The
// G-quantile points are folded back to F-levels through the cdf; points that
// collide with an F-quantile point are dropped, which keeps identity pairs
// on the exact level-space evaluation path.
fn union_evals(
    f: &Distribution,
    g: &Distribution,
    cfg: &CheckConfig,
) -> Result<Vec<UnionEval>, Error> {
    let map = TransportMap::with_eps(*f, *g, cfg.eps_p);
    let grid = cfg.grid();
    let mut out: Vec<UnionEval> = Vec::with_capacity(2 * grid.len());
    for &level in grid.levels() {
        let ev = map.eval_at_level(level)?;
        out.push(UnionEval {
            p: ev.p,
            t: ev.t,
            r: ev.r,
            derivs: ev.derivs,
        });
    }
    let f_points: Vec<f64> = out.iter().map(|pt| pt.t).collect();
    let sup = f.support();
    for &q_level in grid.levels() {
        let t = g.quantile_at(q_level);
        if !sup.contains(t) {
            continue;
        }
        let level = f.level_at(t);
        if level.edge_distance() < cfg.eps_p {
            continue;
        }
        // Drop near-duplicates of F-quantile points.
        let idx = f_points.partition_point(|&x| x < t);
        let near = |j: usize| (f_points[j] - t).abs() <= 1e-9 * (1.0 + t.abs());
        if (idx < f_points.len() && near(idx)) || (idx > 0 && near(idx - 1)) {
            continue;
        }
        let derivs = map.r_derivs(t)?;
        out.push(UnionEval {
            p: level.p(),
            t,
            r: g.quantile_at(level),
            derivs,
        });
    }
    out.sort_by(|a, b| a.t.partial_cmp(&b.t).unwrap());
    Ok(out)
}

// Slack series for Delta^{(k)} (k <= 1) or R^{(k)} (k >= 2).
fn order_slacks(
    f: &Distribution,
    g: &Distribution,
    k: u8,
    cfg: &CheckConfig,
) -> Result<Vec<SlackPoint>, Error> {
    let evals = union_evals(f, g, cfg)?;
    Ok(evals
        .into_iter()
        .map(|ev| {
            let d = &ev.derivs;
            let (value, cancel) = match k {
                0 => (ev.r - ev.t, ev.r.abs().max(ev.t.abs())),
                1 => (d.r1 - 1.0, d.r1.abs().max(1.0)),
                2 => (d.r2, d.scale2),
                3 => (d.r3, d.scale3),
                _ => unreachable!("order k must be 0..=3"),
            };
            SlackPoint {
                p: Some(ev.p),
                t: ev.t,
                value,
                cancel,
                nodes: None,
            }
        })
        .collect())
}

/// Decides F <=_k G for k in {0,1,2,3}: the k-th derivative of Delta (for
/// k <= 1) or of R (for k in {2,3}) must be non-negative on D_F.
pub fn leq_k(f: &Distribution, g: &Distribution, k: u8, cfg: &CheckConfig) -> OrderVerdict {
    assert!(k <= 3, "only orders 0..=3 are defined");
    match order_slacks(f, g, k, cfg) {
        Ok(slacks) => certify_nonneg(slacks.into_iter(), cfg.tol_sign),
        Err(e) => OrderVerdict::undecided(e),
    }
}

// Scans a slack series for the single-crossing structure "<= below, >= above":
// returns (last index certifiably below -tol, first index certifiably above
// +tol). The value scale runs over the whole series first so both passes see
// the same tolerances.
struct CrossingScan {
    last_down: Option<usize>,
    first_up: Option<usize>,
    tols: Vec<f64>,
}

fn scan_crossing(slacks: &[SlackPoint], tol_base: f64) -> Result<CrossingScan, String> {
    let mut tols = Vec::with_capacity(slacks.len());
    for pt in slacks {
        if !pt.value.is_finite() || !pt.cancel.is_finite() {
            return Err(format!("non-finite slack at t={}", pt.t));
        }
        tols.push(point_tol(tol_base, pt.cancel));
    }
    let mut last_down = None;
    let mut first_up = None;
    for (i, pt) in slacks.iter().enumerate() {
        if pt.value < -tols[i] {
            last_down = Some(i);
        }
        if pt.value > tols[i] && first_up.is_none() {
            first_up = Some(i);
        }
    }
    Ok(CrossingScan {
        last_down,
        first_up,
        tols,
    })
}

// Best achievable "quality" of a single split: max over split positions c of
// min(min_{i<c} -d_i, min_{i>=c} d_i), restricted to c in [c_lo, c_hi].
fn split_margin(slacks: &[SlackPoint], c_lo: usize, c_hi: usize) -> f64 {
    let n = slacks.len();
    let mut prefix = vec![f64::INFINITY; n + 1]; // min of -d over i < c
    for i in 0..n {
        prefix[i + 1] = prefix[i].min(-slacks[i].value);
    }
    let mut suffix = vec![f64::INFINITY; n + 1]; // min of d over i >= c
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].min(slacks[i].value);
    }
    let mut best = f64::NEG_INFINITY;
    for c in c_lo..=c_hi.min(n) {
        best = best.max(prefix[c].min(suffix[c]));
    }
    best
}

/// Decides F <=_gs^{t0} G: R'' <= t0 left of some quantile and >= t0 right of
/// it. t0 = 0 is the concave-convex kurtosis order.
pub fn leq_gs(f: &Distribution, g: &Distribution, t0: f64, cfg: &CheckConfig) -> OrderVerdict {
    let mut slacks = match order_slacks(f, g, 2, cfg) {
        Ok(s) => s,
        Err(e) => return OrderVerdict::undecided(e),
    };
    for pt in slacks.iter_mut() {
        pt.value -= t0;
        pt.cancel = pt.cancel.max(t0.abs());
    }
    let scan = match scan_crossing(&slacks, cfg.tol_sign) {
        Ok(s) => s,
        Err(note) => {
            return OrderVerdict {
                status: Status::Undecided,
                witness: None,
                margin: f64::NAN,
                note: Some(note),
            }
        }
    };
    let n = slacks.len();
    match (scan.first_up, scan.last_down) {
        (Some(up), Some(down)) if up < down => {
            // Certifiably above threshold before certifiably below: no
            // admissible crossing level exists.
            let margin = split_margin(&slacks, 0, n);
            OrderVerdict {
                status: Status::Fails,
                witness: Some(Witness::Crossing {
                    t_up: slacks[up].t,
                    value_up: slacks[up].value + t0,
                    t_down: slacks[down].t,
                    value_down: slacks[down].value + t0,
                }),
                margin,
                note: None,
            }
        }
        (up, down) => {
            let c_lo = down.map_or(0, |i| i + 1);
            let c_hi = up.unwrap_or(n);
            let margin = split_margin(&slacks, c_lo, c_hi);
            OrderVerdict {
                status: Status::Holds,
                witness: None,
                margin,
                note: None,
            }
        }
    }
}

/// Decides the strict variant F <_gss G: R'' strictly negative left of a
/// single crossing and strictly positive right of it. One numerically-zero
/// grid point is tolerated at the junction (the crossing itself). Sides may
/// be empty, which maps to the degenerate inflection values 0 and 1.
pub fn strict_gss(f: &Distribution, g: &Distribution, cfg: &CheckConfig) -> OrderVerdict {
    let slacks = match order_slacks(f, g, 2, cfg) {
        Ok(s) => s,
        Err(e) => return OrderVerdict::undecided(e),
    };
    let scan = match scan_crossing(&slacks, cfg.tol_sign) {
        Ok(s) => s,
        Err(note) => {
            return OrderVerdict {
                status: Status::Undecided,
                witness: None,
                margin: f64::NAN,
                note: Some(note),
            }
        }
    };
    let n = slacks.len();
    // Maximal strictly-negative prefix and strictly-positive suffix.
    let mut neg_end = 0;
    while neg_end < n && slacks[neg_end].value < -scan.tols[neg_end] {
        neg_end += 1;
    }
    let mut pos_start = n;
    while pos_start > 0 && slacks[pos_start - 1].value > scan.tols[pos_start - 1] {
        pos_start -= 1;
    }
    // Strict-sign quality of the best junction, with the junction point
    // itself exempt: max over c of min(min_{i<c} -d_i, min_{i>c} d_i).
    let mut suffix = vec![f64::INFINITY; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].min(slacks[i].value);
    }
    let mut run = f64::INFINITY;
    let mut margin = f64::NEG_INFINITY;
    for c in 0..n {
        margin = margin.max(run.min(suffix[c + 1]));
        run = run.min(-slacks[c].value);
    }
    if pos_start <= neg_end + 1 {
        OrderVerdict {
            status: Status::Holds,
            witness: None,
            margin,
            note: None,
        }
    } else {
        // Some interior point is neither strictly negative nor strictly
        // positive on the wrong side of every candidate junction.
        let offender = &slacks[neg_end.min(n - 1)];
        OrderVerdict {
            status: Status::Fails,
            witness: Some(offender.witness()),
            margin,
            note: None,
        }
    }
}

/// Numeric estimate of the interior of the range of R'' over D_F: the band of
/// reasonable thresholds for <=_gs^{t0}.
#[derive(Debug, Clone, Copy)]
pub struct ThresholdInterval {
    pub lo: f64,
    pub hi: f64,
    /// R'' is numerically constant; no threshold is reasonable.
    pub empty: bool,
}

pub fn reasonable_thresholds(
    f: &Distribution,
    g: &Distribution,
    cfg: &CheckConfig,
) -> Result<ThresholdInterval, Error> {
    let slacks = order_slacks(f, g, 2, cfg)?;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut cancel = 0.0f64;
    for pt in &slacks {
        lo = lo.min(pt.value);
        hi = hi.max(pt.value);
        cancel = cancel.max(pt.cancel);
    }
    let scale = lo.abs().max(hi.abs()).max(1.0);
    let noise = (cfg.tol_sign * scale).max(CANCEL_ULPS * f64::EPSILON * cancel);
    if hi - lo <= 2.0 * noise {
        return Ok(ThresholdInterval {
            lo,
            hi,
            empty: true,
        });
    }
    let shrink = 1e-6 * (hi - lo);
    Ok(ThresholdInterval {
        lo: lo + shrink,
        hi: hi - shrink,
        empty: false,
    })
}

/// The admissible inflection-value interval for a pair ordered by <=_3.
///
/// A level p is admissible when every certifiably negative R'' point lies at
/// or below it and every certifiably positive one at or above it, so the
/// interval is pinned by the last negative and first positive grid levels.
#[derive(Debug, Clone, Copy)]
pub struct InflectionReport {
    pub p_lo: f64,
    pub p_hi: f64,
    /// R'' >= 0 everywhere: p = 0 is an admissible (degenerate) value.
    pub degenerate_zero: bool,
    /// R'' <= 0 everywhere: p = 1 is admissible.
    pub degenerate_one: bool,
    /// Verdict for the <=_3 precondition; the interval is still reported
    /// best-effort when this is not `Holds`.
    pub leq3: Status,
}

impl InflectionReport {
    pub fn is_empty(&self) -> bool {
        self.p_lo > self.p_hi
    }

    pub fn contains(&self, p: f64) -> bool {
        p >= self.p_lo && p <= self.p_hi
    }
}

pub fn inflection_values(
    f: &Distribution,
    g: &Distribution,
    cfg: &CheckConfig,
) -> Result<InflectionReport, Error> {
    let slacks = order_slacks(f, g, 2, cfg)?;
    let scan = scan_crossing(&slacks, cfg.tol_sign).map_err(|_| Error::NonFiniteValue {
        what: "inflection scan",
        t: f64::NAN,
    })?;
    let leq3 = leq_k(f, g, 3, cfg).status;
    let p_lo = scan.last_down.map_or(0.0, |i| slacks[i].p.unwrap());
    let p_hi = scan.first_up.map_or(1.0, |i| slacks[i].p.unwrap());
    Ok(InflectionReport {
        p_lo,
        p_hi,
        degenerate_zero: scan.last_down.is_none(),
        degenerate_one: scan.first_up.is_none(),
        leq3,
    })
}

/// Decides F =_3 G through the differential inequality
/// 0 <= R''' <= 3 (R'')^2 / R' on D_F.
pub fn equiv_3(f: &Distribution, g: &Distribution, cfg: &CheckConfig) -> OrderVerdict {
    let evals = match union_evals(f, g, cfg) {
        Ok(e) => e,
        Err(e) => return OrderVerdict::undecided(e),
    };
    let mut lower = Vec::with_capacity(evals.len());
    let mut upper = Vec::with_capacity(evals.len());
    for ev in &evals {
        let d = ev.derivs;
        lower.push(SlackPoint {
            p: Some(ev.p),
            t: ev.t,
            value: d.r3,
            cancel: d.scale3,
            nodes: None,
        });
        let bound = 3.0 * d.r2 * d.r2 / d.r1;
        upper.push(SlackPoint {
            p: Some(ev.p),
            t: ev.t,
            value: bound - d.r3,
            cancel: bound.abs().max(d.scale3),
            nodes: None,
        });
    }
    let forward = certify_nonneg(lower.into_iter(), cfg.tol_sign);
    let backward = certify_nonneg(upper.into_iter(), cfg.tol_sign);
    let margin = forward.margin.min(backward.margin);
    for v in [&forward, &backward] {
        if v.status == Status::Fails {
            return OrderVerdict {
                status: Status::Fails,
                witness: v.witness.clone(),
                margin,
                note: None,
            };
        }
    }
    if forward.status == Status::Undecided || backward.status == Status::Undecided {
        let note = forward.note.clone().or_else(|| backward.note.clone());
        return OrderVerdict {
            status: Status::Undecided,
            witness: None,
            margin,
            note,
        };
    }
    OrderVerdict {
        status: Status::Holds,
        witness: None,
        margin,
        note: None,
    }
}

/// Selector for the relation used by sweeps, the transitivity probe and the
/// command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderRelation {
    LeqK(u8),
    Gs(f64),
    Gss,
    Equiv3,
}

impl std::fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderRelation::LeqK(k) => write!(f, "k{k}"),
            OrderRelation::Gs(t0) => write!(f, "gs(t0={t0})"),
            OrderRelation::Gss => write!(f, "gss"),
            OrderRelation::Equiv3 => write!(f, "equiv3"),
        }
    }
}

pub fn check_relation(
    f: &Distribution,
    g: &Distribution,
    rel: OrderRelation,
    cfg: &CheckConfig,
) -> OrderVerdict {
    match rel {
        OrderRelation::LeqK(k) => leq_k(f, g, k, cfg),
        OrderRelation::Gs(t0) => leq_gs(f, g, t0, cfg),
        OrderRelation::Gss => strict_gss(f, g, cfg),
        OrderRelation::Equiv3 => equiv_3(f, g, cfg),
    }
}

/// A certified transitivity violation: A rel B and B rel C hold while
/// A rel C fails.
#[derive(Debug, Clone)]
pub struct TransitivityViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub witness: Option<Witness>,
    pub margin: f64,
}

/// All pairwise verdicts plus every violating triple.
#[derive(Debug, Clone)]
pub struct TransitivityReport {
    pub verdicts: Vec<Vec<Option<OrderVerdict>>>,
    pub violations: Vec<TransitivityViolation>,
}

/// Evaluates all ordered pairs concurrently and scans for triples that break
/// transitivity. Undecided pairs never participate in violations.
pub fn transitivity_probe(
    ds: &[Distribution],
    rel: OrderRelation,
    cfg: &CheckConfig,
) -> Result<TransitivityReport, Error> {
    let n = ds.len();
    if n < 3 {
        return Err(Error::TooFewDistributions { needed: 3, got: n });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let computed: Vec<((usize, usize), OrderVerdict)> = pairs
        .par_iter()
        .map(|&(i, j)| ((i, j), check_relation(&ds[i], &ds[j], rel, cfg)))
        .collect();
    let mut verdicts: Vec<Vec<Option<OrderVerdict>>> = vec![vec![None; n]; n];
    for ((i, j), v) in computed {
        verdicts[i][j] = Some(v);
    }
    let status = |i: usize, j: usize| verdicts[i][j].as_ref().map(|v| v.status);
    let mut violations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || status(a, b) != Some(Status::Holds) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                if status(b, c) == Some(Status::Holds) && status(a, c) == Some(Status::Fails) {
                    let v = verdicts[a][c].as_ref().unwrap();
                    violations.push(TransitivityViolation {
                        a,
                        b,
                        c,
                        witness: v.witness.clone(),
                        margin: v.margin,
                    });
                }
            }
        }
    }
    Ok(TransitivityReport {
        verdicts,
        violations,
    })
}

/// A refined sign change of R^{(k)} - t0: location and direction.
#[derive(Debug, Clone, Copy)]
pub struct SignChangeLocation {
    pub t: f64,
    /// true when the values go from below to above the threshold.
    pub rising: bool,
}

/// Locates every certified sign change of R'' - t0 (k = 2) or R''' - t0
/// (k = 3) along the grid and refines each by bisection.
pub fn refine_sign_changes(
    f: &Distribution,
    g: &Distribution,
    k: u8,
    t0: f64,
    cfg: &CheckConfig,
) -> Result<Vec<SignChangeLocation>, Error> {
    assert!(k == 2 || k == 3);
    let map = TransportMap::with_eps(*f, *g, cfg.eps_p);
    let mut slacks = order_slacks(f, g, k, cfg)?;
    for pt in slacks.iter_mut() {
        pt.value -= t0;
        pt.cancel = pt.cancel.max(t0.abs());
    }
    let scan = scan_crossing(&slacks, cfg.tol_sign).map_err(|_| Error::NonFiniteValue {
        what: "sign-change scan",
        t: f64::NAN,
    })?;
    let eval = |t: f64| -> Result<f64, Error> {
        let d = map.r_derivs(t)?;
        Ok(if k == 2 { d.r2 } else { d.r3 } - t0)
    };
    let mut out = Vec::new();
    // Walk certified-sign runs; bisect between the last point of one run and
    // the first point of the next.
    let mut prev: Option<(usize, bool)> = None;
    for (i, pt) in slacks.iter().enumerate() {
        let sign = if pt.value > scan.tols[i] {
            Some(true)
        } else if pt.value < -scan.tols[i] {
            Some(false)
        } else {
            None
        };
        let Some(pos) = sign else { continue };
        if let Some((j, prev_pos)) = prev {
            if prev_pos != pos {
                let (mut lo, mut hi) = (slacks[j].t, slacks[i].t);
                let (mut flo, _fhi) = (slacks[j].value, slacks[i].value);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    let fm = eval(mid)?;
                    if (fm > 0.0) == (flo > 0.0) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                out.push(SignChangeLocation {
                    t: 0.5 * (lo + hi),
                    rising: pos,
                });
            }
        }
        prev = Some((i, pos));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
