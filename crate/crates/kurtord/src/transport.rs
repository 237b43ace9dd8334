//! The transport map R(t) = G^{-1}(F(t)) between two distributions, its
//! first three derivatives, and the shift Delta(t) = R(t) - t.
//!
//! With Q = G^{-1}, the chain rule on R = Q o F gives
//!
//!   R'   = f / g(R)
//!   R''  = [f' g(R)^2 - f^2 g'(R)] / g(R)^3
//!   R''' = f''/g(R) - 3 f f' g'(R)/g(R)^3 - f^3 g''(R)/g(R)^4
//!          + 3 f^3 g'(R)^2/g(R)^5 .
//!
//! The third-derivative expression is obtained by differentiating the second
//! once more; tests check it against central finite differences of R''.
//! Alongside each derivative we report the largest term magnitude entering
//! the sum. Sign tests downstream use it as a cancellation budget: when the
//! terms are huge and the sum is tiny, the sum's sign is noise, not signal.

use crate::dist::Distribution;
use crate::grid::Level;
use crate::Error;

/// Smallest admissible target density under a transported point; below this
/// the derivatives are reported as a numeric failure rather than computed.
pub const DENSITY_UNDERFLOW: f64 = 1e-300;

/// First three derivatives of R at a point, plus cancellation scales for the
/// second and third (the first is a single quotient and cannot cancel).
#[derive(Debug, Clone, Copy)]
pub struct Derivs {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub scale2: f64,
    pub scale3: f64,
}

/// Evaluation of the map at one probability level.
#[derive(Debug, Clone, Copy)]
pub struct LevelEval {
    pub p: f64,
    /// t = F^{-1}(p), the evaluation point in the source scale.
    pub t: f64,
    /// R(t) = G^{-1}(p).
    pub r: f64,
    pub derivs: Derivs,
}

/// The pair (F, G) with evaluators for R and its derivatives on D_F.
#[derive(Debug, Clone, Copy)]
pub struct TransportMap {
    f: Distribution,
    g: Distribution,
    eps_p: f64,
}

impl TransportMap {
    pub fn new(f: Distribution, g: Distribution) -> Self {
        Self::with_eps(f, g, crate::DEFAULT_EPS_P)
    }

    pub fn with_eps(f: Distribution, g: Distribution, eps_p: f64) -> Self {
        assert!(eps_p > 0.0 && eps_p < 0.5);
        TransportMap { f, g, eps_p }
    }

    pub fn source(&self) -> &Distribution {
        &self.f
    }

    pub fn target(&self) -> &Distribution {
        &self.g
    }

    pub fn eps_p(&self) -> f64 {
        self.eps_p
    }

    /// The clamped level of a point of D_F, in its exact tail representation.
    pub fn level_of(&self, t: f64) -> Result<Level, Error> {
        let sup = self.f.support();
        if !sup.contains(t) {
            return Err(Error::OutsideSupport {
                t,
                lower: sup.lower,
                upper: sup.upper,
            });
        }
        Ok(self.f.level_at(t).clamp_edges(self.eps_p))
    }

    /// R(t) = G^{-1}(F(t)), strictly increasing on D_F.
    pub fn r(&self, t: f64) -> Result<f64, Error> {
        Ok(self.g.quantile_at(self.level_of(t)?))
    }

    /// Delta(t) = R(t) - t. Its derivatives are (R'-1, R'', R''').
    pub fn delta(&self, t: f64) -> Result<f64, Error> {
        Ok(self.r(t)? - t)
    }

    /// Derivatives of R at a point of D_F. The source density trio is taken
    /// at t, the target trio at the level F(t).
    pub fn r_derivs(&self, t: f64) -> Result<Derivs, Error> {
        let level = self.level_of(t)?;
        let fs = (self.f.pdf(t), self.f.pdf_d1(t), self.f.pdf_d2(t));
        combine(t, fs, self.g.density_derivs_at(level))
    }

    /// Grid evaluation at an exact probability level: t = F^{-1}(p),
    /// R(t) = G^{-1}(p) and both density trios come straight from the level,
    /// so no cdf/quantile round trip enters the derivative formulas.
    pub fn eval_at_level(&self, level: Level) -> Result<LevelEval, Error> {
        if !(level.edge_distance() > 0.0) {
            return Err(Error::ProbabilityOutOfRange { p: level.p() });
        }
        let t = self.f.quantile_at(level);
        let r = self.g.quantile_at(level);
        let derivs = combine(
            t,
            self.f.density_derivs_at(level),
            self.g.density_derivs_at(level),
        )?;
        Ok(LevelEval {
            p: level.p(),
            t,
            r,
            derivs,
        })
    }
}

// Chain-rule combination of the source trio (f, f', f'') and target trio
// (g, g', g'') into (R', R'', R''') with per-term cancellation scales.
// Deep in the tails every trio entry underflows in isolation, so the terms
// are assembled from magnitude-balanced ratios rather than raw powers of g.
fn combine(t: f64, fs: (f64, f64, f64), gs: (f64, f64, f64)) -> Result<Derivs, Error> {
    let (fp, f1, f2) = fs;
    let (g, g1, g2) = gs;
    if !(g > DENSITY_UNDERFLOW) {
        return Err(Error::DensityUnderflow { t, value: g });
    }
    let r1 = fp / g;
    let q1 = g1 / g;
    let q2 = g2 / g;

    let a = f1 / g;
    let b = r1 * r1 * q1;
    let r2 = a - b;
    let scale2 = a.abs().max(b.abs());

    let t1 = f2 / g;
    let t2 = 3.0 * a * r1 * q1;
    let t3 = r1 * r1 * r1 * q2;
    let t4 = 3.0 * r1 * r1 * r1 * q1 * q1;
    let r3 = t1 - t2 - t3 + t4;
    let scale3 = t1.abs().max(t2.abs()).max(t3.abs()).max(t4.abs());

    if !(r1.is_finite() && r2.is_finite() && r3.is_finite()) {
        return Err(Error::NonFiniteValue {
            what: "transport derivatives",
            t,
        });
    }
    Ok(Derivs {
        r1,
        r2,
        r3,
        scale2,
        scale3,
    })
}

/// Absolute residuals of the composition identities
/// R_FH = R_GH o R_FG (and the matching chain rules for R'' and R'''),
/// relative to max(1, |direct value|).
#[derive(Debug, Clone, Copy)]
pub struct ComposeResiduals {
    pub r: f64,
    pub r2: f64,
    pub r3: f64,
}

/// Compares the direct map F -> H against the composition through G at a
/// point t of D_F.
pub fn compose_check(
    f: &Distribution,
    g: &Distribution,
    h: &Distribution,
    t: f64,
) -> Result<ComposeResiduals, Error> {
    let fg = TransportMap::new(*f, *g);
    let gh = TransportMap::new(*g, *h);
    let fh = TransportMap::new(*f, *h);

    let r_fg = fg.r(t)?;
    let d_fg = fg.r_derivs(t)?;
    let d_gh = gh.r_derivs(r_fg)?;
    let r_gh = gh.r(r_fg)?;

    let direct_r = fh.r(t)?;
    let direct = fh.r_derivs(t)?;

    let composed_r2 = d_gh.r2 * d_fg.r1 * d_fg.r1 + d_gh.r1 * d_fg.r2;
    let composed_r3 = d_gh.r3 * d_fg.r1.powi(3)
        + d_gh.r1 * d_fg.r3
        + 3.0 * d_gh.r2 * d_fg.r1 * d_fg.r2;

    let rel = |direct: f64, composed: f64| (direct - composed).abs() / direct.abs().max(1.0);
    Ok(ComposeResiduals {
        r: rel(direct_r, r_gh),
        r2: rel(direct.r2, composed_r2),
        r3: rel(direct.r3, composed_r3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::FamilySpec;

    fn d(spec: FamilySpec) -> Distribution {
        Distribution::new(spec).unwrap()
    }

    #[test]
    fn closed_form_composition_example() {
        // F(t) = t^3 into H(t) = 1 - (1-t)^{1/3}: H^{-1}(u) = 1 - (1-u)^3,
        // so R(t) = 1 - (1 - t^3)^3 by hand.
        let map = TransportMap::new(
            d(FamilySpec::PowerUnit { p: 3.0 }),
            d(FamilySpec::ReflectedCubeRoot { c: 1.0 }),
        );
        let r = map.r(0.5).unwrap();
        assert!((r - 0.330078125).abs() < 1e-14);
        // R'''(t) = 18(28 t^6 - 20 t^3 + 1); at 0.5 that is -19.125.
        let dv = map.r_derivs(0.5).unwrap();
        assert!((dv.r3 + 19.125).abs() < 1e-9, "r3 = {}", dv.r3);
    }

    #[test]
    fn identity_map() {
        let f = d(FamilySpec::SinhArsinh { nu: 0.3, tau: 1.4 });
        let map = TransportMap::new(f, f);
        for t in [-1.5, 0.0, 0.9] {
            assert!((map.r(t).unwrap() - t).abs() < 1e-9);
            assert!(map.delta(t).unwrap().abs() < 1e-9);
            let dv = map.r_derivs(t).unwrap();
            assert!((dv.r1 - 1.0).abs() < 1e-9);
            assert!(dv.r2.abs() < 1e-9 * dv.scale2.max(1.0));
            assert!(dv.r3.abs() < 1e-9 * dv.scale3.max(1.0));
        }
    }

    #[test]
    fn weibull_pair_is_monomial() {
        // R(t) = t^{k/l}; k = 1, l = 2 at t = 2 gives sqrt(2).
        let map = TransportMap::new(
            d(FamilySpec::Weibull { k: 1.0 }),
            d(FamilySpec::Weibull { k: 2.0 }),
        );
        assert!((map.r(2.0).unwrap() - 2.0f64.sqrt()).abs() < 1e-12);
        // t = 1 is a fixed point of t^{1/2}.
        assert!(map.delta(1.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn delta_against_identity_target() {
        // G uniform on (0,1) makes R coincide with F itself.
        let map = TransportMap::new(
            d(FamilySpec::PowerUnit { p: 3.0 }),
            d(FamilySpec::PowerUnit { p: 1.0 }),
        );
        assert!((map.delta(0.5).unwrap() + 0.375).abs() < 1e-14);
    }

    #[test]
    fn outside_support_is_an_error() {
        let map = TransportMap::new(
            d(FamilySpec::PowerUnit { p: 2.0 }),
            d(FamilySpec::StandardNormal),
        );
        assert!(map.r(1.5).is_err());
        assert!(map.r(-0.1).is_err());
    }

    #[test]
    fn composition_residuals_are_small() {
        let f = d(FamilySpec::PowerUnit { p: 3.0 });
        let g = d(FamilySpec::PowerUnit { p: 1.0 });
        let h = d(FamilySpec::ReflectedCubeRoot { c: 1.0 });
        let res = compose_check(&f, &g, &h, 0.5).unwrap();
        assert!(res.r < 1e-7 && res.r2 < 1e-7 && res.r3 < 1e-7, "{res:?}");

        // Monomial composition: t^{k/1.5k} then ^{1.5k/2k} equals t^{1/2}.
        let w1 = d(FamilySpec::Weibull { k: 1.0 });
        let w15 = d(FamilySpec::Weibull { k: 1.5 });
        let w2 = d(FamilySpec::Weibull { k: 2.0 });
        let res = compose_check(&w1, &w15, &w2, 1.0).unwrap();
        assert!(res.r < 1e-7 && res.r2 < 1e-7 && res.r3 < 1e-7, "{res:?}");

        // G = F collapses to the identity composition.
        let res = compose_check(&f, &f, &h, 0.5).unwrap();
        assert!(res.r < 1e-12 && res.r2 < 1e-9 && res.r3 < 1e-9, "{res:?}");
    }

    #[test]
    fn level_eval_matches_pointwise() {
        let map = TransportMap::new(
            d(FamilySpec::Weibull { k: 1.3 }),
            d(FamilySpec::SinhArsinh { nu: 0.2, tau: 2.0 }),
        );
        for p in [0.05, 0.4, 0.77] {
            let ev = map.eval_at_level(Level::from_p(p)).unwrap();
            assert!((map.r(ev.t).unwrap() - ev.r).abs() < 1e-9 * ev.r.abs().max(1.0));
            let dv = map.r_derivs(ev.t).unwrap();
            assert!((dv.r3 - ev.derivs.r3).abs() < 1e-7 * ev.derivs.scale3.max(1.0));
        }
    }

    #[test]
    fn upper_tail_levels_stay_accurate() {
        // At t where F(t) = 1 - 9.7e-15 a plain-p level would have lost the
        // complement entirely; the survival representation keeps R'' honest
        // once the window is opened past it.
        let f = d(FamilySpec::SinhArsinh { nu: -2.0, tau: 1.0 });
        let g = d(FamilySpec::SinhArsinh { nu: -1.0, tau: 1.5 });
        let map = TransportMap::with_eps(f, g, 1e-200);
        let red = crate::families::SasReduced::from_pair(-2.0, 1.0, -1.0, 1.5).unwrap();
        for t in [0.8, 1.0, 1.5, 2.0] {
            let got = map.r_derivs(t).unwrap().r2;
            let (_, want, _) = red.r_derivs(t);
            assert!(
                (got - want).abs() < 1e-9 * want.abs(),
                "r2({t}) = {got} vs {want}"
            );
        }
    }
}
