//! Analytic distribution families: cdf, density, density derivatives and
//! quantile in closed form.
//!
//! Every family here has an open interval support on which the density is
//! strictly positive and the cdf is three times differentiable, which is what
//! the transport-map machinery in the rest of the crate needs. Densities and
//! their first two derivatives are hand-derived per family; finite
//! differences only appear in tests.

use crate::grid::Level;
use crate::normal;
use crate::Error;

/// Open interval support; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub lower: f64,
    pub upper: f64,
}

impl Support {
    pub fn new(lower: f64, upper: f64) -> Self {
        assert!(lower < upper, "support must be a non-degenerate interval");
        Support { lower, upper }
    }

    /// Membership in the open interval.
    pub fn contains(&self, t: f64) -> bool {
        t > self.lower && t < self.upper
    }
}

/// Parametric family selector.
///
/// - `PowerUnit { p }`: F(t) = t^p on (0, 1).
/// - `ReflectedCubeRoot { c }`: F(t) = 1 - ((c-t)/c)^(1/3) on (0, c).
/// - `Weibull { k }`: shape k, scale fixed to 1, on (0, inf).
/// - `SinhArsinh { nu, tau }`: X with sinh(tau*arsinh(X) - nu) standard
///   normal; nu tilts skewness, tau controls tailweight.
/// - `StandardNormal`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    PowerUnit { p: f64 },
    ReflectedCubeRoot { c: f64 },
    Weibull { k: f64 },
    SinhArsinh { nu: f64, tau: f64 },
    StandardNormal,
}

impl FamilySpec {
    fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::PowerUnit { .. } => "power",
            FamilySpec::ReflectedCubeRoot { .. } => "refcube",
            FamilySpec::Weibull { .. } => "weibull",
            FamilySpec::SinhArsinh { .. } => "sas",
            FamilySpec::StandardNormal => "normal",
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::PowerUnit { p } => write!(f, "power(p={p})"),
            FamilySpec::ReflectedCubeRoot { c } => write!(f, "refcube(c={c})"),
            FamilySpec::Weibull { k } => write!(f, "weibull(k={k})"),
            FamilySpec::SinhArsinh { nu, tau } => write!(f, "sas(nu={nu},tau={tau})"),
            FamilySpec::StandardNormal => write!(f, "normal()"),
        }
    }
}

/// How the quantile is evaluated. All built-in families carry closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantileKind {
    Analytic,
    NumericInversion,
}

/// Location of the density maximizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModeLocation {
    Interior(f64),
    Boundary(f64),
}

impl ModeLocation {
    pub fn value(&self) -> f64 {
        match *self {
            ModeLocation::Interior(t) | ModeLocation::Boundary(t) => t,
        }
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, ModeLocation::Boundary(_))
    }
}

/// A validated, immutable distribution. All evaluators are pure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distribution {
    spec: FamilySpec,
    support: Support,
}

impl Distribution {
    /// Validates shape parameters and instantiates the closed forms.
    pub fn new(spec: FamilySpec) -> Result<Self, Error> {
        let positive = |name: &'static str, value: f64| -> Result<(), Error> {
            if value.is_finite() && value > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    family: spec.family_name(),
                    name,
                    value,
                })
            }
        };
        let support = match spec {
            FamilySpec::PowerUnit { p } => {
                positive("p", p)?;
                Support::new(0.0, 1.0)
            }
            FamilySpec::ReflectedCubeRoot { c } => {
                positive("c", c)?;
                Support::new(0.0, c)
            }
            FamilySpec::Weibull { k } => {
                positive("k", k)?;
                Support::new(0.0, f64::INFINITY)
            }
            FamilySpec::SinhArsinh { nu, tau } => {
                if !nu.is_finite() {
                    return Err(Error::InvalidParameter {
                        family: "sas",
                        name: "nu",
                        value: nu,
                    });
                }
                positive("tau", tau)?;
                Support::new(f64::NEG_INFINITY, f64::INFINITY)
            }
            FamilySpec::StandardNormal => Support::new(f64::NEG_INFINITY, f64::INFINITY),
        };
        Ok(Distribution { spec, support })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn quantile_kind(&self) -> QuantileKind {
        QuantileKind::Analytic
    }

    /// Cumulative distribution function, defined on all of R (0 below the
    /// support, 1 above it).
    pub fn cdf(&self, t: f64) -> f64 {
        match self.spec {
            FamilySpec::PowerUnit { p } => {
                if t <= 0.0 {
                    0.0
                } else if t >= 1.0 {
                    1.0
                } else {
                    t.powf(p)
                }
            }
            FamilySpec::ReflectedCubeRoot { c } => {
                if t <= 0.0 {
                    0.0
                } else if t >= c {
                    1.0
                } else {
                    1.0 - ((c - t) / c).cbrt()
                }
            }
            FamilySpec::Weibull { k } => {
                if t <= 0.0 {
                    0.0
                } else {
                    -(-t.powf(k)).exp_m1()
                }
            }
            FamilySpec::SinhArsinh { nu, tau } => normal::cdf(sas_s(nu, tau, t)),
            FamilySpec::StandardNormal => normal::cdf(t),
        }
    }

    /// Density; zero outside the open support.
    pub fn pdf(&self, t: f64) -> f64 {
        if !self.support.contains(t) {
            return 0.0;
        }
        match self.spec {
            FamilySpec::PowerUnit { p } => p * t.powf(p - 1.0),
            FamilySpec::ReflectedCubeRoot { c } => {
                let w = (c - t) / c;
                w.powf(-2.0 / 3.0) / (3.0 * c)
            }
            FamilySpec::Weibull { k } => k * t.powf(k - 1.0) * (-t.powf(k)).exp(),
            FamilySpec::SinhArsinh { nu, tau } => {
                let (s, _, s1, _, _) = sas_chain(nu, tau, t);
                normal::pdf(s) * s1
            }
            FamilySpec::StandardNormal => normal::pdf(t),
        }
    }

    /// First derivative of the density on the open support.
    pub fn pdf_d1(&self, t: f64) -> f64 {
        if !self.support.contains(t) {
            return 0.0;
        }
        match self.spec {
            FamilySpec::PowerUnit { p } => p * (p - 1.0) * t.powf(p - 2.0),
            FamilySpec::ReflectedCubeRoot { c } => {
                let w = (c - t) / c;
                2.0 * w.powf(-5.0 / 3.0) / (9.0 * c * c)
            }
            FamilySpec::Weibull { k } => {
                let x = t.powf(k);
                k * (-x).exp() * ((k - 1.0) * t.powf(k - 2.0) - k * t.powf(2.0 * k - 2.0))
            }
            FamilySpec::SinhArsinh { nu, tau } => {
                let (s, _, s1, s2, _) = sas_chain(nu, tau, t);
                normal::pdf(s) * (s2 - s * s1 * s1)
            }
            FamilySpec::StandardNormal => -t * normal::pdf(t),
        }
    }

    /// Second derivative of the density on the open support.
    pub fn pdf_d2(&self, t: f64) -> f64 {
        if !self.support.contains(t) {
            return 0.0;
        }
        match self.spec {
            FamilySpec::PowerUnit { p } => p * (p - 1.0) * (p - 2.0) * t.powf(p - 3.0),
            FamilySpec::ReflectedCubeRoot { c } => {
                let w = (c - t) / c;
                10.0 * w.powf(-8.0 / 3.0) / (27.0 * c * c * c)
            }
            FamilySpec::Weibull { k } => {
                let x = t.powf(k);
                k * (-x).exp()
                    * ((k - 1.0) * (k - 2.0) * t.powf(k - 3.0)
                        - 3.0 * k * (k - 1.0) * t.powf(2.0 * k - 3.0)
                        + k * k * t.powf(3.0 * k - 3.0))
            }
            FamilySpec::SinhArsinh { nu, tau } => {
                let (s, _, s1, s2, s3) = sas_chain(nu, tau, t);
                let s1sq = s1 * s1;
                normal::pdf(s) * (s3 - s1 * s1sq - 3.0 * s * s1 * s2 + s * s * s1 * s1sq)
            }
            FamilySpec::StandardNormal => (t * t - 1.0) * normal::pdf(t),
        }
    }

    /// Survival function 1 - F, computed to full relative accuracy in the
    /// upper tail.
    pub fn sf(&self, t: f64) -> f64 {
        match self.spec {
            FamilySpec::PowerUnit { p } => {
                if t <= 0.0 {
                    1.0
                } else if t >= 1.0 {
                    0.0
                } else {
                    -(p * t.ln()).exp_m1()
                }
            }
            FamilySpec::ReflectedCubeRoot { c } => {
                if t <= 0.0 {
                    1.0
                } else if t >= c {
                    0.0
                } else {
                    ((c - t) / c).cbrt()
                }
            }
            FamilySpec::Weibull { k } => {
                if t <= 0.0 {
                    1.0
                } else {
                    (-t.powf(k)).exp()
                }
            }
            FamilySpec::SinhArsinh { nu, tau } => {
                0.5 * normal::erfc(sas_s(nu, tau, t) * std::f64::consts::FRAC_1_SQRT_2)
            }
            FamilySpec::StandardNormal => 0.5 * normal::erfc(t * std::f64::consts::FRAC_1_SQRT_2),
        }
    }

    /// The level of a point in whichever tail representation is exact.
    pub fn level_at(&self, t: f64) -> Level {
        let p = self.cdf(t);
        if p <= 0.5 {
            Level::Lower(p)
        } else {
            Level::Upper(self.sf(t))
        }
    }

    /// Closed-form quantile for p in (0, 1).
    pub fn quantile(&self, p: f64) -> f64 {
        debug_assert!(p > 0.0 && p < 1.0, "quantile level must be in (0,1)");
        match self.spec {
            FamilySpec::PowerUnit { p: shape } => p.powf(1.0 / shape),
            FamilySpec::ReflectedCubeRoot { c } => {
                let w = 1.0 - p;
                c * (1.0 - w * w * w)
            }
            FamilySpec::Weibull { k } => (-(-p).ln_1p()).powf(1.0 / k),
            // F^-1 = S_{-nu/tau, 1/tau} applied to the normal quantile.
            FamilySpec::SinhArsinh { nu, tau } => {
                ((normal::quantile(p).asinh() + nu) / tau).sinh()
            }
            FamilySpec::StandardNormal => normal::quantile(p),
        }
    }

    /// Upper-tail quantile F^{-1}(1 - q), stable for small complements q.
    pub fn quantile_upper(&self, q: f64) -> f64 {
        debug_assert!(q > 0.0 && q < 1.0, "complement must be in (0,1)");
        match self.spec {
            FamilySpec::PowerUnit { p: shape } => ((-q).ln_1p() / shape).exp(),
            FamilySpec::ReflectedCubeRoot { c } => c * (1.0 - q * q * q),
            FamilySpec::Weibull { k } => (-q.ln()).powf(1.0 / k),
            FamilySpec::SinhArsinh { nu, tau } => {
                (((-normal::quantile(q)).asinh() + nu) / tau).sinh()
            }
            FamilySpec::StandardNormal => -normal::quantile(q),
        }
    }

    /// Quantile at a level in either representation.
    pub fn quantile_at(&self, level: Level) -> f64 {
        match level {
            Level::Lower(p) => self.quantile(p),
            Level::Upper(q) => self.quantile_upper(q),
        }
    }

    /// (f, f', f'') evaluated at the quantile of a level, in forms that stay
    /// finite and accurate where the quantile itself rounds into the support
    /// boundary (e.g. the reflected-cube-root upper tail, where
    /// F^{-1}(1-q) = c(1 - q^3) collapses to c in f64 while the density trio
    /// is an exact power of q).
    pub(crate) fn density_derivs_at(&self, level: Level) -> (f64, f64, f64) {
        debug_assert!(level.edge_distance() > 0.0);
        match self.spec {
            FamilySpec::PowerUnit { p: a } => {
                // t^(a-m) = p^((a-m)/a) exactly in level space; the upper
                // tail goes through ln(1-q) where the density is benign.
                let powp = |e: f64| match level {
                    Level::Lower(p) => p.powf(e),
                    Level::Upper(q) => (e * (-q).ln_1p()).exp(),
                };
                let f = a * powp(1.0 - 1.0 / a);
                let f1 = a * (a - 1.0) * powp(1.0 - 2.0 / a);
                let f2 = a * (a - 1.0) * (a - 2.0) * powp(1.0 - 3.0 / a);
                (f, f1, f2)
            }
            FamilySpec::ReflectedCubeRoot { c } => {
                // 1 - p = w^(1/3) exactly equals the upper-tail complement.
                let q = match level {
                    Level::Lower(p) => 1.0 - p,
                    Level::Upper(q) => q,
                };
                (
                    q.powi(-2) / (3.0 * c),
                    2.0 * q.powi(-5) / (9.0 * c * c),
                    10.0 * q.powi(-8) / (27.0 * c * c * c),
                )
            }
            FamilySpec::Weibull { k } => {
                // With x = t^k = -ln(1-p): e^{-x} = 1-p and t^{k-m} = x^{(k-m)/k}.
                let (x, e) = match level {
                    Level::Lower(p) => (-(-p).ln_1p(), 1.0 - p),
                    Level::Upper(q) => (-q.ln(), q),
                };
                let f = k * x.powf(1.0 - 1.0 / k) * e;
                let f1 = k * e * ((k - 1.0) * x.powf(1.0 - 2.0 / k) - k * x.powf(2.0 - 2.0 / k));
                let f2 = k
                    * e
                    * ((k - 1.0) * (k - 2.0) * x.powf(1.0 - 3.0 / k)
                        - 3.0 * k * (k - 1.0) * x.powf(2.0 - 3.0 / k)
                        + k * k * x.powf(3.0 - 3.0 / k));
                (f, f1, f2)
            }
            FamilySpec::SinhArsinh { nu, tau } => {
                // S(F^{-1}(p)) is the normal quantile z by construction, and
                // C = sqrt(1 + z^2); only the w-derivatives need t itself.
                let z = match level {
                    Level::Lower(p) => normal::quantile(p),
                    Level::Upper(q) => -normal::quantile(q),
                };
                let t = ((z.asinh() + nu) / tau).sinh();
                let c = (1.0 + z * z).sqrt();
                let u = 1.0 + t * t;
                let w1 = tau / u.sqrt();
                let w2 = -tau * t * u.powf(-1.5);
                let w3 = tau * (2.0 * t * t - 1.0) * u.powf(-2.5);
                let s1 = c * w1;
                let s2 = z * w1 * w1 + c * w2;
                let s3 = c * w1 * w1 * w1 + 3.0 * z * w1 * w2 + c * w3;
                let phi = normal::pdf(z);
                let s1sq = s1 * s1;
                (
                    phi * s1,
                    phi * (s2 - z * s1sq),
                    phi * (s3 - s1 * s1sq - 3.0 * z * s1 * s2 + z * z * s1 * s1sq),
                )
            }
            FamilySpec::StandardNormal => {
                let t = match level {
                    Level::Lower(p) => normal::quantile(p),
                    Level::Upper(q) => -normal::quantile(q),
                };
                let phi = normal::pdf(t);
                (phi, -t * phi, (t * t - 1.0) * phi)
            }
        }
    }

    /// Density maximizer. Boundary modes are flagged; the sinh-arsinh family
    /// with nonzero skewness falls back to a golden-section search.
    pub fn mode(&self) -> ModeLocation {
        match self.spec {
            FamilySpec::PowerUnit { p } => {
                if p > 1.0 {
                    ModeLocation::Boundary(1.0)
                } else if p < 1.0 {
                    ModeLocation::Boundary(0.0)
                } else {
                    // Uniform density: every point maximizes; report the centre.
                    ModeLocation::Interior(0.5)
                }
            }
            FamilySpec::ReflectedCubeRoot { c } => ModeLocation::Boundary(c),
            FamilySpec::Weibull { k } => {
                if k > 1.0 {
                    ModeLocation::Interior(((k - 1.0) / k).powf(1.0 / k))
                } else {
                    ModeLocation::Boundary(0.0)
                }
            }
            FamilySpec::SinhArsinh { nu, .. } => {
                if nu == 0.0 {
                    ModeLocation::Interior(0.0)
                } else {
                    ModeLocation::Interior(self.mode_numeric())
                }
            }
            FamilySpec::StandardNormal => ModeLocation::Interior(0.0),
        }
    }

    // Golden-section maximization of the density over the bulk of the mass.
    fn mode_numeric(&self) -> f64 {
        const INVPHI: f64 = 0.618_033_988_749_894_9;
        let mut a = self.quantile(1e-4);
        let mut b = self.quantile(1.0 - 1e-4);
        let mut c = b - INVPHI * (b - a);
        let mut d = a + INVPHI * (b - a);
        let mut fc = self.pdf(c);
        let mut fd = self.pdf(d);
        while (b - a).abs() > 1e-12 * (1.0 + a.abs().max(b.abs())) {
            if fc > fd {
                b = d;
                d = c;
                fd = fc;
                c = b - INVPHI * (b - a);
                fc = self.pdf(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + INVPHI * (b - a);
                fd = self.pdf(d);
            }
        }
        0.5 * (a + b)
    }
}

// sinh(tau * arsinh(t) - nu). std's asinh already uses the cancellation-free
// |t| + sqrt(1+t^2) form with the sign folded back in.
fn sas_s(nu: f64, tau: f64, t: f64) -> f64 {
    (tau * t.asinh() - nu).sinh()
}

// S, C and the first three derivatives' ingredients for the sinh-arsinh
// transform: returns (S, C, S', S'', S''') at t.
fn sas_chain(nu: f64, tau: f64, t: f64) -> (f64, f64, f64, f64, f64) {
    let w = tau * t.asinh() - nu;
    let s = w.sinh();
    let c = w.cosh();
    let u = 1.0 + t * t;
    let w1 = tau / u.sqrt();
    let w2 = -tau * t * u.powf(-1.5);
    let w3 = tau * (2.0 * t * t - 1.0) * u.powf(-2.5);
    let s1 = c * w1;
    let s2 = s * w1 * w1 + c * w2;
    let s3 = c * w1 * w1 * w1 + 3.0 * s * w1 * w2 + c * w3;
    (s, c, s1, s2, s3)
}

/// Numeric quantile by bracketing plus safeguarded Newton; independent of the
/// closed-form quantiles and usable as a fallback. Terminates with
/// |F(t) - p| <= 1e-12.
pub fn quantile_numeric(d: &Distribution, p: f64) -> Result<f64, Error> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::ProbabilityOutOfRange { p });
    }
    let sup = d.support();
    let (mut lo, mut hi) = bracket(d, p)?;
    let mut t = 0.5 * (lo + hi);
    for _ in 0..200 {
        let err = d.cdf(t) - p;
        if err.abs() <= 1e-12 {
            return Ok(t);
        }
        if err > 0.0 {
            hi = t;
        } else {
            lo = t;
        }
        let f = d.pdf(t);
        let mut next = if f > 0.0 { t - err / f } else { f64::NAN };
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if next == t {
            // Interval has collapsed to adjacent floats.
            break;
        }
        t = next;
    }
    let err = d.cdf(t) - p;
    if err.abs() <= 1e-12 {
        Ok(t)
    } else {
        Err(Error::BracketFailure {
            p,
            detail: format!(
                "no convergence inside ({}, {}); residual {err:e}",
                sup.lower, sup.upper
            ),
        })
    }
}

// Finds lo < hi with F(lo) < p < F(hi), expanding geometrically on unbounded
// sides.
fn bracket(d: &Distribution, p: f64) -> Result<(f64, f64), Error> {
    let sup = d.support();
    let lo = if sup.lower.is_finite() {
        sup.lower
    } else {
        let mut lo = -1.0;
        let mut steps = 0;
        while d.cdf(lo) >= p {
            lo *= 2.0;
            steps += 1;
            if steps > 200 {
                return Err(Error::BracketFailure {
                    p,
                    detail: "lower bracket expansion exhausted".into(),
                });
            }
        }
        lo
    };
    let hi = if sup.upper.is_finite() {
        sup.upper
    } else {
        let mut hi = 1.0;
        let mut steps = 0;
        while d.cdf(hi) <= p {
            hi *= 2.0;
            steps += 1;
            if steps > 200 {
                return Err(Error::BracketFailure {
                    p,
                    detail: "upper bracket expansion exhausted".into(),
                });
            }
        }
        hi
    };
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(spec: FamilySpec) -> Distribution {
        Distribution::new(spec).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Distribution::new(FamilySpec::PowerUnit { p: 0.0 }).is_err());
        assert!(Distribution::new(FamilySpec::Weibull { k: -1.0 }).is_err());
        assert!(Distribution::new(FamilySpec::ReflectedCubeRoot { c: f64::NAN }).is_err());
        assert!(Distribution::new(FamilySpec::SinhArsinh { nu: 0.0, tau: 0.0 }).is_err());
    }

    #[test]
    fn power_unit_cdf() {
        let d = dist(FamilySpec::PowerUnit { p: 3.0 });
        assert_eq!(d.cdf(0.5), 0.125);
        assert_eq!(d.cdf(-1.0), 0.0);
        assert_eq!(d.cdf(2.0), 1.0);
    }

    #[test]
    fn weibull_exponential_identity() {
        let d = dist(FamilySpec::Weibull { k: 1.0 });
        let p = -(-1.0f64).exp_m1(); // 1 - e^{-1}
        assert!((d.cdf(1.0) - p).abs() < 1e-15);
        assert!((d.quantile(p) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sas_identity_case_is_standard_normal() {
        let d = dist(FamilySpec::SinhArsinh { nu: 0.0, tau: 1.0 });
        let n = dist(FamilySpec::StandardNormal);
        assert_eq!(d.quantile(0.5), 0.0);
        for t in [-2.0, -0.3, 0.0, 1.7] {
            assert!((d.cdf(t) - n.cdf(t)).abs() < 1e-14);
            assert!((d.pdf(t) - n.pdf(t)).abs() < 1e-14);
        }
    }

    #[test]
    fn numeric_quantile_agrees() {
        let cases = [
            (dist(FamilySpec::StandardNormal), 0.5, 0.0),
            (dist(FamilySpec::PowerUnit { p: 2.0 }), 0.25, 0.5),
            // Closed-form inversion (-ln(1-p))^(1/k) evaluated independently.
            (
                dist(FamilySpec::Weibull { k: 2.0 }),
                0.5,
                0.832554611157697756353164644895,
            ),
        ];
        for (d, p, want) in cases {
            let t = quantile_numeric(&d, p).unwrap();
            assert!((t - want).abs() < 1e-10, "{:?} at {p}: {t} vs {want}", d.spec());
            assert!((d.quantile(p) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn numeric_quantile_rejects_bad_levels() {
        let d = dist(FamilySpec::StandardNormal);
        assert!(quantile_numeric(&d, 0.0).is_err());
        assert!(quantile_numeric(&d, 1.0).is_err());
    }

    #[test]
    fn modes() {
        assert_eq!(
            dist(FamilySpec::StandardNormal).mode(),
            ModeLocation::Interior(0.0)
        );
        let w2 = dist(FamilySpec::Weibull { k: 2.0 }).mode();
        assert!(!w2.is_boundary());
        // Stationary point of the density, ((k-1)/k)^(1/k).
        assert!((w2.value() - 0.707106781186547524400844362105).abs() < 1e-15);
        let w_half = dist(FamilySpec::Weibull { k: 0.5 }).mode();
        assert!(w_half.is_boundary());
        assert_eq!(w_half.value(), 0.0);
        // Density of W(1/2) decreases on a grid, so the edge is the maximizer.
        let d = dist(FamilySpec::Weibull { k: 0.5 });
        for i in 1..100 {
            let t = i as f64 * 0.05;
            assert!(d.pdf_d1(t) < 0.0);
        }
    }

    #[test]
    fn sas_numeric_mode_is_stationary() {
        let d = dist(FamilySpec::SinhArsinh { nu: 0.8, tau: 1.5 });
        let m = d.mode().value();
        assert!(d.pdf_d1(m).abs() < 1e-6 * d.pdf(m).max(1.0));
        // Maximizer beats its neighbourhood.
        assert!(d.pdf(m) >= d.pdf(m + 1e-3));
        assert!(d.pdf(m) >= d.pdf(m - 1e-3));
    }
}
