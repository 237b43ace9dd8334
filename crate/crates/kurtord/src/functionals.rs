//! Skewness and kurtosis functionals.
//!
//! gamma_d(F, p) = f'(F^{-1}(p)) / f(F^{-1}(p))^2 is the density-based
//! skewness functional whose level sets are the transitivity sets of the
//! kurtosis order; gamma_mode(F) = 1 - 2 F(M_F) is its mode-based companion.
//! kappa_q is the classical quantile kurtosis ratio and kappa_qf the
//! two-distribution comparison functional that is non-negative whenever
//! F <=_3 G.

use crate::dist::Distribution;
use crate::Error;

/// Matching tolerance for transitivity-set membership.
const SET_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SkewnessKind {
    DensityBased { p: f64 },
    ModeBased,
}

/// A skewness functional value. Mode-based values live in [-1, 1]; a boundary
/// mode yields +-1 and is flagged rather than treated as an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewnessValue {
    pub value: f64,
    pub kind: SkewnessKind,
    pub boundary_mode: bool,
}

/// Density-based skewness at level p.
pub fn gamma_d(f: &Distribution, p: f64) -> Result<SkewnessValue, Error> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::ProbabilityOutOfRange { p });
    }
    let t = f.quantile(p);
    let den = f.pdf(t);
    if !(den > 1e-300) {
        return Err(Error::DensityUnderflow { t, value: den });
    }
    let value = f.pdf_d1(t) / (den * den);
    if !value.is_finite() {
        return Err(Error::NonFiniteValue {
            what: "gamma_d",
            t,
        });
    }
    Ok(SkewnessValue {
        value,
        kind: SkewnessKind::DensityBased { p },
        boundary_mode: false,
    })
}

/// Mode-based skewness 1 - 2 F(M_F) for unimodal F.
pub fn gamma_mode(f: &Distribution) -> SkewnessValue {
    let mode = f.mode();
    SkewnessValue {
        value: 1.0 - 2.0 * f.cdf(mode.value()),
        kind: SkewnessKind::ModeBased,
        boundary_mode: mode.is_boundary(),
    }
}

/// A transitivity set: distributions sharing one skewness-functional value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransitivitySetTag {
    /// T_{D,p}^t: gamma_d at level p equals t.
    Density { p: f64, t: f64 },
    /// T_Mode^{p~}: gamma_mode equals p~. Values +-1 correspond to boundary
    /// modes, where transitivity is not guaranteed.
    Mode { p_tilde: f64 },
}

/// True when every member's functional value matches the tag's constant.
pub fn same_transitivity_set(
    fs: &[Distribution],
    tag: &TransitivitySetTag,
) -> Result<bool, Error> {
    for f in fs {
        let (value, target) = match tag {
            TransitivitySetTag::Density { p, t } => (gamma_d(f, *p)?.value, *t),
            TransitivitySetTag::Mode { p_tilde } => (gamma_mode(f).value, *p_tilde),
        };
        if (value - target).abs() > SET_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quantile-based kurtosis ratio for 0 < alpha < eta < 1/2.
pub fn kappa_q(f: &Distribution, alpha: f64, eta: f64) -> Result<f64, Error> {
    if !(alpha > 0.0 && alpha < eta && eta < 0.5) {
        return Err(Error::InvalidLevels { alpha, eta });
    }
    let q = |p: f64| f.quantile(p);
    let den = q(1.0 - eta) - q(eta);
    if !(den.abs() > 1e-300) {
        return Err(Error::DegenerateDenominator { what: "kappa_q" });
    }
    Ok((q(1.0 - alpha) - 3.0 * q(1.0 - eta) + 3.0 * q(eta) - q(alpha)) / den)
}

/// The inner evaluation levels eta_F(q) = F(2/3 F^{-1}(q) + 1/3 F^{-1}(1-q)).
pub fn eta_f(f: &Distribution, q: f64) -> Result<f64, Error> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::ProbabilityOutOfRange { p: q });
    }
    let x = (2.0 / 3.0) * f.quantile(q) + (1.0 / 3.0) * f.quantile(1.0 - q);
    Ok(f.cdf(x))
}

/// Two-distribution kurtosis comparison: evaluates G's quantiles at levels
/// customized to F. Non-negative whenever F <=_3 G.
pub fn kappa_qf(f: &Distribution, g: &Distribution, alpha: f64) -> Result<f64, Error> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::InvalidLevels { alpha, eta: 0.5 });
    }
    let qg = |p: f64| g.quantile(p);
    let den = qg(1.0 - alpha) - qg(alpha);
    if !(den.abs() > 1e-300) {
        return Err(Error::DegenerateDenominator { what: "kappa_qf" });
    }
    let inner_hi = eta_f(f, 1.0 - alpha)?;
    let inner_lo = eta_f(f, alpha)?;
    Ok((qg(1.0 - alpha) - 3.0 * qg(inner_hi) + 3.0 * qg(inner_lo) - qg(alpha)) / den)
}
