//! Closed-form order predicates and transport derivatives for the worked
//! families, used as oracles against the generic numeric checkers.
//!
//! For monomial maps R(t) = t^rho the order classification reduces to bands
//! of the exponent; Weibull pairs reduce to the monomial case with
//! rho = k/l. For sinh-arsinh pairs the map is again sinh-arsinh with reduced
//! parameters, and R', R'', R''' have explicit forms in terms of
//! S(t) = sinh(tau*arsinh(t) - nu) and its cosh companion C.

use crate::Error;

/// Reduced parameters of a sinh-arsinh pair:
/// nu~ = (nu_F - nu_G)/tau_G and tau~ = tau_F/tau_G, so that
/// R_FG = S_{nu~, tau~} on all of R.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SasReduced {
    pub nu: f64,
    pub tau: f64,
}

impl SasReduced {
    pub fn new(nu: f64, tau: f64) -> Result<Self, Error> {
        if !(tau.is_finite() && tau > 0.0) {
            return Err(Error::InvalidParameter {
                family: "sas-reduced",
                name: "tau",
                value: tau,
            });
        }
        if !nu.is_finite() {
            return Err(Error::InvalidParameter {
                family: "sas-reduced",
                name: "nu",
                value: nu,
            });
        }
        Ok(SasReduced { nu, tau })
    }

    pub fn from_pair(nu_f: f64, tau_f: f64, nu_g: f64, tau_g: f64) -> Result<Self, Error> {
        if !(tau_f > 0.0 && tau_g > 0.0) {
            return Err(Error::InvalidParameter {
                family: "sas",
                name: "tau",
                value: tau_f.min(tau_g),
            });
        }
        SasReduced::new((nu_f - nu_g) / tau_g, tau_f / tau_g)
    }

    /// S_{nu~,tau~}(t).
    pub fn s(&self, t: f64) -> f64 {
        (self.tau * t.asinh() - self.nu).sinh()
    }

    /// C_{nu~,tau~}(t), the cosh companion.
    pub fn c(&self, t: f64) -> f64 {
        (self.tau * t.asinh() - self.nu).cosh()
    }

    /// Closed-form (R', R'', R''') of the reduced transport map; valid on all
    /// of R, free of any cdf or quantile evaluation.
    pub fn r_derivs(&self, t: f64) -> (f64, f64, f64) {
        let tau = self.tau;
        let w = tau * t.asinh() - self.nu;
        let s = w.sinh();
        let c = w.cosh();
        let u = 1.0 + t * t;
        let sq = u.sqrt();
        let r1 = tau / sq * c;
        let r2 = tau * u.powf(-1.5) * (tau * sq * s - t * c);
        let r3 = tau
            * u.powf(-2.5)
            * (-3.0 * tau * t * sq * s + ((tau * tau + 2.0) * t * t + tau * tau - 1.0) * c);
        (r1, r2, r3)
    }

    /// h(t) = tau~ sqrt(1+t^2) S(t) - t C(t); R'' has the sign of h.
    pub fn h(&self, t: f64) -> f64 {
        let s = self.s(t);
        let c = self.c(t);
        self.tau * (1.0 + t * t).sqrt() * s - t * c
    }

    /// h'(t) = (tau~^2 - 1) C(t).
    pub fn h_deriv(&self, t: f64) -> f64 {
        (self.tau * self.tau - 1.0) * self.c(t)
    }
}

/// Order classification for the monomial map R(t) = t^p on (0, 1):
/// forward <=_3 holds iff p is outside (1, 2), backward iff p is outside
/// (1/2, 1), and =_3 iff p lies in (0, 1/2] u {1} u [2, inf).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialOrder {
    pub leq3_fw: bool,
    pub leq3_bw: bool,
    pub equiv3: bool,
}

pub fn monomial_order_predicate(p: f64) -> Result<MonomialOrder, Error> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidParameter {
            family: "monomial",
            name: "p",
            value: p,
        });
    }
    let leq3_fw = !(p > 1.0 && p < 2.0);
    let leq3_bw = !(p > 0.5 && p < 1.0);
    Ok(MonomialOrder {
        leq3_fw,
        leq3_bw,
        equiv3: leq3_fw && leq3_bw,
    })
}

/// Weibull pairs reduce to the monomial predicate with exponent k/l.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeibullOrder {
    pub leq3: bool,
    pub equiv3: bool,
}

pub fn weibull_order_predicate(k: f64, l: f64) -> Result<WeibullOrder, Error> {
    if !(k.is_finite() && k > 0.0 && l.is_finite() && l > 0.0) {
        return Err(Error::InvalidParameter {
            family: "weibull",
            name: "k",
            value: if k > 0.0 { l } else { k },
        });
    }
    let m = monomial_order_predicate(k / l)?;
    Ok(WeibullOrder {
        leq3: m.leq3_fw,
        equiv3: m.equiv3,
    })
}

/// Order classification for a sinh-arsinh pair: <=_3 iff tau_F >= 2 tau_G,
/// <=_gs^0 iff tau_F > tau_G, and <=_gs^{t0} for reasonable t0 != 0 iff
/// tau_F >= 2 tau_G.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SasOrder {
    pub leq3: bool,
    pub leq_gs0: bool,
    pub leq_gs_t0_nonzero: bool,
}

pub fn sas_order_predicate(
    nu_f: f64,
    tau_f: f64,
    nu_g: f64,
    tau_g: f64,
) -> Result<SasOrder, Error> {
    if !(tau_f > 0.0 && tau_g > 0.0) {
        return Err(Error::InvalidParameter {
            family: "sas",
            name: "tau",
            value: tau_f.min(tau_g),
        });
    }
    if nu_f == nu_g && tau_f == tau_g {
        return Err(Error::IdenticalParameters);
    }
    Ok(SasOrder {
        leq3: tau_f >= 2.0 * tau_g,
        leq_gs0: tau_f > tau_g,
        leq_gs_t0_nonzero: tau_f >= 2.0 * tau_g,
    })
}

/// Direction of the single sign change of R''.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignChange {
    None,
    PosToNeg,
    NegToPos,
    Multiple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    No,
    Increasing,
    Constant,
}

/// Behaviour of R'' as t -> +-infinity: the exponent of the asymptotic
/// monomial is tau~ - 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitClass {
    Zero,
    FiniteNonzero,
    SublinearGrowth,
    LinearGrowth,
    SuperlinearGrowth,
}

/// One classified row of the R'' behaviour table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Row {
    pub sign_change: SignChange,
    pub monotonicity: Monotonicity,
    pub limit: LimitClass,
}

/// Numeric classification of R'' for a reduced sinh-arsinh pair: sign-change
/// direction from certified signs of h on a wide grid, monotonicity from the
/// sign of R''' (h' fixes where h can turn), and the limit class from the
/// log-log slope of |R''| between |t| = 1e3 and 1e4.
pub fn sas_table1_row(red: &SasReduced) -> Table1Row {
    let ts = classification_grid();

    // Certified sign sequence of h.
    let mut signs: Vec<bool> = Vec::new();
    for &t in &ts {
        let s = red.s(t);
        let c = red.c(t);
        let term_scale = (red.tau * (1.0 + t * t).sqrt() * s)
            .abs()
            .max((t * c).abs());
        let h = red.tau * (1.0 + t * t).sqrt() * s - t * c;
        let tol = (1e-9 * term_scale.max(1.0)).max(1024.0 * f64::EPSILON * term_scale);
        if h > tol {
            signs.push(true);
        } else if h < -tol {
            signs.push(false);
        }
    }
    let mut transitions = Vec::new();
    for w in signs.windows(2) {
        if w[0] != w[1] {
            transitions.push(w[1]);
        }
    }
    let sign_change = match transitions.as_slice() {
        [] => SignChange::None,
        [true] => SignChange::NegToPos,
        [false] => SignChange::PosToNeg,
        _ => SignChange::Multiple,
    };

    // Monotonicity of R'': constant when the range of R'' is inside noise,
    // increasing when R''' is certifiably non-negative throughout.
    let mut r2_lo = f64::INFINITY;
    let mut r2_hi = f64::NEG_INFINITY;
    let mut r2_scale = 0.0f64;
    let mut r3_scale = 0.0f64;
    let mut r3_nonneg = true;
    for &t in &ts {
        let (_, r2, r3) = red.r_derivs(t);
        r2_lo = r2_lo.min(r2);
        r2_hi = r2_hi.max(r2);
        r2_scale = r2_scale.max(r2.abs());
        r3_scale = r3_scale.max(r3.abs());
        let u = 1.0 + t * t;
        let pre = red.tau * u.powf(-2.5);
        let cancel = (pre * 3.0 * red.tau * t * u.sqrt() * red.s(t))
            .abs()
            .max((pre * ((red.tau * red.tau + 2.0) * t * t + red.tau * red.tau - 1.0) * red.c(t)).abs());
        let tol = (1e-9 * r3_scale.max(1.0)).max(1024.0 * f64::EPSILON * cancel);
        if r3 < -tol {
            r3_nonneg = false;
        }
    }
    let monotonicity = if r2_hi - r2_lo <= 1e-9 * r2_scale.max(1.0) + 1e-12 {
        Monotonicity::Constant
    } else if r3_nonneg {
        Monotonicity::Increasing
    } else {
        Monotonicity::No
    };

    // Limit class from the asymptotic slope on both sides.
    let slope_at = |t1: f64, t2: f64| -> Option<f64> {
        let (_, a, _) = red.r_derivs(t1);
        let (_, b, _) = red.r_derivs(t2);
        if a.abs() < 1e-290 || b.abs() < 1e-290 {
            return None;
        }
        Some((b.abs().ln() - a.abs().ln()) / (t2.abs().ln() - t1.abs().ln()))
    };
    let pos = slope_at(1e3, 1e4);
    let neg = slope_at(-1e3, -1e4);
    let limit = match (pos, neg) {
        (Some(sp), Some(sn)) => {
            let s = 0.5 * (sp + sn);
            if s <= -0.05 {
                LimitClass::Zero
            } else if s < 0.05 {
                LimitClass::FiniteNonzero
            } else if s < 0.95 {
                LimitClass::SublinearGrowth
            } else if s < 1.05 {
                LimitClass::LinearGrowth
            } else {
                LimitClass::SuperlinearGrowth
            }
        }
        // R'' vanished beyond representability: it converges to zero.
        _ => LimitClass::Zero,
    };

    Table1Row {
        sign_change,
        monotonicity,
        limit,
    }
}

// Symmetric grid, dense near the origin with logarithmic tails. The root of h
// shifts with nu~, so the tails go far out.
fn classification_grid() -> Vec<f64> {
    let mut ts = Vec::with_capacity(4096);
    let n = 1200;
    for i in 0..=n {
        ts.push(-20.0 + 40.0 * i as f64 / n as f64);
    }
    let m = 400;
    for i in 1..=m {
        let t = 20.0 * (1e4f64 / 20.0).powf(i as f64 / m as f64);
        ts.push(t);
        ts.push(-t);
    }
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ts
}
