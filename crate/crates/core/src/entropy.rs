//! The four entropy functionals over density spectra and the routing between
//! them.
//!
//! Everything factors through the moment sum `S_q = sum gamma_i^q` except
//! von Neumann. Logarithms are base 2, so entropies are in bits:
//!
//! - Sharma-Mittal: `H_{q,r} = [(S_q)^{(1-r)/(1-q)} - 1] / (1 - r)`
//! - Renyi:         `log2(S_q) / (1 - q)`
//! - Tsallis:       `(S_q - 1) / (1 - q)`
//! - von Neumann:   `-sum gamma log2 gamma`, with `0 log 0 = 0`
//!
//! The Sharma-Mittal formula is a raw power expression with no logarithm in
//! it; at `r = q` it reduces to Tsallis exactly, while its `r -> 1` and
//! `(q, r) -> (1, 1)` limits are the *natural-log* Renyi and Shannon
//! entropies (a factor `ln 2` away from the base-2 forms reported by
//! [`renyi`] and [`von_neumann`]). The [`entropy`] dispatcher therefore
//! treats parameters within `limit_tol` of those singular lines as requests
//! for the named limiting family and routes to it.

use crate::error::{Error, Result};
use crate::spectra::{moment_sum, DensitySpectrum};

/// Default routing tolerance around the removable singularities at
/// `q = 1`, `r = 1`, and `r = q`.
pub const DEFAULT_LIMIT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyFamily {
    SharmaMittal,
    Renyi,
    Tsallis,
    VonNeumann,
}

impl EntropyFamily {
    pub fn name(self) -> &'static str {
        match self {
            EntropyFamily::SharmaMittal => "sm",
            EntropyFamily::Renyi => "renyi",
            EntropyFamily::Tsallis => "tsallis",
            EntropyFamily::VonNeumann => "vn",
        }
    }
}

impl std::str::FromStr for EntropyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sm" | "sharma-mittal" => Ok(EntropyFamily::SharmaMittal),
            "renyi" => Ok(EntropyFamily::Renyi),
            "tsallis" => Ok(EntropyFamily::Tsallis),
            "vn" | "von-neumann" => Ok(EntropyFamily::VonNeumann),
            other => Err(Error::InvalidParameter(format!(
                "unknown entropy family '{other}' (expected sm|renyi|tsallis|vn)"
            ))),
        }
    }
}

/// Family selector plus the real parameters `q`, `r` and routing tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyParams {
    pub family: EntropyFamily,
    pub q: f64,
    pub r: f64,
    pub limit_tol: f64,
}

impl EntropyParams {
    pub fn sharma_mittal(q: f64, r: f64) -> Self {
        EntropyParams { family: EntropyFamily::SharmaMittal, q, r, limit_tol: DEFAULT_LIMIT_TOL }
    }

    pub fn renyi(q: f64) -> Self {
        EntropyParams { family: EntropyFamily::Renyi, q, r: 1.0, limit_tol: DEFAULT_LIMIT_TOL }
    }

    pub fn tsallis(q: f64) -> Self {
        EntropyParams { family: EntropyFamily::Tsallis, q, r: q, limit_tol: DEFAULT_LIMIT_TOL }
    }

    pub fn von_neumann() -> Self {
        EntropyParams { family: EntropyFamily::VonNeumann, q: 1.0, r: 1.0, limit_tol: DEFAULT_LIMIT_TOL }
    }

    pub fn with_limit_tol(mut self, limit_tol: f64) -> Self {
        self.limit_tol = limit_tol;
        self
    }
}

/// Which functional a Sharma-Mittal parameter pair resolves to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Route {
    VonNeumann,
    Renyi,
    Tsallis,
    SharmaMittal,
}

pub(crate) fn route_sharma_mittal(q: f64, r: f64, limit_tol: f64) -> Route {
    let q_at_one = (q - 1.0).abs() <= limit_tol;
    let r_at_one = (r - 1.0).abs() <= limit_tol;
    if q_at_one && r_at_one {
        Route::VonNeumann
    } else if r_at_one {
        Route::Renyi
    } else if (r - q).abs() <= limit_tol {
        Route::Tsallis
    } else {
        Route::SharmaMittal
    }
}

fn check_q(q: f64, limit_tol: f64) -> Result<()> {
    if q <= 0.0 {
        return Err(Error::NonPositiveQ(q));
    }
    if (q - 1.0).abs() <= limit_tol {
        return Err(Error::ParameterAtLimit { q, r: f64::NAN });
    }
    Ok(())
}

// pure states produce -0.0 through the 1/(1-r) division; report plain zero
fn unsign_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

pub(crate) fn sharma_mittal_from_moment(s_q: f64, q: f64, r: f64) -> f64 {
    (s_q.powf((1.0 - r) / (1.0 - q)) - 1.0) / (1.0 - r)
}

pub(crate) fn renyi_from_moment(s_q: f64, q: f64) -> f64 {
    s_q.log2() / (1.0 - q)
}

pub(crate) fn tsallis_from_moment(s_q: f64, q: f64) -> f64 {
    (s_q - 1.0) / (1.0 - q)
}

/// Sharma-Mittal entropy `H_{q,r}`. Requires `q > 0` with both `q` and `r`
/// away from 1; at those limits the formula is singular and callers should
/// route to [`renyi`] / [`von_neumann`] (use [`entropy`] to do so
/// automatically).
pub fn sharma_mittal(ds: &DensitySpectrum, q: f64, r: f64) -> Result<f64> {
    check_q(q, DEFAULT_LIMIT_TOL)?;
    if (r - 1.0).abs() <= DEFAULT_LIMIT_TOL {
        return Err(Error::ParameterAtLimit { q, r });
    }
    Ok(unsign_zero(sharma_mittal_from_moment(moment_sum(ds, q)?, q, r)))
}

/// Renyi entropy in bits: `log2(S_q) / (1 - q)`.
pub fn renyi(ds: &DensitySpectrum, q: f64) -> Result<f64> {
    check_q(q, DEFAULT_LIMIT_TOL)?;
    Ok(unsign_zero(renyi_from_moment(moment_sum(ds, q)?, q)))
}

/// Tsallis entropy: `(S_q - 1) / (1 - q)`.
pub fn tsallis(ds: &DensitySpectrum, q: f64) -> Result<f64> {
    check_q(q, DEFAULT_LIMIT_TOL)?;
    Ok(unsign_zero(tsallis_from_moment(moment_sum(ds, q)?, q)))
}

/// Von Neumann entropy in bits: `-sum gamma log2 gamma` with `0 log 0 = 0`.
pub fn von_neumann(ds: &DensitySpectrum) -> f64 {
    unsign_zero(
        ds.probs()
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * p.log2())
            .sum(),
    )
}

/// Evaluates the requested entropy, routing Sharma-Mittal parameters within
/// `limit_tol` of a singular line to the corresponding limiting family:
/// `r ~ 1` to Renyi, `r ~ q` to Tsallis, and `(q, r) ~ (1, 1)` to
/// von Neumann. An explicit family is always evaluated directly.
pub fn entropy(ds: &DensitySpectrum, params: &EntropyParams) -> Result<f64> {
    match params.family {
        EntropyFamily::Renyi => renyi(ds, params.q),
        EntropyFamily::Tsallis => tsallis(ds, params.q),
        EntropyFamily::VonNeumann => Ok(von_neumann(ds)),
        EntropyFamily::SharmaMittal => match route_sharma_mittal(params.q, params.r, params.limit_tol) {
            Route::VonNeumann => Ok(von_neumann(ds)),
            Route::Renyi => renyi(ds, params.q),
            Route::Tsallis => tsallis(ds, params.q),
            Route::SharmaMittal => sharma_mittal(ds, params.q, params.r),
        },
    }
}
