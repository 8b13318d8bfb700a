//! Simple objects and fusion rules of equivariantizations `C(Γ, ω)^G` of
//! pointed fusion categories under finite group actions.
//!
//! The crate is organised bottom-up:
//!
//! - [`group`]: finite groups as multiplication tables, subgroups, actions,
//!   conjugacy classes, double cosets and diagonal orbits.
//! - [`cohomology`]: 2- and 3-cocycle tables, the action data `(τ, σ)` and
//!   their validation, and the transgression used for twisted doubles.
//! - [`projective`]: projective representations with a prescribed factor
//!   set, their characters and the usual constructions on them.
//! - [`equivariant`]: classification of simple objects and the fusion
//!   multiplicities of the equivariantization.
//! - [`double`]: the twisted quantum double `D^ω G` as a special case.
//! - [`ring`]: based rings, their axiom checks and isomorphism search.
//! - [`io`]: JSON input and output formats.

pub mod cohomology;
pub mod double;
pub mod equivariant;
pub mod error;
pub mod group;
pub mod io;
pub mod projective;
pub mod ring;

pub use error::{Error, Result};

pub use num_complex::Complex64;

/// Default tolerance for cocycle identities and factor-set comparisons.
pub const EPS_VAL: f64 = 1e-9;

/// Default tolerance for snapping multiplicities to integers.
pub const EPS_INT: f64 = 1e-6;

/// Environment variable that overrides [`EPS_VAL`].
pub const TOL_ENV_VAR: &str = "FUSION_FORGE_TOL";

/// Numerical tolerances used throughout a computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Identity checks on unit-modulus tables.
    pub val: f64,
    /// Integrality of multiplicities.
    pub int: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { val: EPS_VAL, int: EPS_INT }
    }
}

impl Tolerances {
    /// Defaults, with `val` taken from `FUSION_FORGE_TOL` when it is set to a
    /// positive number.
    pub fn from_env() -> Result<Self> {
        let mut tol = Tolerances::default();
        if let Ok(raw) = std::env::var(TOL_ENV_VAR) {
            let val: f64 = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{TOL_ENV_VAR}={raw:?} is not a number")))?;
            if !(val > 0.0 && val.is_finite()) {
                return Err(Error::Parse(format!("{TOL_ENV_VAR} must be positive, got {val}")));
            }
            tol.val = val;
        }
        Ok(tol)
    }
}

/// `exp(2πi · num / den)`.
pub fn root_of_unity(num: i64, den: i64) -> Complex64 {
    assert!(den != 0, "root of unity with zero denominator");
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    let k = num.rem_euclid(den);
    // exact values on the axes
    if (4 * k) % den == 0 {
        return match 4 * k / den {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k as f64 / den as f64))
}
