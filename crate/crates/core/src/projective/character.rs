use num_complex::Complex64;

use crate::cohomology::Cocycle2;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::Tolerances;

/// Character of a projective representation, indexed by positions in its
/// domain.
#[derive(Debug, Clone)]
pub struct ProjCharacter {
    factor_set: Cocycle2,
    values: Vec<Complex64>,
}

impl ProjCharacter {
    pub fn new(factor_set: Cocycle2, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != factor_set.domain().order() {
            return Err(Error::Shape(format!(
                "character has {} values for a subgroup of order {}",
                values.len(),
                factor_set.domain().order()
            )));
        }
        Ok(ProjCharacter { factor_set, values })
    }

    pub(crate) fn from_fn(factor_set: Cocycle2, f: impl Fn(usize) -> Complex64) -> Self {
        let values = factor_set.domain().elements().iter().map(|&g| f(g)).collect();
        ProjCharacter { factor_set, values }
    }

    pub fn factor_set(&self) -> &Cocycle2 {
        &self.factor_set
    }

    pub fn domain(&self) -> &Subgroup {
        self.factor_set.domain()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Value at a parent element of the domain.
    #[inline]
    pub fn value(&self, g: usize) -> Complex64 {
        let i = self.domain().position(g).expect("character evaluated outside its domain");
        self.values[i]
    }

    pub fn dim(&self) -> usize {
        self.values[0].re.round() as usize
    }

    /// `(χ ⊗ χ')(g) = χ(g) χ'(g)`, with factor set `α α'`.
    pub fn tensor(&self, other: &ProjCharacter) -> Result<ProjCharacter> {
        let factor_set = self.factor_set.product(&other.factor_set)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ProjCharacter { factor_set, values })
    }

    /// `χ*(g) = χ(g⁻¹) / α(g, g⁻¹)`, the trace of `π(g)⁻ᵀ`.
    pub fn dual(&self) -> ProjCharacter {
        let g = self.domain().parent().clone();
        let alpha = &self.factor_set;
        ProjCharacter::from_fn(alpha.inverse(), |x| self.value(g.inv(x)) / alpha.value(x, g.inv(x)))
    }

    /// `ᵗχ(tht⁻¹) = χ(h)` on `tHt⁻¹`.
    pub fn conjugate(&self, t: usize) -> ProjCharacter {
        let g = self.domain().parent().clone();
        let ti = g.inv(t);
        ProjCharacter::from_fn(self.factor_set.conjugate(t), |x| self.value(g.conj(ti, x)))
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<ProjCharacter> {
        let factor_set = self.factor_set.restrict(h)?;
        Ok(ProjCharacter::from_fn(factor_set, |x| self.value(x)))
    }

    pub fn direct_sum(&self, other: &ProjCharacter, tol: f64) -> Result<ProjCharacter> {
        check_factor_sets(&self.factor_set, &other.factor_set, tol)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ProjCharacter { factor_set: self.factor_set.clone(), values })
    }

    /// `1/|H| Σ_g α(g⁻¹, g)⁻¹ χ(g) χ'(g⁻¹)`, without checks.
    pub fn inner(&self, other: &ProjCharacter) -> Complex64 {
        let dom = self.domain();
        let g = dom.parent();
        let alpha = &self.factor_set;
        let sum: Complex64 = dom
            .elements()
            .iter()
            .map(|&x| {
                let xi = g.inv(x);
                self.value(x) * other.value(xi) / alpha.value(xi, x)
            })
            .sum();
        sum / dom.order() as f64
    }

    /// Multiplicity of the irreducible `self` in `other`. Both must carry the
    /// same factor set.
    pub fn multiplicity_in(&self, other: &ProjCharacter, tol: &Tolerances) -> Result<usize> {
        if self.domain() != other.domain() {
            return Err(Error::FactorSetMismatch("characters on different subgroups".into()));
        }
        check_factor_sets(&self.factor_set, &other.factor_set, tol.val)?;
        snap(self.inner(other), tol.int)
    }

    pub fn approx_eq(&self, other: &ProjCharacter, tol: f64) -> bool {
        self.domain() == other.domain()
            && self.values.iter().zip(&other.values).all(|(a, b)| (a - b).norm() <= tol)
    }
}

pub(crate) fn check_factor_sets(a: &Cocycle2, b: &Cocycle2, tol: f64) -> Result<()> {
    if a.domain() != b.domain() {
        return Err(Error::FactorSetMismatch("factor sets live on different subgroups".into()));
    }
    let dev = a.max_deviation(b);
    if !(dev <= tol) {
        return Err(Error::FactorSetMismatch(format!("factor sets differ by {dev:.3e}")));
    }
    Ok(())
}

/// Rounds a computed multiplicity to a nonnegative integer.
pub(crate) fn snap(value: Complex64, tol: f64) -> Result<usize> {
    let nearest = value.re.round();
    let off = (value - Complex64::new(nearest, 0.0)).norm();
    if !(off <= tol) || nearest < 0.0 {
        return Err(Error::NonIntegralMultiplicity { value: format!("{value}"), tol });
    }
    Ok(nearest as usize)
}
