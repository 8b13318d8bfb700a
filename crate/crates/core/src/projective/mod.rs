//! Projective representations with a prescribed factor set.
//!
//! Convention: `π(g) π(h) = α(g, h) π(gh)` and `π(e) = 1`.

mod character;
mod irreps;

pub use character::ProjCharacter;
pub use irreps::{alpha_regular_class_count, twisted_irreducibles, IrrepSet};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::cohomology::Cocycle2;
use crate::error::{Error, Result};
use crate::group::{LeftTransversal, Subgroup};
use crate::Tolerances;

pub(crate) use character::check_factor_sets;

pub type Mat = DMatrix<Complex64>;

#[derive(Debug, Clone)]
pub struct ProjRep {
    factor_set: Cocycle2,
    /// One matrix per domain position.
    matrices: Vec<Mat>,
}

impl ProjRep {
    /// Matrices indexed by position in the factor set's domain. Checks the
    /// defining identities within `tol`.
    pub fn new(factor_set: Cocycle2, matrices: Vec<Mat>, tol: f64) -> Result<Self> {
        let rep = Self::from_parts(factor_set, matrices)?;
        rep.verify(tol)?;
        Ok(rep)
    }

    fn from_parts(factor_set: Cocycle2, matrices: Vec<Mat>) -> Result<Self> {
        if matrices.len() != factor_set.domain().order() {
            return Err(Error::Shape(format!(
                "{} matrices for a subgroup of order {}",
                matrices.len(),
                factor_set.domain().order()
            )));
        }
        let d = matrices[0].nrows();
        if d == 0 || matrices.iter().any(|m| m.nrows() != d || m.ncols() != d) {
            return Err(Error::Shape("matrices must be square of one common positive size".into()));
        }
        Ok(ProjRep { factor_set, matrices })
    }

    /// Checks `π(e) = 1` and `π(g)π(h) = α(g, h)π(gh)`.
    pub fn verify(&self, tol: f64) -> Result<()> {
        let d = self.dim();
        let dom = self.domain();
        let g = dom.parent();
        let scale = d as f64;
        if (&self.matrices[0] - Mat::identity(d, d)).norm() > tol * scale {
            return Err(Error::ValidationFailure("π(e) is not the identity".into()));
        }
        for (i, &a) in dom.elements().iter().enumerate() {
            for (j, &b) in dom.elements().iter().enumerate() {
                let ab = dom.position(g.mul(a, b)).expect("closed");
                let lhs = &self.matrices[i] * &self.matrices[j];
                let rhs = &self.matrices[ab] * self.factor_set.value_at(i, j);
                let dev = (lhs - rhs).norm();
                if !(dev <= tol * scale) {
                    return Err(Error::ValidationFailure(format!(
                        "π({a})π({b}) ≠ α({a},{b})π({a}{b}) (deviation {dev:.3e})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The 1-dimensional representation with the given values. The values
    /// must satisfy `λ(g)λ(h) = α(g, h)λ(gh)`.
    pub fn one_dimensional(factor_set: Cocycle2, f: impl Fn(usize) -> Complex64) -> Self {
        let matrices = factor_set
            .domain()
            .elements()
            .iter()
            .map(|&g| Mat::from_element(1, 1, f(g)))
            .collect();
        ProjRep { factor_set, matrices }
    }

    /// The trivial representation of `H`.
    pub fn trivial(domain: Subgroup) -> Self {
        Self::one_dimensional(Cocycle2::trivial(domain), |_| Complex64::new(1.0, 0.0))
    }

    /// Twisted left regular module: `L(g) e_h = α(g, h) e_{gh}`.
    pub fn regular(factor_set: &Cocycle2) -> Self {
        let dom = factor_set.domain();
        let g = dom.parent();
        let n = dom.order();
        let matrices = dom
            .elements()
            .iter()
            .map(|&a| {
                let mut m = Mat::zeros(n, n);
                for (j, &h) in dom.elements().iter().enumerate() {
                    let i = dom.position(g.mul(a, h)).expect("closed");
                    m[(i, j)] = factor_set.value(a, h);
                }
                m
            })
            .collect();
        ProjRep { factor_set: factor_set.clone(), matrices }
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].nrows()
    }

    pub fn domain(&self) -> &Subgroup {
        self.factor_set.domain()
    }

    pub fn factor_set(&self) -> &Cocycle2 {
        &self.factor_set
    }

    /// `π(g)` for a parent element `g` of the domain.
    pub fn matrix(&self, g: usize) -> &Mat {
        &self.matrices[self.domain().position(g).expect("element outside the domain")]
    }

    pub fn matrices(&self) -> &[Mat] {
        &self.matrices
    }

    pub fn character(&self) -> ProjCharacter {
        let values = self.matrices.iter().map(Mat::trace).collect();
        ProjCharacter::new(self.factor_set.clone(), values).expect("one value per element")
    }

    /// Multiplicity of the irreducible `self` in `other`.
    pub fn multiplicity_in(&self, other: &ProjRep, tol: &Tolerances) -> Result<usize> {
        self.character().multiplicity_in(&other.character(), tol)
    }

    /// Kronecker product, with factor set `α α'`.
    pub fn tensor(&self, other: &ProjRep) -> Result<ProjRep> {
        let factor_set = self.factor_set.product(&other.factor_set)?;
        let matrices = self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.kronecker(b)).collect();
        Ok(ProjRep { factor_set, matrices })
    }

    /// `π*(g) = π(g)⁻ᵀ`, with factor set `α⁻¹`.
    pub fn dual(&self) -> ProjRep {
        let g = self.domain().parent();
        let matrices = self
            .domain()
            .elements()
            .iter()
            .map(|&a| {
                // π(g)⁻¹ = π(g⁻¹) / α(g, g⁻¹)
                let ai = g.inv(a);
                (self.matrix(ai) / self.factor_set.value(a, ai)).transpose()
            })
            .collect();
        ProjRep { factor_set: self.factor_set.inverse(), matrices }
    }

    /// `ᵗπ(h') = π(t⁻¹h't)` on `tHt⁻¹`.
    pub fn conjugate(&self, t: usize) -> ProjRep {
        let g = self.domain().parent().clone();
        let ti = g.inv(t);
        let factor_set = self.factor_set.conjugate(t);
        let matrices = factor_set
            .domain()
            .elements()
            .iter()
            .map(|&x| self.matrix(g.conj(ti, x)).clone())
            .collect();
        ProjRep { factor_set, matrices }
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<ProjRep> {
        let factor_set = self.factor_set.restrict(h)?;
        let matrices = h.elements().iter().map(|&x| self.matrix(x).clone()).collect();
        Ok(ProjRep { factor_set, matrices })
    }

    /// `Ind_H^G` of this representation of `H`, for a factor set `α` on the
    /// larger group whose restriction to `H` is this representation's.
    ///
    /// Uses the minimal-element transversal `{r_i}`; block `(j, i)` of `g` is
    /// `α(g, r_i) α(r_j, h)⁻¹ π(h)` where `g r_i = r_j h`.
    pub fn induce(&self, alpha: &Cocycle2, tol: f64) -> Result<ProjRep> {
        let h = self.domain();
        if !h.is_subgroup_of(alpha.domain()) {
            return Err(Error::InvalidSubgroup("inducing from a subgroup outside the target".into()));
        }
        check_factor_sets(&alpha.restrict(h)?, &self.factor_set, tol)?;
        let big = alpha.domain();
        let g = big.parent();
        // cosets of H inside the target domain
        let transversal = LeftTransversal::canonical(h);
        let reps: Vec<usize> =
            transversal.reps().iter().copied().filter(|&r| big.contains(r)).collect();
        let index_of = |x: usize| reps.iter().position(|&r| transversal.coset_index(r) == transversal.coset_index(x));
        let (k, d) = (reps.len(), self.dim());
        let matrices = big
            .elements()
            .iter()
            .map(|&a| {
                let mut m = Mat::zeros(k * d, k * d);
                for (i, &ri) in reps.iter().enumerate() {
                    let ari = g.mul(a, ri);
                    let j = index_of(ari).expect("coset inside the target");
                    let rj = reps[j];
                    let hh = g.mul(g.inv(rj), ari);
                    let c = alpha.value(a, ri) / alpha.value(rj, hh);
                    m.view_mut((j * d, i * d), (d, d)).copy_from(&(self.matrix(hh) * c));
                }
                m
            })
            .collect();
        Ok(ProjRep { factor_set: alpha.clone(), matrices })
    }

    pub fn direct_sum(&self, other: &ProjRep, tol: f64) -> Result<ProjRep> {
        if self.domain() != other.domain() {
            return Err(Error::FactorSetMismatch("representations of different subgroups".into()));
        }
        check_factor_sets(&self.factor_set, &other.factor_set, tol)?;
        let (d1, d2) = (self.dim(), other.dim());
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = Mat::zeros(d1 + d2, d1 + d2);
                m.view_mut((0, 0), (d1, d1)).copy_from(a);
                m.view_mut((d1, d1), (d2, d2)).copy_from(b);
                m
            })
            .collect();
        Ok(ProjRep { factor_set: self.factor_set.clone(), matrices })
    }
}
