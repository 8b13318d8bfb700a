use num_complex::Complex64;

use super::{ActionData, Cocycle2, Cocycle3};
use crate::error::Result;
use crate::group::{GroupAction, Subgroup};

/// The maps `γ(g, h; x)` and `μ(g; x, y)` obtained from a 3-cocycle `ω` on
/// `G`, together with the action data they define for `G` acting on itself
/// by conjugation.
#[derive(Debug, Clone)]
pub struct Transgression {
    gamma: Vec<Complex64>,
    mu: Vec<Complex64>,
    data: ActionData,
}

/// Builds `γ`, `μ` from `ω` and the action data with `Γ = G`, `ᵍx = gxg⁻¹`,
/// `ω_Γ = ω⁻¹`, `σ(g, h; x) = γ(g, h; x)` and `τ(g; x, y) = μ(g; x, y)⁻¹`.
///
/// ```text
/// γ(g, h; x) = ω(g, h, x) ω(ghx(gh)⁻¹, g, h) / ω(g, hxh⁻¹, h)
/// μ(g; x, y) = ω(gxg⁻¹, g, y) / (ω(gxg⁻¹, gyg⁻¹, g) ω(g, x, y))
/// ```
///
/// Fails with `ValidationFailure` if the resulting action data does not
/// satisfy its identities within `tol`.
pub fn dpr_transgression(omega: &Cocycle3, tol: f64) -> Result<Transgression> {
    omega.validate(tol).into_result("ω")?;
    let g = omega.group().clone();
    let n = g.order();
    let w = |a, b, c| omega.value(a, b, c);
    let mut gamma = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            for x in 0..n {
                gamma.push(w(a, b, x) * w(g.conj(ab, x), a, b) / w(a, g.conj(b, x), b));
            }
        }
    }
    let mut mu = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for x in 0..n {
            let ax = g.conj(a, x);
            for y in 0..n {
                mu.push(w(ax, a, y) / (w(ax, g.conj(a, y), a) * w(a, x, y)));
            }
        }
    }
    let action = GroupAction::conjugation(g.clone());
    let at = |t: &[Complex64], i: usize, j: usize, k: usize| t[(i * n + j) * n + k];
    let data = ActionData::from_fns(
        action,
        omega.inverse(),
        |a, x, y| at(&mu, a, x, y).inv(),
        |a, b, x| at(&gamma, a, b, x),
    )?;
    data.validate(tol).into_result("transgressed action data")?;
    Ok(Transgression { gamma, mu, data })
}

impl Transgression {
    fn n(&self) -> usize {
        self.data.group().order()
    }

    #[inline]
    pub fn gamma(&self, g: usize, h: usize, x: usize) -> Complex64 {
        let n = self.n();
        self.gamma[(g * n + h) * n + x]
    }

    #[inline]
    pub fn mu(&self, g: usize, x: usize, y: usize) -> Complex64 {
        let n = self.n();
        self.mu[(g * n + x) * n + y]
    }

    pub fn action_data(&self) -> &ActionData {
        &self.data
    }

    pub fn into_action_data(self) -> ActionData {
        self.data
    }

    /// `γ_x(g, h) = γ(g, h; x)` on the centralizer of `x`.
    pub fn gamma_x(&self, x: usize, centralizer: &Subgroup) -> Cocycle2 {
        Cocycle2::from_fn(centralizer.clone(), |g, h| self.gamma(g, h, x))
    }
}
