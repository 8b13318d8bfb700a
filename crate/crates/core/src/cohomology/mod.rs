//! Cocycle tables with unit-modulus complex values: 2-cocycles on subgroups,
//! 3-cocycles, and the action data `(ω, τ, σ)` of a group acting on a pointed
//! category. Validation reports violations as data.

mod transgression;

pub use transgression::{dpr_transgression, Transgression};

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupAction, Subgroup};
use crate::root_of_unity;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Largest number of violations kept verbatim in a report.
const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Short name of the identity that failed.
    pub identity: &'static str,
    /// Arguments at which it failed, as element indices.
    pub witness: Vec<usize>,
    /// `|lhs - rhs|`.
    pub deviation: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?} (deviation {:.3e})", self.identity, self.witness, self.deviation)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub checked: usize,
    pub failures: usize,
    /// The first few failures.
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, identity: &'static str, witness: &[usize], lhs: Complex64, rhs: Complex64, tol: f64) {
        self.checked += 1;
        let deviation = (lhs - rhs).norm();
        if !(deviation <= tol) {
            self.failures += 1;
            if self.violations.len() < MAX_WITNESSES {
                self.violations.push(Violation { identity, witness: witness.to_vec(), deviation });
            }
        }
    }

    fn merge(&mut self, other: ValidationReport) {
        self.checked += other.checked;
        self.failures += other.failures;
        for v in other.violations {
            if self.violations.len() < MAX_WITNESSES {
                self.violations.push(v);
            }
        }
    }

    /// `Ok` when passed, otherwise a `ValidationFailure` naming the first
    /// witness.
    pub fn into_result(self, what: &str) -> Result<()> {
        if self.passed() {
            return Ok(());
        }
        Err(Error::ValidationFailure(format!(
            "{what}: {} of {} checks failed; first: {}",
            self.failures, self.checked, self.violations[0]
        )))
    }
}

fn unit_modulus(report: &mut ValidationReport, values: &[Complex64], tol: f64) {
    for (i, v) in values.iter().enumerate() {
        report.check("unit modulus", &[i], Complex64::new(v.norm(), 0.0), ONE, tol);
    }
}

/// A 2-cocycle on a subgroup `H`, indexed by parent elements.
#[derive(Debug, Clone)]
pub struct Cocycle2 {
    domain: Subgroup,
    values: Vec<Complex64>,
}

impl Cocycle2 {
    /// Table indexed by positions in `domain`: `values[i * |H| + j]`.
    pub fn from_values(domain: Subgroup, values: Vec<Complex64>) -> Result<Self> {
        let k = domain.order();
        if values.len() != k * k {
            return Err(Error::Shape(format!("2-cocycle needs {} values, got {}", k * k, values.len())));
        }
        Ok(Cocycle2 { domain, values })
    }

    pub fn from_fn(domain: Subgroup, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let values = domain
            .elements()
            .iter()
            .flat_map(|&g| domain.elements().iter().map(move |&h| (g, h)))
            .map(|(g, h)| f(g, h))
            .collect();
        Cocycle2 { domain, values }
    }

    pub fn trivial(domain: Subgroup) -> Self {
        let k = domain.order();
        Cocycle2 { domain, values: vec![ONE; k * k] }
    }

    /// `df(g, h) = f(g) f(h) / f(gh)` for a function `f` with `f(e) = 1`.
    pub fn coboundary(domain: Subgroup, f: impl Fn(usize) -> Complex64) -> Self {
        let g = domain.parent().clone();
        Self::from_fn(domain, |a, b| f(a) * f(b) / f(g.mul(a, b)))
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.domain.parent()
    }

    /// Value at parent elements `g, h` of the domain.
    #[inline]
    pub fn value(&self, g: usize, h: usize) -> Complex64 {
        let k = self.domain.order();
        let (i, j) = (self.domain.position(g), self.domain.position(h));
        match (i, j) {
            (Some(i), Some(j)) => self.values[i * k + j],
            _ => panic!("cocycle evaluated outside its domain at ({g}, {h})"),
        }
    }

    /// Value at positions inside the domain.
    #[inline]
    pub fn value_at(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.domain.order() + j]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn validate(&self, tol: f64) -> ValidationReport {
        let mut r = ValidationReport::default();
        let g = self.group();
        let els = self.domain.elements();
        unit_modulus(&mut r, &self.values, tol);
        for &a in els {
            r.check("normalized", &[a, 0], self.value(a, 0), ONE, tol);
            r.check("normalized", &[0, a], self.value(0, a), ONE, tol);
        }
        for &a in els {
            for &b in els {
                let ab = g.mul(a, b);
                for &c in els {
                    let lhs = self.value(a, b) * self.value(ab, c);
                    let rhs = self.value(a, g.mul(b, c)) * self.value(b, c);
                    r.check("2-cocycle", &[a, b, c], lhs, rhs, tol);
                }
            }
        }
        r
    }

    /// Pointwise restriction to a subgroup of the domain.
    pub fn restrict(&self, h: &Subgroup) -> Result<Cocycle2> {
        if !h.is_subgroup_of(&self.domain) {
            return Err(Error::InvalidSubgroup("restriction target is not inside the domain".into()));
        }
        Ok(Self::from_fn(h.clone(), |a, b| self.value(a, b)))
    }

    /// The cocycle `ᵗα(tht⁻¹, th't⁻¹) = α(h, h')` on `tHt⁻¹`.
    pub fn conjugate(&self, t: usize) -> Cocycle2 {
        let g = self.group().clone();
        let ti = g.inv(t);
        Self::from_fn(self.domain.conjugate(t), |a, b| self.value(g.conj(ti, a), g.conj(ti, b)))
    }

    fn same_domain(&self, other: &Cocycle2) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::FactorSetMismatch("cocycles live on different subgroups".into()));
        }
        Ok(())
    }

    pub fn product(&self, other: &Cocycle2) -> Result<Cocycle2> {
        self.same_domain(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(Cocycle2 { domain: self.domain.clone(), values })
    }

    pub fn inverse(&self) -> Cocycle2 {
        Cocycle2 { domain: self.domain.clone(), values: self.values.iter().map(|v| v.inv()).collect() }
    }

    /// Same domain and all values within `tol`.
    pub fn approx_eq(&self, other: &Cocycle2, tol: f64) -> bool {
        self.domain == other.domain
            && self.values.iter().zip(&other.values).all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn is_trivial(&self, tol: f64) -> bool {
        self.values.iter().all(|v| (v - ONE).norm() <= tol)
    }

    /// Largest deviation from another table on the same domain.
    pub fn max_deviation(&self, other: &Cocycle2) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// A 3-cocycle on a group.
#[derive(Debug, Clone)]
pub struct Cocycle3 {
    group: Arc<FiniteGroup>,
    values: Vec<Complex64>,
}

impl Cocycle3 {
    pub fn from_values(group: Arc<FiniteGroup>, values: Vec<Complex64>) -> Result<Self> {
        let n = group.order();
        if values.len() != n * n * n {
            return Err(Error::Shape(format!("3-cocycle needs {} values, got {}", n * n * n, values.len())));
        }
        Ok(Cocycle3 { group, values })
    }

    pub fn from_fn(group: Arc<FiniteGroup>, f: impl Fn(usize, usize, usize) -> Complex64) -> Self {
        let n = group.order();
        let mut values = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    values.push(f(a, b, c));
                }
            }
        }
        Cocycle3 { group, values }
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        Cocycle3 { group, values: vec![ONE; n * n * n] }
    }

    /// `dβ(a, b, c) = β(b, c) β(a, bc) / (β(ab, c) β(a, b))` for a normalized
    /// 2-cochain `β`.
    pub fn coboundary(group: Arc<FiniteGroup>, beta: impl Fn(usize, usize) -> Complex64) -> Self {
        let g = group.clone();
        Self::from_fn(group, |a, b, c| {
            beta(b, c) * beta(a, g.mul(b, c)) / (beta(g.mul(a, b), c) * beta(a, b))
        })
    }

    /// `ω(φ(a), φ(b), φ(c))` along a homomorphism `φ: H → G`.
    pub fn pullback(&self, source: Arc<FiniteGroup>, phi: &[usize]) -> Cocycle3 {
        Self::from_fn(source, |a, b, c| self.value(phi[a], phi[b], phi[c]))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn value(&self, a: usize, b: usize, c: usize) -> Complex64 {
        let n = self.group.order();
        self.values[(a * n + b) * n + c]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn product(&self, other: &Cocycle3) -> Result<Cocycle3> {
        if self.group != other.group {
            return Err(Error::Shape("3-cocycles on different groups".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(Cocycle3 { group: self.group.clone(), values })
    }

    pub fn inverse(&self) -> Cocycle3 {
        Cocycle3 { group: self.group.clone(), values: self.values.iter().map(|v| v.inv()).collect() }
    }

    pub fn is_trivial(&self, tol: f64) -> bool {
        self.values.iter().all(|v| (v - ONE).norm() <= tol)
    }

    pub fn validate(&self, tol: f64) -> ValidationReport {
        let mut r = ValidationReport::default();
        let g = &self.group;
        let n = g.order();
        unit_modulus(&mut r, &self.values, tol);
        for a in 0..n {
            for b in 0..n {
                r.check("normalized", &[0, a, b], self.value(0, a, b), ONE, tol);
                r.check("normalized", &[a, 0, b], self.value(a, 0, b), ONE, tol);
                r.check("normalized", &[a, b, 0], self.value(a, b, 0), ONE, tol);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    let bc = g.mul(b, c);
                    let abc = self.value(a, b, c);
                    for d in 0..n {
                        let lhs = self.value(b, c, d) * self.value(a, bc, d) * abc;
                        let rhs = self.value(ab, c, d) * self.value(a, b, g.mul(c, d));
                        r.check("3-cocycle", &[a, b, c, d], lhs, rhs, tol);
                    }
                }
            }
        }
        r
    }
}

/// `ω_q(a, b, c) = exp(2πi · q · a · ⌊(b + c)/n⌋ / n)` on `Z/n`.
pub fn cyclic_3cocycle(n: usize, q: i64) -> Cocycle3 {
    assert!(n >= 1, "cyclic group of order 0");
    let z = Arc::new(FiniteGroup::cyclic(n));
    let ni = n as i64;
    Cocycle3::from_fn(z, |a, b, c| root_of_unity(q * a as i64 * ((b + c) as i64 / ni), ni))
}

/// The data of an action of `G` on the pointed category `C(Γ, ω)`: an action
/// of `G` on `Γ` by automorphisms together with `τ: G × Γ × Γ → k*` and
/// `σ: G × G × Γ → k*`.
#[derive(Debug, Clone)]
pub struct ActionData {
    g: Arc<FiniteGroup>,
    gamma: Arc<FiniteGroup>,
    action: GroupAction,
    omega: Cocycle3,
    /// `tau[(g * |Γ| + x) * |Γ| + y] = τ(g; x, y)`
    tau: Vec<Complex64>,
    /// `sigma[(g * |G| + h) * |Γ| + x] = σ(g, h; x)`
    sigma: Vec<Complex64>,
}

impl ActionData {
    pub fn new(action: GroupAction, omega: Cocycle3, tau: Vec<Complex64>, sigma: Vec<Complex64>) -> Result<Self> {
        let gamma = action
            .target()
            .cloned()
            .ok_or_else(|| Error::InvalidAction("action must be by automorphisms of Γ".into()))?;
        if omega.group().as_ref() != gamma.as_ref() {
            return Err(Error::Shape("ω lives on a different group than Γ".into()));
        }
        let g = action.group().clone();
        let (ng, nx) = (g.order(), gamma.order());
        if tau.len() != ng * nx * nx {
            return Err(Error::Shape(format!("τ needs {} values, got {}", ng * nx * nx, tau.len())));
        }
        if sigma.len() != ng * ng * nx {
            return Err(Error::Shape(format!("σ needs {} values, got {}", ng * ng * nx, sigma.len())));
        }
        Ok(ActionData { g, gamma, action, omega, tau, sigma })
    }

    /// Tables given as functions `τ(g; x, y)` and `σ(g, h; x)`.
    pub fn from_fns(
        action: GroupAction,
        omega: Cocycle3,
        tau: impl Fn(usize, usize, usize) -> Complex64,
        sigma: impl Fn(usize, usize, usize) -> Complex64,
    ) -> Result<Self> {
        let ng = action.group().order();
        let nx = action.set_size();
        let mut t = Vec::with_capacity(ng * nx * nx);
        for g in 0..ng {
            for x in 0..nx {
                for y in 0..nx {
                    t.push(tau(g, x, y));
                }
            }
        }
        let mut s = Vec::with_capacity(ng * ng * nx);
        for g in 0..ng {
            for h in 0..ng {
                for x in 0..nx {
                    s.push(sigma(g, h, x));
                }
            }
        }
        Self::new(action, omega, t, s)
    }

    /// All of `ω`, `τ`, `σ` trivial.
    pub fn trivial(action: GroupAction) -> Result<Self> {
        let gamma = action
            .target()
            .cloned()
            .ok_or_else(|| Error::InvalidAction("action must be by automorphisms of Γ".into()))?;
        Self::from_fns(action, Cocycle3::trivial(gamma), |_, _, _| ONE, |_, _, _| ONE)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn gamma(&self) -> &Arc<FiniteGroup> {
        &self.gamma
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn omega(&self) -> &Cocycle3 {
        &self.omega
    }

    /// `ᵍx`.
    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action.apply(g, x)
    }

    #[inline]
    pub fn tau(&self, g: usize, x: usize, y: usize) -> Complex64 {
        let n = self.gamma.order();
        self.tau[(g * n + x) * n + y]
    }

    #[inline]
    pub fn sigma(&self, g: usize, h: usize, x: usize) -> Complex64 {
        let (ng, nx) = (self.g.order(), self.gamma.order());
        self.sigma[(g * ng + h) * nx + x]
    }

    pub fn tau_values(&self) -> &[Complex64] {
        &self.tau
    }

    pub fn sigma_values(&self) -> &[Complex64] {
        &self.sigma
    }

    /// Factor set of the inertia subgroup of `y`: `α̃_y(g, h) = σ(g, h; y)⁻¹`.
    pub fn inertia_factor_set(&self, y: usize, stabilizer: &Subgroup) -> Cocycle2 {
        Cocycle2::from_fn(stabilizer.clone(), |g, h| self.sigma(g, h, y).inv())
    }

    /// Checks ω, the normalizations and the three compatibility identities
    /// linking `ω`, `τ` and `σ`.
    pub fn validate(&self, tol: f64) -> ValidationReport {
        let mut r = self.omega.validate(tol);
        let (g, x) = (&self.g, &self.gamma);
        let (ng, nx) = (g.order(), x.order());
        unit_modulus(&mut r, &self.tau, tol);
        unit_modulus(&mut r, &self.sigma, tol);
        for a in 0..ng {
            for b in 0..nx {
                r.check("τ normalized", &[a, 0, b], self.tau(a, 0, b), ONE, tol);
                r.check("τ normalized", &[a, b, 0], self.tau(a, b, 0), ONE, tol);
            }
            for b in 0..nx {
                for c in 0..nx {
                    r.check("τ normalized", &[0, b, c], self.tau(0, b, c), ONE, tol);
                }
            }
            for h in 0..ng {
                r.check("σ normalized", &[a, h, 0], self.sigma(a, h, 0), ONE, tol);
            }
            for b in 0..nx {
                r.check("σ normalized", &[0, a, b], self.sigma(0, a, b), ONE, tol);
                r.check("σ normalized", &[a, 0, b], self.sigma(a, 0, b), ONE, tol);
            }
        }
        // ω(x,y,z)/ω(ᵍx,ᵍy,ᵍz) = τ(g;xy,z)τ(g;x,y)/(τ(g;y,z)τ(g;x,yz))
        let mut r1 = ValidationReport::default();
        for a in 0..ng {
            for p in 0..nx {
                for q in 0..nx {
                    let pq = x.mul(p, q);
                    for s in 0..nx {
                        let qs = x.mul(q, s);
                        let lhs = self.omega.value(p, q, s)
                            / self.omega.value(self.act(a, p), self.act(a, q), self.act(a, s));
                        let rhs = self.tau(a, pq, s) * self.tau(a, p, q)
                            / (self.tau(a, q, s) * self.tau(a, p, qs));
                        r1.check("ω twisted by τ", &[a, p, q, s], lhs, rhs, tol);
                    }
                }
            }
        }
        // σ(h,l;x)σ(g,hl;x) = σ(gh,l;x)σ(g,h;ˡx)
        let mut r2 = ValidationReport::default();
        for a in 0..ng {
            for b in 0..ng {
                let ab = g.mul(a, b);
                for l in 0..ng {
                    let bl = g.mul(b, l);
                    for p in 0..nx {
                        let lhs = self.sigma(b, l, p) * self.sigma(a, bl, p);
                        let rhs = self.sigma(ab, l, p) * self.sigma(a, b, self.act(l, p));
                        r2.check("σ cocycle", &[a, b, l, p], lhs, rhs, tol);
                    }
                }
            }
        }
        // τ(gh;x,y)/(τ(g;ʰx,ʰy)τ(h;x,y)) = σ(g,h;x)σ(g,h;y)/σ(g,h;xy)
        let mut r3 = ValidationReport::default();
        for a in 0..ng {
            for b in 0..ng {
                let ab = g.mul(a, b);
                for p in 0..nx {
                    for q in 0..nx {
                        let lhs = self.tau(ab, p, q)
                            / (self.tau(a, self.act(b, p), self.act(b, q)) * self.tau(b, p, q));
                        let rhs = self.sigma(a, b, p) * self.sigma(a, b, q) / self.sigma(a, b, x.mul(p, q));
                        r3.check("τ and σ compatible", &[a, b, p, q], lhs, rhs, tol);
                    }
                }
            }
        }
        r.merge(r1);
        r.merge(r2);
        r.merge(r3);
        r
    }
}
