//! Crossed-product algebras `k^Γ ⋊ kG` with basis `δ_x g`:
//!
//! ```text
//! (δ_x g)(δ_y h) = [x = ᵍy] θ_x(g, h) δ_x gh
//! Δ(δ_x g)       = Σ_{ab = x} c_g(a, b) δ_a g ⊗ δ_b g
//! ```
//!
//! Simple modules are found by splitting the regular module with a random
//! element of its commutant; tensor products are decomposed by solving for
//! multiplicities against the simple characters.

use std::collections::HashMap;
use std::sync::Arc;

use fusion_forge::cohomology::Cocycle3;
use fusion_forge::group::FiniteGroup;
use fusion_forge::ring::FusionRing;
use fusion_forge::Complex64;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Mat = DMatrix<Complex64>;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub struct CrossedProduct {
    pub gamma: Arc<FiniteGroup>,
    pub g: Arc<FiniteGroup>,
    /// `act[g * |Γ| + x] = ᵍx`
    act: Vec<usize>,
    /// `theta[(x * |G| + g) * |G| + h]`
    theta: Vec<Complex64>,
    /// `coprod[(g * |Γ| + a) * |Γ| + b]`
    coprod: Vec<Complex64>,
}

impl CrossedProduct {
    /// The smash product of a group acting on `Γ` with no twisting.
    pub fn smash(gamma: Arc<FiniteGroup>, g: Arc<FiniteGroup>, act: impl Fn(usize, usize) -> usize) -> Self {
        let (nx, ng) = (gamma.order(), g.order());
        let act = (0..ng).flat_map(|a| (0..nx).map(move |x| (a, x))).map(|(a, x)| act(a, x)).collect();
        CrossedProduct { gamma, g, act, theta: vec![ONE; nx * ng * ng], coprod: vec![ONE; ng * nx * nx] }
    }

    /// `D^ω G` in the normalization
    ///
    /// ```text
    /// θ_x(g, h) = ω(x, g, h) ω(g, h, (gh)⁻¹x(gh)) / ω(g, g⁻¹xg, h)
    /// c_g(a, b) = ω(a, b, g) ω(g, g⁻¹ag, g⁻¹bg) / ω(a, g, g⁻¹bg)
    /// ```
    ///
    /// with multiplication `(δ_x g)(δ_y h) = [x = gyg⁻¹] θ_x(g, h) δ_x gh`.
    pub fn twisted_double(omega: &Cocycle3) -> Self {
        let g = omega.group().clone();
        let n = g.order();
        let w = |a, b, c| omega.value(a, b, c);
        let cj = |t: usize, x: usize| g.mul(g.mul(g.inv(t), x), t);
        let mut theta = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let ab = g.mul(a, b);
                    theta.push(w(x, a, b) * w(a, b, cj(ab, x)) / w(a, cj(a, x), b));
                }
            }
        }
        let mut coprod = Vec::with_capacity(n * n * n);
        for t in 0..n {
            for a in 0..n {
                for b in 0..n {
                    coprod.push(w(a, b, t) * w(t, cj(t, a), cj(t, b)) / w(a, t, cj(t, b)));
                }
            }
        }
        let act = (0..n).flat_map(|a| (0..n).map(move |x| (a, x))).map(|(a, x)| g.conj(a, x)).collect();
        CrossedProduct { gamma: g.clone(), g, act, theta, coprod }
    }

    pub fn dim(&self) -> usize {
        self.gamma.order() * self.g.order()
    }

    fn basis(&self, x: usize, g: usize) -> usize {
        x * self.g.order() + g
    }

    fn split(&self, b: usize) -> (usize, usize) {
        (b / self.g.order(), b % self.g.order())
    }

    fn act(&self, g: usize, x: usize) -> usize {
        self.act[g * self.gamma.order() + x]
    }

    pub fn mul(&self, p: usize, q: usize) -> Option<(usize, Complex64)> {
        let (x, g) = self.split(p);
        let (y, h) = self.split(q);
        let ng = self.g.order();
        (x == self.act(g, y)).then(|| (self.basis(x, self.g.mul(g, h)), self.theta[(x * ng + g) * ng + h]))
    }

    fn coprod(&self, g: usize, a: usize, b: usize) -> Complex64 {
        let nx = self.gamma.order();
        self.coprod[(g * nx + a) * nx + b]
    }

    /// Largest deviation from associativity over basis triples.
    pub fn associativity_defect(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for p in 0..d {
            for q in 0..d {
                let Some((pq, c1)) = self.mul(p, q) else { continue };
                for r in 0..d {
                    let left = self.mul(pq, r).map(|(i, c)| (i, c * c1));
                    let right = self.mul(q, r).and_then(|(qr, c2)| self.mul(p, qr).map(|(i, c)| (i, c * c2)));
                    match (left, right) {
                        (Some((i, a)), Some((j, b))) if i == j => worst = worst.max((a - b).norm()),
                        (None, None) => {}
                        _ => worst = f64::INFINITY,
                    }
                }
            }
        }
        worst
    }

    fn coproduct_terms(&self, p: usize) -> Vec<((usize, usize), Complex64)> {
        let (x, g) = self.split(p);
        self.gamma
            .elements()
            .map(|a| {
                let b = self.gamma.mul(self.gamma.inv(a), x);
                ((self.basis(a, g), self.basis(b, g)), self.coprod(g, a, b))
            })
            .collect()
    }

    /// Largest deviation of `Δ(pq) = Δ(p)Δ(q)` over basis pairs, computed
    /// in the basis `{p ⊗ q}` of `A ⊗ A`.
    pub fn coproduct_defect(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for p in 0..d {
            for q in 0..d {
                let mut acc: HashMap<(usize, usize), Complex64> = HashMap::new();
                for ((p1, p2), c) in self.coproduct_terms(p) {
                    for ((q1, q2), e) in self.coproduct_terms(q) {
                        if let (Some((i, u)), Some((j, v))) = (self.mul(p1, q1), self.mul(p2, q2)) {
                            *acc.entry((i, j)).or_insert(ZERO) += c * e * u * v;
                        }
                    }
                }
                if let Some((pq, k)) = self.mul(p, q) {
                    for (key, c) in self.coproduct_terms(pq) {
                        *acc.entry(key).or_insert(ZERO) -= c * k;
                    }
                }
                worst = acc.values().map(|z| z.norm()).fold(worst, f64::max);
            }
        }
        worst
    }

    /// Left regular module.
    pub fn regular(&self) -> Module {
        let d = self.dim();
        let mats = (0..d)
            .map(|p| {
                let mut m = Mat::zeros(d, d);
                for q in 0..d {
                    if let Some((i, c)) = self.mul(p, q) {
                        m[(i, q)] = c;
                    }
                }
                m
            })
            .collect();
        Module { dim: d, mats }
    }

    fn right_regular(&self, p: usize) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(d, d);
        for q in 0..d {
            if let Some((i, c)) = self.mul(q, p) {
                m[(i, q)] = c;
            }
        }
        m
    }

    /// Module structure on `V ⊗ W` through the coproduct.
    pub fn tensor(&self, v: &Module, w: &Module) -> Module {
        let (nx, ng) = (self.gamma.order(), self.g.order());
        let dim = v.dim * w.dim;
        let mut mats = vec![Mat::zeros(dim, dim); self.dim()];
        for g in 0..ng {
            for a in 0..nx {
                let va = &v.mats[self.basis(a, g)];
                if va.iter().all(|z| z.norm() == 0.0) {
                    continue;
                }
                for b in 0..nx {
                    let wb = &w.mats[self.basis(b, g)];
                    let x = self.gamma.mul(a, b);
                    mats[self.basis(x, g)] += va.kronecker(wb) * self.coprod(g, a, b);
                }
            }
        }
        Module { dim, mats }
    }

    /// The counit `δ_x g ↦ [x = e]` as a character.
    pub fn counit(&self) -> Vec<Complex64> {
        (0..self.dim()).map(|p| if self.split(p).0 == 0 { ONE } else { ZERO }).collect()
    }

    /// Pairwise non-isomorphic simple modules.
    pub fn simple_modules(&self, seed: u64) -> Vec<Module> {
        let d = self.dim();
        let reg = self.regular();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut b = Mat::zeros(d, d);
        for p in 0..d {
            let c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            b += self.right_regular(p) * c;
        }
        let (_, t) = b.clone().schur().unpack();
        let mut eigen: Vec<Complex64> = Vec::new();
        for i in 0..d {
            let z = t[(i, i)];
            if eigen.iter().all(|e| (e - z).norm() > 1e-6) {
                eigen.push(z);
            }
        }
        let mut simples: Vec<Module> = Vec::new();
        for lambda in eigen {
            let shifted = &b - Mat::identity(d, d) * lambda;
            let svd = shifted.svd(false, true);
            let vt = svd.v_t.expect("requested");
            let kernel: Vec<usize> = (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] < 1e-7).collect();
            assert!(!kernel.is_empty(), "eigenvalue without kernel");
            let mut k = Mat::zeros(d, kernel.len());
            for (col, &i) in kernel.iter().enumerate() {
                for r in 0..d {
                    k[(r, col)] = vt[(i, r)].conj();
                }
            }
            let kt = k.adjoint();
            let m = Module { dim: kernel.len(), mats: reg.mats.iter().map(|l| &kt * l * &k).collect() };
            let chi = m.character();
            if simples.iter().all(|s| distance(&s.character(), &chi) > 1e-6) {
                simples.push(m);
            }
        }
        simples.sort_by_key(|m| m.dim);
        let total: usize = simples.iter().map(|m| m.dim * m.dim).sum();
        assert_eq!(total, d, "simple modules do not exhaust the algebra");
        simples
    }

    /// The fusion ring of the module category, with labels `S0, S1, …`.
    pub fn fusion_ring(&self, seed: u64) -> FusionRing {
        let simples = self.simple_modules(seed);
        let r = simples.len();
        let chars: Vec<Vec<Complex64>> = simples.iter().map(Module::character).collect();
        let counit = self.counit();
        let unit = chars.iter().position(|c| distance(c, &counit) < 1e-6).expect("trivial module");
        let mut n = vec![0u64; r * r * r];
        for i in 0..r {
            for j in 0..r {
                let m = decompose(&chars, &self.tensor(&simples[i], &simples[j]).character());
                for (k, v) in m.into_iter().enumerate() {
                    n[(i * r + j) * r + k] = v;
                }
            }
        }
        let dual = (0..r).map(|i| (0..r).find(|&j| n[(i * r + j) * r + unit] == 1).expect("dual")).collect();
        let dims = simples.iter().map(|m| m.dim as u64).collect();
        let labels = (0..r).map(|i| format!("S{i}")).collect();
        FusionRing::new(labels, n, unit, dual, dims).unwrap()
    }
}

pub struct Module {
    pub dim: usize,
    /// Action of each basis element.
    pub mats: Vec<Mat>,
}

impl Module {
    pub fn character(&self) -> Vec<Complex64> {
        self.mats.iter().map(|m| m.trace()).collect()
    }
}

fn distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Nonnegative integers `m` with `Σ m_i chars[i] = chi`.
fn decompose(chars: &[Vec<Complex64>], chi: &[Complex64]) -> Vec<u64> {
    let rows = chi.len();
    let x = Mat::from_fn(rows, chars.len(), |r, c| chars[c][r]);
    let y = Mat::from_fn(rows, 1, |r, _| chi[r]);
    let sol = x.clone().svd(true, true).solve(&y, 1e-10).expect("solvable");
    let m: Vec<u64> = sol
        .iter()
        .map(|z| {
            assert!(z.im.abs() < 1e-6 && (z.re - z.re.round()).abs() < 1e-6 && z.re > -1e-6, "non-integral {z}");
            z.re.round() as u64
        })
        .collect();
    let back = &x * Mat::from_fn(m.len(), 1, |r, _| Complex64::new(m[r] as f64, 0.0));
    assert!((back - y).norm() < 1e-6, "character not in the span of the simples");
    m
}
