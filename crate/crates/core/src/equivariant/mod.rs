//! Simple objects and fusion rules of the equivariantization `C(Γ, ω)^G`.
//!
//! Simples are pairs `(y, π)` with `y` a chosen representative of a
//! `G`-orbit in `Γ` and `π` an irreducible projective representation of the
//! inertia subgroup `G_y` with factor set `α_y(g, h) = σ(g, h; y)⁻¹`.
//!
//! Moving the summand at `y` to the one at `ᵗy` is not free: the
//! multiplicity space `Hom(ᵗy, S_{y,π})` carries the representation
//! `g ↦ f_t(g) π(t⁻¹gt)` of `ᵗG_y`, with `f_t(g) = σ(t, t⁻¹gt; y) / σ(g, t; y)`.
//! These scalars are folded into [`TauCharacter`].

mod fusion;
mod orbit_ring;

pub use fusion::TauCharacter;
pub use orbit_ring::OrbitRing;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{ActionData, Cocycle2};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, LeftTransversal, Subgroup};
use crate::projective::{twisted_irreducibles, IrrepSet, ProjCharacter};
use crate::Tolerances;

/// How orbit and coset representatives are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RepresentativeChoice {
    /// Minimal element index everywhere.
    #[default]
    Canonical,
    /// Random orbit representatives, coset representatives and diagonal
    /// orbit representatives drawn from a seeded stream. The identity of `Γ`
    /// and the identity coset keep the identity.
    Seeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BuildOptions {
    /// Seed for the irreducible decompositions.
    pub seed: u64,
    pub representatives: RepresentativeChoice,
    pub tol: Tolerances,
}

/// A simple object `(y, π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleLabel {
    pub orbit_rep: usize,
    pub irrep: usize,
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.orbit_rep, self.irrep)
    }
}

#[derive(Debug, Clone)]
pub struct OrbitData {
    pub rep: usize,
    /// The orbit, sorted.
    pub elements: Vec<usize>,
    pub stabilizer: Subgroup,
    /// `α_y(g, h) = σ(g, h; y)⁻¹` on `G_y`.
    pub factor_set: Cocycle2,
    pub irreps: IrrepSet,
    pub transversal: LeftTransversal,
    /// `transport[x] = t` with `ᵗy = x` and `t` in the transversal.
    transport: Vec<Option<usize>>,
}

impl OrbitData {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// The transversal element carrying the representative to `x`.
    pub fn transporter(&self, x: usize) -> Option<usize> {
        self.transport[x]
    }

    /// Whether `α_y` admits a 1-dimensional projective representation.
    pub fn factor_set_trivial(&self) -> bool {
        self.irreps.dims().contains(&1)
    }
}

#[derive(Debug, Clone)]
pub struct EquivariantCategory {
    data: Arc<ActionData>,
    tol: Tolerances,
    orbits: Vec<OrbitData>,
    orbit_of: Vec<usize>,
    labels: Vec<SimpleLabel>,
    pair_seed: Option<u64>,
}

fn mix(seed: u64, k: u64) -> u64 {
    seed ^ k.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Classifies the simple objects of `C(Γ, ω)^G`.
pub fn build_category(data: ActionData, options: &BuildOptions) -> Result<EquivariantCategory> {
    let tol = options.tol;
    data.validate(tol.val).into_result("action data")?;
    let data = Arc::new(data);
    let action = data.action();
    let mut rng = match options.representatives {
        RepresentativeChoice::Canonical => None,
        RepresentativeChoice::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
    };
    let mut orbit_of = vec![0; data.gamma().order()];
    let mut orbits = Vec::new();
    for (idx, elements) in action.orbits().into_iter().enumerate() {
        let rep = match rng.as_mut() {
            Some(r) if elements[0] != 0 => elements[r.random_range(0..elements.len())],
            _ => elements[0],
        };
        let (_, stabilizer) = action.orbit_and_stabilizer(rep);
        let transversal = match rng.as_mut() {
            Some(r) => LeftTransversal::seeded(&stabilizer, r),
            None => LeftTransversal::canonical(&stabilizer),
        };
        let mut transport = vec![None; data.gamma().order()];
        for &t in transversal.reps() {
            transport[action.apply(t, rep)] = Some(t);
        }
        let factor_set = data.inertia_factor_set(rep, &stabilizer);
        let irreps = twisted_irreducibles(&factor_set, mix(options.seed, idx as u64))?;
        elements.iter().for_each(|&x| orbit_of[x] = idx);
        orbits.push(OrbitData { rep, elements, stabilizer, factor_set, irreps, transversal, transport });
    }
    let labels = orbits
        .iter()
        .flat_map(|o| (0..o.irreps.len()).map(move |i| SimpleLabel { orbit_rep: o.rep, irrep: i }))
        .collect();
    let pair_seed = match options.representatives {
        RepresentativeChoice::Canonical => None,
        RepresentativeChoice::Seeded(s) => Some(s),
    };
    Ok(EquivariantCategory { data, tol, orbits, orbit_of, labels, pair_seed })
}

impl EquivariantCategory {
    pub fn data(&self) -> &ActionData {
        &self.data
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.data.group()
    }

    pub fn gamma(&self) -> &Arc<FiniteGroup> {
        self.data.gamma()
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn orbits(&self) -> &[OrbitData] {
        &self.orbits
    }

    /// Index of the orbit containing `x ∈ Γ`.
    pub fn orbit_index(&self, x: usize) -> usize {
        self.orbit_of[x]
    }

    /// Simple labels: orbits by minimal element, irreducibles in their
    /// set's order. The unit comes first.
    pub fn labels(&self) -> &[SimpleLabel] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> SimpleLabel {
        self.labels[0]
    }

    /// Orbit of a label, checking that the label names a simple.
    pub fn orbit_of_label(&self, s: SimpleLabel) -> Result<&OrbitData> {
        let bad = || Error::UnknownLabel(s.to_string());
        let o = self.orbits.get(*self.orbit_of.get(s.orbit_rep).ok_or_else(bad)?).ok_or_else(bad)?;
        if o.rep != s.orbit_rep || s.irrep >= o.irreps.len() {
            return Err(bad());
        }
        Ok(o)
    }

    pub fn index_of(&self, s: SimpleLabel) -> Result<usize> {
        self.orbit_of_label(s)?;
        Ok(self.labels.iter().position(|&l| l == s).expect("label of this category"))
    }

    /// `dim π · [G : G_y]`.
    pub fn fpdim(&self, s: SimpleLabel) -> Result<u64> {
        let o = self.orbit_of_label(s)?;
        Ok((o.irreps.rep(s.irrep).dim() * o.stabilizer.index()) as u64)
    }

    /// `Σ_s fpdim(s)²`.
    pub fn global_dimension(&self) -> u64 {
        self.labels.iter().map(|&s| self.fpdim(s).expect("own label").pow(2)).sum()
    }

    /// Labels of dimension 1.
    pub fn invertibles(&self) -> Vec<SimpleLabel> {
        self.labels.iter().copied().filter(|&s| self.fpdim(s).expect("own label") == 1).collect()
    }

    /// `f_t(g) = σ(t, t⁻¹gt; y) / σ(g, t; y)` for `g ∈ ᵗG_y`.
    pub(crate) fn transport_scalar(&self, y: usize, t: usize, g: usize) -> Complex64 {
        let grp = self.group();
        let h = grp.conj(grp.inv(t), g);
        self.data.sigma(t, h, y) / self.data.sigma(g, t, y)
    }

    /// The dual simple `(y*, π*)`: `y*` represents the orbit of `y⁻¹` and
    /// `π*` is found by matching characters after twisting `π`'s dual by
    /// `τ(·; y, y⁻¹)` and transporting it to `y*`.
    pub fn dual(&self, s: SimpleLabel) -> Result<SimpleLabel> {
        let o = self.orbit_of_label(s)?;
        let y = o.rep;
        let yi = self.gamma().inv(y);
        let ow = &self.orbits[self.orbit_of[yi]];
        let g = self.group().clone();
        let u = g.inv(ow.transporter(yi).expect("orbit covered by its transversal"));
        let chi = o.irreps.character(s.irrep).dual();
        let kappa: Vec<Complex64> = o.stabilizer.elements().iter().map(|&h| self.data.tau(h, y, yi)).collect();
        let kappa = ProjCharacter::new(Cocycle2::coboundary(o.stabilizer.clone(), |h| self.data.tau(h, y, yi)), kappa)?;
        let candidate = chi.tensor(&kappa)?;
        let moved = candidate.conjugate(u);
        let f = |h: usize| self.transport_scalar(yi, u, h);
        let fu: Vec<Complex64> = moved.domain().elements().iter().map(|&h| f(h)).collect();
        let fu = ProjCharacter::new(Cocycle2::coboundary(moved.domain().clone(), f), fu)?;
        let target = moved.tensor(&fu)?;
        let idx = ow
            .irreps
            .index_of(&target, &self.tol)?
            .ok_or_else(|| Error::DualNotFound(format!("no irreducible matches the dual of {s}")))?;
        let d = SimpleLabel { orbit_rep: ow.rep, irrep: idx };
        if self.fusion_multiplicity(s, d, self.unit())? != 1 {
            return Err(Error::DualNotFound(format!("{s} ⊗ {d} does not contain the unit once")));
        }
        Ok(d)
    }

    /// Display string for a label.
    pub fn label_string(&self, s: SimpleLabel) -> String {
        s.to_string()
    }
}
