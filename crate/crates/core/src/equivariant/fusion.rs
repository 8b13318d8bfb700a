use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{mix, EquivariantCategory, SimpleLabel};
use crate::cohomology::Cocycle2;
use crate::error::Result;
use crate::group::{diagonal_orbits_with, pair_stabilizer, Subgroup};
use crate::projective::{check_factor_sets, ProjCharacter, ProjRep};
use crate::ring::FusionRing;

/// The scalar `λ(g) = f_t(g) f_s(g) τ(g; ᵗy, ˢz)⁻¹` on
/// `T = G_x ∩ ᵗG_y ∩ ˢG_z`, as a 1-dimensional projective representation.
///
/// Its factor set is `α_x · (ᵗα_y)⁻¹ · (ˢα_z)⁻¹` restricted to `T`.
#[derive(Debug, Clone)]
pub struct TauCharacter {
    pub t: usize,
    pub s: usize,
    pub character: ProjCharacter,
}

impl TauCharacter {
    pub fn subgroup(&self) -> &Subgroup {
        self.character.domain()
    }

    /// The factor set the character is required to carry.
    pub fn expected_factor_set(cat: &EquivariantCategory, ox: usize, oy: usize, oz: usize, t: usize, s: usize, stab: &Subgroup) -> Result<Cocycle2> {
        let o = cat.orbits();
        let ax = o[ox].factor_set.restrict(stab)?;
        let ay = o[oy].factor_set.conjugate(t).restrict(stab)?;
        let az = o[oz].factor_set.conjugate(s).restrict(stab)?;
        ax.product(&ay.inverse())?.product(&az.inverse())
    }
}

/// One `G_x`-orbit of pairs `(t, s)` with `ᵗy ˢz = x`, with everything needed
/// to evaluate its term for every choice of irreducibles.
pub(crate) struct Contribution {
    tau: TauCharacter,
    /// `δ|_T` for each irreducible `δ` over `x`.
    target: Vec<ProjCharacter>,
    /// `ᵗπ|_T` for each `π` over `y`.
    left: Vec<ProjCharacter>,
    /// `ˢγ|_T` for each `γ` over `z`.
    right: Vec<ProjCharacter>,
}

impl EquivariantCategory {
    /// The pair of each contributing diagonal orbit, in orbit order.
    fn contributing_pairs(&self, ox: usize, oy: usize, oz: usize) -> Vec<(usize, usize, Subgroup)> {
        let o = self.orbits();
        let (x, y, z) = (o[ox].rep, o[oy].rep, o[oz].rep);
        let gam = self.gamma();
        let act = |g, p| self.data.act(g, p);
        let gx = &o[ox].stabilizer;
        let mut rng = self.pair_seed.map(|s| ChaCha8Rng::seed_from_u64(mix(mix(mix(s, ox as u64), oy as u64), oz as u64)));
        diagonal_orbits_with(gx, &o[oy].transversal, &o[oz].transversal)
            .into_iter()
            .filter_map(|orbit| {
                let (t, s) = orbit.representative;
                if gam.mul(act(t, y), act(s, z)) != x {
                    return None;
                }
                Some(match rng.as_mut() {
                    Some(r) => {
                        let (t, s) = orbit.pairs[r.random_range(0..orbit.pairs.len())];
                        let stab = pair_stabilizer(gx, t, &o[oy].stabilizer, s, &o[oz].stabilizer);
                        (t, s, stab)
                    }
                    None => (t, s, orbit.stabilizer),
                })
            })
            .collect()
    }

    pub(crate) fn tau_character(&self, oy: usize, oz: usize, t: usize, s: usize, stab: &Subgroup) -> Result<TauCharacter> {
        let o = self.orbits();
        let (y, z) = (o[oy].rep, o[oz].rep);
        let (ty, sz) = (self.data.act(t, y), self.data.act(s, z));
        let lam = |g: usize| self.transport_scalar(y, t, g) * self.transport_scalar(z, s, g) / self.data.tau(g, ty, sz);
        let values = stab.elements().iter().map(|&g| lam(g)).collect();
        let character = ProjCharacter::new(Cocycle2::coboundary(stab.clone(), lam), values)?;
        Ok(TauCharacter { t, s, character })
    }

    pub(crate) fn contributions(&self, ox: usize, oy: usize, oz: usize) -> Result<Vec<Contribution>> {
        let o = self.orbits();
        self.contributing_pairs(ox, oy, oz)
            .into_iter()
            .map(|(t, s, stab)| {
                let tau = self.tau_character(oy, oz, t, s, &stab)?;
                let target = o[ox].irreps.characters().iter().map(|c| c.restrict(&stab)).collect::<Result<_>>()?;
                let left = o[oy].irreps.characters().iter().map(|c| c.conjugate(t).restrict(&stab)).collect::<Result<_>>()?;
                let right = o[oz].irreps.characters().iter().map(|c| c.conjugate(s).restrict(&stab)).collect::<Result<_>>()?;
                Ok(Contribution { tau, target, left, right })
            })
            .collect()
    }

    fn evaluate(&self, contribs: &[Contribution], i: usize, j: usize, k: usize) -> Result<u64> {
        let mut total = 0;
        for c in contribs {
            let rhs = c.left[i].tensor(&c.right[j])?.tensor(&c.tau.character)?;
            total += c.target[k].multiplicity_in(&rhs, &self.tol)? as u64;
        }
        Ok(total)
    }

    /// `N_{(y,π),(z,γ)}^{(x,δ)}`: the sum over `G_x`-orbits of pairs
    /// `(t, s) ∈ G/G_y × G/G_z` with `ᵗy ˢz = x` of
    /// `m_T(δ|_T, ᵗπ|_T ⊗ ˢγ|_T ⊗ λ)`, `T = G_x ∩ ᵗG_y ∩ ˢG_z`.
    pub fn fusion_multiplicity(&self, sy: SimpleLabel, sz: SimpleLabel, sx: SimpleLabel) -> Result<u64> {
        let (oy, oz, ox) = (self.orbit_index_checked(sy)?, self.orbit_index_checked(sz)?, self.orbit_index_checked(sx)?);
        let contribs = self.contributions(ox, oy, oz)?;
        self.evaluate(&contribs, sy.irrep, sz.irrep, sx.irrep)
    }

    /// The same multiplicity computed from explicit matrices: conjugated and
    /// restricted representations, tensored with the scalar twist.
    pub fn fusion_multiplicity_via_matrices(&self, sy: SimpleLabel, sz: SimpleLabel, sx: SimpleLabel) -> Result<u64> {
        let (oy, oz, ox) = (self.orbit_index_checked(sy)?, self.orbit_index_checked(sz)?, self.orbit_index_checked(sx)?);
        let o = self.orbits();
        let mut total = 0;
        for (t, s, stab) in self.contributing_pairs(ox, oy, oz) {
            let tau = self.tau_character(oy, oz, t, s, &stab)?;
            let lam = ProjRep::one_dimensional(tau.character.factor_set().clone(), |g| tau.character.value(g));
            let pi = o[oy].irreps.rep(sy.irrep).conjugate(t).restrict(&stab)?;
            let gamma = o[oz].irreps.rep(sz.irrep).conjugate(s).restrict(&stab)?;
            let delta = o[ox].irreps.rep(sx.irrep).restrict(&stab)?;
            let rhs = pi.tensor(&gamma)?.tensor(&lam)?;
            check_factor_sets(delta.factor_set(), rhs.factor_set(), self.tol.val)?;
            total += delta.multiplicity_in(&rhs, &self.tol)? as u64;
        }
        Ok(total)
    }

    /// Every `TauCharacter` used for the product of orbits `oy`, `oz` landing
    /// on `ox`, paired with the factor set it should carry.
    pub fn tau_characters(&self, ox: usize, oy: usize, oz: usize) -> Result<Vec<(TauCharacter, Cocycle2)>> {
        self.contributing_pairs(ox, oy, oz)
            .into_iter()
            .map(|(t, s, stab)| {
                let tau = self.tau_character(oy, oz, t, s, &stab)?;
                let expected = TauCharacter::expected_factor_set(self, ox, oy, oz, t, s, &stab)?;
                Ok((tau, expected))
            })
            .collect()
    }

    fn orbit_index_checked(&self, s: SimpleLabel) -> Result<usize> {
        self.orbit_of_label(s)?;
        Ok(self.orbit_index(s.orbit_rep))
    }

    /// Orbits reached by products of points of orbits `oy` and `oz`.
    fn product_orbits(&self, oy: usize, oz: usize) -> BTreeSet<usize> {
        let o = self.orbits();
        let gam = self.gamma();
        let mut hit = BTreeSet::new();
        for &a in &o[oy].elements {
            for &b in &o[oz].elements {
                hit.insert(self.orbit_index(gam.mul(a, b)));
            }
        }
        hit
    }

    /// The full table of fusion multiplicities as a based ring.
    pub fn fusion_table(&self) -> Result<FusionRing> {
        let r = self.rank();
        let no = self.orbits().len();
        let first: Vec<usize> = {
            let mut v = Vec::with_capacity(no);
            let mut acc = 0;
            for o in self.orbits() {
                v.push(acc);
                acc += o.irreps.len();
            }
            v
        };
        let triples: Vec<(usize, usize, usize)> = (0..no)
            .flat_map(|oy| (0..no).map(move |oz| (oy, oz)))
            .flat_map(|(oy, oz)| self.product_orbits(oy, oz).into_iter().map(move |ox| (ox, oy, oz)))
            .collect();
        let blocks: Vec<Vec<(usize, u64)>> = triples
            .par_iter()
            .map(|&(ox, oy, oz)| {
                let contribs = self.contributions(ox, oy, oz)?;
                let o = self.orbits();
                let mut out = Vec::new();
                for i in 0..o[oy].irreps.len() {
                    for j in 0..o[oz].irreps.len() {
                        for k in 0..o[ox].irreps.len() {
                            let v = self.evaluate(&contribs, i, j, k)?;
                            if v > 0 {
                                let (a, b, c) = (first[oy] + i, first[oz] + j, first[ox] + k);
                                out.push(((a * r + b) * r + c, v));
                            }
                        }
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut n = vec![0u64; r * r * r];
        for (idx, v) in blocks.into_iter().flatten() {
            n[idx] = v;
        }
        let labels = self.labels().iter().map(|&s| self.label_string(s)).collect();
        let dual = self
            .labels()
            .par_iter()
            .map(|&s| self.dual(s).and_then(|d| self.index_of(d)))
            .collect::<Result<Vec<_>>>()?;
        let dims = self.labels().iter().map(|&s| self.fpdim(s)).collect::<Result<_>>()?;
        FusionRing::new(labels, n, 0, dual, dims)
    }
}

