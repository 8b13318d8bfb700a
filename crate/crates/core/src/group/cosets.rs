use std::sync::Arc;

use rand::Rng;

use super::{FiniteGroup, Subgroup};

/// Conjugacy classes, each sorted, ordered by minimal element. The class of
/// the identity comes first.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut done = vec![false; g.order()];
    let mut out = Vec::new();
    for x in g.elements() {
        if done[x] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|t| g.conj(t, x)).collect();
        class.sort_unstable();
        class.dedup();
        class.iter().for_each(|&y| done[y] = true);
        out.push(class);
    }
    out
}

pub fn centralizer(g: &Arc<FiniteGroup>, x: usize) -> Subgroup {
    Subgroup::from_predicate(g.clone(), |h| g.mul(h, x) == g.mul(x, h))
}

/// A choice of one representative per left coset `gH`.
///
/// Cosets are indexed by their minimal element, so two transversals of the
/// same subgroup share the indexing and differ only in `reps`.
#[derive(Debug, Clone)]
pub struct LeftTransversal {
    subgroup: Subgroup,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl LeftTransversal {
    /// Minimal element of each coset.
    pub fn canonical(h: &Subgroup) -> Self {
        Self::build(h, |coset| coset[0])
    }

    /// A uniformly random element of each coset; the identity coset keeps
    /// the identity.
    pub fn seeded<R: Rng + ?Sized>(h: &Subgroup, rng: &mut R) -> Self {
        Self::build(h, |coset| if coset[0] == 0 { 0 } else { coset[rng.random_range(0..coset.len())] })
    }

    fn build(h: &Subgroup, mut pick: impl FnMut(&[usize]) -> usize) -> Self {
        let g = h.parent();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::with_capacity(h.index());
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let coset = h.left_coset(x);
            coset.iter().for_each(|&y| coset_of[y] = reps.len());
            reps.push(pick(&coset));
        }
        LeftTransversal { subgroup: h.clone(), reps, coset_of }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the coset containing `g`.
    #[inline]
    pub fn coset_index(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// The chosen representative of `gH`.
    #[inline]
    pub fn rep_of(&self, g: usize) -> usize {
        self.reps[self.coset_of[g]]
    }
}

#[derive(Debug, Clone)]
pub struct DoubleCosetDecomposition {
    pub subgroup_h: Subgroup,
    pub subgroup_k: Subgroup,
    /// Each coset sorted; cosets ordered by minimal element.
    pub cosets: Vec<Vec<usize>>,
    /// Minimal element of each coset.
    pub representatives: Vec<usize>,
    index: Vec<usize>,
}

impl DoubleCosetDecomposition {
    /// Index of the double coset `HgK`.
    pub fn index_of(&self, g: usize) -> usize {
        self.index[g]
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// Decomposition of the common parent into double cosets `H g K`.
pub fn double_cosets(h: &Subgroup, k: &Subgroup) -> DoubleCosetDecomposition {
    let g = h.parent();
    let mut index = vec![usize::MAX; g.order()];
    let mut cosets = Vec::new();
    for x in g.elements() {
        if index[x] != usize::MAX {
            continue;
        }
        let mut c: Vec<usize> = h
            .elements()
            .iter()
            .flat_map(|&a| k.elements().iter().map(move |&b| g.mul(g.mul(a, x), b)))
            .collect();
        c.sort_unstable();
        c.dedup();
        c.iter().for_each(|&y| index[y] = cosets.len());
        cosets.push(c);
    }
    let representatives = cosets.iter().map(|c| c[0]).collect();
    DoubleCosetDecomposition {
        subgroup_h: h.clone(),
        subgroup_k: k.clone(),
        cosets,
        representatives,
        index,
    }
}

/// One orbit of `H` acting diagonally on `G/G_y × G/G_z`.
#[derive(Debug, Clone)]
pub struct DiagonalOrbit {
    /// Pairs of transversal representatives `(t, s)`, ordered by coset index.
    pub pairs: Vec<(usize, usize)>,
    pub representative: (usize, usize),
    /// `H ∩ t G_y t⁻¹ ∩ s G_z s⁻¹` for the representative.
    pub stabilizer: Subgroup,
}

/// `H ∩ t G_y t⁻¹ ∩ s G_z s⁻¹`.
pub fn pair_stabilizer(h: &Subgroup, t: usize, gy: &Subgroup, s: usize, gz: &Subgroup) -> Subgroup {
    let g = h.parent();
    let (ti, si) = (g.inv(t), g.inv(s));
    Subgroup::from_predicate(g.clone(), |x| {
        h.contains(x) && gy.contains(g.conj(ti, x)) && gz.contains(g.conj(si, x))
    })
}

/// Diagonal orbits with minimal-element coset representatives.
pub fn diagonal_orbits(h: &Subgroup, gy: &Subgroup, gz: &Subgroup) -> Vec<DiagonalOrbit> {
    diagonal_orbits_with(h, &LeftTransversal::canonical(gy), &LeftTransversal::canonical(gz))
}

/// Diagonal orbits over the given transversals. Orbits are ordered by their
/// first pair of coset indices.
pub fn diagonal_orbits_with(
    h: &Subgroup,
    ty: &LeftTransversal,
    tz: &LeftTransversal,
) -> Vec<DiagonalOrbit> {
    let g = h.parent();
    let (ny, nz) = (ty.len(), tz.len());
    let mut seen = vec![false; ny * nz];
    let mut out = Vec::new();
    for i in 0..ny {
        for j in 0..nz {
            if seen[i * nz + j] {
                continue;
            }
            let (t, s) = (ty.reps()[i], tz.reps()[j]);
            let mut idx: Vec<(usize, usize)> = h
                .elements()
                .iter()
                .map(|&x| (ty.coset_index(g.mul(x, t)), tz.coset_index(g.mul(x, s))))
                .collect();
            idx.sort_unstable();
            idx.dedup();
            idx.iter().for_each(|&(a, b)| seen[a * nz + b] = true);
            let pairs: Vec<(usize, usize)> =
                idx.iter().map(|&(a, b)| (ty.reps()[a], tz.reps()[b])).collect();
            let stabilizer = pair_stabilizer(h, t, ty.subgroup(), s, tz.subgroup());
            out.push(DiagonalOrbit { pairs, representative: (t, s), stabilizer });
        }
    }
    out
}

/// The conjugation action's orbits; equal to `conjugacy_classes`.
#[cfg(test)]
pub(crate) fn classes_via_action(g: &Arc<FiniteGroup>) -> Vec<Vec<usize>> {
    super::GroupAction::conjugation(g.clone()).orbits()
}
