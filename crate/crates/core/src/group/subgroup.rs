use std::fmt;
use std::sync::Arc;

use super::{closure, FiniteGroup};
use crate::error::{Error, Result};

/// A subgroup of a parent group, stored as a sorted element list.
///
/// Positions inside the subgroup (`0..order`) follow the sorted order, so the
/// identity always sits at position 0.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    pos: Vec<Option<usize>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent_order", &self.parent.order())
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent)
            && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Checks closure and builds the subgroup. Duplicates are ignored.
    pub fn new(parent: Arc<FiniteGroup>, elements: &[usize]) -> Result<Self> {
        let n = parent.order();
        let mut els: Vec<usize> = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.first() != Some(&0) {
            return Err(Error::InvalidSubgroup("must contain the identity".into()));
        }
        if let Some(&bad) = els.iter().find(|&&g| g >= n) {
            return Err(Error::InvalidSubgroup(format!("element {bad} out of range")));
        }
        let mut member = vec![false; n];
        els.iter().for_each(|&g| member[g] = true);
        for &a in &els {
            if !member[parent.inv(a)] {
                return Err(Error::InvalidSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &els {
                if !member[parent.mul(a, b)] {
                    return Err(Error::InvalidSubgroup(format!("not closed: {a}·{b}")));
                }
            }
        }
        Ok(Self::from_sorted(parent, els))
    }

    fn from_sorted(parent: Arc<FiniteGroup>, elements: Vec<usize>) -> Self {
        let mut pos = vec![None; parent.order()];
        for (i, &g) in elements.iter().enumerate() {
            pos[g] = Some(i);
        }
        Subgroup { parent, elements, pos }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(parent: Arc<FiniteGroup>, gens: &[usize]) -> Self {
        let mut els = closure(0usize, gens, |a, b| parent.mul(*a, *b));
        els.sort_unstable();
        Self::from_sorted(parent, els)
    }

    pub fn full(parent: Arc<FiniteGroup>) -> Self {
        let els = parent.elements().collect();
        Self::from_sorted(parent, els)
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        Self::from_sorted(parent, vec![0])
    }

    /// Elements satisfying `pred`; the caller guarantees they form a subgroup.
    pub(crate) fn from_predicate(parent: Arc<FiniteGroup>, pred: impl Fn(usize) -> bool) -> Self {
        let els = parent.elements().filter(|&g| pred(g)).collect();
        Self::from_sorted(parent, els)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.pos[g].is_some()
    }

    /// Position of `g` inside the sorted element list.
    #[inline]
    pub fn position(&self, g: usize) -> Option<usize> {
        self.pos[g]
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let els = self.elements.iter().copied().filter(|&g| other.contains(g)).collect();
        Self::from_sorted(self.parent.clone(), els)
    }

    /// `t H t⁻¹`.
    pub fn conjugate(&self, t: usize) -> Subgroup {
        let mut els: Vec<usize> = self.elements.iter().map(|&h| self.parent.conj(t, h)).collect();
        els.sort_unstable();
        Self::from_sorted(self.parent.clone(), els)
    }

    /// Left coset `gH`, sorted.
    pub fn left_coset(&self, g: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self.elements.iter().map(|&h| self.parent.mul(g, h)).collect();
        c.sort_unstable();
        c
    }

    /// Minimal element of `gH`.
    pub fn coset_min(&self, g: usize) -> usize {
        self.elements.iter().map(|&h| self.parent.mul(g, h)).min().expect("nonempty")
    }

    /// Abstract group isomorphic to this subgroup, indexed by position.
    pub fn as_group(&self) -> FiniteGroup {
        let rows: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| self.pos[self.parent.mul(a, b)].expect("closed"))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&rows).expect("subgroup table is a group")
    }

    /// The commutator subgroup `[G, G]` of the parent.
    pub fn derived(parent: Arc<FiniteGroup>) -> Subgroup {
        let g = parent.clone();
        let comms: Vec<usize> = g
            .elements()
            .flat_map(|a| {
                let g = g.clone();
                g.clone().elements().map(move |b| g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))))
            })
            .collect();
        Self::generated(parent, &comms)
    }

    /// Every subgroup of `parent`, sorted by (order, elements).
    pub fn all(parent: Arc<FiniteGroup>) -> Vec<Subgroup> {
        let n = parent.order();
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
        let mut seen = std::collections::HashSet::new();
        seen.insert(vec![0usize]);
        while let Some(h) = frontier.pop() {
            found.push(h.clone());
            let member: Vec<bool> = (0..n).map(|g| h.binary_search(&g).is_ok()).collect();
            for g in 0..n {
                if member[g] {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let mut k = closure(0usize, &gens, |a, b| parent.mul(*a, *b));
                k.sort_unstable();
                if seen.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        found.into_iter().map(|els| Self::from_sorted(parent.clone(), els)).collect()
    }
}
