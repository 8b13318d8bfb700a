use std::sync::Arc;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A left action of a group on `0..set_size`, optionally by automorphisms of
/// a target group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: Arc<FiniteGroup>,
    set_size: usize,
    act: Vec<usize>,
    target: Option<Arc<FiniteGroup>>,
}

impl GroupAction {
    /// `table[g][x]` is the image of `x` under `g`.
    pub fn new(group: Arc<FiniteGroup>, set_size: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        if set_size == 0 {
            return Err(Error::InvalidAction("empty set".into()));
        }
        if table.len() != group.order() {
            return Err(Error::InvalidAction(format!(
                "{} rows for a group of order {}",
                table.len(),
                group.order()
            )));
        }
        let mut act = Vec::with_capacity(group.order() * set_size);
        for (g, row) in table.iter().enumerate() {
            if row.len() != set_size {
                return Err(Error::InvalidAction(format!("row {g} has wrong length")));
            }
            let mut hit = vec![false; set_size];
            for &x in row {
                if x >= set_size || std::mem::replace(&mut hit[x], true) {
                    return Err(Error::InvalidAction(format!("row {g} is not a permutation")));
                }
            }
            act.extend_from_slice(row);
        }
        let a = GroupAction { group, set_size, act, target: None };
        if (0..set_size).any(|x| a.apply(0, x) != x) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for g in a.group.elements() {
            for h in a.group.elements() {
                let gh = a.group.mul(g, h);
                if let Some(x) = (0..set_size).find(|&x| a.apply(gh, x) != a.apply(g, a.apply(h, x))) {
                    return Err(Error::InvalidAction(format!(
                        "act[{gh}] != act[{g}]∘act[{h}] at point {x}"
                    )));
                }
            }
        }
        Ok(a)
    }

    /// An action on the elements of `target` that must be by automorphisms.
    pub fn automorphic(
        group: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut a = Self::new(group, target.order(), table)?;
        for g in a.group.elements() {
            for x in target.elements() {
                for y in target.elements() {
                    if a.apply(g, target.mul(x, y)) != target.mul(a.apply(g, x), a.apply(g, y)) {
                        return Err(Error::InvalidAction(format!(
                            "act[{g}] is not an automorphism (fails on {x}, {y})"
                        )));
                    }
                }
            }
        }
        a.target = Some(target);
        Ok(a)
    }

    pub fn trivial(group: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let n = target.order();
        let act = (0..group.order()).flat_map(|_| 0..n).collect();
        GroupAction { group, set_size: n, act, target: Some(target) }
    }

    /// `G` acting on itself by `x ↦ g x g⁻¹`.
    pub fn conjugation(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let act = (0..n).flat_map(|g| (0..n).map(move |x| (g, x))).map(|(g, x)| group.conj(g, x)).collect();
        GroupAction { group: group.clone(), set_size: n, act, target: Some(group) }
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g * self.set_size + x]
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn target(&self) -> Option<&Arc<FiniteGroup>> {
        self.target.as_ref()
    }

    pub fn is_automorphic(&self) -> bool {
        self.target.is_some()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.act.chunks(self.set_size).map(<[usize]>::to_vec).collect()
    }

    /// Orbit of `x` (sorted) and its stabilizer.
    pub fn orbit_and_stabilizer(&self, x: usize) -> (Vec<usize>, Subgroup) {
        let mut orbit: Vec<usize> = self.group.elements().map(|g| self.apply(g, x)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        let stab = Subgroup::from_predicate(self.group.clone(), |g| self.apply(g, x) == x);
        (orbit, stab)
    }

    /// All orbits, each sorted, ordered by their minimal point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.set_size];
        let mut out = Vec::new();
        for x in 0..self.set_size {
            if done[x] {
                continue;
            }
            let (orbit, _) = self.orbit_and_stabilizer(x);
            orbit.iter().for_each(|&y| done[y] = true);
            out.push(orbit);
        }
        out
    }

    /// Smallest `g` with `g·x = y`.
    pub fn transporter(&self, x: usize, y: usize) -> Option<usize> {
        self.group.elements().find(|&g| self.apply(g, x) == y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inversion_on_z3() -> GroupAction {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        GroupAction::automorphic(z2, z3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn orbit_and_stabilizer_examples() {
        let a = inversion_on_z3();
        let (orbit, stab) = a.orbit_and_stabilizer(1);
        assert_eq!(orbit, vec![1, 2]);
        assert_eq!(stab.elements(), &[0]);
        let (orbit, stab) = a.orbit_and_stabilizer(0);
        assert_eq!(orbit, vec![0]);
        assert_eq!(stab.order(), 2);
        let t = GroupAction::trivial(Arc::new(FiniteGroup::cyclic(3)), Arc::new(FiniteGroup::cyclic(4)));
        let (orbit, stab) = t.orbit_and_stabilizer(3);
        assert_eq!(orbit, vec![3]);
        assert!(stab.is_full());
    }

    #[test]
    fn rejects_non_actions() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        assert!(GroupAction::new(z2.clone(), 3, vec![vec![1, 0, 2], vec![0, 1, 2]]).is_err());
        // a 3-cycle on the points of Z3 is not an action of Z2
        assert!(GroupAction::new(z2.clone(), 3, vec![vec![0, 1, 2], vec![1, 2, 0]]).is_err());
        // swapping 0 and 1 is an action but not by automorphisms
        assert!(GroupAction::automorphic(z2, z3, vec![vec![0, 1, 2], vec![1, 0, 2]]).is_err());
    }

    #[test]
    fn orbit_stabilizer_counts() {
        let s3 = Arc::new(crate::group::catalog::symmetric(3));
        let a = GroupAction::conjugation(s3.clone());
        let total: usize = a.orbits().iter().map(|o| s3.order() / a.orbit_and_stabilizer(o[0]).1.order()).sum();
        assert_eq!(total, 6);
    }
}
