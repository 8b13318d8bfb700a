//! Finite groups given by multiplication tables, and the orbit, coset and
//! double-coset combinatorics built on them.
//!
//! Elements are the indices `0..order`; the identity is always `0`.

mod action;
pub mod catalog;
mod cosets;
mod subgroup;

pub use action::GroupAction;
pub use cosets::{
    centralizer, conjugacy_classes, diagonal_orbits, diagonal_orbits_with, double_cosets,
    pair_stabilizer, DiagonalOrbit, DoubleCosetDecomposition, LeftTransversal,
};
pub use subgroup::Subgroup;

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite group stored as a full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table `rows[a][b] = ab`.
    ///
    /// The table must have identity `0`, be a Latin square and be associative.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut mult = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {a} has length {}, expected {n}",
                    row.len()
                )));
            }
            for &c in row {
                if c >= n {
                    return Err(Error::InvalidGroup(format!("entry {c} out of range in row {a}")));
                }
            }
            mult.extend_from_slice(row);
        }
        for g in 0..n {
            if mult[g] != g || mult[g * n] != g {
                return Err(Error::InvalidGroup(
                    "element 0 must be the identity (row 0 and column 0 must be 0..n)".into(),
                ));
            }
        }
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let c = mult[a * n + b];
                if seen[c] {
                    return Err(Error::InvalidGroup(format!("row {a} repeats {c}")));
                }
                seen[c] = true;
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if mult[a * n + b] == 0 {
                    inv[a] = b;
                }
            }
            if mult[inv[a] * n + a] != 0 {
                return Err(Error::InvalidGroup(format!("element {a} has no two-sided inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mult[a * n + b];
                for c in 0..n {
                    if mult[ab * n + c] != mult[a * n + mult[b * n + c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, mult, inv })
    }

    /// The group generated by permutations of `0..degree`, given in image
    /// notation (`p[i]` is the image of `i`). Products compose right to left:
    /// `(pq)[i] = p[q[i]]`.
    ///
    /// Elements are sorted lexicographically, so the identity comes first.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.first().map_or(0, Vec::len);
        for (k, p) in gens.iter().enumerate() {
            if p.len() != degree {
                return Err(Error::InvalidGroup(format!(
                    "generator {k} has degree {}, expected {degree}",
                    p.len()
                )));
            }
            let mut hit = vec![false; degree];
            for &i in p {
                if i >= degree || hit[i] {
                    return Err(Error::InvalidGroup(format!("generator {k} is not a permutation")));
                }
                hit[i] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let compose = |p: &Vec<usize>, q: &Vec<usize>| q.iter().map(|&i| p[i]).collect::<Vec<_>>();
        let mut elements = closure(identity, gens, compose);
        elements.sort();
        Ok(Self::from_elements(&elements, compose))
    }

    /// The group generated by `gens` inside some ambient monoid with
    /// multiplication `mul`. Elements are numbered in breadth-first order
    /// from the identity.
    pub fn generate<T, F>(identity: T, gens: &[T], mul: F) -> Self
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let elements = closure(identity, gens, &mul);
        Self::from_elements(&elements, mul)
    }

    fn from_elements<T, F>(elements: &[T], mul: F) -> Self
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elements.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                mult.push(index[&mul(a, b)]);
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mult[a * n + b] == 0).expect("closed set has inverses");
        }
        FiniteGroup { order: n, mult, inv }
    }

    pub fn trivial() -> Self {
        FiniteGroup { order: 1, mult: vec![0], inv: vec![0] }
    }

    /// `Z/n` with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let mult = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup { order: n, mult, inv }
    }

    /// `A × B`, with `(a, b)` stored at index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut mult = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                mult.push(a.mul(xa, ya) * nb + b.mul(xb, yb));
            }
        }
        let inv = (0..n).map(|x| a.inv(x / nb) * nb + b.inv(x % nb)).collect();
        FiniteGroup { order: n, mult, inv }
    }

    /// `N ⋊ H` where `action` is an action of `H` on `N` by automorphisms.
    /// The pair `(n, h)` is stored at index `h * |N| + n`, so `N` occupies the
    /// first `|N|` indices.
    pub fn semidirect(normal: &FiniteGroup, acting: &FiniteGroup, action: &GroupAction) -> Result<Self> {
        if action.group().as_ref() != acting || action.set_size() != normal.order {
            return Err(Error::InvalidAction("action does not match the factors".into()));
        }
        let (nn, nh) = (normal.order, acting.order);
        let elements: Vec<(usize, usize)> =
            (0..nh).flat_map(|h| (0..nn).map(move |n| (n, h))).collect();
        let g = Self::from_elements(&elements, |&(n1, h1), &(n2, h2)| {
            (normal.mul(n1, action.apply(h1, n2)), acting.mul(h1, h2))
        });
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Row-major table as nested vectors.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// A generating set found greedily: repeatedly add the smallest element
    /// outside the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order];
        reached[0] = true;
        let mut count = 1;
        while count < self.order {
            let g = (0..self.order).find(|&g| !reached[g]).expect("unreached element");
            gens.push(g);
            let elems = closure(0usize, &gens, |a, b| self.mul(*a, *b));
            for e in elems {
                if !reached[e] {
                    reached[e] = true;
                    count += 1;
                }
            }
        }
        gens
    }

    /// All automorphisms, each as an image table `φ[g]`. The identity map
    /// comes first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        if gens.is_empty() {
            return vec![vec![0]];
        }
        let orders: Vec<usize> = gens.iter().map(|&g| self.element_order(g)).collect();
        let candidates: Vec<Vec<usize>> = orders
            .iter()
            .map(|&o| self.elements().filter(|&h| self.element_order(h) == o).collect())
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cand)| cand[c]).collect();
            if let Some(phi) = self.extend_homomorphism(&gens, &images, self) {
                let mut hit = vec![false; self.order];
                if phi.iter().all(|&x| !std::mem::replace(&mut hit[x], true)) {
                    out.push(phi);
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == choice.len() {
                    out.sort();
                    return out;
                }
                choice[k] += 1;
                if choice[k] < candidates[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    /// Extends `gens[i] ↦ images[i]` to a homomorphism into `target`, if one
    /// exists.
    pub fn extend_homomorphism(
        &self,
        gens: &[usize],
        images: &[usize],
        target: &FiniteGroup,
    ) -> Option<Vec<usize>> {
        let mut phi = vec![usize::MAX; self.order];
        phi[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for (&s, &img) in gens.iter().zip(images) {
                let gs = self.mul(g, s);
                let val = target.mul(phi[g], img);
                if phi[gs] == usize::MAX {
                    phi[gs] = val;
                    queue.push_back(gs);
                } else if phi[gs] != val {
                    return None;
                }
            }
        }
        if phi.contains(&usize::MAX) {
            return None;
        }
        let ok = self
            .elements()
            .all(|a| self.elements().all(|b| phi[self.mul(a, b)] == target.mul(phi[a], phi[b])));
        ok.then_some(phi)
    }
}

/// Breadth-first closure of `gens` under right multiplication, starting at
/// `identity`.
fn closure<T, F>(identity: T, gens: &[T], mul: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut seen: HashMap<T, ()> = HashMap::new();
    seen.insert(identity.clone(), ());
    let mut out = vec![identity];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let h = mul(&out[i], g);
            if seen.insert(h.clone(), ()).is_none() {
                out.push(h);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_products() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(z4.mul(3, 2), 1);
        assert_eq!(z4.inv(1), 3);
        assert!(z4.is_abelian());
        let k = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(k.order(), 4);
        assert!(k.elements().all(|g| k.mul(g, g) == 0));
        assert!(FiniteGroup::from_table(&k.table()).is_ok());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table(&[]).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).is_err());
        // identity not at 0
        assert!(FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).is_err());
        // a Latin square with identity 0 that is not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&loop5), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn permutation_input_sorts_identity_first() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(FiniteGroup::from_permutations(&[vec![0, 0, 1]]).is_err());
        assert_eq!(FiniteGroup::from_permutations(&[]).unwrap().order(), 1);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(FiniteGroup::cyclic(1).automorphisms().len(), 1);
        assert_eq!(FiniteGroup::cyclic(5).automorphisms().len(), 4);
        assert_eq!(FiniteGroup::cyclic(8).automorphisms().len(), 4);
        let k = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(k.automorphisms().len(), 6);
        assert_eq!(catalog::symmetric(3).automorphisms().len(), 6);
        assert_eq!(catalog::dihedral(4).automorphisms().len(), 8);
        assert_eq!(catalog::quaternion().automorphisms().len(), 24);
    }

    #[test]
    fn semidirect_builds_s3() {
        let z3 = FiniteGroup::cyclic(3);
        let z2 = std::sync::Arc::new(FiniteGroup::cyclic(2));
        let inversion = GroupAction::new(z2.clone(), 3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let g = FiniteGroup::semidirect(&z3, &z2, &inversion).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(conjugacy_classes(&g).len(), 3);
    }
}
