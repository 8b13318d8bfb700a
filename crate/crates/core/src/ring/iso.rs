use super::FusionRing;
use crate::error::{Error, Result};

type Signature = (u64, bool, Vec<u64>, Vec<u128>);

/// Basis-independent data of one element: dimension, self-duality, the
/// coefficients of `i²`, and the unit coefficient of `iᵐ` for `m = 2..=6`.
fn signature(ring: &FusionRing, i: usize) -> Signature {
    let r = ring.rank();
    let mut sq: Vec<u64> = ring.product(i, i).iter().map(|&(_, v)| v).collect();
    sq.sort_unstable();
    let mut pow = vec![0u128; r];
    pow[i] = 1;
    let mut units = Vec::new();
    for _ in 2..=6 {
        let mut next = vec![0u128; r];
        for (m, &c) in pow.iter().enumerate() {
            if c > 0 {
                for (k, v) in ring.product(m, i) {
                    next[k] += c * v as u128;
                }
            }
        }
        units.push(next[ring.unit()]);
        pow = next;
    }
    (ring.dims()[i], ring.dual(i) == i, sq, units)
}

struct Search<'a> {
    a: &'a FusionRing,
    b: &'a FusionRing,
    sig_match: Vec<Vec<bool>>,
    phi: Vec<Option<usize>>,
    used: Vec<bool>,
    placed: Vec<usize>,
}

impl Search<'_> {
    /// Next element to place and its candidates.
    fn next(&self) -> Option<(usize, Vec<usize>)> {
        let r = self.a.rank();
        let admissible = |k: usize, j: usize| {
            !self.used[j]
                && self.sig_match[k][j]
                && self.phi[self.a.dual(k)].is_none_or(|dk| self.b.dual(j) == dk)
        };
        for &p in &self.placed {
            for &q in &self.placed {
                for (k, v) in self.a.product(p, q) {
                    if self.phi[k].is_none() {
                        let (fp, fq) = (self.phi[p].unwrap(), self.phi[q].unwrap());
                        let cands = (0..r).filter(|&j| admissible(k, j) && self.b.n(fp, fq, j) == v).collect();
                        return Some((k, cands));
                    }
                }
            }
        }
        (0..r)
            .filter(|&k| self.phi[k].is_none())
            .map(|k| (k, (0..r).filter(|&j| admissible(k, j)).collect::<Vec<_>>()))
            .min_by_key(|(_, c)| c.len())
    }

    fn consistent(&self, k: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let f = |x: usize| self.phi[x].unwrap();
        for &p in &self.placed {
            for &q in &self.placed {
                if p != k && q != k {
                    continue;
                }
                let (fp, fq) = (f(p), f(q));
                let mut rest_a = Vec::new();
                let mut rest_b = Vec::new();
                for (s, v) in a.product(p, q) {
                    match self.phi[s] {
                        Some(fs) if b.n(fp, fq, fs) != v => return false,
                        Some(_) => {}
                        None => rest_a.push(v),
                    }
                }
                for (s, v) in b.product(fp, fq) {
                    if !self.used[s] {
                        rest_b.push(v);
                    }
                }
                rest_a.sort_unstable();
                rest_b.sort_unstable();
                if rest_a != rest_b {
                    return false;
                }
                // the new element as a summand of products of earlier ones
                for &s in &self.placed {
                    if a.n(p, q, s) != b.n(fp, fq, f(s)) {
                        return false;
                    }
                }
            }
        }
        for &p in &self.placed {
            for &q in &self.placed {
                if a.n(p, q, k) != b.n(f(p), f(q), f(k)) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self) -> bool {
        let Some((k, cands)) = self.next() else {
            return true;
        };
        for j in cands {
            self.phi[k] = Some(j);
            self.used[j] = true;
            self.placed.push(k);
            if self.consistent(k) && self.run() {
                return true;
            }
            self.placed.pop();
            self.used[j] = false;
            self.phi[k] = None;
        }
        false
    }
}

/// A bijection `φ` of bases with `N_a(i, j, k) = N_b(φi, φj, φk)`, unit to
/// unit, preserving duals and dimensions, if one exists.
pub fn isomorphic_as_based_rings(a: &FusionRing, b: &FusionRing) -> Result<Option<Vec<usize>>> {
    let r = a.rank();
    if r != b.rank() {
        return Err(Error::RankMismatch(r, b.rank()));
    }
    let sa: Vec<Signature> = (0..r).map(|i| signature(a, i)).collect();
    let sb: Vec<Signature> = (0..r).map(|i| signature(b, i)).collect();
    let (mut xa, mut xb) = (sa.clone(), sb.clone());
    xa.sort();
    xb.sort();
    if xa != xb || sa[a.unit()] != sb[b.unit()] {
        return Ok(None);
    }
    let sig_match = (0..r).map(|i| (0..r).map(|j| sa[i] == sb[j]).collect()).collect();
    let mut s = Search { a, b, sig_match, phi: vec![None; r], used: vec![false; r], placed: Vec::new() };
    s.phi[a.unit()] = Some(b.unit());
    s.used[b.unit()] = true;
    s.placed.push(a.unit());
    if !s.consistent(a.unit()) || !s.run() {
        return Ok(None);
    }
    let phi: Vec<usize> = s.phi.into_iter().map(|x| x.expect("complete assignment")).collect();
    let image = a.relabel(&phi);
    if image.tensor() != b.tensor() || image.duals() != b.duals() || image.dims() != b.dims() {
        return Ok(None);
    }
    Ok(Some(phi))
}
