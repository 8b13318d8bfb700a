//! Based rings with nonnegative integer structure constants: axiom checks
//! and isomorphism search.

mod iso;
mod verify;

pub use iso::isomorphic_as_based_rings;
pub use verify::{CheckResult, RingReport};

use crate::error::{Error, Result};

/// A based ring `S_i S_j = Σ_k N_{i,j}^k S_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    /// `n[(i * rank + j) * rank + k] = N_{i,j}^k`
    n: Vec<u64>,
    unit: usize,
    dual: Vec<usize>,
    dims: Vec<u64>,
}

impl FusionRing {
    pub fn new(labels: Vec<String>, n: Vec<u64>, unit: usize, dual: Vec<usize>, dims: Vec<u64>) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::Shape("rank 0".into()));
        }
        if n.len() != r * r * r {
            return Err(Error::Shape(format!("N needs {} entries, got {}", r * r * r, n.len())));
        }
        if unit >= r {
            return Err(Error::Shape(format!("unit {unit} out of range")));
        }
        if dual.len() != r || dual.iter().any(|&d| d >= r) {
            return Err(Error::Shape("dual must map into 0..rank".into()));
        }
        if dims.len() != r {
            return Err(Error::Shape("one dimension per basis element".into()));
        }
        Ok(FusionRing { labels, n, unit, dual, dims })
    }

    /// The group ring of a group given by its multiplication table.
    pub fn group_ring(g: &crate::group::FiniteGroup) -> Self {
        let r = g.order();
        let mut n = vec![0; r * r * r];
        for a in 0..r {
            for b in 0..r {
                n[(a * r + b) * r + g.mul(a, b)] = 1;
            }
        }
        let labels = (0..r).map(|a| a.to_string()).collect();
        let dual = (0..r).map(|a| g.inv(a)).collect();
        FusionRing { labels, n, unit: 0, dual, dims: vec![1; r] }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.rank();
        self.n[(i * r + j) * r + k]
    }

    pub fn tensor(&self) -> &[u64] {
        &self.n
    }

    /// Copy with one structure constant replaced.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, value: u64) -> FusionRing {
        let r = self.rank();
        let mut out = self.clone();
        out.n[(i * r + j) * r + k] = value;
        out
    }

    /// Nonzero `(k, N_{i,j}^k)` for fixed `i, j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u64)> {
        let r = self.rank();
        let row = &self.n[(i * r + j) * r..(i * r + j + 1) * r];
        row.iter().enumerate().filter(|(_, &v)| v > 0).map(|(k, &v)| (k, v)).collect()
    }

    /// All nonzero `(i, j, k, N)` quadruples in lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, u64)> {
        let r = self.rank();
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for (k, v) in self.product(i, j) {
                    out.push((i, j, k, v));
                }
            }
        }
        out
    }

    /// Runs every axiom check; `commutative` adds the commutativity check.
    pub fn verify(&self, commutative: bool) -> RingReport {
        verify::verify(self, commutative)
    }

    /// Multiset of dimensions, sorted.
    pub fn sorted_dims(&self) -> Vec<u64> {
        let mut d = self.dims.clone();
        d.sort_unstable();
        d
    }

    /// The ring with its basis permuted: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> FusionRing {
        let r = self.rank();
        let mut inv = vec![0; r];
        perm.iter().enumerate().for_each(|(i, &p)| inv[p] = i);
        let mut n = vec![0; r * r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    n[(perm[i] * r + perm[j]) * r + perm[k]] = self.n(i, j, k);
                }
            }
        }
        FusionRing {
            labels: (0..r).map(|p| self.labels[inv[p]].clone()).collect(),
            n,
            unit: perm[self.unit],
            dual: (0..r).map(|p| perm[self.dual[inv[p]]]).collect(),
            dims: (0..r).map(|p| self.dims[inv[p]]).collect(),
        }
    }
}
