use std::fmt;

use rayon::prelude::*;

use super::FusionRing;
use crate::EPS_INT;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub failures: usize,
    /// Description of the first failure.
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RingReport {
    pub checks: Vec<CheckResult>,
    /// Frobenius–Perron dimensions recomputed from `N`.
    pub fp_dims: Vec<f64>,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failed(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for RingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{:<10} ok", c.name)?,
                Some(w) => writeln!(f, "{:<10} FAILED ({} violations; first: {w})", c.name, c.failures)?,
            }
        }
        Ok(())
    }
}

struct Acc {
    name: &'static str,
    failures: usize,
    witness: Option<String>,
}

impl Acc {
    fn new(name: &'static str) -> Self {
        Acc { name, failures: 0, witness: None }
    }

    fn fail(&mut self, w: impl FnOnce() -> String) {
        self.failures += 1;
        if self.witness.is_none() {
            self.witness = Some(w());
        }
    }

    fn done(self) -> CheckResult {
        CheckResult { name: self.name, failures: self.failures, witness: self.witness }
    }
}

pub(super) fn verify(ring: &FusionRing, commutative: bool) -> RingReport {
    let r = ring.rank();
    let u = ring.unit;
    let mut checks = Vec::new();

    let mut unit = Acc::new("unit");
    for j in 0..r {
        for k in 0..r {
            let expect = u64::from(j == k);
            if ring.n(u, j, k) != expect {
                unit.fail(|| format!("N[unit,{j}][{k}] = {}", ring.n(u, j, k)));
            }
            if ring.n(j, u, k) != expect {
                unit.fail(|| format!("N[{j},unit][{k}] = {}", ring.n(j, u, k)));
            }
        }
    }
    checks.push(unit.done());

    checks.push(associativity(ring));

    let mut involution = Acc::new("involution");
    for i in 0..r {
        if ring.dual[ring.dual[i]] != i {
            involution.fail(|| format!("dual(dual({i})) = {}", ring.dual[ring.dual[i]]));
        }
    }
    checks.push(involution.done());

    let mut duality = Acc::new("duality");
    for i in 0..r {
        for j in 0..r {
            let expect = u64::from(j == ring.dual[i]);
            if ring.n(i, j, u) != expect {
                duality.fail(|| format!("N[{i},{j}][unit] = {}, dual({i}) = {}", ring.n(i, j, u), ring.dual[i]));
            }
        }
    }
    checks.push(duality.done());

    let mut rigidity = Acc::new("rigidity");
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let a = ring.n(i, j, k);
                let b = ring.n(ring.dual[i], k, j);
                let c = ring.n(k, ring.dual[j], i);
                if a != b || a != c {
                    rigidity.fail(|| format!("N[{i},{j}][{k}] = {a}, N[{i}*,{k}][{j}] = {b}, N[{k},{j}*][{i}] = {c}"));
                }
            }
        }
    }
    checks.push(rigidity.done());

    let mut dimhom = Acc::new("dim-hom");
    for i in 0..r {
        for j in 0..r {
            let lhs: u64 = (0..r).map(|k| ring.n(i, j, k) * ring.dims[k]).sum();
            let rhs = ring.dims[i] * ring.dims[j];
            if lhs != rhs {
                dimhom.fail(|| format!("Σ_k N[{i},{j}][k] d_k = {lhs} ≠ d_{i} d_{j} = {rhs}"));
            }
        }
    }
    checks.push(dimhom.done());

    let fp_dims = frobenius_perron(ring);
    let mut fp = Acc::new("fp-dims");
    for (i, (&d, &e)) in ring.dims.iter().zip(&fp_dims).enumerate() {
        if !((d as f64 - e).abs() <= EPS_INT * (d as f64).max(1.0)) {
            fp.fail(|| format!("stored dim of {i} is {d}, Frobenius–Perron gives {e:.9}"));
        }
    }
    checks.push(fp.done());

    if commutative {
        let mut comm = Acc::new("comm");
        for i in 0..r {
            for j in 0..i {
                for k in 0..r {
                    if ring.n(i, j, k) != ring.n(j, i, k) {
                        comm.fail(|| format!("N[{i},{j}][{k}] = {} ≠ N[{j},{i}][{k}] = {}", ring.n(i, j, k), ring.n(j, i, k)));
                    }
                }
            }
        }
        checks.push(comm.done());
    }

    RingReport { checks, fp_dims }
}

/// `(i j) k = i (j k)` via sparse products, parallel over `i`.
fn associativity(ring: &FusionRing) -> CheckResult {
    let r = ring.rank();
    let prods: Vec<Vec<(usize, u64)>> = (0..r * r).map(|ij| ring.product(ij / r, ij % r)).collect();
    let per_i: Vec<(usize, Option<String>)> = (0..r)
        .into_par_iter()
        .map(|i| {
            let mut failures = 0;
            let mut witness = None;
            let mut left = vec![0u64; r];
            let mut right = vec![0u64; r];
            for j in 0..r {
                for k in 0..r {
                    left.iter_mut().for_each(|x| *x = 0);
                    right.iter_mut().for_each(|x| *x = 0);
                    for &(m, a) in &prods[i * r + j] {
                        for &(l, b) in &prods[m * r + k] {
                            left[l] += a * b;
                        }
                    }
                    for &(m, a) in &prods[j * r + k] {
                        for &(l, b) in &prods[i * r + m] {
                            right[l] += a * b;
                        }
                    }
                    if left != right {
                        failures += 1;
                        if witness.is_none() {
                            let l = (0..r).find(|&l| left[l] != right[l]).unwrap_or(0);
                            witness = Some(format!(
                                "({i}·{j})·{k} has {} copies of {l}, {i}·({j}·{k}) has {}",
                                left[l], right[l]
                            ));
                        }
                    }
                }
            }
            (failures, witness)
        })
        .collect();
    let failures = per_i.iter().map(|(f, _)| f).sum();
    let witness = per_i.into_iter().find_map(|(_, w)| w);
    CheckResult { name: "assoc", failures, witness }
}

/// Perron eigenvector of `Σ_i L_i`, where `(L_i)_{j,k} = N_{i,j}^k`, scaled to
/// 1 at the unit.
fn frobenius_perron(ring: &FusionRing) -> Vec<f64> {
    let r = ring.rank();
    let mut m = vec![0.0f64; r * r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                m[j * r + k] += ring.n(i, j, k) as f64;
            }
        }
    }
    let mut v = vec![1.0f64; r];
    for _ in 0..10_000 {
        let mut w = vec![0.0; r];
        for j in 0..r {
            w[j] = (0..r).map(|k| m[j * r + k] * v[k]).sum();
        }
        let norm = w.iter().cloned().fold(0.0, f64::max);
        if norm == 0.0 {
            return vec![0.0; r];
        }
        w.iter_mut().for_each(|x| *x /= norm);
        let diff = w.iter().zip(&v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        v = w;
        if diff < 1e-14 {
            break;
        }
    }
    let scale = v[ring.unit];
    if scale == 0.0 {
        return v;
    }
    v.iter().map(|x| x / scale).collect()
}
