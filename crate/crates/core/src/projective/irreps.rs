use std::cmp::Ordering;

use nalgebra::SymmetricEigen;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{Mat, ProjCharacter, ProjRep};
use crate::cohomology::Cocycle2;
use crate::error::{Error, Result};
use crate::group::conjugacy_classes;
use crate::Tolerances;

const ATTEMPTS: usize = 24;

/// Eigenvalues closer than this are treated as one cluster.
const CLUSTER_GAP: f64 = 1e-7;

/// A complete list of irreducible projective representations for one factor
/// set, ordered by dimension and then by character values (descending).
#[derive(Debug, Clone)]
pub struct IrrepSet {
    factor_set: Cocycle2,
    reps: Vec<ProjRep>,
    characters: Vec<ProjCharacter>,
}

impl IrrepSet {
    pub fn factor_set(&self) -> &Cocycle2 {
        &self.factor_set
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[ProjRep] {
        &self.reps
    }

    pub fn rep(&self, i: usize) -> &ProjRep {
        &self.reps[i]
    }

    pub fn characters(&self) -> &[ProjCharacter] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &ProjCharacter {
        &self.characters[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.reps.iter().map(ProjRep::dim).collect()
    }

    /// Multiplicity of every irreducible in `chi`.
    pub fn decompose(&self, chi: &ProjCharacter, tol: &Tolerances) -> Result<Vec<usize>> {
        self.characters.iter().map(|irr| irr.multiplicity_in(chi, tol)).collect()
    }

    /// Index of the irreducible whose character is `chi`.
    pub fn index_of(&self, chi: &ProjCharacter, tol: &Tolerances) -> Result<Option<usize>> {
        let m = self.decompose(chi, tol)?;
        let total: usize = m.iter().sum();
        Ok(if total == 1 { m.iter().position(|&k| k == 1) } else { None })
    }

    /// Character table as JSON: domain elements and, per irreducible, a list
    /// of `[re, im]` pairs.
    pub fn character_table_json(&self) -> Value {
        let rows: Vec<Value> = self
            .characters
            .iter()
            .map(|c| Value::Array(c.values().iter().map(|v| json!([v.re, v.im])).collect()))
            .collect();
        json!({
            "elements": self.factor_set.domain().elements(),
            "dims": self.dims(),
            "characters": rows,
        })
    }
}

/// Irreducible projective representations with factor set `alpha`.
///
/// Splits the twisted regular module with a random Hermitian element of its
/// commutant (spanned by the right multiplications `R_g e_h = α(h, g) e_{hg}`);
/// each eigenspace is a simple submodule. The random element is drawn from a
/// ChaCha stream seeded with `seed` and redrawn if an eigenspace turns out to
/// be reducible.
pub fn twisted_irreducibles(alpha: &Cocycle2, seed: u64) -> Result<IrrepSet> {
    let tol = Tolerances::default();
    let dom = alpha.domain();
    let g = dom.parent();
    let n = dom.order();
    let regular = ProjRep::regular(alpha);
    let right: Vec<Mat> = dom
        .elements()
        .iter()
        .map(|&a| {
            let mut m = Mat::zeros(n, n);
            for (j, &h) in dom.elements().iter().enumerate() {
                let i = dom.position(g.mul(h, a)).expect("closed");
                m[(i, j)] = alpha.value(h, a);
            }
            m
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<(ProjRep, ProjCharacter)> = Vec::new();
    for _ in 0..ATTEMPTS {
        let mut b = Mat::zeros(n, n);
        for r in &right {
            let c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            b += r * c;
        }
        let herm = &b + b.adjoint();
        let eig = SymmetricEigen::new(herm);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap_or(Ordering::Equal));
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && eig.eigenvalues[order[end]] - eig.eigenvalues[order[end - 1]] < CLUSTER_GAP {
                end += 1;
            }
            let cols: Vec<_> = order[start..end].iter().map(|&k| eig.eigenvectors.column(k).into_owned()).collect();
            start = end;
            let q = Mat::from_columns(&cols);
            let qa = q.adjoint();
            let matrices: Vec<Mat> = regular.matrices().iter().map(|l| &qa * l * &q).collect();
            let rep = match ProjRep::new(alpha.clone(), matrices, 1e-6) {
                Ok(rep) => rep,
                Err(_) => continue,
            };
            let chi = rep.character();
            let norm = chi.inner(&chi);
            if (norm - Complex64::new(1.0, 0.0)).norm() > tol.int {
                continue;
            }
            if !found.iter().any(|(_, c)| (c.inner(&chi) - Complex64::new(1.0, 0.0)).norm() < 0.5) {
                found.push((rep, chi));
            }
        }
        let budget: usize = found.iter().map(|(r, _)| r.dim() * r.dim()).sum();
        if budget == n {
            break;
        }
        if budget > n {
            return Err(Error::DecompositionFailure(format!("dimension budget {budget} exceeds {n}")));
        }
    }
    let budget: usize = found.iter().map(|(r, _)| r.dim() * r.dim()).sum();
    if budget != n {
        return Err(Error::DecompositionFailure(format!(
            "found irreducibles with Σd² = {budget}, expected {n}"
        )));
    }
    found.sort_by(|(ra, ca), (rb, cb)| ra.dim().cmp(&rb.dim()).then_with(|| character_key_cmp(cb, ca)));
    let (reps, characters) = found.into_iter().unzip();
    Ok(IrrepSet { factor_set: alpha.clone(), reps, characters })
}

/// Lexicographic comparison of characters on a 1e-6 grid.
fn character_key_cmp(a: &ProjCharacter, b: &ProjCharacter) -> Ordering {
    let key = |v: &Complex64| ((v.re * 1e6).round() as i64, (v.im * 1e6).round() as i64);
    a.values().iter().map(key).cmp(b.values().iter().map(key))
}

/// Number of conjugacy classes (inside the domain) of `α`-regular elements:
/// those `g` with `α(g, h) = α(h, g)` for every `h` commuting with `g`.
pub fn alpha_regular_class_count(alpha: &Cocycle2, tol: f64) -> usize {
    let dom = alpha.domain();
    let g = dom.parent();
    let sub = std::sync::Arc::new(dom.as_group());
    let els = dom.elements();
    conjugacy_classes(&sub)
        .iter()
        .filter(|class| {
            let x = els[class[0]];
            els.iter()
                .filter(|&&h| g.mul(h, x) == g.mul(x, h))
                .all(|&h| (alpha.value(x, h) - alpha.value(h, x)).norm() <= tol)
        })
        .count()
}
