//! Twisted quantum doubles `D^ω G` as equivariantizations of `C(G, ω⁻¹)`
//! under conjugation.

use std::fmt;
use std::sync::Arc;

use crate::cohomology::{dpr_transgression, Cocycle3};
use crate::equivariant::{build_category, BuildOptions, EquivariantCategory};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::projective::alpha_regular_class_count;
use crate::ring::FusionRing;

#[derive(Debug, Clone)]
pub struct TwistedDoubleSpec {
    pub g: Arc<FiniteGroup>,
    pub omega: Cocycle3,
}

impl TwistedDoubleSpec {
    pub fn new(omega: Cocycle3) -> Self {
        TwistedDoubleSpec { g: omega.group().clone(), omega }
    }

    pub fn untwisted(g: Arc<FiniteGroup>) -> Self {
        Self::new(Cocycle3::trivial(g))
    }
}

/// The category of representations of `D^ω G`: simples are pairs
/// (class representative `x`, irreducible projective representation of the
/// centralizer `Z(x)`).
pub fn build_double(spec: &TwistedDoubleSpec, options: &BuildOptions) -> Result<EquivariantCategory> {
    if spec.omega.group().as_ref() != spec.g.as_ref() {
        return Err(Error::Shape("ω lives on a different group".into()));
    }
    let data = dpr_transgression(&spec.omega, options.tol.val)?.into_action_data();
    build_category(data, options)
}

/// Predicted number of simples: the sum over classes of the number of
/// regular classes of each centralizer for its factor set.
pub fn expected_simple_count(cat: &EquivariantCategory) -> usize {
    cat.orbits()
        .iter()
        .map(|o| alpha_regular_class_count(&o.factor_set, cat.tolerances().val))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutativityReport {
    /// `(a, b, c)` with `N_{a,b}^c ≠ N_{b,a}^c`, each unordered pair once.
    pub violations: Vec<(usize, usize, usize)>,
    labels: Vec<String>,
    values: Vec<(u64, u64)>,
}

impl CommutativityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CommutativityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "comm: ok");
        }
        write!(f, "comm: {} violations", self.violations.len())?;
        let ((a, b, c), (x, y)) = (self.violations[0], self.values[0]);
        let l = &self.labels;
        write!(f, "; N[{},{}][{}] = {x} but N[{},{}][{}] = {y}", l[a], l[b], l[c], l[b], l[a], l[c])
    }
}

/// Checks `N_{a,b}^c = N_{b,a}^c`, which every braided table satisfies.
pub fn verify_braided_commutativity(ring: &FusionRing) -> CommutativityReport {
    let r = ring.rank();
    let mut violations = Vec::new();
    let mut values = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            for c in 0..r {
                let (x, y) = (ring.n(a, b, c), ring.n(b, a, c));
                if x != y {
                    violations.push((a, b, c));
                    values.push((x, y));
                }
            }
        }
    }
    CommutativityReport { violations, labels: ring.labels().to_vec(), values }
}
