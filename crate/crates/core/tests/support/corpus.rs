//! Enumerated test inputs: group actions by automorphisms up to
//! conjugation, and action data built from standard cocycles.

use std::collections::BTreeSet;
use std::sync::Arc;

use fusion_forge::cohomology::{cyclic_3cocycle, ActionData, Cocycle3};
use fusion_forge::group::{catalog, FiniteGroup, GroupAction};
use fusion_forge::root_of_unity;

#[derive(Clone)]
pub struct Case {
    pub name: String,
    pub data: Arc<ActionData>,
}

/// Every homomorphism `source → target`, as image tables.
pub fn homomorphisms(source: &FiniteGroup, target: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = source.generators();
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let k = source.element_order(s);
            target.elements().filter(|&t| k % target.element_order(t) == 0).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    fn rec(
        i: usize,
        choices: &[Vec<usize>],
        images: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if i == choices.len() {
            f(images);
            return;
        }
        for &c in &choices[i] {
            images[i] = c;
            rec(i + 1, choices, images, f);
        }
    }
    rec(0, &choices, &mut images, &mut |imgs| {
        if let Some(phi) = source.extend_homomorphism(&gens, imgs, target) {
            out.push(phi);
        }
    });
    out
}

/// Actions of `g` on `gamma` by automorphisms, one per conjugacy class
/// under `Aut(Γ)`. Tables are `table[g][x]`.
pub fn actions(g: &FiniteGroup, gamma: &FiniteGroup) -> Vec<Vec<Vec<usize>>> {
    if g.order() == 1 || gamma.order() <= 2 {
        return vec![vec![gamma.elements().collect(); g.order()]];
    }
    let autos = gamma.automorphisms();
    let aut = FiniteGroup::from_permutations(&autos).unwrap();
    let gens = g.generators();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for phi in homomorphisms(g, &aut) {
        let key = (0..aut.order())
            .map(|c| gens.iter().map(|&s| aut.conj(c, phi[s])).collect::<Vec<_>>())
            .min()
            .unwrap_or_default();
        if seen.insert(key) {
            out.push(g.elements().map(|a| autos[phi[a]].clone()).collect());
        }
    }
    out
}

/// All `(Γ, G, action)` with `|Γ|·|G| ≤ max`, trivial cocycles.
pub fn smash_corpus(max: usize) -> Vec<Case> {
    let groups = catalog::all_up_to(max);
    let mut out = Vec::new();
    for gam in &groups {
        for g in &groups {
            if gam.group.order() * g.group.order() > max {
                continue;
            }
            let (ga, gg) = (Arc::new(gam.group.clone()), Arc::new(g.group.clone()));
            for (i, table) in actions(&g.group, &gam.group).into_iter().enumerate() {
                let action = GroupAction::automorphic(gg.clone(), ga.clone(), table).unwrap();
                out.push(Case {
                    name: format!("{} on {} #{i}", g.name, gam.name),
                    data: Arc::new(ActionData::trivial(action).unwrap()),
                });
            }
        }
    }
    out
}

/// A surjection onto `Z_k` for the largest possible `k ≤ 8`.
pub fn cyclic_quotient(g: &FiniteGroup) -> Option<(usize, Vec<usize>)> {
    (2..=8).rev().find_map(|k| {
        let z = FiniteGroup::cyclic(k);
        homomorphisms(g, &z).into_iter().find(|phi| phi.iter().collect::<BTreeSet<_>>().len() == k).map(|phi| (k, phi))
    })
}

/// `ω` pulled back from the generator of `H³(Z_k)` along `φ: g → Z_k`.
pub fn pulled_back_omega(g: &Arc<FiniteGroup>, k: usize, phi: &[usize], q: i64) -> Cocycle3 {
    cyclic_3cocycle(k, q).pullback(g.clone(), phi)
}

fn nontrivial_z2_homs(g: &FiniteGroup) -> Vec<Vec<usize>> {
    homomorphisms(g, &FiniteGroup::cyclic(2)).into_iter().filter(|p| p.iter().any(|&v| v != 0)).collect()
}

/// Trivial action with `ω` pulled back from a cyclic quotient of `Γ`, `τ`
/// trivial and `σ(g, h; x) = β(g, h)^{φ(x)}` for the bicharacter
/// `β(g, h) = (-1)^{f₁(g) f₂(h)}` and `φ: Γ → Z₂`.
pub fn trivial_action_case(g: &Arc<FiniteGroup>, gamma: &Arc<FiniteGroup>) -> ActionData {
    let omega = match cyclic_quotient(gamma) {
        Some((k, phi)) => pulled_back_omega(gamma, k, &phi, 1),
        None => Cocycle3::trivial(gamma.clone()),
    };
    let fs = nontrivial_z2_homs(g);
    let (f1, f2) = match fs.len() {
        0 => (vec![0; g.order()], vec![0; g.order()]),
        1 => (fs[0].clone(), fs[0].clone()),
        _ => (fs[0].clone(), fs[1].clone()),
    };
    let phi = nontrivial_z2_homs(gamma).into_iter().next().unwrap_or_else(|| vec![0; gamma.order()]);
    let action = GroupAction::trivial(g.clone(), gamma.clone());
    ActionData::from_fns(
        action,
        omega,
        |_, _, _| root_of_unity(0, 1),
        |a, b, x| root_of_unity((f1[a] * f2[b] * phi[x]) as i64, 2),
    )
    .unwrap()
}

/// The categories on which the global-dimension identity is checked: all
/// groups of order at most 8 in every role.
pub fn small_corpus() -> Vec<Case> {
    let groups: Vec<_> = catalog::all_up_to(8).into_iter().map(|n| (n.name, Arc::new(n.group))).collect();
    let mut out = Vec::new();
    for (gn, g) in &groups {
        for (xn, gamma) in &groups {
            out.push(Case { name: format!("{gn} trivially on {xn}, twisted"), data: Arc::new(trivial_action_case(g, gamma)) });
            for (i, table) in actions(g, gamma).into_iter().enumerate() {
                let action = GroupAction::automorphic(g.clone(), gamma.clone(), table).unwrap();
                out.push(Case { name: format!("{gn} on {xn} #{i}"), data: Arc::new(ActionData::trivial(action).unwrap()) });
            }
        }
    }
    for (name, omega) in double_corpus() {
        let data = fusion_forge::cohomology::dpr_transgression(&omega, 1e-9).unwrap().into_action_data();
        out.push(Case { name, data: Arc::new(data) });
    }
    out
}

/// 3-cocycles for twisted doubles: trivial, and pulled back from every
/// cyclic quotient.
pub fn double_corpus() -> Vec<(String, Cocycle3)> {
    let mut out = Vec::new();
    for named in catalog::all_up_to(8) {
        let g = Arc::new(named.group);
        out.push((format!("D({})", named.name), Cocycle3::trivial(g.clone())));
        for k in 2..=8 {
            let z = FiniteGroup::cyclic(k);
            if let Some(phi) = homomorphisms(&g, &z).into_iter().find(|p| p.iter().collect::<BTreeSet<_>>().len() == k) {
                out.push((format!("D^w({}) via Z{k}", named.name), pulled_back_omega(&g, k, &phi, 1)));
            }
        }
    }
    out
}
