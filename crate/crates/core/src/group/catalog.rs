//! Named constructions of small groups, and a catalogue containing one group
//! from every isomorphism class of order at most 24.

use std::sync::Arc;

use super::{FiniteGroup, GroupAction};

#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

fn named(name: &str, group: FiniteGroup) -> NamedGroup {
    NamedGroup { name: name.to_string(), group }
}

/// Product of cyclic groups of the given orders.
pub fn abelian(orders: &[usize]) -> FiniteGroup {
    orders
        .iter()
        .fold(FiniteGroup::trivial(), |acc, &n| FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(n)))
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n < 2 {
        return FiniteGroup::trivial();
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(&[swap, cycle]).expect("valid permutations")
}

pub fn alternating(n: usize) -> FiniteGroup {
    if n < 3 {
        return FiniteGroup::trivial();
    }
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    FiniteGroup::from_permutations(&gens).expect("valid permutations")
}

/// `N ⋊ Z/k`, where the generator of `Z/k` acts by the automorphism `auto`
/// of `N` (given as an image table with `auto^k = id`).
pub fn cyclic_extension(normal: &FiniteGroup, auto: &[usize], k: usize) -> FiniteGroup {
    let zk = Arc::new(FiniteGroup::cyclic(k));
    let mut table = vec![normal.elements().collect::<Vec<_>>()];
    for i in 1..k {
        let prev: &Vec<usize> = &table[i - 1];
        table.push(prev.iter().map(|&x| auto[x]).collect());
    }
    let action = GroupAction::automorphic(zk.clone(), Arc::new(normal.clone()), table)
        .expect("powers of an automorphism of order dividing k");
    FiniteGroup::semidirect(normal, &zk, &action).expect("matching factors")
}

/// `Z/m ⋊ Z/n` with the generator acting by `x ↦ r·x`.
pub fn cyclic_semidirect(m: usize, r: usize, n: usize) -> FiniteGroup {
    let auto: Vec<usize> = (0..m).map(|x| (x * r) % m).collect();
    cyclic_extension(&FiniteGroup::cyclic(m), &auto, n)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    cyclic_semidirect(n, n.saturating_sub(1).max(1), 2)
}

/// `A ⋊ Z/2` with inversion, for an abelian `A`.
pub fn generalized_dihedral(a: &FiniteGroup) -> FiniteGroup {
    let auto: Vec<usize> = a.elements().map(|x| a.inv(x)).collect();
    cyclic_extension(a, &auto, 2)
}

/// Dicyclic group of order `4n`: `⟨a, x | a^{2n}, x² = aⁿ, x a x⁻¹ = a⁻¹⟩`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n as i64;
    let mul = |&(k1, e1): &(i64, u8), &(k2, e2): &(i64, u8)| -> (i64, u8) {
        match (e1, e2) {
            (0, _) => ((k1 + k2).rem_euclid(m), e2),
            (_, 0) => ((k1 - k2).rem_euclid(m), 1),
            _ => ((k1 - k2 + n as i64).rem_euclid(m), 0),
        }
    };
    FiniteGroup::generate((0i64, 0u8), &[(1, 0), (0, 1)], mul)
}

pub fn quaternion() -> FiniteGroup {
    dicyclic(2)
}

/// `SL(2, 3)`, order 24.
pub fn special_linear_2_3() -> FiniteGroup {
    let mul = |a: &[u8; 4], b: &[u8; 4]| -> [u8; 4] {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    FiniteGroup::generate([1, 0, 0, 1], &[[1, 1, 0, 1], [1, 0, 1, 1]], mul)
}

/// One representative of every isomorphism class of groups of order at most
/// `max_order` (supported up to 24).
pub fn all_up_to(max_order: usize) -> Vec<NamedGroup> {
    assert!(max_order <= 24, "catalogue stops at order 24");
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(of_order(n));
    }
    out
}

fn prod(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    FiniteGroup::direct_product(a, b)
}

/// Every isomorphism class of order `n` (n ≤ 24).
pub fn of_order(n: usize) -> Vec<NamedGroup> {
    let z = FiniteGroup::cyclic;
    let mut v = vec![named(&format!("Z{n}"), z(n))];
    match n {
        4 => v.push(named("Z2xZ2", abelian(&[2, 2]))),
        6 | 10 | 14 | 22 => v.push(named(&format!("D{}", n / 2), dihedral(n / 2))),
        8 => {
            v.push(named("Z4xZ2", abelian(&[4, 2])));
            v.push(named("Z2xZ2xZ2", abelian(&[2, 2, 2])));
            v.push(named("D4", dihedral(4)));
            v.push(named("Q8", quaternion()));
        }
        9 => v.push(named("Z3xZ3", abelian(&[3, 3]))),
        12 => {
            v.push(named("Z6xZ2", abelian(&[6, 2])));
            v.push(named("A4", alternating(4)));
            v.push(named("D6", dihedral(6)));
            v.push(named("Dic3", dicyclic(3)));
        }
        16 => {
            let z4z2 = abelian(&[4, 2]);
            // (a, b) ↦ (a, a + b) and (a, b) ↦ (a + 2b, b) on Z4 × Z2
            let shear: Vec<usize> = z4z2.elements().map(|x| (x / 2) * 2 + (x / 2 + x % 2) % 2).collect();
            let central: Vec<usize> = z4z2.elements().map(|x| ((x / 2 + 2 * (x % 2)) % 4) * 2 + x % 2).collect();
            v.push(named("Z8xZ2", abelian(&[8, 2])));
            v.push(named("Z4xZ4", abelian(&[4, 4])));
            v.push(named("Z4xZ2xZ2", abelian(&[4, 2, 2])));
            v.push(named("Z2^4", abelian(&[2, 2, 2, 2])));
            v.push(named("D8", dihedral(8)));
            v.push(named("Q16", dicyclic(4)));
            v.push(named("SD16", cyclic_semidirect(8, 3, 2)));
            v.push(named("M16", cyclic_semidirect(8, 5, 2)));
            v.push(named("Z4:Z4", cyclic_semidirect(4, 3, 4)));
            v.push(named("Z2xD4", prod(&z(2), &dihedral(4))));
            v.push(named("Z2xQ8", prod(&z(2), &quaternion())));
            v.push(named("Pauli", cyclic_extension(&z4z2, &central, 2)));
            v.push(named("(Z4xZ2):Z2", cyclic_extension(&z4z2, &shear, 2)));
        }
        18 => {
            v.push(named("Z6xZ3", abelian(&[6, 3])));
            v.push(named("D9", dihedral(9)));
            v.push(named("Z3xS3", prod(&z(3), &symmetric(3))));
            v.push(named("(Z3xZ3):Z2", generalized_dihedral(&abelian(&[3, 3]))));
        }
        20 => {
            v.push(named("Z10xZ2", abelian(&[10, 2])));
            v.push(named("D10", dihedral(10)));
            v.push(named("Dic5", dicyclic(5)));
            v.push(named("F20", cyclic_semidirect(5, 2, 4)));
        }
        21 => v.push(named("Z7:Z3", cyclic_semidirect(7, 2, 3))),
        24 => {
            let d4 = dihedral(4);
            // D4 = Z4 ⋊ Z2 stores r^k s^e at index 4e + k; odd k inverts Z3
            let table: Vec<Vec<usize>> = d4
                .elements()
                .map(|x| if x % 2 == 1 { vec![0, 2, 1] } else { vec![0, 1, 2] })
                .collect();
            let d4 = Arc::new(d4);
            let action = GroupAction::automorphic(d4.clone(), Arc::new(z(3)), table).expect("parity action");
            v.push(named("Z12xZ2", abelian(&[12, 2])));
            v.push(named("Z6xZ2xZ2", abelian(&[6, 2, 2])));
            v.push(named("S4", symmetric(4)));
            v.push(named("SL(2,3)", special_linear_2_3()));
            v.push(named("Z2xA4", prod(&z(2), &alternating(4))));
            v.push(named("D12", dihedral(12)));
            v.push(named("Dic6", dicyclic(6)));
            v.push(named("Z3:Z8", cyclic_semidirect(3, 2, 8)));
            v.push(named("Z3xD4", prod(&z(3), &dihedral(4))));
            v.push(named("Z3xQ8", prod(&z(3), &quaternion())));
            v.push(named("Z4xS3", prod(&z(4), &symmetric(3))));
            v.push(named("Z2xDic3", prod(&z(2), &dicyclic(3))));
            v.push(named("Z2xZ2xS3", prod(&abelian(&[2, 2]), &symmetric(3))));
            v.push(named("Z3:D4", FiniteGroup::semidirect(&z(3), &d4, &action).expect("factors")));
        }
        _ => {}
    }
    v
}
