use super::EquivariantCategory;

/// Structure constants of the `G`-orbit algebra of `Γ`:
/// `m^U_{Y,Z} = #{(t, s) ∈ G/G_y × G/G_z : ᵗy ˢz = u}` for the
/// representative `u` of `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRing {
    reps: Vec<usize>,
    m: Vec<u64>,
}

impl OrbitRing {
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    /// `m^U_{Y,Z}` with orbits given by index.
    pub fn coefficient(&self, u: usize, y: usize, z: usize) -> u64 {
        let r = self.reps.len();
        self.m[(y * r + z) * r + u]
    }
}

impl EquivariantCategory {
    pub fn orbit_ring(&self) -> OrbitRing {
        let o = self.orbits();
        let r = o.len();
        let gam = self.gamma();
        let mut m = vec![0u64; r * r * r];
        for (yi, oy) in o.iter().enumerate() {
            for (zi, oz) in o.iter().enumerate() {
                for &a in &oy.elements {
                    for &b in &oz.elements {
                        let p = gam.mul(a, b);
                        let ui = self.orbit_index(p);
                        if o[ui].rep == p {
                            m[(yi * r + zi) * r + ui] += 1;
                        }
                    }
                }
            }
        }
        OrbitRing { reps: o.iter().map(|d| d.rep).collect(), m }
    }
}
