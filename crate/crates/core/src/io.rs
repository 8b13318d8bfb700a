//! JSON formats for groups, cocycle tables, categories and fusion tables.
//!
//! Cocycle values are written as `[num, den]`, meaning `exp(2πi·num/den)`,
//! so inputs are exact. Tables are flat and row-major in the index order of
//! the corresponding accessor (`ω(a, b, c)`, `τ(g; x, y)`, `σ(g, h; x)`).

use std::fmt::Write as _;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cohomology::{ActionData, Cocycle2, Cocycle3};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupAction, Subgroup};
use crate::ring::FusionRing;
use crate::root_of_unity;

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table { order: usize, mult: Vec<Vec<usize>> },
    Permutations { permutations: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Table { order, mult } => {
                if mult.len() != *order {
                    return Err(Error::Shape(format!("order {order} but {} rows", mult.len())));
                }
                FiniteGroup::from_table(mult)
            }
            GroupSpec::Permutations { permutations } => FiniteGroup::from_permutations(permutations),
        }
    }

    pub fn of(g: &FiniteGroup) -> Self {
        GroupSpec::Table { order: g.order(), mult: g.table() }
    }
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    serde_json::from_str::<GroupSpec>(text).map_err(parse_err)?.build()
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    serde_json::to_string(&GroupSpec::of(g)).expect("serializable")
}

/// `[num, den]` for `exp(2πi·num/den)`.
pub type Angle = [i64; 2];

fn decode(values: &[Angle], expected: usize, what: &str) -> Result<Vec<Complex64>> {
    if values.len() != expected {
        return Err(Error::Shape(format!("{what} needs {expected} values, got {}", values.len())));
    }
    values
        .iter()
        .map(|&[num, den]| {
            if den <= 0 {
                Err(Error::Parse(format!("{what}: denominator {den} must be positive")))
            } else {
                Ok(root_of_unity(num, den))
            }
        })
        .collect()
}

/// Writes `z` as a root of unity of order at most `max_den`, in lowest terms.
pub fn encode_root(z: Complex64, max_den: i64, tol: f64) -> Result<Angle> {
    let turn = z.arg() / (2.0 * std::f64::consts::PI);
    for den in 1..=max_den {
        let num = (turn * den as f64).round() as i64;
        if (root_of_unity(num, den) - z).norm() < tol {
            return Ok([num.rem_euclid(den), den]);
        }
    }
    Err(Error::ValidationFailure(format!("{z} is not a root of unity of order ≤ {max_den}")))
}

fn encode(values: &[Complex64], tol: f64) -> Result<Vec<Angle>> {
    values.iter().map(|&z| encode_root(z, 720, tol)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CocycleFile {
    Cocycle2 {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group: Option<GroupSpec>,
        values: Vec<Angle>,
    },
    Cocycle3 {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group: Option<GroupSpec>,
        values: Vec<Angle>,
    },
    ActionData(CategorySpec),
}

/// The contents of a cocycle file once decoded.
#[derive(Debug, Clone)]
pub enum CocycleData {
    Two(Cocycle2),
    Three(Cocycle3),
    Action(ActionData),
}

fn resolve_group(own: &Option<GroupSpec>, given: Option<&Arc<FiniteGroup>>) -> Result<Arc<FiniteGroup>> {
    match (own, given) {
        (Some(spec), Some(g)) => {
            let own = spec.build()?;
            if own != **g {
                return Err(Error::Shape("cocycle file names a different group".into()));
            }
            Ok(g.clone())
        }
        (Some(spec), None) => Ok(Arc::new(spec.build()?)),
        (None, Some(g)) => Ok(g.clone()),
        (None, None) => Err(Error::Parse("cocycle file has no group and none was supplied".into())),
    }
}

/// Reads a cocycle file. `group` supplies the group when the file omits it.
pub fn parse_cocycle(text: &str, group: Option<&Arc<FiniteGroup>>) -> Result<CocycleData> {
    match serde_json::from_str::<CocycleFile>(text).map_err(parse_err)? {
        CocycleFile::Cocycle2 { group: own, values } => {
            let g = resolve_group(&own, group)?;
            let n = g.order();
            Cocycle2::from_values(Subgroup::full(g), decode(&values, n * n, "cocycle2")?).map(CocycleData::Two)
        }
        CocycleFile::Cocycle3 { group: own, values } => {
            let g = resolve_group(&own, group)?;
            let n = g.order();
            Cocycle3::from_values(g, decode(&values, n * n * n, "cocycle3")?).map(CocycleData::Three)
        }
        CocycleFile::ActionData(spec) => spec.build().map(CocycleData::Action),
    }
}

pub fn cocycle3_to_json(omega: &Cocycle3, tol: f64) -> Result<String> {
    let file = CocycleFile::Cocycle3 { group: Some(GroupSpec::of(omega.group())), values: encode(omega.values(), tol)? };
    Ok(serde_json::to_string(&file).expect("serializable"))
}

/// A category `C(Γ, ω)^G` given by tables. Missing cocycle tables are
/// trivial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategorySpec {
    #[serde(rename = "G")]
    pub g: GroupSpec,
    #[serde(rename = "Gamma")]
    pub gamma: GroupSpec,
    /// `action[g][x]` is the image of `x` under `g`.
    pub action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Angle>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<Angle>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Angle>>,
}

impl CategorySpec {
    pub fn build(&self) -> Result<ActionData> {
        let g = Arc::new(self.g.build()?);
        let gamma = Arc::new(self.gamma.build()?);
        let (ng, nx) = (g.order(), gamma.order());
        let action = GroupAction::automorphic(g, gamma.clone(), self.action.clone())?;
        let ones = |k| vec![Complex64::new(1.0, 0.0); k];
        let table = |t: &Option<Vec<Angle>>, k, what| match t {
            Some(v) => decode(v, k, what),
            None => Ok(ones(k)),
        };
        let omega = Cocycle3::from_values(gamma, table(&self.omega, nx * nx * nx, "omega")?)?;
        ActionData::new(action, omega, table(&self.tau, ng * nx * nx, "tau")?, table(&self.sigma, ng * ng * nx, "sigma")?)
    }

    pub fn of(data: &ActionData, tol: f64) -> Result<Self> {
        let trivial = |v: &[Complex64]| v.iter().all(|z| (z - 1.0).norm() < tol);
        let opt = |v: &[Complex64]| if trivial(v) { Ok(None) } else { encode(v, tol).map(Some) };
        let ng = data.group().order();
        Ok(CategorySpec {
            g: GroupSpec::of(data.group()),
            gamma: GroupSpec::of(data.gamma()),
            action: (0..ng).map(|g| data.gamma().elements().map(|x| data.act(g, x)).collect()).collect(),
            omega: opt(data.omega().values())?,
            tau: opt(data.tau_values())?,
            sigma: opt(data.sigma_values())?,
        })
    }
}

/// Reads a category bundle; a `"kind": "action_data"` tag is accepted.
pub fn parse_category(text: &str) -> Result<ActionData> {
    let mut v: Value = serde_json::from_str(text).map_err(parse_err)?;
    if let Some(obj) = v.as_object_mut() {
        match obj.remove("kind") {
            None => {}
            Some(Value::String(k)) if k == "action_data" => {}
            Some(k) => return Err(Error::Parse(format!("expected kind action_data, got {k}"))),
        }
    }
    serde_json::from_value::<CategorySpec>(v).map_err(parse_err)?.build()
}

pub fn category_to_json(data: &ActionData, tol: f64) -> Result<String> {
    Ok(serde_json::to_string(&CategorySpec::of(data, tol)?).expect("serializable"))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
struct RingFile {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    dims: Vec<u64>,
    #[serde(rename = "N")]
    n: Vec<[u64; 4]>,
}

/// JSON with `labels`, `unit`, `dual`, `dims` and `N` as `[i, j, k, value]`
/// entries, zeros omitted.
pub fn ring_to_json(ring: &FusionRing) -> String {
    let file = RingFile {
        labels: ring.labels().to_vec(),
        unit: ring.unit(),
        dual: ring.duals().to_vec(),
        dims: ring.dims().to_vec(),
        n: ring.nonzero_entries().into_iter().map(|(i, j, k, v)| [i as u64, j as u64, k as u64, v]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

pub fn ring_from_json(text: &str) -> Result<FusionRing> {
    let file: RingFile = serde_json::from_str(text).map_err(parse_err)?;
    let r = file.labels.len();
    let mut n = vec![0; r * r * r];
    for [i, j, k, v] in file.n {
        let (i, j, k) = (i as usize, j as usize, k as usize);
        if i >= r || j >= r || k >= r {
            return Err(Error::Shape(format!("N entry ({i}, {j}, {k}) out of range for rank {r}")));
        }
        n[(i * r + j) * r + k] = v;
    }
    FusionRing::new(file.labels, n, file.unit, file.dual, file.dims)
}

/// One line per nonzero product, columns aligned.
pub fn ring_to_text(ring: &FusionRing) -> String {
    let l = ring.labels();
    let w = l.iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    let _ = writeln!(out, "rank {}  unit {}", ring.rank(), l[ring.unit()]);
    let _ = writeln!(out, "{:<w$}  {:>4}  dual", "label", "dim");
    for i in 0..ring.rank() {
        let _ = writeln!(out, "{:<w$}  {:>4}  {}", l[i], ring.dims()[i], l[ring.dual(i)]);
    }
    out.push('\n');
    for i in 0..ring.rank() {
        for j in 0..ring.rank() {
            let terms: Vec<String> = ring
                .product(i, j)
                .into_iter()
                .map(|(k, m)| if m == 1 { l[k].clone() } else { format!("{m}·{}", l[k]) })
                .collect();
            let _ = writeln!(out, "{:<w$} ⊗ {:<w$} = {}", l[i], l[j], terms.join(" + "));
        }
    }
    out
}

/// `cyclic:<n>:<q>`, giving `(n, q)`.
pub fn parse_cyclic_spec(spec: &str) -> Option<Result<(usize, i64)>> {
    let rest = spec.strip_prefix("cyclic:")?;
    let bad = || Error::Parse(format!("expected cyclic:<n>:<q>, got {spec:?}"));
    let parsed = rest.split_once(':').ok_or_else(bad).and_then(|(n, q)| {
        let n: usize = n.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok((n, q))
    });
    Some(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cyclic_3cocycle, dpr_transgression};
    use crate::group::catalog;

    #[test]
    fn group_formats() {
        let s3 = catalog::symmetric(3);
        assert_eq!(parse_group(&group_to_json(&s3)).unwrap(), s3);
        let g = parse_group(r#"{"permutations": [[1,2,0],[1,0,2]]}"#).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(matches!(parse_group(r#"{"order": 2, "mult": [[0,1]]}"#), Err(Error::Shape(_))));
        assert!(matches!(parse_group(r#"{"order": 2, "mult": [[0,1],[0,1]]}"#), Err(Error::InvalidGroup(_))));
        assert!(matches!(parse_group("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn roots_are_encoded_exactly() {
        for den in 1..13 {
            for num in 0..den {
                let [a, b] = encode_root(root_of_unity(num, den), 720, 1e-9).unwrap();
                assert_eq!(a * den, num * b);
            }
        }
        assert!(encode_root(Complex64::new(0.3, 0.0), 720, 1e-9).is_err());
    }

    #[test]
    fn cocycle_round_trip() {
        let w = cyclic_3cocycle(4, 3);
        let back = match parse_cocycle(&cocycle3_to_json(&w, 1e-9).unwrap(), None).unwrap() {
            CocycleData::Three(c) => c,
            other => panic!("{other:?}"),
        };
        assert!(w.values().iter().zip(back.values()).all(|(a, b)| (a - b).norm() < 1e-12));
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let c2 = parse_cocycle(r#"{"kind": "cocycle2", "values": [[0,1],[0,1],[0,1],[1,2]]}"#, Some(&z2)).unwrap();
        assert!(matches!(c2, CocycleData::Two(_)));
        assert!(parse_cocycle(r#"{"kind": "cocycle3", "values": [[0,1]]}"#, Some(&z2)).is_err());
        assert!(parse_cocycle(r#"{"kind": "cocycle3", "values": []}"#, None).is_err());
        assert!(parse_cocycle(r#"{"kind": "cocycle9", "values": []}"#, Some(&z2)).is_err());
    }

    #[test]
    fn category_round_trip() {
        let data = dpr_transgression(&cyclic_3cocycle(3, 1), 1e-9).unwrap().into_action_data();
        let text = category_to_json(&data, 1e-9).unwrap();
        let back = parse_category(&text).unwrap();
        assert!(data.tau_values().iter().zip(back.tau_values()).all(|(a, b)| (a - b).norm() < 1e-12));
        assert!(data.sigma_values().iter().zip(back.sigma_values()).all(|(a, b)| (a - b).norm() < 1e-12));
        let tagged = text.replacen('{', r#"{"kind":"action_data","#, 1);
        assert!(parse_category(&tagged).is_ok());
        assert!(matches!(parse_cocycle(&tagged, None).unwrap(), CocycleData::Action(_)));
    }

    #[test]
    fn ring_round_trip() {
        let r = FusionRing::group_ring(&catalog::dihedral(4));
        let text = ring_to_json(&r);
        assert_eq!(ring_from_json(&text).unwrap(), r);
        assert_eq!(ring_to_json(&ring_from_json(&text).unwrap()), text);
        let t = ring_to_text(&r);
        assert!(t.starts_with("rank 8"));
        assert_eq!(t.lines().filter(|l| l.contains('⊗')).count(), 64);
    }

    #[test]
    fn cyclic_specs() {
        assert_eq!(parse_cyclic_spec("cyclic:4:3").unwrap().unwrap(), (4, 3));
        assert!(parse_cyclic_spec("cyclic:0:1").unwrap().is_err());
        assert!(parse_cyclic_spec("cyclic:4").unwrap().is_err());
        assert!(parse_cyclic_spec("omega.json").is_none());
    }
}
