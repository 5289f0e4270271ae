//! Vine curves and the locus where Néron type fails.

use crate::balance::{enumerate_balanced, is_d_general};
use crate::class_group::class_group;
use crate::census::census;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Two smooth components of genera `g1`, `g2` meeting in `delta` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VineCurve {
    pub g1: u32,
    pub g2: u32,
    pub delta: u32,
}

impl VineCurve {
    pub fn genus(&self) -> i64 {
        self.g1 as i64 + self.g2 as i64 + self.delta as i64 - 1
    }

    pub fn is_stable(&self) -> bool {
        (self.g1 >= 1 || self.delta >= 3) && (self.g2 >= 1 || self.delta >= 3) && self.genus() >= 2
    }

    pub fn graph(&self) -> Result<WeightedGraph> {
        vine(self.g1, self.g2, self.delta)
    }
}

/// Two vertices of weights `g1`, `g2` joined by `delta` parallel edges.
pub fn vine(g1: u32, g2: u32, delta: u32) -> Result<WeightedGraph> {
    if delta == 0 {
        return Err(Error::InvalidArgument("a vine curve needs at least one node".into()));
    }
    let v = VineCurve { g1, g2, delta };
    for (i, w) in [g1, g2].into_iter().enumerate() {
        if w == 0 && delta < 3 {
            return Err(Error::NotStable(format!(
                "component {} has genus 0 and meets the other in {delta} < 3 nodes",
                i + 1
            )));
        }
    }
    if v.genus() < 2 {
        return Err(Error::GenusTooSmall(v.genus()));
    }
    WeightedGraph::new(vec![g1, g2], vec![(0, 1); delta as usize])
}

/// Not d-general.
pub fn is_d_special(g: &WeightedGraph, d: i64) -> Result<bool> {
    Ok(!is_d_general(g, d)?)
}

/// Stable vines of the given genus (`g1 <= g2`) with at least `min_delta`
/// nodes, in order of increasing `g1` then `g2`.
pub fn stable_vines(genus: i64, min_delta: u32) -> Result<Vec<VineCurve>> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    let genus = u32::try_from(genus).map_err(|_| Error::Overflow)?;
    let mut out = Vec::new();
    for g1 in 0..=genus {
        for g2 in g1..=genus - g1 {
            let delta = genus + 1 - g1 - g2;
            let v = VineCurve { g1, g2, delta };
            if delta >= min_delta.max(1) && v.is_stable() {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// The d-special stable vines of the given genus with at least `min_delta` nodes.
pub fn d_special_vine_scan(genus: i64, d: i64, min_delta: u32) -> Result<Vec<VineCurve>> {
    let mut out = Vec::new();
    for v in stable_vines(genus, min_delta)? {
        if is_d_special(&v.graph()?, d)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// One row of a vine table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VineRow {
    pub vine: VineCurve,
    pub degree: i64,
    pub num_balanced: usize,
    pub num_strict: usize,
    pub class_group_order: i64,
    pub d_special: bool,
}

pub fn vine_rows(genus: i64, d: i64, min_delta: u32) -> Result<Vec<VineRow>> {
    stable_vines(genus, min_delta)?
        .into_iter()
        .map(|v| {
            let g = v.graph()?;
            let set = enumerate_balanced(&g, d)?;
            Ok(VineRow {
                vine: v,
                degree: d,
                num_balanced: set.num_balanced(),
                num_strict: set.num_strict(),
                class_group_order: class_group(&g)?.order,
                d_special: set.num_strict() != set.num_balanced(),
            })
        })
        .collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Predicted codimension of the locus of curves not of Néron type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Codimension {
    Empty,
    Three,
    Two,
}

impl Codimension {
    pub fn predict(genus: i64, d: i64) -> Codimension {
        match gcd(d - genus + 1, 2 * genus - 2) {
            1 => Codimension::Empty,
            2 if genus % 2 == 0 => Codimension::Three,
            _ => Codimension::Two,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Codimension::Empty => "empty",
            Codimension::Three => "3",
            Codimension::Two => "2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimReport {
    pub genus: i64,
    pub degree: i64,
    pub gcd_value: i64,
    pub predicted_codim: Codimension,
    /// d-special vines with at least two nodes.
    pub empirical_special_vines: Vec<VineCurve>,
}

impl CodimReport {
    /// The scan agrees with the prediction: empty exactly when predicted
    /// empty, and in the codimension-3 case no two-node special vine exists
    /// while a three-node special vine with a component of genus `g/2 - 1` does.
    pub fn consistent(&self) -> bool {
        let empty = self.empirical_special_vines.is_empty();
        match self.predicted_codim {
            Codimension::Empty => empty,
            Codimension::Three => {
                let target = (self.genus / 2 - 1) as u32;
                !empty
                    && self.empirical_special_vines.iter().all(|v| v.delta != 2)
                    && self
                        .empirical_special_vines
                        .iter()
                        .any(|v| v.delta == 3 && (v.g1 == target || v.g2 == target))
            }
            Codimension::Two => !empty,
        }
    }
}

pub fn codim_report(genus: i64, d: i64) -> Result<CodimReport> {
    Ok(CodimReport {
        genus,
        degree: d,
        gcd_value: gcd(d - genus + 1, 2 * genus - 2),
        predicted_codim: Codimension::predict(genus, d),
        empirical_special_vines: d_special_vine_scan(genus, d, 2)?,
    })
}

/// One degree of the gcd audit: the census verdict against both gcd tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub genus: i64,
    pub degree: i64,
    pub census_size: usize,
    /// Every census graph is d-general.
    pub all_general: bool,
    /// `gcd(d - g + 1, 2g - 1)`.
    pub gcd_odd: i64,
    /// `gcd(d - g + 1, 2g - 2)`.
    pub gcd_even: i64,
}

impl AuditRow {
    pub fn odd_modulus_agrees(&self) -> bool {
        (self.gcd_odd == 1) == self.all_general
    }

    pub fn even_modulus_agrees(&self) -> bool {
        (self.gcd_even == 1) == self.all_general
    }
}

/// Compares both gcd conditions with the census truth over a degree range.
pub fn gcd_remark_audit(
    genus: i64,
    degrees: std::ops::RangeInclusive<i64>,
    max_vertices: usize,
) -> Result<Vec<AuditRow>> {
    if !(2..=4).contains(&genus) {
        return Err(Error::InvalidArgument(format!(
            "the audit supports genus 2, 3 or 4, got {genus}"
        )));
    }
    let graphs = census(genus, max_vertices)?;
    degrees
        .map(|d| {
            let mut all_general = true;
            for g in &graphs {
                if !is_d_general(g, d)? {
                    all_general = false;
                    break;
                }
            }
            Ok(AuditRow {
                genus,
                degree: d,
                census_size: graphs.len(),
                all_general,
                gcd_odd: gcd(d - genus + 1, 2 * genus - 1),
                gcd_even: gcd(d - genus + 1, 2 * genus - 2),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vine_examples() {
        let theta = vine(0, 0, 3).unwrap();
        assert_eq!(theta.genus(), 2);
        assert_eq!(theta.num_edges(), 3);
        assert_eq!(vine(1, 1, 1).unwrap().genus(), 2);
        assert!(matches!(vine(0, 1, 2), Err(Error::NotStable(_))));
        assert!(vine(1, 1, 0).is_err());
    }

    #[test]
    fn special_examples() {
        let theta = vine(0, 0, 3).unwrap();
        assert!(is_d_special(&theta, 1).unwrap());
        assert!(!is_d_special(&theta, 2).unwrap());
        let single = WeightedGraph::new(vec![3], vec![]).unwrap();
        assert!((-6..12).all(|d| !is_d_special(&single, d).unwrap()));
    }

    #[test]
    fn scan_examples() {
        let v = d_special_vine_scan(2, 1, 2).unwrap();
        assert!(v.contains(&VineCurve { g1: 0, g2: 0, delta: 3 }));
        assert!(d_special_vine_scan(2, 2, 2).unwrap().is_empty());
        assert!(!d_special_vine_scan(3, 2, 2).unwrap().is_empty());
    }

    #[test]
    fn codim_examples() {
        let r = codim_report(2, 2).unwrap();
        assert_eq!((r.gcd_value, r.predicted_codim), (1, Codimension::Empty));
        assert!(r.empirical_special_vines.is_empty() && r.consistent());

        let r = codim_report(2, 1).unwrap();
        assert_eq!((r.gcd_value, r.predicted_codim), (2, Codimension::Three));
        assert!(r.consistent());

        let r = codim_report(3, 3).unwrap();
        assert_eq!((r.gcd_value, r.predicted_codim), (1, Codimension::Empty));
    }

    #[test]
    fn gcd_handles_signs_and_zero() {
        assert_eq!(gcd(0, 4), 4);
        assert_eq!(gcd(-6, 4), 2);
        assert_eq!(gcd(0, 0), 0);
    }

    #[test]
    fn audit_examples() {
        let rows = gcd_remark_audit(2, 1..=2, 2).unwrap();
        assert!(!rows[0].all_general);
        assert!(rows[0].odd_modulus_agrees() && rows[0].even_modulus_agrees());
        assert!(rows[1].all_general);
        assert!(rows[1].odd_modulus_agrees() && rows[1].even_modulus_agrees());
        assert!(gcd_remark_audit(5, 0..=0, 1).is_err());
    }
}
