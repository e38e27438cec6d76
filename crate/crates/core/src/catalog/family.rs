//! Two-factor curve templates with coefficient slots, and the sweeps that
//! instantiate them and compare the resulting types with the expected sets.

use crate::arith::rational::{int, parse_rational, Rational};
use crate::classify::classify;
use crate::curve::{parse_curve, CurvePoly, PlanePoint};
use crate::diagram::{DiagramTree, SingularityDiagram};
use crate::puiseux::ExpandPolicy;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

const SWEEPS: &str = include_str!("../../data/sweeps.jsonl");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactorShape {
    pub degree: u32,
    /// Branches through the origin.
    pub branches: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyTemplate {
    pub id: u32,
    /// One polynomial per factor; single letters other than `x`, `y` are
    /// coefficient slots.
    pub factors: Vec<&'static str>,
    pub factor_shapes: Vec<FactorShape>,
    pub slots: Vec<char>,
    pub description: &'static str,
    /// Figures whose captions list the parameters of this family.
    pub figures: Vec<u32>,
}

const CONIC: &str = "y + a*x^2 + b*x*y + c*y^2";
const CUBIC: &str = "y + a*x^2 + b*x*y + c*y^2 + d*x^3 + e*x^2*y + f*x*y^2 + g*y^3";

fn shape(degree: u32, branches: u32) -> FactorShape {
    FactorShape { degree, branches }
}

fn template(id: u32, factors: Vec<&'static str>, shapes: Vec<FactorShape>, description: &'static str, figures: Vec<u32>) -> FamilyTemplate {
    let mut slots: Vec<char> = factors
        .iter()
        .flat_map(|f| f.chars())
        .filter(|c| c.is_ascii_lowercase() && *c != 'x' && *c != 'y')
        .collect();
    slots.sort_unstable();
    slots.dedup();
    FamilyTemplate { id, factors, factor_shapes: shapes, slots, description, figures }
}

/// The nine templates, in order.
pub fn family_templates() -> Vec<FamilyTemplate> {
    vec![
        template(
            1,
            vec![CONIC, "y^2 + d*x*y + e*x^3 + f*x^2*y + g*x*y^2 + h*y^3 + j*x^4 + k*x^3*y + l*x^2*y^2 + m*x*y^3 + n*y^4"],
            vec![shape(2, 1), shape(4, 2)],
            "smooth conic and nodal quartic; the conic is tangent to one of the two quartic branches",
            vec![1],
        ),
        template(
            2,
            vec![CONIC, "y^2 + e*x^3 + f*x^2*y + g*x*y^2 + h*y^3 + j*x^4 + k*x^3*y + l*x^2*y^2 + m*x*y^3 + n*y^4"],
            vec![shape(2, 1), shape(4, 2)],
            "smooth conic and a quartic whose double point has a single tangent, shared with the conic",
            vec![2, 3],
        ),
        template(
            3,
            vec![CONIC, "y^3 + d*x^2*y + e*x*y^2 + f*x^4 + g*x^3*y + h*x^2*y^2 + k*x*y^3 + l*y^4"],
            vec![shape(2, 1), shape(4, 3)],
            "smooth conic and a quartic with a triple point; the conic is tangent to one quartic branch",
            vec![4, 5],
        ),
        template(
            4,
            vec![CONIC, "y + d*x^2 + e*x*y + f*y^2 + g*x^3 + h*x^2*y + j*x*y^2 + k*y^3 + l*x^4 + m*x^3*y + n*x^2*y^2 + p*x*y^3 + q*y^4"],
            vec![shape(2, 1), shape(4, 1)],
            "smooth conic and quartic, both smooth at the point and tangent there",
            vec![6],
        ),
        template(
            5,
            vec![CONIC, "y^2 + d*x^2*y + e*x^4 + f*x*y^2 + g*y^3 + h*x^3*y + j*x^2*y^2 + k*x*y^3 + l*y^4"],
            vec![shape(2, 1), shape(4, 2)],
            "smooth conic and a quartic with a tacnode-like double point, all branches on one tangent",
            vec![7, 8],
        ),
        template(
            6,
            vec![CUBIC, "y + h*x^2 + j*x*y + k*y^2 + l*x^3 + m*x^2*y + n*x*y^2 + p*y^3"],
            vec![shape(3, 1), shape(3, 1)],
            "two cubics smooth at the point with a common tangent",
            vec![9],
        ),
        template(
            7,
            vec![CUBIC, "y^2 + h*x*y + j*x^3 + k*x^2*y + l*x*y^2 + m*y^3"],
            vec![shape(3, 1), shape(3, 2)],
            "cubic smooth at the point and a nodal cubic, one nodal branch tangent to the smooth cubic",
            vec![10],
        ),
        template(
            8,
            vec![
                "y^2 + a*x*y + b*x^3 + c*x^2*y + d*x*y^2 + e*y^3",
                "y^2 + f*x*y + g*x^3 + h*x^2*y + j*x*y^2 + k*y^3",
            ],
            vec![shape(3, 2), shape(3, 2)],
            "two nodal cubics sharing one or both nodal tangents",
            vec![11, 12, 13],
        ),
        template(
            9,
            vec!["y^2 + b*x^3 + c*x^2*y + d*x*y^2 + e*y^3", "y^2 + g*x^3 + h*x^2*y + j*x*y^2 + k*y^3"],
            vec![shape(3, 2), shape(3, 2)],
            "two cubics singular at the point with the same double tangent",
            vec![14],
        ),
    ]
}

impl FamilyTemplate {
    /// Substitutes every slot and parses the factors. All slots must be
    /// given; unknown slot names are rejected.
    pub fn instantiate(&self, values: &BTreeMap<char, Rational>) -> Result<Vec<CurvePoly>, Error> {
        for c in values.keys() {
            if !self.slots.contains(c) {
                return Err(Error::Contract(format!("family {} has no slot {c}", self.id)));
            }
        }
        self.factors
            .iter()
            .map(|f| {
                let mut text = String::new();
                for ch in f.chars() {
                    if self.slots.contains(&ch) {
                        let v = values
                            .get(&ch)
                            .ok_or_else(|| Error::Contract(format!("family {}: slot {ch} missing", self.id)))?;
                        text.push_str(&format!("({v})"));
                    } else {
                        text.push(ch);
                    }
                }
                parse_curve(&text)
            })
            .collect()
    }
}

/// Caption parameter lists, per (family, figure).
const CAPTIONS: &[(u32, u32, &[&[i64]])] = &[
    (1, 1, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6], &[1, 7]]),
    (6, 9, &[&[2], &[3], &[4], &[5], &[6], &[7], &[8], &[9]]),
    (8, 11, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6]]),
    (8, 12, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4]]),
    (8, 13, &[&[1, 2], &[1, 3]]),
];

fn pair(c: Rational) -> DiagramTree {
    DiagramTree::node(c, vec![DiagramTree::smooth(), DiagramTree::smooth()])
}

/// The diagram a caption parameter tuple stands for, for the families whose
/// captions are covered by [`caption_keys`].
pub fn caption_diagram(family: u32, figure: u32, params: &[Rational]) -> Option<SingularityDiagram> {
    let s = DiagramTree::smooth;
    let tree = match (family, figure, params) {
        (1, 1, [a, b]) => DiagramTree::node(a.clone(), vec![s(), pair(b.clone())]),
        (6, 9, [a]) => pair(a.clone()),
        (8, 11, [a, b]) => DiagramTree::node(a.clone(), vec![s(), s(), pair(b.clone())]),
        (8, 12, [a, b, c]) => DiagramTree::node(a.clone(), vec![pair(b.clone()), pair(c.clone())]),
        (8, 13, [a, b]) => DiagramTree::node(a.clone(), vec![pair(b.clone()), pair(b.clone())]),
        _ => return None,
    };
    SingularityDiagram::new(tree).ok()
}

/// Expected canonical keys for a family, or `None` when the family has no
/// encoded caption set.
pub fn caption_keys(family: u32) -> Option<BTreeSet<String>> {
    let mut out = BTreeSet::new();
    for (fam, fig, rows) in CAPTIONS {
        if *fam != family {
            continue;
        }
        for row in *rows {
            let params: Vec<Rational> = row.iter().map(|&v| int(v)).collect();
            out.insert(caption_diagram(*fam, *fig, &params)?.canonical_key());
        }
    }
    (!out.is_empty()).then_some(out)
}

#[derive(Clone, Debug)]
pub struct SweepInstance {
    pub family: u32,
    pub figure_id: u32,
    pub params: Vec<Rational>,
    pub slots: BTreeMap<char, Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct RawSweep {
    family: u32,
    figure_id: u32,
    params: Vec<String>,
    slots: BTreeMap<char, String>,
}

/// Built-in slot assignments, in file order.
pub fn sweep_instances() -> Vec<SweepInstance> {
    SWEEPS
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let raw: RawSweep = serde_json::from_str(l).expect("built-in sweep data is valid");
            let q = |s: &String| parse_rational(s).expect("built-in sweep data is valid");
            SweepInstance {
                family: raw.family,
                figure_id: raw.figure_id,
                params: raw.params.iter().map(q).collect(),
                slots: raw.slots.iter().map(|(k, v)| (*k, q(v))).collect(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepRow {
    pub figure_id: u32,
    pub params: Vec<String>,
    pub expected: String,
    /// Canonical key, or the error text.
    pub found: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub family: u32,
    pub expected: BTreeSet<String>,
    pub found: BTreeSet<String>,
    pub rows: Vec<SweepRow>,
    pub success: bool,
}

/// Instantiates every built-in sweep instance of `family`, classifies the
/// product at the origin and compares with the caption set. `None` when the
/// family has no caption set.
pub fn family_sweep(family: u32, policy: &ExpandPolicy) -> Option<SweepReport> {
    let expected = caption_keys(family)?;
    let template = family_templates().into_iter().find(|t| t.id == family)?;
    let mut rows = Vec::new();
    let mut found = BTreeSet::new();
    for inst in sweep_instances().into_iter().filter(|i| i.family == family) {
        let want = caption_diagram(family, inst.figure_id, &inst.params)
            .map(|d| d.canonical_key())
            .unwrap_or_else(|| "no caption".into());
        let got = template
            .instantiate(&inst.slots)
            .and_then(|fs| classify(&CurvePoly::product(&fs), &PlanePoint::origin(), policy));
        let got = match got {
            Ok(c) => {
                let k = c.diagram.canonical_key();
                found.insert(k.clone());
                k
            }
            Err(e) => format!("error: {e}"),
        };
        rows.push(SweepRow {
            figure_id: inst.figure_id,
            params: inst.params.iter().map(|p| p.to_string()).collect(),
            expected: want,
            found: got,
        });
    }
    let success = found == expected && rows.iter().all(|r| r.expected == r.found);
    Some(SweepReport { family, expected, found, rows, success })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn templates_are_reducible_sextics() {
        let ts = family_templates();
        assert_eq!(ts.len(), 9);
        for t in &ts {
            assert!(t.factors.len() >= 2);
            let d: u32 = t.factor_shapes.iter().map(|s| s.degree).sum();
            assert!(d <= 6);
            let zero: BTreeMap<char, Rational> = t.slots.iter().map(|&c| (c, int(0))).collect();
            let fs = t.instantiate(&zero).unwrap();
            assert_eq!(fs.len(), t.factor_shapes.len());
        }
        assert_eq!(ts[0].slots.iter().collect::<String>(), "abcdefghjklmn");
        assert_eq!(ts[3].slots.len(), 15);
    }

    #[test]
    fn instantiate_checks_slots() {
        let t = &family_templates()[5];
        let mut v: BTreeMap<char, Rational> = t.slots.iter().map(|&c| (c, int(0))).collect();
        v.insert('a', int(1));
        v.insert('d', int(1));
        v.insert('h', int(2));
        v.insert('l', int(1));
        let fs = t.instantiate(&v).unwrap();
        assert_eq!(CurvePoly::product(&fs), parse_curve("(y+x^2+x^3)*(y+2*x^2+x^3)").unwrap());
        v.remove(&'p');
        assert!(t.instantiate(&v).is_err());
        v.insert('p', int(0));
        v.insert('z', int(0));
        assert!(t.instantiate(&v).is_err());
    }

    #[test]
    fn caption_sets() {
        assert_eq!(caption_keys(1).unwrap().len(), 6);
        assert!(caption_keys(1).unwrap().contains("m3(1:S,(7:S,S))"));
        assert_eq!(caption_keys(6).unwrap().len(), 8);
        assert_eq!(caption_keys(8).unwrap().len(), 11);
        assert!(caption_keys(2).is_none());
    }
}
