//! The catalog of singularity types of reducible sextics, with a representative
//! curve for each type and a verifier that classifies every representative.
//!
//! Entries live in `data/catalog.jsonl`, one JSON object per line:
//!
//! ```text
//! {"figureId": 15, "multiplicity": 2, "params": ["3/2"], "canonicalKey": "m2[3/2]",
//!  "recipe": {"factors": ["x^3 - y^2"], "note": "..."}}
//! ```
//!
//! `recipe.factors` are the factors carrying the singularity; a representative
//! multiplies them and pads with the lines `x + 1`, `x + 2`, ... up to degree
//! six. `note` is optional free text.

mod family;
mod verify;

pub use family::{
    caption_diagram, caption_keys, family_sweep, family_templates, sweep_instances, FactorShape, FamilyTemplate, SweepInstance,
    SweepReport, SweepRow,
};
pub use verify::{verify_catalog, Mismatch, NonSextic, VerifyReport};

use crate::arith::rational::{int, parse_rational, Rational};
use crate::curve::{parse_curve, CurvePoly};
use crate::diagram::{parse_key, SingularityDiagram};
use crate::Error;
use serde::Deserialize;
use std::collections::HashSet;
use std::path::Path;
use std::sync::OnceLock;

const BUILTIN: &str = include_str!("../../data/catalog.jsonl");

/// Per-multiplicity entry counts of the full catalog, for multiplicities 2 to 6.
pub const EXPECTED_TALLIES: [(u32, usize); 5] = [(2, 16), (3, 30), (4, 44), (5, 15), (6, 1)];
pub const EXPECTED_TOTAL: usize = 106;

#[derive(Clone, Debug)]
pub struct Recipe {
    pub factors: Vec<CurvePoly>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub figure_id: u32,
    pub multiplicity: u32,
    pub params: Vec<Rational>,
    pub diagram: SingularityDiagram,
    pub recipe: Recipe,
}

impl CatalogEntry {
    /// `"Fig 17 (2; 9/2)"`.
    pub fn label(&self) -> String {
        let p: Vec<String> = self.params.iter().map(|q| q.to_string()).collect();
        format!("Fig {} ({})", self.figure_id, p.join("; "))
    }

    /// Product of the recipe factors, without padding.
    pub fn local_model(&self) -> CurvePoly {
        CurvePoly::product(&self.recipe.factors)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecipe {
    factors: Vec<String>,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct RawEntry {
    figure_id: u32,
    multiplicity: u32,
    params: Vec<String>,
    canonical_key: String,
    recipe: RawRecipe,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| Catalog::from_jsonl(BUILTIN).expect("built-in catalog is valid"))
    }

    pub fn load(path: &Path) -> Result<Catalog, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Catalog::from_jsonl(&text)
    }

    /// Parses and validates the line format. Blank lines are skipped; any
    /// other defect is reported with its 1-based line number.
    pub fn from_jsonl(text: &str) -> Result<Catalog, Error> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Catalog(format!("line {}: {msg}", n + 1));
            let raw: RawEntry = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
            entries.push(entry_from_raw(raw).map_err(bad)?);
        }
        let mut keys = HashSet::new();
        for e in &entries {
            let k = e.diagram.canonical_key();
            if !keys.insert(k.clone()) {
                return Err(Error::Catalog(format!("duplicate canonical key {k} ({})", e.label())));
            }
        }
        entries.sort_by(|a, b| (a.figure_id, &a.params).cmp(&(b.figure_id, &b.params)));
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn figure(&self, figure_id: u32) -> Vec<&CatalogEntry> {
        self.entries.iter().filter(|e| e.figure_id == figure_id).collect()
    }

    pub fn lookup(&self, d: &SingularityDiagram) -> Option<&CatalogEntry> {
        let k = d.canonical_key();
        self.entries.iter().find(|e| e.diagram.canonical_key() == k)
    }
}

fn entry_from_raw(raw: RawEntry) -> Result<CatalogEntry, String> {
    if !(15..=32).contains(&raw.figure_id) {
        return Err(format!("figure id {} outside 15..=32", raw.figure_id));
    }
    let params = raw
        .params
        .iter()
        .map(|p| parse_rational(p).ok_or_else(|| format!("bad parameter {p:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if params.is_empty() || params.len() > 3 {
        return Err(format!("expected 1 to 3 parameters, got {}", params.len()));
    }
    let diagram = parse_key(&raw.canonical_key).map_err(|e| format!("canonical key: {e}"))?;
    if diagram.canonical_key() != raw.canonical_key {
        return Err(format!("key {} is not canonical (expected {})", raw.canonical_key, diagram.canonical_key()));
    }
    if diagram.multiplicity != raw.multiplicity {
        return Err(format!("multiplicity {} disagrees with key {}", raw.multiplicity, raw.canonical_key));
    }
    if raw.recipe.factors.is_empty() {
        return Err("recipe has no factors".into());
    }
    let factors = raw
        .recipe
        .factors
        .iter()
        .map(|s| match parse_curve(s) {
            Ok(f) if f.is_constant() => Err(format!("constant factor {s:?}")),
            Ok(f) => Ok(f),
            Err(e) => Err(format!("factor {s:?}: {e}")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CatalogEntry {
        figure_id: raw.figure_id,
        multiplicity: raw.multiplicity,
        params,
        diagram,
        recipe: Recipe { factors, note: raw.recipe.note },
    })
}

/// The built-in entries.
pub fn catalog_entries() -> &'static [CatalogEntry] {
    Catalog::builtin().entries()
}

pub fn lookup(d: &SingularityDiagram) -> Option<&'static CatalogEntry> {
    Catalog::builtin().lookup(d)
}

/// Recipe factors followed by the padding lines, as multiplied by
/// [`representative`].
pub fn representative_factors(e: &CatalogEntry) -> Result<Vec<CurvePoly>, Error> {
    let degree: u32 = e.recipe.factors.iter().map(|f| f.total_degree()).sum();
    if degree > 6 {
        return Err(Error::Construction(format!(
            "{}: recipe has degree {degree}, no sextic representative",
            e.label()
        )));
    }
    let mut factors = e.recipe.factors.clone();
    let mut k = 1;
    while factors.iter().map(|f| f.total_degree()).sum::<u32>() < 6 {
        let line = CurvePoly::x().add(&CurvePoly::constant(int(k)));
        k += 1;
        // a padding line must not repeat a factor
        if factors.iter().any(|f| f.normalized() == line) {
            continue;
        }
        factors.push(line);
    }
    if factors.len() < 2 {
        return Err(Error::Construction(format!("{}: a single factor is not a reducible sextic", e.label())));
    }
    Ok(factors)
}

/// A reducible sextic with the entry's singularity at the origin.
pub fn representative(e: &CatalogEntry) -> Result<CurvePoly, Error> {
    representative_factors(e).map(|fs| CurvePoly::product(&fs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn builtin_loads() {
        let c = Catalog::builtin();
        assert_eq!(c.entries().len(), EXPECTED_TOTAL);
        assert_eq!(c.figure(17).len(), 23);
        assert_eq!(c.figure(22).len(), 15);
        assert_eq!(c.figure(32).len(), 1);
    }

    #[test]
    fn padding() {
        let c = Catalog::builtin();
        let e = c.entries().iter().find(|e| e.figure_id == 15 && e.params == [rat(3, 2)]).unwrap();
        let fs = representative_factors(e).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(representative(e).unwrap(), parse_curve("(x^3-y^2)*(x+1)*(x+2)*(x+3)").unwrap());
        let e = c.entries().iter().find(|e| e.figure_id == 15 && e.params == [int(10)]).unwrap();
        assert!(matches!(representative(e), Err(Error::Construction(_))));
    }

    #[test]
    fn rejects_bad_lines() {
        let good = r#"{"figureId": 15, "multiplicity": 2, "params": ["2"], "canonicalKey": "m2(2:S,S)", "recipe": {"factors": ["y", "y - x^2"]}}"#;
        assert!(Catalog::from_jsonl(good).is_ok());
        let cases = [
            good.replace("\"m2(2:S,S)\"", "\"m3(2:S,S)\""),
            good.replace("\"multiplicity\": 2", "\"multiplicity\": 3"),
            good.replace("15", "14"),
            good.replace("\"y - x^2\"", "\"y - x^\""),
            good.replace("\"2\"]", "\"two\"]"),
            good.replace("recipe", "recipes"),
            format!("{good}\n{good}"),
        ];
        for bad in cases {
            assert!(matches!(Catalog::from_jsonl(&bad), Err(Error::Catalog(_))), "{bad}");
        }
        let err = Catalog::from_jsonl(&format!("\n{good}\n{{")).unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }
}
