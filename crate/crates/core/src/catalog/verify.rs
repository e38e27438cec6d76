//! Classifies every catalog representative and tallies the outcome.

use super::{representative, Catalog, CatalogEntry, EXPECTED_TALLIES, EXPECTED_TOTAL};
use crate::classify::classify;
use crate::curve::PlanePoint;
use crate::puiseux::ExpandPolicy;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Mismatch {
    pub figure_id: u32,
    pub params: Vec<String>,
    pub expected: String,
    /// Canonical key found, or the error text.
    pub found: String,
}

/// An entry whose recipe exceeds degree six. Its local model is still
/// classified and counted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NonSextic {
    pub figure_id: u32,
    pub params: Vec<String>,
    pub degree: u32,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    /// Entries checked.
    pub entries: usize,
    /// Distinct canonical keys among the classifications.
    pub total: usize,
    pub by_mult: BTreeMap<u32, usize>,
    pub mismatches: Vec<Mismatch>,
    pub non_sextic: Vec<NonSextic>,
    /// Whether the run covered the whole catalog, so that the totals are
    /// compared with the expected ones.
    pub full: bool,
    pub success: bool,
}

struct Outcome {
    key: Result<(String, u32), String>,
    degree: u32,
    sextic: bool,
}

fn check(e: &CatalogEntry, policy: &ExpandPolicy) -> Outcome {
    let (poly, sextic) = match representative(e) {
        Ok(p) => (p, true),
        Err(_) => (e.local_model(), false),
    };
    let key = classify(&poly, &PlanePoint::origin(), policy)
        .map(|c| (c.diagram.canonical_key(), c.diagram.multiplicity))
        .map_err(|err| format!("error: {err}"));
    Outcome { key, degree: poly.total_degree(), sextic }
}

/// Classifies the representative of every entry, restricted to one figure
/// when `figure` is given, on `jobs` worker threads. The report does not
/// depend on `jobs`.
pub fn verify_catalog(catalog: &Catalog, figure: Option<u32>, policy: &ExpandPolicy, jobs: usize) -> VerifyReport {
    let entries: Vec<&CatalogEntry> = catalog
        .entries()
        .iter()
        .filter(|e| figure.is_none_or(|f| e.figure_id == f))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    let outcomes: Vec<Outcome> = pool.install(|| entries.par_iter().map(|e| check(e, policy)).collect());

    let mut keys = BTreeSet::new();
    let mut by_mult: BTreeMap<u32, usize> = BTreeMap::new();
    let mut mismatches = Vec::new();
    let mut non_sextic = Vec::new();
    for (e, o) in entries.iter().zip(&outcomes) {
        let params: Vec<String> = e.params.iter().map(|p| p.to_string()).collect();
        let expected = e.diagram.canonical_key();
        match &o.key {
            Ok((k, m)) => {
                if keys.insert(k.clone()) {
                    *by_mult.entry(*m).or_default() += 1;
                }
                if *k != expected {
                    mismatches.push(Mismatch { figure_id: e.figure_id, params: params.clone(), expected, found: k.clone() });
                }
            }
            Err(err) => {
                mismatches.push(Mismatch { figure_id: e.figure_id, params: params.clone(), expected, found: err.clone() })
            }
        }
        if !o.sextic {
            non_sextic.push(NonSextic { figure_id: e.figure_id, params, degree: o.degree, note: e.recipe.note.clone() });
        }
    }
    let full = figure.is_none();
    let totals_ok = !full
        || (keys.len() == EXPECTED_TOTAL
            && EXPECTED_TALLIES.iter().all(|(m, n)| by_mult.get(m) == Some(n))
            && by_mult.len() == EXPECTED_TALLIES.len());
    let success = totals_ok && keys.len() == entries.len() && mismatches.is_empty() && non_sextic.is_empty();
    VerifyReport { entries: entries.len(), total: keys.len(), by_mult, mismatches, non_sextic, full, success }
}
