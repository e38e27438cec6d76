//! Output documents. Structured output is JSON with a `schemaVersion` field;
//! objects have sorted keys, so a fixed input gives identical bytes.

use clap::ValueEnum;
use serde_json::{json, Value};
use sextic_core::arith::Rational;
use sextic_core::catalog::{CatalogEntry, VerifyReport};
use sextic_core::classify::Classification;
use sextic_core::curve::{CurvePoly, NewtonPolygon, PlanePoint};
use sextic_core::puiseux::PuiseuxBranch;
use sextic_core::Error;
use std::fmt::Write;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

pub struct Doc {
    json: Value,
    human: String,
}

impl Doc {
    fn new(command: &str, mut body: Value, human: String) -> Doc {
        body["schemaVersion"] = json!(SCHEMA_VERSION);
        body["command"] = json!(command);
        Doc { json: body, human }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Human => print!("{}", self.human),
            Format::Structured => println!("{}", serde_json::to_string_pretty(&self.json).unwrap()),
        }
    }

    /// Errors go to stderr in human form and to stdout when structured.
    pub fn print_error(&self, format: Format) {
        match format {
            Format::Human => eprint!("{}", self.human),
            Format::Structured => println!("{}", serde_json::to_string_pretty(&self.json).unwrap()),
        }
    }
}

fn strs(qs: &[Rational]) -> Vec<String> {
    qs.iter().map(|q| q.to_string()).collect()
}

fn point(p: &PlanePoint) -> Value {
    json!({"x": p.x.to_string(), "y": p.y.to_string()})
}

fn entry_ref(e: &CatalogEntry) -> Value {
    json!({"figureId": e.figure_id, "params": strs(&e.params), "label": e.label()})
}

fn exps(b: &[Rational]) -> String {
    if b.is_empty() {
        "smooth".into()
    } else {
        format!("[{}]", strs(b).join(","))
    }
}

pub fn classification(f: &CurvePoly, c: &Classification, hit: Option<&CatalogEntry>) -> Doc {
    let branches: Vec<Value> = c
        .branches
        .branches
        .iter()
        .map(|b| {
            json!({
                "factor": b.factor,
                "ramification": b.ramification,
                "charExponents": strs(&b.char_exponents),
                "conjugates": b.conjugates(),
                "series": b.to_string(),
            })
        })
        .collect();
    let body = json!({
        "curve": f.to_string(),
        "point": point(&c.point),
        "shear": c.shear.to_string(),
        "key": c.diagram.canonical_key(),
        "multiplicity": c.diagram.multiplicity,
        "branchCount": c.diagram.branch_count(),
        "branches": branches,
        "catalog": hit.map(entry_ref),
    });
    let mut h = String::new();
    writeln!(h, "key           {}", c.diagram.canonical_key()).unwrap();
    writeln!(h, "multiplicity  {}", c.diagram.multiplicity).unwrap();
    writeln!(h, "branches      {}", c.diagram.branch_count()).unwrap();
    for b in &c.branches.branches {
        let copies = if b.conjugates() > 1 { format!(" x{}", b.conjugates()) } else { String::new() };
        writeln!(h, "  {}{copies}  {b}", exps(&b.char_exponents)).unwrap();
    }
    if c.shear != Rational::from_integer(0.into()) {
        writeln!(h, "coordinates   x -> x + {} y after moving the point to the origin", c.shear).unwrap();
    }
    match hit {
        Some(e) => writeln!(h, "catalog       {}", e.label()).unwrap(),
        None => writeln!(h, "catalog       not listed").unwrap(),
    }
    Doc::new("classify", body, h)
}

/// The branch with the terms at or beyond `order` dropped.
fn truncated(b: &PuiseuxBranch, order: Option<&Rational>) -> PuiseuxBranch {
    let mut b = b.clone();
    if let Some(n) = order {
        let before = b.terms.len();
        b.terms.retain(|(q, _)| q < n);
        let cut = b.terms.len() < before;
        b.order = match b.order.take() {
            Some(o) => Some(if &o > n { n.clone() } else { o }),
            None if cut => Some(n.clone()),
            None => None,
        };
    }
    b
}

pub fn expansion(c: &Classification, order: Option<&Rational>) -> Doc {
    let mut h = String::new();
    writeln!(h, "multiplicity  {}", c.diagram.multiplicity).unwrap();
    if c.shear != Rational::from_integer(0.into()) {
        writeln!(h, "coordinates   x -> x + {} y after moving the point to the origin", c.shear).unwrap();
    }
    let mut out = Vec::new();
    for (i, b) in c.branches.branches.iter().enumerate() {
        let t = truncated(b, order);
        writeln!(h, "branch {i}: e = {}, {}", b.ramification, exps(&b.char_exponents)).unwrap();
        writeln!(h, "  {t}").unwrap();
        out.push(json!({
            "factor": b.factor,
            "ramification": b.ramification,
            "charExponents": strs(&b.char_exponents),
            "conjugates": b.conjugates(),
            "field": b.context.fmt_levels(),
            "series": t.to_string(),
            "terms": t.terms.iter().map(|(q, a)| json!([q.to_string(), a.to_string()])).collect::<Vec<_>>(),
            "order": t.order.as_ref().map(|q| q.to_string()),
        }));
    }
    let body = json!({
        "point": point(&c.point),
        "shear": c.shear.to_string(),
        "multiplicity": c.diagram.multiplicity,
        "requestedOrder": order.map(|q| q.to_string()),
        "branches": out,
    });
    Doc::new("expand", body, h)
}

pub fn polygon(at: &PlanePoint, p: &NewtonPolygon) -> Doc {
    let mut h = String::new();
    if p.content != (0, 0) {
        writeln!(h, "monomial content  x^{} y^{}", p.content.0, p.content.1).unwrap();
    }
    let vs: Vec<String> = p.vertices.iter().map(|(i, j)| format!("({i},{j})")).collect();
    writeln!(h, "vertices  {}", vs.join(" ")).unwrap();
    let mut edges = Vec::new();
    for e in &p.edges {
        writeln!(
            h,
            "edge ({},{})-({},{})  exponent {}  edge polynomial {}",
            e.start.0,
            e.start.1,
            e.end.0,
            e.end.1,
            e.exponent,
            e.edge_poly.display("z")
        )
        .unwrap();
        edges.push(json!({
            "start": [e.start.0, e.start.1],
            "end": [e.end.0, e.end.1],
            "exponent": e.exponent.to_string(),
            "edgePolynomial": e.edge_poly.display("z"),
        }));
    }
    let body = json!({
        "point": point(at),
        "content": [p.content.0, p.content.1],
        "vertices": p.vertices.iter().map(|(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "edges": edges,
    });
    Doc::new("polygon", body, h)
}

pub fn verify(r: &VerifyReport) -> Doc {
    let mut h = String::new();
    writeln!(h, "entries checked  {}", r.entries).unwrap();
    writeln!(h, "distinct keys    {}", r.total).unwrap();
    let tallies: Vec<String> = r.by_mult.iter().map(|(m, n)| format!("m{m}: {n}")).collect();
    writeln!(h, "by multiplicity  {}", tallies.join(", ")).unwrap();
    for m in &r.mismatches {
        writeln!(h, "MISMATCH Fig {} ({}): expected {}, found {}", m.figure_id, m.params.join("; "), m.expected, m.found).unwrap();
    }
    for n in &r.non_sextic {
        writeln!(h, "NOT A SEXTIC Fig {} ({}): representative has degree {}", n.figure_id, n.params.join("; "), n.degree).unwrap();
        if let Some(note) = &n.note {
            writeln!(h, "  {note}").unwrap();
        }
    }
    writeln!(h, "{}", if r.success { "PASS" } else { "FAIL" }).unwrap();
    Doc::new("catalog-verify", json!({ "report": r }), h)
}

pub fn listing(entries: &[&CatalogEntry]) -> Doc {
    let mut h = String::new();
    let mut out = Vec::new();
    for e in entries {
        let factors: Vec<String> = e.recipe.factors.iter().map(|f| f.to_string()).collect();
        let degree: u32 = e.recipe.factors.iter().map(|f| f.total_degree()).sum();
        writeln!(h, "{:<22} m{}  {:<28} degree {}  {}", e.label(), e.multiplicity, e.diagram.canonical_key(), degree, factors.join(" | ")).unwrap();
        out.push(json!({
            "figureId": e.figure_id,
            "params": strs(&e.params),
            "multiplicity": e.multiplicity,
            "canonicalKey": e.diagram.canonical_key(),
            "recipe": {"factors": factors, "degree": degree, "note": e.recipe.note},
        }));
    }
    Doc::new("catalog-list", json!({ "count": entries.len(), "entries": out }), h)
}

pub fn error(command: &str, e: &Error) -> Doc {
    let (kind, position) = match e {
        Error::Parse { position, .. } => ("parse", Some(*position)),
        Error::SmoothPoint => ("smooth-point", None),
        Error::NotOnCurve => ("not-on-curve", None),
        Error::TruncationCap { .. } => ("truncation-cap", None),
        Error::NonReduced => ("non-reduced", None),
        Error::ZeroPolynomial => ("zero-polynomial", None),
        Error::Contract(_) => ("contract", None),
        Error::Construction(_) => ("construction", None),
        Error::Catalog(_) => ("catalog-data", None),
    };
    let body = json!({"error": {"kind": kind, "message": e.to_string(), "position": position}});
    Doc::new(command, body, format!("error: {e}\n"))
}
