//! Singularity diagrams: the contact tree of the branches at a point, with
//! characteristic exponents on the leaves.
//!
//! Canonical keys follow
//!
//! ```text
//! key   := "m" INT tree
//! tree  := "S" | "[" exps "]" | "(" RAT ":" tree ("," tree)+ ")"
//! exps  := RAT ("," RAT)*
//! RAT   := INT | INT "/" INT
//! ```
//!
//! `S` is a smooth branch, `[β1,…]` a singular branch with its characteristic
//! exponents, and `(q:…)` a set of branches pairwise meeting with contact
//! order `q` whose subsets separate later.

mod key;
mod render;

pub use key::parse_key;
pub use render::{render, RenderFormat};

use crate::arith::rational::{int, Rational};
use crate::puiseux::BranchSet;
use crate::Error;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DiagramTree {
    Leaf { char_exponents: Vec<Rational> },
    Node { contact: Rational, children: Vec<DiagramTree> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularityDiagram {
    pub multiplicity: u32,
    pub tree: DiagramTree,
}

impl DiagramTree {
    pub fn leaf(char_exponents: Vec<Rational>) -> Self {
        DiagramTree::Leaf { char_exponents }
    }

    pub fn smooth() -> Self {
        DiagramTree::leaf(Vec::new())
    }

    /// Node with children in canonical order.
    pub fn node(contact: Rational, mut children: Vec<DiagramTree>) -> Self {
        children.sort_by(canonical_cmp);
        DiagramTree::Node { contact, children }
    }

    /// Ramification of a leaf: the lcm of the denominators of its exponents.
    pub fn ramification(char_exponents: &[Rational]) -> u64 {
        char_exponents
            .iter()
            .fold(1u64, |acc, b| acc.lcm(&b.denom().to_u64().expect("small denominator")))
    }

    pub fn multiplicity(&self) -> u32 {
        match self {
            DiagramTree::Leaf { char_exponents } => Self::ramification(char_exponents) as u32,
            DiagramTree::Node { children, .. } => children.iter().map(|c| c.multiplicity()).sum(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            DiagramTree::Leaf { .. } => 1,
            DiagramTree::Node { children, .. } => children.iter().map(|c| c.leaf_count()).sum(),
        }
    }

    /// Smallest label in the subtree; a smooth leaf counts as 1.
    fn min_exponent(&self) -> Rational {
        match self {
            DiagramTree::Leaf { char_exponents } => char_exponents.first().cloned().unwrap_or_else(Rational::one),
            DiagramTree::Node { contact, children } => children
                .iter()
                .map(|c| c.min_exponent())
                .fold(contact.clone(), |a, b| a.min(b)),
        }
    }

    /// Re-sorts every child list; parsing and hand-built trees go through this.
    pub fn canonicalize(self) -> Self {
        match self {
            DiagramTree::Leaf { .. } => self,
            DiagramTree::Node { contact, children } => {
                DiagramTree::node(contact, children.into_iter().map(|c| c.canonicalize()).collect())
            }
        }
    }

    fn write_key(&self, out: &mut String) {
        match self {
            DiagramTree::Leaf { char_exponents } if char_exponents.is_empty() => out.push('S'),
            DiagramTree::Leaf { char_exponents } => {
                out.push('[');
                let parts: Vec<String> = char_exponents.iter().map(|b| b.to_string()).collect();
                out.push_str(&parts.join(","));
                out.push(']');
            }
            DiagramTree::Node { contact, children } => {
                out.push('(');
                out.push_str(&contact.to_string());
                out.push(':');
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    c.write_key(out);
                }
                out.push(')');
            }
        }
    }

    pub fn key(&self) -> String {
        let mut s = String::new();
        self.write_key(&mut s);
        s
    }

    fn check(&self, floor: Option<&Rational>) -> Result<(), Error> {
        match self {
            DiagramTree::Leaf { char_exponents } => {
                let e = Self::ramification(char_exponents);
                // increasing, non-integral, and each one strictly lowers the running gcd
                let mut g = e;
                let mut prev: Option<&Rational> = None;
                for b in char_exponents {
                    let k = (b * int(e as i64)).to_integer().to_u64();
                    let next = k.map(|k| g.gcd(&k));
                    if b.denom().is_one() || prev.is_some_and(|p| b <= p) || next.is_none_or(|n| n == g) {
                        return Err(Error::Contract(format!("bad characteristic exponents in {}", self.key())));
                    }
                    g = next.unwrap();
                    prev = Some(b);
                }
                Ok(())
            }
            DiagramTree::Node { contact, children } => {
                if children.len() < 2 {
                    return Err(Error::Contract("contact node with fewer than two children".into()));
                }
                if floor.is_some_and(|f| contact <= f) || contact <= &Rational::from_integer(0.into()) {
                    return Err(Error::Contract(format!("contact {contact} does not increase towards the leaves")));
                }
                children.iter().try_for_each(|c| c.check(Some(contact)))
            }
        }
    }
}

fn canonical_cmp(a: &DiagramTree, b: &DiagramTree) -> Ordering {
    a.min_exponent()
        .cmp(&b.min_exponent())
        .then(a.leaf_count().cmp(&b.leaf_count()))
        .then_with(|| a.key().cmp(&b.key()))
}

impl SingularityDiagram {
    /// Checks the structural invariants and canonicalizes child order.
    pub fn new(tree: DiagramTree) -> Result<Self, Error> {
        let tree = tree.canonicalize();
        tree.check(None)?;
        Ok(SingularityDiagram { multiplicity: tree.multiplicity(), tree })
    }

    pub fn canonical_key(&self) -> String {
        format!("m{}{}", self.multiplicity, self.tree.key())
    }

    /// Number of geometric branches.
    pub fn branch_count(&self) -> usize {
        self.tree.leaf_count()
    }
}

impl fmt::Display for SingularityDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_key())
    }
}

pub fn canonical_encode(d: &SingularityDiagram) -> String {
    d.canonical_key()
}

pub fn diagrams_equal(a: &SingularityDiagram, b: &SingularityDiagram) -> bool {
    a.canonical_key() == b.canonical_key()
}

/// The contact tree of `bs`. Fails when the contact matrix is not an
/// ultrametric.
pub fn build_diagram(bs: &BranchSet) -> Result<SingularityDiagram, Error> {
    let n = bs.geometric.len();
    if n == 0 {
        return Err(Error::Contract("no branches".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    let tree = split(bs, &all)?;
    let d = SingularityDiagram::new(tree)?;
    if d.multiplicity != bs.multiplicity {
        return Err(Error::Contract(format!(
            "leaf ramifications sum to {} but multiplicity is {}",
            d.multiplicity, bs.multiplicity
        )));
    }
    Ok(d)
}

fn split(bs: &BranchSet, idx: &[usize]) -> Result<DiagramTree, Error> {
    if let [i] = idx {
        let g = &bs.geometric[*i];
        if DiagramTree::ramification(&g.char_exponents) != g.ramification {
            return Err(Error::Contract("ramification disagrees with characteristic exponents".into()));
        }
        return Ok(DiagramTree::leaf(g.char_exponents.clone()));
    }
    let c = &bs.contact;
    let mut low: Option<Rational> = None;
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            if low.as_ref().is_none_or(|l| &c[i][j] < l) {
                low = Some(c[i][j].clone());
            }
        }
    }
    let low = low.unwrap();
    // classes of the relation "contact > low"
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &i in idx {
        match classes.iter_mut().find(|cl| c[cl[0]][i] > low) {
            Some(cl) => cl.push(i),
            None => classes.push(vec![i]),
        }
    }
    for (a, ca) in classes.iter().enumerate() {
        for &i in ca {
            for &j in ca {
                if i != j && c[i][j] <= low {
                    return Err(Error::Contract("contact matrix is not an ultrametric".into()));
                }
            }
            for cb in &classes[a + 1..] {
                for &j in cb {
                    if c[i][j] != low {
                        return Err(Error::Contract("contact matrix is not an ultrametric".into()));
                    }
                }
            }
        }
    }
    let children = classes.iter().map(|cl| split(bs, cl)).collect::<Result<Vec<_>, _>>()?;
    Ok(DiagramTree::node(low, children))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn s() -> DiagramTree {
        DiagramTree::smooth()
    }

    #[test]
    fn keys_of_simple_types() {
        let node = SingularityDiagram::new(DiagramTree::node(int(1), vec![s(), s()])).unwrap();
        assert_eq!(node.canonical_key(), "m2(1:S,S)");
        let cusp = SingularityDiagram::new(DiagramTree::leaf(vec![rat(3, 2)])).unwrap();
        assert_eq!(cusp.canonical_key(), "m2[3/2]");
        let mixed = SingularityDiagram::new(DiagramTree::node(rat(3, 2), vec![DiagramTree::leaf(vec![rat(3, 2)]), s()]))
            .unwrap();
        assert_eq!(mixed.canonical_key(), "m3(3/2:S,[3/2])");
        assert!(!diagrams_equal(&node, &cusp));
    }

    #[test]
    fn child_order_is_canonical() {
        let a = DiagramTree::node(int(1), vec![DiagramTree::node(int(2), vec![s(), s()]), s()]);
        let b = DiagramTree::node(int(1), vec![s(), DiagramTree::node(int(2), vec![s(), s()])]);
        assert_eq!(a, b);
        assert_eq!(a.key(), "(1:S,(2:S,S))");
    }

    #[test]
    fn invalid_trees_are_rejected() {
        assert!(SingularityDiagram::new(DiagramTree::node(int(2), vec![DiagramTree::node(int(1), vec![s(), s()]), s()]))
            .is_err());
        assert!(SingularityDiagram::new(DiagramTree::node(int(1), vec![s()])).is_err());
        assert!(SingularityDiagram::new(DiagramTree::leaf(vec![rat(3, 2), rat(5, 2)])).is_err());
        assert!(SingularityDiagram::new(DiagramTree::leaf(vec![int(2)])).is_err());
        assert!(SingularityDiagram::new(DiagramTree::leaf(vec![rat(3, 2), rat(7, 4)])).is_ok());
    }
}
