use super::expand::{self, Leaf, Node};
use crate::arith::alg::{self, dynamic, Alg, Context, Split};
use crate::arith::rational::{int, Rational};
use crate::curve::CurvePoly;
use crate::Error;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;

/// One branch up to conjugation: for every root tuple of `context` the
/// parametrisation `x = x_coeff * t^e`, `y = Σ c_k t^k` is a geometric branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxBranch {
    pub context: Context,
    pub ramification: u64,
    pub x_coeff: Alg,
    /// `(k / e, c_k)` for the nonzero `c_k`, by increasing exponent.
    pub terms: Vec<(Rational, Alg)>,
    /// Exponent (in `x`) below which every term is known; `None` when the
    /// series is a polynomial and complete.
    pub order: Option<Rational>,
    pub char_exponents: Vec<Rational>,
    /// Index of the input factor the branch lies on.
    pub factor: usize,
}

/// A single geometric branch of a [`BranchSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricBranch {
    /// Index into [`BranchSet::branches`].
    pub folded: usize,
    pub ramification: u64,
    pub char_exponents: Vec<Rational>,
    pub factor: usize,
}

/// All branches through the origin with their pairwise contact orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSet {
    pub multiplicity: u32,
    pub branches: Vec<PuiseuxBranch>,
    pub geometric: Vec<GeometricBranch>,
    /// Symmetric, indexed by geometric branch; the diagonal holds zero.
    pub contact: Vec<Vec<Rational>>,
}

impl PuiseuxBranch {
    /// Number of geometric branches this folded branch stands for.
    pub fn conjugates(&self) -> usize {
        self.context.conjugates()
    }

    pub fn is_smooth(&self) -> bool {
        self.ramification == 1
    }

    /// Dense `c_k` for `k` up to the largest stored term.
    pub fn dense(&self) -> Vec<Alg> {
        let e = self.ramification as i64;
        let top = self
            .terms
            .last()
            .map(|(q, _)| (q * int(e)).to_integer().to_usize().unwrap())
            .unwrap_or(0);
        let mut v = vec![Alg::zero(); top + 1];
        for (q, c) in &self.terms {
            v[(q * int(e)).to_integer().to_usize().unwrap()] = c.clone();
        }
        v
    }

    fn from_leaf(l: &Leaf) -> Self {
        let e = l.frame.ram;
        let terms = l
            .series
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_syntactic_zero())
            .map(|(k, c)| (Rational::new((k as i64).into(), (e as i64).into()), c.clone()))
            .collect();
        let order = expand::series_order(l).map(|k| Rational::new(((k + 1) as i64).into(), (e as i64).into()));
        PuiseuxBranch {
            context: l.ctx.clone(),
            ramification: e,
            x_coeff: l.ctx.reduce(&l.frame.gamma),
            terms,
            order,
            char_exponents: l.frame.char_exps.clone(),
            factor: l.tag,
        }
    }
}

impl fmt::Display for PuiseuxBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.ramification;
        let unit_x = self.x_coeff == Alg::one();
        let var = |q: &Rational| -> String {
            if unit_x {
                if q.is_one() {
                    "x".to_string()
                } else if q.is_integer() {
                    format!("x^{q}")
                } else {
                    format!("x^({q})")
                }
            } else {
                let k = (q * int(e as i64)).to_integer();
                if k.is_one() {
                    "t".to_string()
                } else {
                    format!("t^{k}")
                }
            }
        };
        if !unit_x {
            write!(f, "x = ")?;
            self.x_coeff.fmt_with(f, true)?;
            write!(f, "*t^{e}, ")?;
        }
        write!(f, "y = ")?;
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (n, (q, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if *c != Alg::one() {
                c.fmt_with(f, true)?;
                write!(f, "*")?;
            }
            write!(f, "{}", var(q))?;
        }
        match &self.order {
            Some(n) if unit_x && n.is_integer() => write!(f, " + O(x^{n})")?,
            Some(n) if unit_x => write!(f, " + O(x^({n}))")?,
            Some(n) => write!(f, " + O(t^{})", n * int(e as i64))?,
            None => {}
        }
        if self.context.depth() > 0 {
            write!(f, "  where {}", self.context.fmt_levels())?;
        }
        Ok(())
    }
}

enum Ct {
    Leaf(usize),
    Node(Rational, Vec<Ct>),
}

impl BranchSet {
    pub(crate) fn from_tree(root: &Node) -> BranchSet {
        let leaves = expand::leaves(root);
        let index: HashMap<*const Leaf, usize> =
            leaves.iter().enumerate().map(|(i, l)| (*l as *const Leaf, i)).collect();
        let branches: Vec<PuiseuxBranch> = leaves.iter().map(|l| PuiseuxBranch::from_leaf(l)).collect();
        let mut geometric = Vec::new();
        let ct = build(root, &index, &branches, &mut geometric);
        let n = geometric.len();
        debug_assert_eq!(n, expand::geometric_count(root));
        let mut contact = vec![vec![Rational::zero(); n]; n];
        fill(&ct, &mut contact);
        let multiplicity = geometric.iter().map(|g| g.ramification as u32).sum();
        BranchSet { multiplicity, branches, geometric, contact }
    }

    /// Largest contact between geometric copies of two folded branches.
    pub fn folded_contact(&self, a: usize, b: usize) -> Option<Rational> {
        let mut best: Option<Rational> = None;
        for (i, gi) in self.geometric.iter().enumerate() {
            for (j, gj) in self.geometric.iter().enumerate() {
                if i != j && gi.folded == a && gj.folded == b {
                    let c = &self.contact[i][j];
                    if best.as_ref().is_none_or(|b| c > b) {
                        best = Some(c.clone());
                    }
                }
            }
        }
        best
    }
}

fn build(n: &Node, index: &HashMap<*const Leaf, usize>, br: &[PuiseuxBranch], geo: &mut Vec<GeometricBranch>) -> Ct {
    let leaf = |l: &Leaf, geo: &mut Vec<GeometricBranch>| {
        let folded = index[&(l as *const Leaf)];
        geo.push(GeometricBranch {
            folded,
            ramification: br[folded].ramification,
            char_exponents: br[folded].char_exponents.clone(),
            factor: br[folded].factor,
        });
        Ct::Leaf(geo.len() - 1)
    };
    match n {
        Node::Leaf(l) => leaf(l, geo),
        Node::Inner { edges, exact } => {
            let mut rest = exact.as_ref().map(|l| leaf(l, geo));
            for e in edges.iter().rev() {
                let mut items = Vec::new();
                for (k, c) in &e.children {
                    for _ in 0..*k {
                        items.push(build(c, index, br, geo));
                    }
                }
                if let Some(r) = rest.take() {
                    items.push(r);
                }
                rest = Some(if items.len() == 1 { items.pop().unwrap() } else { Ct::Node(e.alpha.clone(), items) });
            }
            rest.expect("inner node has at least one branch")
        }
    }
}

fn fill(ct: &Ct, m: &mut [Vec<Rational>]) -> Vec<usize> {
    match ct {
        Ct::Leaf(i) => vec![*i],
        Ct::Node(c, kids) => {
            let sets: Vec<Vec<usize>> = kids.iter().map(|k| fill(k, m)).collect();
            for (a, sa) in sets.iter().enumerate() {
                for sb in &sets[a + 1..] {
                    for &i in sa {
                        for &j in sb {
                            m[i][j] = c.clone();
                            m[j][i] = c.clone();
                        }
                    }
                }
            }
            sets.concat()
        }
    }
}

/// Result of substituting a branch into a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchCheck {
    Pass,
    /// Smallest `t`-order with a nonvanishing coefficient.
    Fail { t_order: u64 },
}

/// Substitutes the branch into `f` and checks that every term of `t`-order
/// below `e * n` vanishes, for every root tuple of the branch context.
pub fn verify_branch(f: &CurvePoly, b: &PuiseuxBranch, n: &Rational) -> BranchCheck {
    let e = b.ramification;
    let limit = (n * int(e as i64)).ceil().to_integer().to_usize().unwrap_or(0);
    if limit == 0 {
        return BranchCheck::Pass;
    }
    let ctx = &b.context;
    let mut y = b.dense();
    y.resize(limit.max(y.len()), Alg::zero());
    y.truncate(limit);
    let mut ypows: Vec<Vec<Alg>> = vec![unit_series(limit)];
    let mut total = vec![Alg::zero(); limit];
    let max_j = f.degree_y() as usize;
    for _ in 0..max_j {
        let next = super::bipoly::ser_mul(ctx, ypows.last().unwrap(), &y, limit);
        ypows.push(next);
    }
    for (&(i, j), c) in f.terms() {
        let shift = e as usize * i as usize;
        if shift >= limit {
            continue;
        }
        let coeff = ctx.mul(&ctx.pow(&b.x_coeff, i as u64), &Alg::Rat(c.clone()));
        for (k, yk) in ypows[j as usize].iter().enumerate().take(limit - shift) {
            if !yk.is_syntactic_zero() {
                total[k + shift] = alg::add(&total[k + shift], &ctx.mul(&coeff, yk));
            }
        }
    }
    for (k, v) in total.iter().enumerate() {
        let pieces = dynamic(ctx, |c| c.try_is_zero(v));
        if pieces.iter().any(|(_, z)| !z) {
            return BranchCheck::Fail { t_order: k as u64 };
        }
    }
    BranchCheck::Pass
}

fn unit_series(len: usize) -> Vec<Alg> {
    let mut v = vec![Alg::zero(); len];
    v[0] = Alg::one();
    v
}

fn shift_levels(a: &Alg, off: usize) -> Alg {
    match a {
        Alg::Rat(_) => a.clone(),
        Alg::Ext { level, coeffs } => Alg::Ext {
            level: level + off,
            coeffs: coeffs.iter().map(|c| shift_levels(c, off)).collect(),
        },
    }
}

/// Appends the levels of `b.context` to `base` and, when needed, a level `g`
/// with `g^e = 1 / x_coeff`. Returns the context, the shifted `c_k`, and `g`.
fn embed(base: &Context, b: &PuiseuxBranch) -> (Context, Vec<Alg>, Alg) {
    let off = base.depth();
    let mut ctx = base.clone();
    for lvl in b.context.levels() {
        ctx = ctx.push(lvl.iter().map(|c| shift_levels(c, off)).collect());
    }
    let coeffs: Vec<Alg> = b.dense().iter().map(|c| shift_levels(c, off)).collect();
    let gamma = shift_levels(&b.x_coeff, off);
    if gamma == Alg::one() && b.ramification == 1 {
        return (ctx, coeffs, Alg::one());
    }
    let ginv = ctx.try_inv(&gamma).expect("x coefficient is a unit");
    if b.ramification == 1 {
        return (ctx, coeffs, ginv);
    }
    let mut poly = vec![Alg::zero(); b.ramification as usize + 1];
    poly[0] = alg::neg(&ginv);
    poly[b.ramification as usize] = Alg::one();
    let ctx = ctx.push(poly);
    let g = ctx.generator(ctx.depth());
    (ctx, coeffs, g)
}

/// Largest `q` such that some geometric copies of `b1` and `b2` agree on all
/// terms of exponent below `q`. Fails when the stored series are too short
/// to see the two apart.
pub fn contact_order(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<Rational, Error> {
    let (ctx1, c1, g1) = embed(&Context::rational(), b1);
    let (ctx, c2, g2) = embed(&ctx1, b2);
    let (e1, e2) = (b1.ramification, b2.ramification);
    let l = e1.lcm(&e2);
    let known = |b: &PuiseuxBranch| -> Option<u64> {
        b.order.as_ref().map(|n| (n * int(l as i64)).ceil().to_integer().to_u64().unwrap())
    };
    let limit = match (known(b1), known(b2)) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => (c1.len() as u64 * (l / e1)).max(c2.len() as u64 * (l / e2)) + 1,
    };
    let term = |c: &Context, coeffs: &[Alg], g: &Alg, e: u64, n: u64| -> Alg {
        let step = l / e;
        if !n.is_multiple_of(step) {
            return Alg::zero();
        }
        let k = (n / step) as usize;
        match coeffs.get(k) {
            Some(ck) if !ck.is_syntactic_zero() => c.mul(ck, &c.pow(g, k as u64)),
            _ => Alg::zero(),
        }
    };
    let pieces = dynamic(&ctx, |c| -> Result<Option<u64>, Split> {
        for n in 0..limit {
            let d = alg::sub(&term(c, &c1, &g1, e1, n), &term(c, &c2, &g2, e2, n));
            if !c.try_is_zero(&d)? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    });
    let mut best: Option<u64> = None;
    for (_, r) in pieces {
        match r {
            Some(n) => best = Some(best.map_or(n, |b| b.max(n))),
            None => {
                return Err(if b1.order.is_none() && b2.order.is_none() {
                    Error::Contract("branches coincide".into())
                } else {
                    Error::TruncationCap {
                        cap: limit,
                        detail: "series too short to separate the two branches".into(),
                    }
                })
            }
        }
    }
    let n = best.expect("at least one context piece");
    Ok(Rational::new((n as i64).into(), (l as i64).into()))
}
