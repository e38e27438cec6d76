//! Rational Newton–Puiseux expansion tree with dynamic evaluation.
//!
//! A node carries the working polynomial `F(X, Y)` together with the frame
//! `x = γ X^R`, `y = S(X) + κ X^M Y`. Each polygon edge `q = p/r` and each
//! root `ξ` of its characteristic polynomial `ψ` yields a child through
//! `X -> ξ^v X^r`, `Y -> X^p (ξ^u + Y)` with `u r - v p = 1`. Conjugate roots
//! are kept together as one level of the algebraic tower; a split of that
//! level is caught by the node that introduced it, which then redoes the
//! pieces separately.

use super::bipoly::{implicit_root, BiPoly};
use crate::arith::alg::{self, Alg, Context, Split};
use crate::arith::factor::factor_q;
use crate::arith::rational::{bezout_pair, Rational};
use crate::Error;
use num_integer::Integer;
use std::collections::VecDeque;

pub(crate) enum Abort {
    Split(Split),
    Fail(Error),
}

impl From<Split> for Abort {
    fn from(s: Split) -> Self {
        Abort::Split(s)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub ram: u64,
    pub m: u64,
    pub gamma: Alg,
    pub kappa: Alg,
    /// Dense coefficients of `S(X)`.
    pub s: Vec<Alg>,
    pub char_exps: Vec<Rational>,
}

impl Frame {
    fn root() -> Self {
        Frame {
            ram: 1,
            m: 0,
            gamma: Alg::one(),
            kappa: Alg::one(),
            s: Vec::new(),
            char_exps: Vec::new(),
        }
    }

    fn advance(&self, ctx: &Context, p: u64, r: u64, (u, v): (u64, u64), xi: &Alg, alpha: &Rational) -> Frame {
        let lv = ctx.levels();
        let xv = alg::pow(lv, xi, v);
        let m2 = r * self.m + p;
        let mut s = vec![Alg::zero(); m2 as usize + 1];
        let mut xvk = Alg::one();
        for (k, c) in self.s.iter().enumerate() {
            if !c.is_syntactic_zero() {
                s[k * r as usize] = alg::mul(lv, c, &xvk);
            }
            xvk = alg::mul(lv, &xvk, &xv);
        }
        let kappa = alg::mul(lv, &self.kappa, &alg::pow(lv, &xv, self.m));
        let lead = alg::mul(lv, &kappa, &alg::pow(lv, xi, u));
        s[m2 as usize] = alg::add(&s[m2 as usize], &lead);
        let mut char_exps = self.char_exps.clone();
        if r > 1 {
            char_exps.push(alpha.clone());
        }
        Frame {
            ram: r * self.ram,
            m: m2,
            gamma: alg::mul(lv, &self.gamma, &alg::pow(lv, &xv, self.ram)),
            kappa,
            s,
            char_exps,
        }
    }
}

/// Factors of the input still passing through the current centre.
#[derive(Clone, Debug)]
pub(crate) enum Parts {
    Single(usize),
    Many(Vec<(usize, BiPoly)>),
}

#[derive(Clone, Debug)]
pub(crate) struct Leaf {
    pub ctx: Context,
    pub frame: Frame,
    pub tag: usize,
    /// Dense `y(t)` coefficients, `x = γ t^R`.
    pub series: Vec<Alg>,
    /// `true` when `series` is the whole (polynomial) branch.
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub(crate) struct Edge {
    /// Absolute exponent in `x` at which the children separate.
    pub alpha: Rational,
    /// `(number of conjugate copies, subtree)`.
    pub children: Vec<(usize, Node)>,
}

#[derive(Clone, Debug)]
pub(crate) enum Node {
    Leaf(Leaf),
    Inner { edges: Vec<Edge>, exact: Option<Leaf> },
}

pub(crate) struct Expander {
    pub cap: u64,
    /// Carry every non-exact series at least to this `x`-order.
    pub min_order: Option<Rational>,
}

impl Expander {
    pub fn run(&self, whole: BiPoly, parts: Parts) -> Result<Node, Error> {
        match self.node(&Context::rational(), whole, parts, Frame::root()) {
            Ok(n) => Ok(n),
            Err(Abort::Fail(e)) => Err(e),
            Err(Abort::Split(s)) => unreachable!("split escaped the tower root: level {}", s.level),
        }
    }

    fn node(&self, ctx: &Context, mut whole: BiPoly, parts: Parts, frame: Frame) -> Result<Node, Abort> {
        let sup = whole
            .clean(ctx)?
            .ok_or_else(|| Abort::Fail(Error::Contract("working polynomial lost y-regularity".into())))?;
        if sup.mu == 0 {
            return Err(Abort::Fail(Error::Contract("branch centre is off the curve".into())));
        }
        if sup.y_content >= 2 {
            return Err(Abort::Fail(Error::NonReduced));
        }
        if sup.mu == 1 {
            let tag = self.tag_at_origin(ctx, &parts, false)?;
            return Ok(Node::Leaf(self.leaf(ctx, &whole, frame, tag)?));
        }
        let exact = if sup.y_content == 1 {
            let tag = self.tag_at_origin(ctx, &parts, true)?;
            Some(self.exact_leaf(ctx, &frame, tag)?)
        } else {
            None
        };
        let mut edges = Vec::new();
        for (start, end) in hull(&sup.points, sup.mu, sup.y_content) {
            let di = (end.0 - start.0) as u64;
            let dj = (start.1 - end.1) as u64;
            let g = di.gcd(&dj);
            let (p, r) = (di / g, dj / g);
            let alpha = Rational::new(
                ((r * frame.m + p) as i64).into(),
                ((r * frame.ram) as i64).into(),
            );
            if r * frame.m + p > self.cap {
                return Err(Abort::Fail(Error::TruncationCap {
                    cap: self.cap,
                    detail: format!("branches still coincide up to x-order {alpha}"),
                }));
            }
            let h = (dj / r) as usize;
            let psi: Vec<Alg> = (0..=h)
                .map(|k| whole.coeff(end.0 - (p as u32) * k as u32, end.1 + (r as u32) * k as u32))
                .collect();
            let w = (r as u32) * end.0 + (p as u32) * end.1;
            let mut queue: VecDeque<Vec<Alg>> = self.root_factors(ctx, &psi)?.into();
            let mut children = Vec::new();
            while let Some(s) = queue.pop_front() {
                let deg = s.len() - 1;
                let (cctx, xi) = if deg == 1 {
                    (ctx.clone(), alg::neg(&s[0]))
                } else {
                    let c = ctx.push(s.clone());
                    let xi = c.generator(c.depth());
                    (c, xi)
                };
                let step = EdgeStep { p: p as u32, r: r as u32, w, xi, alpha: alpha.clone() };
                match self.child(&cctx, &whole, &parts, &frame, &step) {
                    Ok(n) => children.push((deg, n)),
                    Err(Abort::Split(sp)) if deg > 1 && sp.level == cctx.depth() => {
                        queue.push_front(sp.right);
                        queue.push_front(sp.left);
                    }
                    Err(e) => return Err(e),
                }
            }
            edges.push(Edge { alpha, children });
        }
        Ok(Node::Inner { edges, exact })
    }

    /// Monic squarefree factors of `ψ`; over the rationals they are
    /// irreducible.
    fn root_factors(&self, ctx: &Context, psi: &[Alg]) -> Result<Vec<Vec<Alg>>, Split> {
        let rational: Option<Vec<Rational>> = psi.iter().map(|c| c.as_rational().cloned()).collect();
        if let Some(q) = rational {
            let mut fs = factor_q(&q);
            fs.dedup();
            return Ok(fs.into_iter().map(|f| f.into_iter().map(Alg::Rat).collect()).collect());
        }
        let dec = alg::poly_squarefree(ctx.levels(), psi)?;
        Ok(dec.into_iter().map(|(f, _)| f).collect())
    }

    fn child(&self, ctx: &Context, whole: &BiPoly, parts: &Parts, frame: &Frame, e: &EdgeStep) -> Result<Node, Abort> {
        let uv = bezout_pair(e.p as u64, e.r as u64);
        let next = whole.step(ctx, e.p, e.r, uv, &e.xi, e.w);
        let parts = match parts {
            Parts::Single(t) => Parts::Single(*t),
            Parts::Many(list) => {
                let mut kept = Vec::new();
                for (tag, fk) in list {
                    let mut fk = fk.clone();
                    fk.clean(ctx)?;
                    let wk = fk
                        .terms
                        .keys()
                        .map(|&(i, j)| e.r * i + e.p * j)
                        .min()
                        .expect("factor is nonzero");
                    let stepped = fk.step(ctx, e.p, e.r, uv, &e.xi, wk);
                    if ctx.try_is_zero(&stepped.coeff(0, 0))? {
                        kept.push((*tag, stepped));
                    }
                }
                if kept.len() == 1 {
                    Parts::Single(kept[0].0)
                } else {
                    Parts::Many(kept)
                }
            }
        };
        let frame = frame.advance(ctx, e.p as u64, e.r as u64, uv, &e.xi, &e.alpha);
        self.node(ctx, next, parts, frame)
    }

    fn tag_at_origin(&self, ctx: &Context, parts: &Parts, exact: bool) -> Result<usize, Abort> {
        match parts {
            Parts::Single(t) => Ok(*t),
            Parts::Many(list) => {
                for (tag, fk) in list {
                    let mut fk = fk.clone();
                    let hit = match fk.clean(ctx)? {
                        Some(s) if exact => s.y_content >= 1,
                        Some(s) => s.mu >= 1,
                        None => false,
                    };
                    if hit {
                        return Ok(*tag);
                    }
                }
                Err(Abort::Fail(Error::Contract("branch matches no factor".into())))
            }
        }
    }

    fn leaf(&self, ctx: &Context, whole: &BiPoly, frame: Frame, tag: usize) -> Result<Leaf, Abort> {
        let mut kt = frame.m + frame.ram + 2;
        if let Some(n) = &self.min_order {
            let want = crate::arith::rational::ceil_to_u64(&(n * Rational::from_integer(frame.ram.into())));
            kt = kt.max(want.saturating_sub(1));
        }
        if kt > self.cap {
            return Err(Abort::Fail(Error::TruncationCap {
                cap: self.cap,
                detail: format!("branch needs t-order {kt}"),
            }));
        }
        let len = (kt - frame.m + 1) as usize;
        let rows = whole.rows(len);
        let phi = implicit_root(ctx, &rows, len)?;
        let lv = ctx.levels();
        let mut series = vec![Alg::zero(); kt as usize + 1];
        for (k, c) in frame.s.iter().enumerate() {
            series[k] = c.clone();
        }
        for (k, c) in phi.iter().enumerate() {
            let idx = frame.m as usize + k;
            if idx < series.len() && !c.is_syntactic_zero() {
                series[idx] = alg::add(&series[idx], &alg::mul(lv, &frame.kappa, c));
            }
        }
        let series = self.settle(ctx, series)?;
        Ok(Leaf { ctx: ctx.clone(), frame, tag, series, exact: false })
    }

    fn exact_leaf(&self, ctx: &Context, frame: &Frame, tag: usize) -> Result<Leaf, Abort> {
        let series = self.settle(ctx, frame.s.clone())?;
        Ok(Leaf { ctx: ctx.clone(), frame: frame.clone(), tag, series, exact: true })
    }

    /// Replaces coefficients that vanish by the literal zero, splitting where
    /// that is not uniform.
    fn settle(&self, ctx: &Context, series: Vec<Alg>) -> Result<Vec<Alg>, Split> {
        let mut out = Vec::with_capacity(series.len());
        for c in series {
            let c = ctx.reduce(&c);
            if ctx.try_is_zero(&c)? {
                out.push(Alg::zero());
            } else {
                out.push(c);
            }
        }
        Ok(out)
    }
}

struct EdgeStep {
    p: u32,
    r: u32,
    w: u32,
    xi: Alg,
    alpha: Rational,
}

/// Lower-left hull from `(0, mu)` down to row `floor`, as edge endpoint
/// pairs in order of increasing slope.
fn hull(points: &[(u32, u32)], mu: u32, floor: u32) -> Vec<((u32, u32), (u32, u32))> {
    let mut out = Vec::new();
    let mut v = (0u32, mu);
    while v.1 > floor {
        let mut best: Option<((u32, u32), Rational)> = None;
        for &p in points {
            if p.1 >= v.1 || p.1 < floor {
                continue;
            }
            let s = Rational::new((p.0 as i64 - v.0 as i64).into(), ((v.1 - p.1) as i64).into());
            let better = match &best {
                None => true,
                Some((bp, bs)) => s < *bs || (s == *bs && p.1 < bp.1),
            };
            if better {
                best = Some((p, s));
            }
        }
        let (next, _) = best.expect("hull reaches the floor row");
        out.push((v, next));
        v = next;
    }
    out
}

/// `Σ` over conjugate copies of the number of geometric leaves below `n`.
pub(crate) fn geometric_count(n: &Node) -> usize {
    match n {
        Node::Leaf(_) => 1,
        Node::Inner { edges, exact } => {
            let e: usize = edges
                .iter()
                .flat_map(|e| e.children.iter())
                .map(|(k, c)| k * geometric_count(c))
                .sum();
            e + usize::from(exact.is_some())
        }
    }
}

pub(crate) fn leaves(n: &Node) -> Vec<&Leaf> {
    let mut out = Vec::new();
    fn go<'a>(n: &'a Node, out: &mut Vec<&'a Leaf>) {
        match n {
            Node::Leaf(l) => out.push(l),
            Node::Inner { edges, exact } => {
                for e in edges {
                    for (_, c) in &e.children {
                        go(c, out);
                    }
                }
                if let Some(l) = exact {
                    out.push(l);
                }
            }
        }
    }
    go(n, &mut out);
    out
}

pub(crate) fn series_order(l: &Leaf) -> Option<u64> {
    (!l.exact).then(|| l.series.len() as u64 - 1)
}
