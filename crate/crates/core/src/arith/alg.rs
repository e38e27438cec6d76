//! Algebraic numbers by dynamic evaluation.
//!
//! A [`Context`] is a tower `Q ⊂ Q[t1]/(s1) ⊂ Q[t1,t2]/(s1,s2) ⊂ …` where each
//! `s_k` is monic and squarefree in `t_k` over the levels below. The tower is a
//! product of fields rather than a field, so an element may vanish at some
//! roots and not at others. Zero tests that cannot be answered uniformly
//! report a [`Split`]: a factorisation of one defining polynomial into two
//! coprime monic factors. Callers either refine the context and retry
//! (see [`dynamic`]) or propagate the split to whoever introduced the level.

use super::rational::Rational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An element of some tower. `Ext { level: k, .. }` is a polynomial in `t_k`
/// whose coefficients live strictly below level `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Alg {
    Rat(Rational),
    Ext { level: usize, coeffs: Vec<Alg> },
}

/// A monic factorisation `s_level = left * right` discovered by a zero test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub level: usize,
    pub left: Vec<Alg>,
    pub right: Vec<Alg>,
}

impl Alg {
    pub fn zero() -> Self {
        Alg::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Alg::Rat(Rational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Alg::Rat(super::rational::int(n))
    }

    pub fn level(&self) -> usize {
        match self {
            Alg::Rat(_) => 0,
            Alg::Ext { level, .. } => *level,
        }
    }

    /// True only for the literal rational zero; a non-literal element may
    /// still vanish in its context.
    pub fn is_syntactic_zero(&self) -> bool {
        matches!(self, Alg::Rat(q) if q.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Alg::Rat(q) => Some(q),
            Alg::Ext { .. } => None,
        }
    }

    fn ext(level: usize, mut coeffs: Vec<Alg>) -> Alg {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Alg::is_syntactic_zero) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => Alg::zero(),
            1 => coeffs.pop().unwrap(),
            _ => Alg::Ext { level, coeffs },
        }
    }

    fn coeffs_at(&self, level: usize) -> Vec<Alg> {
        match self {
            Alg::Ext { level: l, coeffs } if *l == level => coeffs.clone(),
            other => vec![other.clone()],
        }
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
        match self {
            Alg::Rat(q) => {
                if nested && (q.is_negative() || !q.is_integer()) {
                    write!(f, "({q})")
                } else {
                    write!(f, "{q}")
                }
            }
            Alg::Ext { level, coeffs } => {
                if nested {
                    write!(f, "(")?;
                }
                let mut first = true;
                for (i, c) in coeffs.iter().enumerate().rev() {
                    if c.is_syntactic_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let unit = matches!(c, Alg::Rat(q) if q.is_one());
                    if i == 0 {
                        c.fmt_with(f, true)?;
                        continue;
                    }
                    if !unit {
                        c.fmt_with(f, true)?;
                        write!(f, "*")?;
                    }
                    if i == 1 {
                        write!(f, "t{level}")?;
                    } else {
                        write!(f, "t{level}^{i}")?;
                    }
                }
                if nested {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Alg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, false)
    }
}

impl From<Rational> for Alg {
    fn from(q: Rational) -> Self {
        Alg::Rat(q)
    }
}

impl Ord for Alg {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Alg::Rat(a), Alg::Rat(b)) => a.cmp(b),
            (Alg::Rat(_), Alg::Ext { .. }) => Ordering::Less,
            (Alg::Ext { .. }, Alg::Rat(_)) => Ordering::Greater,
            (Alg::Ext { level: la, coeffs: ca }, Alg::Ext { level: lb, coeffs: cb }) => {
                la.cmp(lb).then_with(|| poly_cmp(ca, cb))
            }
        }
    }
}

impl PartialOrd for Alg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the leading one down.
pub fn poly_cmp(a: &[Alg], b: &[Alg]) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

// ---------------------------------------------------------------------------
// Element arithmetic over a slice of defining polynomials.

pub(crate) fn add(a: &Alg, b: &Alg) -> Alg {
    match (a, b) {
        (Alg::Rat(x), Alg::Rat(y)) => Alg::Rat(x + y),
        _ => {
            let (la, lb) = (a.level(), b.level());
            if la > lb {
                let mut c = a.coeffs_at(la);
                c[0] = add(&c[0], b);
                Alg::ext(la, c)
            } else if lb > la {
                let mut c = b.coeffs_at(lb);
                c[0] = add(a, &c[0]);
                Alg::ext(lb, c)
            } else {
                let (ca, cb) = (a.coeffs_at(la), b.coeffs_at(lb));
                let n = ca.len().max(cb.len());
                let zero = Alg::zero();
                let c = (0..n)
                    .map(|i| add(ca.get(i).unwrap_or(&zero), cb.get(i).unwrap_or(&zero)))
                    .collect();
                Alg::ext(la, c)
            }
        }
    }
}

pub(crate) fn neg(a: &Alg) -> Alg {
    match a {
        Alg::Rat(q) => Alg::Rat(-q),
        Alg::Ext { level, coeffs } => Alg::Ext {
            level: *level,
            coeffs: coeffs.iter().map(neg).collect(),
        },
    }
}

pub(crate) fn sub(a: &Alg, b: &Alg) -> Alg {
    add(a, &neg(b))
}

pub(crate) fn scale(a: &Alg, q: &Rational) -> Alg {
    if q.is_zero() {
        return Alg::zero();
    }
    match a {
        Alg::Rat(x) => Alg::Rat(x * q),
        Alg::Ext { level, coeffs } => Alg::Ext {
            level: *level,
            coeffs: coeffs.iter().map(|c| scale(c, q)).collect(),
        },
    }
}

pub(crate) fn mul(lv: &[Vec<Alg>], a: &Alg, b: &Alg) -> Alg {
    match (a, b) {
        (Alg::Rat(x), Alg::Rat(y)) => Alg::Rat(x * y),
        (Alg::Rat(x), _) => scale(b, x),
        (_, Alg::Rat(y)) => scale(a, y),
        _ => {
            let (la, lb) = (a.level(), b.level());
            if la > lb {
                let c = a.coeffs_at(la).iter().map(|c| mul(lv, c, b)).collect();
                Alg::ext(la, c)
            } else if lb > la {
                let c = b.coeffs_at(lb).iter().map(|c| mul(lv, a, c)).collect();
                Alg::ext(lb, c)
            } else {
                let (ca, cb) = (a.coeffs_at(la), b.coeffs_at(lb));
                let mut c = vec![Alg::zero(); ca.len() + cb.len() - 1];
                for (i, x) in ca.iter().enumerate() {
                    if x.is_syntactic_zero() {
                        continue;
                    }
                    for (j, y) in cb.iter().enumerate() {
                        if y.is_syntactic_zero() {
                            continue;
                        }
                        c[i + j] = add(&c[i + j], &mul(lv, x, y));
                    }
                }
                reduce_top(lv, la, c)
            }
        }
    }
}

fn reduce_top(lv: &[Vec<Alg>], k: usize, mut c: Vec<Alg>) -> Alg {
    let s = &lv[k - 1];
    let d = s.len() - 1;
    while c.len() > d {
        let lead = c.pop().unwrap();
        if lead.is_syntactic_zero() {
            continue;
        }
        let n = c.len();
        for (i, si) in s.iter().take(d).enumerate() {
            let idx = n - d + i;
            c[idx] = sub(&c[idx], &mul(lv, &lead, si));
        }
    }
    Alg::ext(k, c)
}

/// Full normal form: every level reduced modulo its defining polynomial.
pub(crate) fn reduce(lv: &[Vec<Alg>], a: &Alg) -> Alg {
    match a {
        Alg::Rat(_) => a.clone(),
        Alg::Ext { level, coeffs } => {
            let c = coeffs.iter().map(|c| reduce(lv, c)).collect();
            reduce_top(lv, *level, c)
        }
    }
}

pub(crate) fn pow(lv: &[Vec<Alg>], a: &Alg, mut e: u64) -> Alg {
    let mut base = a.clone();
    let mut acc = Alg::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(lv, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(lv, &base, &base);
        }
    }
    acc
}

/// Decides whether `a` vanishes at every root tuple of `lv`.
pub(crate) fn is_zero(lv: &[Vec<Alg>], a: &Alg) -> Result<bool, Split> {
    let a = reduce(lv, a);
    match &a {
        Alg::Rat(q) => Ok(q.is_zero()),
        Alg::Ext { level, coeffs } => {
            let k = *level;
            let lower = &lv[..k - 1];
            let s = &lv[k - 1];
            let g = poly_gcd(lower, coeffs, s)?;
            let dg = g.len() - 1;
            if dg == 0 {
                Ok(false)
            } else if dg == s.len() - 1 {
                Ok(true)
            } else {
                let right = poly_exact_div(lower, s, &g);
                Err(Split { level: k, left: g, right })
            }
        }
    }
}

/// Inverse of an element that is nonzero at every root tuple. If the element
/// vanishes at some roots but not others, the offending level is split.
pub(crate) fn inv(lv: &[Vec<Alg>], a: &Alg) -> Result<Alg, Split> {
    let a = reduce(lv, a);
    match &a {
        Alg::Rat(q) => {
            assert!(!q.is_zero(), "inverse of zero");
            Ok(Alg::Rat(q.recip()))
        }
        Alg::Ext { level, coeffs } => {
            let k = *level;
            let lower = &lv[..k - 1];
            let s = &lv[k - 1];
            let (g, u) = ext_gcd(lower, coeffs, s)?;
            if g.len() == 1 {
                Ok(reduce_top(lv, k, u))
            } else {
                assert!(g.len() < s.len(), "inverse of an element that is identically zero");
                let right = poly_exact_div(lower, s, &g);
                Err(Split { level: k, left: g, right })
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials (coefficient vectors, low degree first) over `lv`.

pub(crate) fn poly_trim(p: &mut Vec<Alg>) {
    while p.last().is_some_and(Alg::is_syntactic_zero) {
        p.pop();
    }
}

/// Drops leading coefficients that vanish everywhere, so the result has a
/// leading coefficient that is nonzero at every root tuple.
pub(crate) fn poly_normalize(lv: &[Vec<Alg>], p: &[Alg]) -> Result<Vec<Alg>, Split> {
    let mut p = p.to_vec();
    while let Some(last) = p.last() {
        if is_zero(lv, last)? {
            p.pop();
        } else {
            break;
        }
    }
    Ok(p)
}

pub(crate) fn poly_add(a: &[Alg], b: &[Alg]) -> Vec<Alg> {
    let n = a.len().max(b.len());
    let zero = Alg::zero();
    let mut c: Vec<Alg> = (0..n)
        .map(|i| add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    poly_trim(&mut c);
    c
}

pub(crate) fn poly_sub(a: &[Alg], b: &[Alg]) -> Vec<Alg> {
    let nb: Vec<Alg> = b.iter().map(neg).collect();
    poly_add(a, &nb)
}

pub(crate) fn poly_mul(lv: &[Vec<Alg>], a: &[Alg], b: &[Alg]) -> Vec<Alg> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![Alg::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_syntactic_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] = add(&c[i + j], &mul(lv, x, y));
        }
    }
    poly_trim(&mut c);
    c
}

pub(crate) fn poly_scale(lv: &[Vec<Alg>], a: &[Alg], c: &Alg) -> Vec<Alg> {
    let mut r: Vec<Alg> = a.iter().map(|x| mul(lv, x, c)).collect();
    poly_trim(&mut r);
    r
}

pub(crate) fn poly_derivative(a: &[Alg]) -> Vec<Alg> {
    let mut r: Vec<Alg> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| scale(c, &super::rational::int(i as i64)))
        .collect();
    poly_trim(&mut r);
    r
}

/// Quotient of `a` by a monic `b`; the remainder is assumed to be zero.
pub(crate) fn poly_exact_div(lv: &[Vec<Alg>], a: &[Alg], b: &[Alg]) -> Vec<Alg> {
    let (q, _) = poly_divrem_monic(lv, a, b);
    q
}

pub(crate) fn poly_divrem_monic(lv: &[Vec<Alg>], a: &[Alg], b: &[Alg]) -> (Vec<Alg>, Vec<Alg>) {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    poly_trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Alg::zero(); r.len() - db];
    while r.len() > db {
        let lead = r.pop().unwrap();
        let shift = r.len() - db;
        for (i, bi) in b.iter().take(db).enumerate() {
            r[shift + i] = sub(&r[shift + i], &mul(lv, &lead, bi));
        }
        q[shift] = lead;
    }
    poly_trim(&mut q);
    poly_trim(&mut r);
    (q, r)
}

/// Division with remainder by `b`, whose leading coefficient must be
/// invertible everywhere.
pub(crate) fn poly_divrem(
    lv: &[Vec<Alg>],
    a: &[Alg],
    b: &[Alg],
) -> Result<(Vec<Alg>, Vec<Alg>), Split> {
    let b = poly_normalize(lv, b)?;
    assert!(!b.is_empty(), "polynomial division by zero");
    let lc_inv = inv(lv, b.last().unwrap())?;
    let db = b.len() - 1;
    let mut r = poly_normalize(lv, a)?;
    let mut q = vec![Alg::zero(); r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let lead = mul(lv, r.last().unwrap(), &lc_inv);
        r.pop();
        let shift = r.len() - db;
        for (i, bi) in b.iter().take(db).enumerate() {
            r[shift + i] = sub(&r[shift + i], &mul(lv, &lead, bi));
        }
        q[shift] = lead;
        r = poly_normalize(lv, &r)?;
    }
    poly_trim(&mut q);
    Ok((q, r))
}

pub(crate) fn poly_monic(lv: &[Vec<Alg>], p: &[Alg]) -> Result<Vec<Alg>, Split> {
    let p = poly_normalize(lv, p)?;
    match p.last() {
        None => Ok(p),
        Some(lc) => {
            let c = inv(lv, lc)?;
            let mut r: Vec<Alg> = p.iter().map(|x| mul(lv, x, &c)).collect();
            *r.last_mut().unwrap() = Alg::one();
            Ok(r)
        }
    }
}

/// Monic gcd; empty when both inputs vanish.
pub(crate) fn poly_gcd(lv: &[Vec<Alg>], a: &[Alg], b: &[Alg]) -> Result<Vec<Alg>, Split> {
    let mut a = poly_normalize(lv, a)?;
    let mut b = poly_normalize(lv, b)?;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let (_, r) = poly_divrem(lv, &a, &b)?;
        a = b;
        b = r;
    }
    poly_monic(lv, &a)
}

/// `(g, u)` with `g` the monic gcd of `a` and `m` and `u*a ≡ g (mod m)`.
fn ext_gcd(lv: &[Vec<Alg>], a: &[Alg], m: &[Alg]) -> Result<(Vec<Alg>, Vec<Alg>), Split> {
    let mut r0 = poly_normalize(lv, m)?;
    let mut r1 = poly_normalize(lv, a)?;
    let mut u0: Vec<Alg> = Vec::new();
    let mut u1: Vec<Alg> = vec![Alg::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(lv, &r0, &r1)?;
        let u2 = poly_sub(&u0, &poly_mul(lv, &q, &u1));
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u2);
    }
    let c = inv(lv, r0.last().unwrap())?;
    let mut g: Vec<Alg> = r0.iter().map(|x| mul(lv, x, &c)).collect();
    *g.last_mut().unwrap() = Alg::one();
    let u = poly_scale(lv, &u0, &c);
    Ok((g, u))
}

/// Square-free decomposition (Yun) of a monic polynomial: `(factor, multiplicity)`
/// pairs with monic, pairwise coprime, squarefree factors.
pub(crate) fn poly_squarefree(lv: &[Vec<Alg>], p: &[Alg]) -> Result<Vec<(Vec<Alg>, usize)>, Split> {
    let p = poly_monic(lv, p)?;
    let mut out = Vec::new();
    if p.len() <= 1 {
        return Ok(out);
    }
    let dp = poly_derivative(&p);
    let g = poly_gcd(lv, &p, &dp)?;
    let mut b = poly_exact_div(lv, &p, &g);
    let mut c = poly_exact_div_any(lv, &dp, &g)?;
    let mut d = poly_sub(&c, &poly_derivative(&b));
    let mut i = 1;
    loop {
        d = poly_normalize(lv, &d)?;
        let a = if d.is_empty() { b.clone() } else { poly_gcd(lv, &b, &d)? };
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        b = poly_exact_div(lv, &b, &a);
        if b.len() <= 1 {
            break;
        }
        c = poly_exact_div(lv, &d, &a);
        d = poly_sub(&c, &poly_derivative(&b));
        i += 1;
    }
    Ok(out)
}

/// Exact division by a divisor that need not be monic but is normalized.
fn poly_exact_div_any(lv: &[Vec<Alg>], a: &[Alg], b: &[Alg]) -> Result<Vec<Alg>, Split> {
    let (q, _) = poly_divrem(lv, a, b)?;
    Ok(q)
}

// ---------------------------------------------------------------------------

/// A tower of squarefree extensions of the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Context {
    levels: Vec<Vec<Alg>>,
}

impl Ord for Context {
    fn cmp(&self, other: &Self) -> Ordering {
        self.levels.len().cmp(&other.levels.len()).then_with(|| {
            for (a, b) in self.levels.iter().zip(&other.levels) {
                let o = poly_cmp(a, b);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Context {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Context {
    /// The rationals themselves.
    pub fn rational() -> Self {
        Context { levels: Vec::new() }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Vec<Alg>] {
        &self.levels
    }

    /// Defining polynomial of level `k` (1-based).
    pub fn defining(&self, k: usize) -> &[Alg] {
        &self.levels[k - 1]
    }

    /// Number of root tuples, i.e. embeddings the folded values stand for.
    pub fn conjugates(&self) -> usize {
        self.levels.iter().map(|l| l.len() - 1).product()
    }

    /// Adds a level without checking squarefreeness. The polynomial must be
    /// monic in the new variable.
    pub(crate) fn push(&self, poly: Vec<Alg>) -> Context {
        debug_assert!(poly.last().is_some_and(|c| *c == Alg::one()));
        let mut levels = self.levels.clone();
        levels.push(poly);
        Context { levels }
    }

    /// Adds a level after checking that `poly` is squarefree over every root
    /// tuple of `self`; the polynomial is made monic first.
    pub fn with_level(&self, poly: &[Alg]) -> Result<Context, crate::Error> {
        let pieces = dynamic(self, |c| {
            let m = poly_monic(&c.levels, poly)?;
            if m.len() < 2 {
                return Ok(None);
            }
            let g = poly_gcd(&c.levels, &m, &poly_derivative(&m))?;
            Ok(Some((m, g.len() == 1)))
        });
        if pieces.len() != 1 {
            return Err(crate::Error::Contract(
                "defining polynomial degenerates on part of the context".into(),
            ));
        }
        match &pieces[0].1 {
            Some((m, true)) => Ok(self.push(m.clone())),
            Some((_, false)) => Err(crate::Error::Contract(
                "defining polynomial is not squarefree".into(),
            )),
            None => Err(crate::Error::Contract(
                "defining polynomial must have positive degree".into(),
            )),
        }
    }

    /// The generator `t_k`, already reduced.
    pub fn generator(&self, k: usize) -> Alg {
        reduce(&self.levels, &Alg::Ext { level: k, coeffs: vec![Alg::zero(), Alg::one()] })
    }

    pub fn add(&self, a: &Alg, b: &Alg) -> Alg {
        add(a, b)
    }

    pub fn sub(&self, a: &Alg, b: &Alg) -> Alg {
        sub(a, b)
    }

    pub fn neg(&self, a: &Alg) -> Alg {
        neg(a)
    }

    pub fn mul(&self, a: &Alg, b: &Alg) -> Alg {
        mul(&self.levels, a, b)
    }

    pub fn pow(&self, a: &Alg, e: u64) -> Alg {
        pow(&self.levels, a, e)
    }

    pub fn reduce(&self, a: &Alg) -> Alg {
        reduce(&self.levels, a)
    }

    pub fn try_is_zero(&self, a: &Alg) -> Result<bool, Split> {
        is_zero(&self.levels, a)
    }

    pub fn try_inv(&self, a: &Alg) -> Result<Alg, Split> {
        inv(&self.levels, a)
    }

    /// Replaces the defining polynomial of `level` by one of its monic factors
    /// and re-reduces the levels above it.
    pub fn refine(&self, level: usize, factor: &[Alg]) -> Context {
        let mut levels = self.levels.clone();
        levels[level - 1] = factor.to_vec();
        for j in level..levels.len() {
            let reduced: Vec<Alg> = levels[j].iter().map(|c| reduce(&levels[..j], c)).collect();
            levels[j] = reduced;
        }
        Context { levels }
    }

    pub fn fmt_levels(&self) -> String {
        if self.levels.is_empty() {
            return "Q".to_string();
        }
        self.levels
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{} = 0", fmt_poly(p, &format!("t{}", i + 1))))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub fn fmt_poly(p: &[Alg], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_syntactic_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let unit = matches!(c, Alg::Rat(q) if q.is_one());
        let coeff = format!("{}", Paren(c));
        match i {
            0 => out.push_str(&coeff),
            1 if unit => out.push_str(var),
            1 => out.push_str(&format!("{coeff}*{var}")),
            _ if unit => out.push_str(&format!("{var}^{i}")),
            _ => out.push_str(&format!("{coeff}*{var}^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Paren<'a>(&'a Alg);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, true)
    }
}

/// Runs `f` on `ctx`, refining the context on every split until each piece
/// gives an answer. Pieces come back in ascending context order.
pub fn dynamic<T>(ctx: &Context, mut f: impl FnMut(&Context) -> Result<T, Split>) -> Vec<(Context, T)> {
    let mut work = vec![ctx.clone()];
    let mut out = Vec::new();
    while let Some(c) = work.pop() {
        match f(&c) {
            Ok(v) => out.push((c, v)),
            Err(s) => {
                work.push(c.refine(s.level, &s.right));
                work.push(c.refine(s.level, &s.left));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// A value together with the tower it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicValue {
    pub context: Context,
    pub value: Alg,
}

/// Outcome of a dynamic-evaluation zero test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroDecision {
    Zero,
    NonZero,
    /// Refined contexts (ascending order), each with a definite answer
    /// (`true` = zero there).
    Split(Vec<(Context, bool)>),
}

pub fn alg_zero_test(v: &AlgebraicValue) -> ZeroDecision {
    let pieces = dynamic(&v.context, |c| c.try_is_zero(&v.value));
    if pieces.len() == 1 {
        if pieces[0].1 {
            ZeroDecision::Zero
        } else {
            ZeroDecision::NonZero
        }
    } else {
        ZeroDecision::Split(pieces)
    }
}
