//! Univariate polynomials over a [`Context`], plus a thin layer of dense
//! rational polynomials (`QPoly`) used by factorisation and resultants.

use super::alg::{self, dynamic, Alg, Context};
use super::rational::{int, Rational};
use num_traits::{One, Zero};
use std::fmt;

/// Dense polynomial, lowest degree first. The leading stored coefficient is
/// never the literal zero; it may still vanish at some root tuples of the
/// context, which the dynamic operations below take care of.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Alg>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Alg>) -> Self {
        alg::poly_trim(&mut coeffs);
        UniPoly { coeffs }
    }

    pub fn from_rationals(c: &[Rational]) -> Self {
        Self::from_coeffs(c.iter().cloned().map(Alg::Rat).collect())
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| Alg::Rat(int(x))).collect())
    }

    pub fn coeffs(&self) -> &[Alg] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Alg> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_rationals(&self) -> Option<QPoly> {
        self.coeffs.iter().map(|c| c.as_rational().cloned()).collect()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        UniPoly { coeffs: alg::poly_add(&self.coeffs, &other.coeffs) }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        UniPoly { coeffs: alg::poly_sub(&self.coeffs, &other.coeffs) }
    }

    pub fn mul(&self, ctx: &Context, other: &UniPoly) -> UniPoly {
        UniPoly { coeffs: alg::poly_mul(ctx.levels(), &self.coeffs, &other.coeffs) }
    }

    pub fn pow(&self, ctx: &Context, e: usize) -> UniPoly {
        let mut acc = UniPoly::from_ints(&[1]);
        for _ in 0..e {
            acc = acc.mul(ctx, self);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly { coeffs: alg::poly_derivative(&self.coeffs) }
    }

    /// Exact division by a monic divisor, returning `(quotient, remainder)`.
    pub fn divrem_monic(&self, ctx: &Context, d: &UniPoly) -> (UniPoly, UniPoly) {
        let (q, r) = alg::poly_divrem_monic(ctx.levels(), &self.coeffs, &d.coeffs);
        (UniPoly { coeffs: q }, UniPoly { coeffs: r })
    }

    pub fn display(&self, var: &str) -> String {
        alg::fmt_poly(&self.coeffs, var)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

/// Monic gcd of `u` and `v`, one answer per refined context.
pub fn poly_gcd(ctx: &Context, u: &UniPoly, v: &UniPoly) -> Vec<(Context, UniPoly)> {
    dynamic(ctx, |c| alg::poly_gcd(c.levels(), &u.coeffs, &v.coeffs))
        .into_iter()
        .map(|(c, g)| (c, UniPoly { coeffs: g }))
        .collect()
}

/// Squarefree decomposition, ordered by multiplicity, one answer per refined
/// context. The product of `factor^mult` equals the monic associate of `p`.
pub fn squarefree_decompose(ctx: &Context, p: &UniPoly) -> Vec<(Context, Vec<(UniPoly, usize)>)> {
    dynamic(ctx, |c| alg::poly_squarefree(c.levels(), &p.coeffs))
        .into_iter()
        .map(|(c, fs)| {
            let fs = fs.into_iter().map(|(f, m)| (UniPoly { coeffs: f }, m)).collect();
            (c, fs)
        })
        .collect()
}

/// [`poly_gcd`] over the rationals, where no split can occur.
pub fn poly_gcd_q(u: &UniPoly, v: &UniPoly) -> UniPoly {
    poly_gcd(&Context::rational(), u, v).pop().map(|(_, g)| g).unwrap_or_default()
}

/// [`squarefree_decompose`] over the rationals.
pub fn squarefree_decompose_q(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    squarefree_decompose(&Context::rational(), p).pop().map(|(_, f)| f).unwrap_or_default()
}

// ---------------------------------------------------------------------------
// Dense rational polynomials.

/// Rational polynomial, lowest degree first, no trailing zeros.
pub type QPoly = Vec<Rational>;

pub fn q_trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn q_from_ints(c: &[i64]) -> QPoly {
    let mut p: QPoly = c.iter().map(|&x| int(x)).collect();
    q_trim(&mut p);
    p
}

pub fn q_add(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    let mut r: QPoly = (0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect();
    q_trim(&mut r);
    r
}

pub fn q_sub(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    let mut r: QPoly = (0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect();
    q_trim(&mut r);
    r
}

pub fn q_mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    q_trim(&mut r);
    r
}

pub fn q_scale(a: &[Rational], c: &Rational) -> QPoly {
    let mut r: QPoly = a.iter().map(|x| x * c).collect();
    q_trim(&mut r);
    r
}

pub fn q_divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    q_trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lc = b.last().unwrap();
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db {
        let c = r.last().unwrap() / lc;
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        q_trim(&mut r);
    }
    q_trim(&mut q);
    (q, r)
}

pub fn q_monic(a: &[Rational]) -> QPoly {
    match a.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = lc.recip();
            q_scale(a, &inv)
        }
    }
}

pub fn q_gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    q_trim(&mut a);
    q_trim(&mut b);
    while !b.is_empty() {
        let (_, r) = q_divrem(&a, &b);
        a = std::mem::replace(&mut b, r);
    }
    q_monic(&a)
}

pub fn q_derivative(a: &[Rational]) -> QPoly {
    let mut r: QPoly = a.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect();
    q_trim(&mut r);
    r
}

pub fn q_eval(a: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Lowest index with a nonzero coefficient; `None` for the zero polynomial.
pub fn q_valuation(a: &[Rational]) -> Option<usize> {
    a.iter().position(|c| !c.is_zero())
}

pub fn q_is_one(a: &[Rational]) -> bool {
    a.len() == 1 && a[0].is_one()
}

pub fn q_display(a: &[Rational], var: &str) -> String {
    UniPoly::from_rationals(a).display(var)
}
