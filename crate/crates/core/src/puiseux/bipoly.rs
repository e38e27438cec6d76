//! Bivariate polynomials over a [`Context`] and truncated power series.

use crate::arith::alg::{add, mul, pow, scale, Alg, Context, Split};
use crate::arith::rational::int;
use crate::curve::CurvePoly;
use std::collections::BTreeMap;

/// `Σ a_ij X^i Y^j`; coefficients may vanish semantically without being the
/// literal zero.
#[derive(Clone, Debug, Default)]
pub(crate) struct BiPoly {
    pub terms: BTreeMap<(u32, u32), Alg>,
}

/// What the zero tests established about a working polynomial.
pub(crate) struct Support {
    /// Order in `Y` of `F(0, Y)`.
    pub mu: u32,
    /// 1 when `Y` divides `F`, else 0.
    pub y_content: u32,
    /// Nonzero points with `y_content <= j <= mu` on or left of the axis hit.
    pub points: Vec<(u32, u32)>,
}

impl BiPoly {
    pub fn from_curve(f: &CurvePoly) -> Self {
        BiPoly {
            terms: f.terms().iter().map(|(k, c)| (*k, Alg::Rat(c.clone()))).collect(),
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> Alg {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Alg::zero)
    }

    /// Zero-tests the terms that can matter for the Newton polygon, drops
    /// those that vanish and reports the rest. `None` as `mu` means
    /// `F(0, Y) ≡ 0`; `Y^2 | F` shows up as `y_content == 2`.
    pub fn clean(&mut self, ctx: &Context) -> Result<Option<Support>, Split> {
        let col0: Vec<u32> = self.terms.keys().filter(|k| k.0 == 0).map(|k| k.1).collect();
        let mut mu = None;
        for j in col0 {
            if ctx.try_is_zero(&self.terms[&(0, j)])? {
                self.terms.remove(&(0, j));
            } else {
                mu = Some(j);
                break;
            }
        }
        let Some(mu) = mu else { return Ok(None) };
        let mut y_content = 0;
        let mut axis = None;
        while y_content <= mu && axis.is_none() {
            let row: Vec<u32> = self.terms.keys().filter(|k| k.1 == y_content).map(|k| k.0).collect();
            for i in row {
                if ctx.try_is_zero(&self.terms[&(i, y_content)])? {
                    self.terms.remove(&(i, y_content));
                } else {
                    axis = Some(i);
                    break;
                }
            }
            if axis.is_none() {
                y_content += 1;
            }
        }
        let axis = axis.expect("column i = 0 has a nonzero entry at j = mu");
        if y_content >= 2 {
            return Ok(Some(Support { mu, y_content, points: Vec::new() }));
        }
        let keys: Vec<(u32, u32)> = self
            .terms
            .keys()
            .filter(|&&(i, j)| j >= y_content && j <= mu && i <= axis)
            .copied()
            .collect();
        let mut points = Vec::new();
        for k in keys {
            if ctx.try_is_zero(&self.terms[&k])? {
                self.terms.remove(&k);
            } else {
                points.push(k);
            }
        }
        Ok(Some(Support { mu, y_content, points }))
    }

    /// `F(ξ^v X^r, X^p (ξ^u + Y)) / X^w`.
    pub fn step(&self, ctx: &Context, p: u32, r: u32, (u, v): (u64, u64), xi: &Alg, w: u32) -> BiPoly {
        let lv = ctx.levels();
        let c = pow(lv, xi, u);
        let xv = pow(lv, xi, v);
        let max_i = self.terms.keys().map(|k| k.0).max().unwrap_or(0) as usize;
        let max_j = self.terms.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let mut xv_pows = vec![Alg::one()];
        for _ in 0..max_i {
            let next = mul(lv, xv_pows.last().unwrap(), &xv);
            xv_pows.push(next);
        }
        let mut c_pows = vec![Alg::one()];
        for _ in 0..max_j {
            let next = mul(lv, c_pows.last().unwrap(), &c);
            c_pows.push(next);
        }
        let binom = binomials(max_j);
        let mut out: BTreeMap<(u32, u32), Alg> = BTreeMap::new();
        for (&(i, j), a) in &self.terms {
            let e = (r * i + p * j)
                .checked_sub(w)
                .expect("term below the Newton polygon edge");
            let base = mul(lv, a, &xv_pows[i as usize]);
            for k in 0..=j {
                let t = scale(&mul(lv, &base, &c_pows[(j - k) as usize]), &int(binom[j as usize][k as usize]));
                let slot = out.entry((e, k)).or_insert_with(Alg::zero);
                *slot = add(slot, &t);
            }
        }
        out.retain(|_, a| !a.is_syntactic_zero());
        BiPoly { terms: out }
    }

    /// Rows `A_j(X)` truncated below `X^len`, so that `F = Σ A_j(X) Y^j`.
    pub fn rows(&self, len: usize) -> Vec<Vec<Alg>> {
        let max_j = self.terms.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let mut rows = vec![vec![Alg::zero(); len]; max_j + 1];
        for (&(i, j), a) in &self.terms {
            if (i as usize) < len {
                rows[j as usize][i as usize] = a.clone();
            }
        }
        rows
    }
}

fn binomials(n: usize) -> Vec<Vec<i64>> {
    let mut t = vec![vec![1i64]];
    for k in 1..=n {
        let prev = &t[k - 1];
        let mut row = vec![1i64; k + 1];
        for i in 1..k {
            row[i] = prev[i - 1] + prev[i];
        }
        t.push(row);
    }
    t
}

// ---------------------------------------------------------------------------
// Truncated series: dense coefficient vectors of a fixed length.

pub(crate) fn ser_mul(ctx: &Context, a: &[Alg], b: &[Alg], len: usize) -> Vec<Alg> {
    let lv = ctx.levels();
    let mut r = vec![Alg::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_syntactic_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if y.is_syntactic_zero() {
                continue;
            }
            r[i + j] = add(&r[i + j], &mul(lv, x, y));
        }
    }
    r
}

pub(crate) fn ser_inv(ctx: &Context, a: &[Alg], len: usize) -> Result<Vec<Alg>, Split> {
    let lv = ctx.levels();
    let c0 = ctx.try_inv(&a[0])?;
    let mut r = vec![Alg::zero(); len];
    r[0] = c0.clone();
    for n in 1..len {
        let mut s = Alg::zero();
        for k in 1..=n.min(a.len() - 1) {
            s = add(&s, &mul(lv, &a[k], &r[n - k]));
        }
        r[n] = mul(lv, &crate::arith::alg::neg(&s), &c0);
    }
    Ok(r)
}

/// Root `φ` with `φ(0) = 0` of `Σ rows[j](X) φ^j = 0`, valid below `X^len`.
/// Requires `rows[1][0]` to be invertible and `rows[0][0] = 0`.
pub(crate) fn implicit_root(ctx: &Context, rows: &[Vec<Alg>], len: usize) -> Result<Vec<Alg>, Split> {
    let mut phi = vec![Alg::zero(); len];
    let mut prec = 1;
    while prec < len {
        prec = (2 * prec).min(len);
        let mut val = vec![Alg::zero(); prec];
        let mut der = vec![Alg::zero(); prec];
        for j in (0..rows.len()).rev() {
            // Horner for F and F_Y together
            der = ser_mul(ctx, &der, &phi, prec);
            for (k, d) in der.iter_mut().enumerate() {
                *d = add(d, &val[k]);
            }
            val = ser_mul(ctx, &val, &phi, prec);
            for (k, v) in val.iter_mut().enumerate() {
                *v = add(v, &rows[j][k]);
            }
        }
        let dinv = ser_inv(ctx, &der, prec)?;
        let corr = ser_mul(ctx, &val, &dinv, prec);
        for k in 0..prec {
            phi[k] = crate::arith::alg::sub(&phi[k], &corr[k]);
        }
        for c in phi.iter_mut() {
            *c = ctx.reduce(c);
        }
    }
    Ok(phi)
}
