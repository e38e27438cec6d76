//! Resultants in `y` over `Q[x]` and the intersection-multiplicity oracle.

use super::branch::BranchSet;
use crate::arith::poly::{q_divrem, q_eval, q_gcd, q_mul, q_sub, q_trim, q_valuation, QPoly};
use crate::arith::rational::{int, Rational};
use crate::curve::{shear, CurvePoly};
use crate::Error;
use num_traits::{ToPrimitive, Zero};

/// `Res_y(f, g)` as a polynomial in `x`, by fraction-free elimination on the
/// Sylvester matrix.
pub fn resultant_y(f: &CurvePoly, g: &CurvePoly) -> QPoly {
    let a = f.y_coeffs();
    let b = g.y_coeffs();
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 && n == 0 {
        return vec![int(1)];
    }
    let size = m + n;
    let mut mat: Vec<Vec<QPoly>> = vec![vec![Vec::new(); size]; size];
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn bareiss_det(mut m: Vec<Vec<QPoly>>) -> QPoly {
    let n = m.len();
    let mut sign = false;
    let mut prev: QPoly = vec![int(1)];
    for k in 0..n {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&r| !m[r][k].is_empty()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = q_sub(&q_mul(&m[k][k], &m[i][j]), &q_mul(&m[i][k], &m[k][j]));
                let (q, r) = q_divrem(&num, &prev);
                debug_assert!(r.is_empty(), "Bareiss division is exact");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign {
        det = det.iter().map(|c| -c).collect();
    }
    q_trim(&mut det);
    det
}

/// Intersection multiplicity at the origin: the `x`-adic valuation of the
/// resultant after a shear that keeps every other common point and every
/// point at infinity off the line `x = 0`.
pub fn intersection_multiplicity(g: &CurvePoly, h: &CurvePoly) -> Result<u64, Error> {
    g.require_nonzero()?;
    h.require_nonzero()?;
    let z = Rational::zero();
    if !g.eval(&z, &z).is_zero() || !h.eval(&z, &z).is_zero() {
        return Err(Error::NotOnCurve);
    }
    for lambda in 0..1000 {
        let l = int(lambda);
        let (g2, h2) = (shear(g, &l), shear(h, &l));
        let (a, b) = (g2.y_coeffs(), h2.y_coeffs());
        if a.len() < 2 || b.len() < 2 {
            continue;
        }
        let lead_ok = |rows: &[QPoly]| !q_eval(rows.last().unwrap(), &z).is_zero();
        if !lead_ok(&a) || !lead_ok(&b) {
            continue;
        }
        let at0 = |rows: &[QPoly]| -> QPoly {
            let mut v: QPoly = rows.iter().map(|r| q_eval(r, &z)).collect();
            q_trim(&mut v);
            v
        };
        let common = q_gcd(&at0(&a), &at0(&b));
        if common.len() != q_valuation(&common).unwrap_or(0) + 1 {
            continue;
        }
        let res = resultant_y(&g2, &h2);
        return match q_valuation(&res) {
            Some(v) => Ok(v as u64),
            None => Err(Error::Contract("curves share a component".into())),
        };
    }
    Err(Error::Contract("no admissible shear found".into()))
}

/// Intersection multiplicity of the branches tagged `a` and `b` computed
/// from contact orders and characteristic exponents alone.
pub fn noether_intersection(bs: &BranchSet, a: usize, b: usize) -> u64 {
    let mut total = Rational::zero();
    for (i, ga) in bs.geometric.iter().enumerate() {
        if ga.factor != a {
            continue;
        }
        for (j, gb) in bs.geometric.iter().enumerate() {
            if gb.factor != b {
                continue;
            }
            let q = &bs.contact[i][j];
            total += int(gb.ramification as i64) * branch_pair(ga.ramification, &ga.char_exponents, q);
        }
    }
    assert!(total.is_integer(), "intersection number is an integer");
    total.to_integer().to_u64().unwrap()
}

/// `q + Σ (e_{i-1} - e_i) min(β_i, q)` for a branch with ramification `e`
/// and characteristic exponents `β`.
fn branch_pair(e: u64, betas: &[Rational], q: &Rational) -> Rational {
    let mut acc = q.clone();
    let mut prev = e;
    for beta in betas {
        let num = (beta * int(e as i64)).to_integer().to_u64().unwrap();
        let next = num_integer::gcd(prev, num);
        let m = if beta < q { beta.clone() } else { q.clone() };
        acc += int((prev - next) as i64) * m;
        prev = next;
    }
    acc
}
