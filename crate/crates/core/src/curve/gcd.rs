//! Gcds in `Q[x][y]` by primitive pseudo-remainder sequences.

use super::CurvePoly;
use crate::arith::poly::{q_divrem, q_gcd, q_monic, q_mul, q_sub, q_trim, QPoly};

/// Monic gcd of the `y`-coefficients of `f`.
pub fn x_content(f: &CurvePoly) -> QPoly {
    content(&f.y_coeffs())
}

fn content(rows: &[QPoly]) -> QPoly {
    let mut g: QPoly = Vec::new();
    for r in rows {
        g = q_gcd(&g, r);
    }
    q_monic(&g)
}

fn primitive(rows: &[QPoly]) -> Vec<QPoly> {
    let c = content(rows);
    let mut out: Vec<QPoly> = rows.iter().map(|r| q_divrem(r, &c).0).collect();
    trim_rows(&mut out);
    out
}

fn trim_rows(rows: &mut Vec<QPoly>) {
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
}

fn pseudo_rem(a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
    let mut r: Vec<QPoly> = a.to_vec();
    let lb = b.last().unwrap();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for row in r.iter_mut() {
            *row = q_mul(row, lb);
        }
        for (k, bk) in b.iter().enumerate() {
            let t = q_mul(&lr, bk);
            r[k + shift] = q_sub(&r[k + shift], &t);
        }
        for row in r.iter_mut() {
            q_trim(row);
        }
        trim_rows(&mut r);
        if r.is_empty() {
            break;
        }
        r = primitive(&r);
    }
    r
}

/// Primitive part of `gcd(f, g)` with respect to `y`; the constant 1 when the
/// two share no factor of positive `y`-degree.
pub fn y_gcd(f: &CurvePoly, g: &CurvePoly) -> CurvePoly {
    let (mut a, mut b) = (primitive(&f.y_coeffs()), primitive(&g.y_coeffs()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return CurvePoly::one();
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r;
    }
    if a.len() <= 1 {
        return CurvePoly::one();
    }
    CurvePoly::from_y_coeffs(&a).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::parse_curve;

    fn c(s: &str) -> CurvePoly {
        parse_curve(s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let g = y_gcd(&c("(y - x^2)*(y + x)*(x + 1)"), &c("(y - x^2)*(y - 1)"));
        assert_eq!(g, c("y - x^2").normalized());
        assert_eq!(y_gcd(&c("y^2 - x^3"), &c("y")), CurvePoly::one());
        assert_eq!(x_content(&c("(x^2 - 1)*y + x^3 - x")), crate::arith::poly::q_from_ints(&[-1, 0, 1]));
    }
}
