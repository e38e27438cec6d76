use crate::arith::poly::{q_trim, QPoly};
use crate::arith::rational::{int, Rational};
use crate::Error;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `x`, `y` over the rationals. Keys are `(i, j)` for
/// `x^i y^j`; no zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CurvePoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

/// A rational point of the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanePoint {
    pub fn origin() -> Self {
        PlanePoint::default()
    }

    pub fn new(x: Rational, y: Rational) -> Self {
        PlanePoint { x, y }
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn neg(&self) -> Self {
        PlanePoint { x: -&self.x, y: -&self.y }
    }
}

impl CurvePoly {
    pub fn zero() -> Self {
        CurvePoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        CurvePoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut p = CurvePoly::zero();
        for ((i, j), c) in it {
            p.add_term(i, j, &c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0, 0))
    }

    fn add_term(&mut self, i: u32, j: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Largest `i + j` over the support; 0 for constants and the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn add(&self, other: &CurvePoly) -> CurvePoly {
        let mut r = self.clone();
        for (&(i, j), c) in &other.terms {
            r.add_term(i, j, c);
        }
        r
    }

    pub fn neg(&self) -> CurvePoly {
        CurvePoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, other: &CurvePoly) -> CurvePoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> CurvePoly {
        if c.is_zero() {
            return CurvePoly::zero();
        }
        CurvePoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn mul(&self, other: &CurvePoly) -> CurvePoly {
        let mut r = CurvePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                r.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> CurvePoly {
        let mut acc = CurvePoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a CurvePoly>) -> CurvePoly {
        factors.into_iter().fold(CurvePoly::one(), |acc, f| acc.mul(f))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * crate::arith::rational::pow(x, i) * crate::arith::rational::pow(y, j))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn derivative_x(&self) -> CurvePoly {
        CurvePoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * int(i as i64))),
        )
    }

    pub fn derivative_y(&self) -> CurvePoly {
        CurvePoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * int(j as i64))),
        )
    }

    /// `f(X, Y)` for polynomials `X`, `Y`.
    pub fn compose(&self, xs: &CurvePoly, ys: &CurvePoly) -> CurvePoly {
        let mut xp: Vec<CurvePoly> = vec![CurvePoly::one()];
        let mut yp: Vec<CurvePoly> = vec![CurvePoly::one()];
        let mut r = CurvePoly::zero();
        for (&(i, j), c) in &self.terms {
            while xp.len() <= i as usize {
                let next = xp.last().unwrap().mul(xs);
                xp.push(next);
            }
            while yp.len() <= j as usize {
                let next = yp.last().unwrap().mul(ys);
                yp.push(next);
            }
            r = r.add(&xp[i as usize].mul(&yp[j as usize]).scale(c));
        }
        r
    }

    /// `f(a x + b y + c, d x + e y + g)`.
    pub fn affine(&self, m: [[Rational; 3]; 2]) -> CurvePoly {
        let lin = |row: &[Rational; 3]| {
            CurvePoly::from_terms([
                ((1, 0), row[0].clone()),
                ((0, 1), row[1].clone()),
                ((0, 0), row[2].clone()),
            ])
        };
        self.compose(&lin(&m[0]), &lin(&m[1]))
    }

    /// Homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> CurvePoly {
        CurvePoly::from_terms(
            self.terms.iter().filter(|(&(i, j), _)| i + j == d).map(|(k, c)| (*k, c.clone())),
        )
    }

    /// Largest `(a, b)` with `x^a y^b` dividing `f`.
    pub fn monomial_content(&self) -> (u32, u32) {
        let a = self.terms.keys().map(|&(i, _)| i).min().unwrap_or(0);
        let b = self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0);
        (a, b)
    }

    /// Divides by `x^a y^b`, which must divide `f`.
    pub fn div_monomial(&self, a: u32, b: u32) -> CurvePoly {
        CurvePoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i - a, j - b), c.clone())).collect(),
        }
    }

    /// Coefficients as a polynomial in `y`: entry `j` is the coefficient of
    /// `y^j`, a polynomial in `x`.
    pub fn y_coeffs(&self) -> Vec<QPoly> {
        let mut out: Vec<QPoly> = vec![Vec::new(); self.degree_y() as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut out[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rational::zero());
            }
            row[i as usize] = c.clone();
        }
        for row in &mut out {
            q_trim(row);
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    pub fn from_y_coeffs(rows: &[QPoly]) -> CurvePoly {
        CurvePoly::from_terms(rows.iter().enumerate().flat_map(|(j, row)| {
            row.iter().enumerate().map(move |(i, c)| ((i as u32, j as u32), c.clone()))
        }))
    }

    /// Divides every coefficient by the leading one in graded order, so that
    /// scalar multiples print identically.
    pub fn normalized(&self) -> CurvePoly {
        match self.sorted_terms().first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Terms in printing order: descending total degree, then descending
    /// power of `x`.
    pub fn sorted_terms(&self) -> Vec<((u32, u32), Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| {
            let (da, db) = (a.0 .0 + a.0 .1, b.0 .0 + b.0 .1);
            db.cmp(&da).then(b.0 .0.cmp(&a.0 .0))
        });
        v
    }

    pub fn require_nonzero(&self) -> Result<(), Error> {
        if self.is_zero() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for CurvePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || (*i == 0 && *j == 0) {
                parts.push(a.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::parse_curve;

    #[test]
    fn prints_in_graded_order() {
        let f = parse_curve("y^2 - x^3 + 3/2*x*y - 1").unwrap();
        assert_eq!(f.to_string(), "-x^3 + 3/2*x*y + y^2 - 1");
    }

    #[test]
    fn compose_translation() {
        let f = parse_curve("y^2 - (x-1)^3").unwrap();
        let g = f.affine([
            [int(1), int(0), int(1)],
            [int(0), int(1), int(0)],
        ]);
        assert_eq!(g, parse_curve("y^2 - x^3").unwrap());
    }
}
