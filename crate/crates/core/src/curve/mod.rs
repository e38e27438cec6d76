//! Bivariate rational polynomials and local operations at a point.

mod gcd;
mod newton;
mod parse;
mod poly;

pub use gcd::{x_content, y_gcd};
pub use newton::{newton_polygon, NewtonPolygon, PolygonEdge};
pub use parse::parse_curve;
pub use poly::{CurvePoly, PlanePoint};

use crate::arith::rational::{int, Rational};
use crate::Error;
use num_traits::{One, Zero};

/// Lowest total degree in the support; 0 iff the curve misses the origin.
pub fn multiplicity_at_origin(f: &CurvePoly) -> Result<u32, Error> {
    f.require_nonzero()?;
    Ok(f.terms().keys().map(|&(i, j)| i + j).min().unwrap())
}

/// `f(x + p.x, y + p.y)`.
pub fn localize(f: &CurvePoly, p: &PlanePoint) -> CurvePoly {
    if p.is_origin() {
        return f.clone();
    }
    let (o, z) = (Rational::one(), Rational::zero());
    f.affine([[o.clone(), z.clone(), p.x.clone()], [z, o, p.y.clone()]])
}

pub fn is_singular_at(f: &CurvePoly, p: &PlanePoint) -> bool {
    f.eval(&p.x, &p.y).is_zero()
        && f.derivative_x().eval(&p.x, &p.y).is_zero()
        && f.derivative_y().eval(&p.x, &p.y).is_zero()
}

/// `false` when some component through the origin is repeated.
pub fn is_locally_reduced(f: &CurvePoly) -> bool {
    let c = x_content(f);
    if c.len() > 2 && c[0].is_zero() && c[1].is_zero() {
        return false;
    }
    if squarefree_in_y_somewhere(f) {
        return true;
    }
    let g = y_gcd(f, &f.derivative_y());
    let z = Rational::zero();
    g.is_constant() || !g.eval(&z, &z).is_zero()
}

/// `true` when `f(x0, y)` is squarefree of full `y`-degree for some small
/// integer `x0`, which rules out repeated factors of positive `y`-degree.
fn squarefree_in_y_somewhere(f: &CurvePoly) -> bool {
    use crate::arith::poly::{q_derivative, q_eval, q_gcd};
    let rows = f.y_coeffs();
    if rows.len() <= 1 {
        return true;
    }
    (1..=8).any(|k| {
        let x0 = int(k);
        let spec: Vec<Rational> = rows.iter().map(|r| q_eval(r, &x0)).collect();
        !spec.last().unwrap().is_zero() && q_gcd(&spec, &q_derivative(&spec)).len() == 1
    })
}

/// Applies the shear `x -> x + λ y` for the first `λ = 0, 1, 2, …` that
/// makes the lowest-degree form contain `y^m`.
pub fn regularize(f: &CurvePoly) -> Result<(CurvePoly, Rational), Error> {
    let m = multiplicity_at_origin(f)?;
    let form = f.homogeneous_part(m);
    let mut lambda = 0i64;
    loop {
        let l = int(lambda);
        if !form.eval(&l, &Rational::one()).is_zero() {
            return Ok((shear(f, &l), l));
        }
        lambda += 1;
    }
}

/// `f(x + λ y, y)`.
pub fn shear(f: &CurvePoly, lambda: &Rational) -> CurvePoly {
    if lambda.is_zero() {
        return f.clone();
    }
    let (o, z) = (Rational::one(), Rational::zero());
    f.affine([[o.clone(), lambda.clone(), z.clone()], [z.clone(), o, z]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CurvePoly {
        parse_curve(s).unwrap()
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_at_origin(&c("y^2 - x^3")), Ok(2));
        assert_eq!(multiplicity_at_origin(&c("(y^2 - x^3)*(y + x^2)")), Ok(3));
        assert_eq!(multiplicity_at_origin(&c("x^5 + y^6")), Ok(5));
        assert_eq!(multiplicity_at_origin(&c("0")), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn localize_examples() {
        let p = PlanePoint::new(int(1), int(0));
        assert_eq!(localize(&c("y^2 - (x-1)^3"), &p), c("y^2 - x^3"));
        assert_eq!(localize(&c("x + y + 1"), &PlanePoint::new(int(-1), int(0))), c("x + y"));
    }

    #[test]
    fn singular_examples() {
        let o = PlanePoint::origin();
        assert!(is_singular_at(&c("y^2 - x^3"), &o));
        assert!(!is_singular_at(&c("x + y^2"), &o));
        assert!(is_singular_at(&c("(y - x^2)*(y + x^2)"), &o));
    }

    #[test]
    fn regularize_examples() {
        let (g, l) = regularize(&c("x^2 - y^3")).unwrap();
        assert_eq!(l, int(1));
        assert!(!g.coeff(0, 2).is_zero());
        assert_eq!(regularize(&c("y^2 - x^3")).unwrap().1, int(0));
        assert_eq!(regularize(&c("x^2 - y^2")).unwrap().1, int(0));
    }

    #[test]
    fn local_reducedness() {
        assert!(is_locally_reduced(&c("y^2 - x^3")));
        assert!(is_locally_reduced(&c("(y^2 - x^3)*(x + 1)^2")));
        assert!(is_locally_reduced(&c("(y - 1)^2*(y - x^2)")));
        assert!(!is_locally_reduced(&c("(y - x^2)^2*(y + x)")));
        assert!(!is_locally_reduced(&c("x^2*(y - x)")));
        assert!(!is_locally_reduced(&c("(x - y)^2")));
    }
}
