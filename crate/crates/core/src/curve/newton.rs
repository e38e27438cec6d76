use super::poly::CurvePoly;
use crate::arith::poly::UniPoly;
use crate::arith::rational::Rational;
use crate::Error;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonEdge {
    /// Upper-left endpoint `(i, j)`.
    pub start: (u32, u32),
    /// Lower-right endpoint.
    pub end: (u32, u32),
    /// `Δi / |Δj|`: the leading Puiseux exponent of branches on this edge.
    pub exponent: Rational,
    /// `Σ a_ij z^(j - end.j)` over support points on the edge. Its nonzero
    /// roots are the leading Puiseux coefficients.
    pub edge_poly: UniPoly,
}

/// Lower-left hull of the support after removing monomial content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// `(a, b)` with `x^a y^b` the largest monomial dividing the polynomial.
    pub content: (u32, u32),
    /// Hull vertices by increasing `i`, from `(0, j)` down to `(i, 0)`.
    pub vertices: Vec<(u32, u32)>,
    pub edges: Vec<PolygonEdge>,
}

/// Newton polygon of `f` at the origin.
pub fn newton_polygon(f: &CurvePoly) -> Result<NewtonPolygon, Error> {
    f.require_nonzero()?;
    if !f.coeff(0, 0).is_zero() {
        return Err(Error::NotOnCurve);
    }
    let content = f.monomial_content();
    let g = f.div_monomial(content.0, content.1);
    let pts: Vec<((u32, u32), Rational)> = g.terms().iter().map(|(k, c)| (*k, c.clone())).collect();
    let top = pts.iter().filter(|(k, _)| k.0 == 0).map(|(k, _)| k.1).min().unwrap();
    let mut vertices = vec![(0, top)];
    let mut edges = Vec::new();
    let mut v = (0u32, top);
    while v.1 > 0 {
        // minimal slope (i - vi) / (vj - j); ties go to the farthest point
        let mut best: Option<((u32, u32), Rational)> = None;
        for &(p, _) in &pts {
            if p.1 >= v.1 {
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
        let (next, exponent) = best.expect("support reaches j = 0 after removing content");
        let mut coeffs = vec![Rational::zero(); (v.1 - next.1) as usize + 1];
        for (p, c) in &pts {
            if p.1 >= next.1
                && p.1 <= v.1
                && Rational::from_integer((p.0 as i64 - v.0 as i64).into())
                    == &exponent * Rational::from_integer(((v.1 - p.1) as i64).into())
            {
                coeffs[(p.1 - next.1) as usize] = c.clone();
            }
        }
        edges.push(PolygonEdge {
            start: v,
            end: next,
            exponent,
            edge_poly: UniPoly::from_rationals(&coeffs),
        });
        vertices.push(next);
        v = next;
    }
    Ok(NewtonPolygon { content, vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::curve::parse_curve;

    #[test]
    fn cusp() {
        let np = newton_polygon(&parse_curve("y^2 - x^3").unwrap()).unwrap();
        assert_eq!(np.vertices, vec![(0, 2), (3, 0)]);
        assert_eq!(np.edges.len(), 1);
        assert_eq!(np.edges[0].exponent, rat(3, 2));
        assert_eq!(np.edges[0].edge_poly, UniPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn two_edges() {
        let np = newton_polygon(&parse_curve("y^3 + x^2*y^2 - x^3*y - x^5").unwrap()).unwrap();
        assert_eq!(np.vertices, vec![(0, 3), (3, 1), (5, 0)]);
        let ex: Vec<_> = np.edges.iter().map(|e| e.exponent.clone()).collect();
        assert_eq!(ex, vec![rat(3, 2), int(2)]);
    }

    #[test]
    fn monomial_content_reported() {
        let np = newton_polygon(&parse_curve("x^2*y + x*y^2").unwrap()).unwrap();
        assert_eq!(np.content, (1, 1));
        assert_eq!(np.edges.len(), 1);
        assert_eq!(np.edges[0].exponent, int(1));
    }

    #[test]
    fn off_curve_is_error() {
        assert_eq!(newton_polygon(&parse_curve("x + 1").unwrap()), Err(Error::NotOnCurve));
    }
}
