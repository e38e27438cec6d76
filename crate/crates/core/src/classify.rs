//! From a curve and a point to its singularity diagram.

use crate::arith::rational::Rational;
use crate::curve::{is_locally_reduced, localize, multiplicity_at_origin, regularize, CurvePoly, PlanePoint};
use crate::diagram::{build_diagram, SingularityDiagram};
use crate::puiseux::{puiseux_expand, BranchSet, ExpandPolicy};
use crate::Error;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct Classification {
    pub point: PlanePoint,
    /// `λ` of the shear `x -> x + λ y` applied after moving the point to the
    /// origin.
    pub shear: Rational,
    /// The curve in the coordinates the branches are expressed in.
    pub local: CurvePoly,
    pub branches: BranchSet,
    pub diagram: SingularityDiagram,
}

/// Moves `at` to the origin and checks that the curve is singular and
/// reduced there.
pub fn prepare(f: &CurvePoly, at: &PlanePoint) -> Result<CurvePoly, Error> {
    f.require_nonzero()?;
    let local = localize(f, at);
    let z = Rational::zero();
    if !local.eval(&z, &z).is_zero() {
        return Err(Error::NotOnCurve);
    }
    if multiplicity_at_origin(&local)? == 1 {
        return Err(Error::SmoothPoint);
    }
    if !is_locally_reduced(&local) {
        return Err(Error::NonReduced);
    }
    Ok(local)
}

pub fn classify(f: &CurvePoly, at: &PlanePoint, policy: &ExpandPolicy) -> Result<Classification, Error> {
    let local = prepare(f, at)?;
    let (local, shear) = regularize(&local)?;
    let branches = puiseux_expand(&local, policy)?;
    let diagram = build_diagram(&branches)?;
    Ok(Classification { point: at.clone(), shear, local, branches, diagram })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::curve::parse_curve;
    use crate::diagram::diagrams_equal;

    fn key(s: &str) -> String {
        classify(&parse_curve(s).unwrap(), &PlanePoint::origin(), &ExpandPolicy::default())
            .unwrap()
            .diagram
            .canonical_key()
    }

    #[test]
    fn simple_types() {
        assert_eq!(key("y^2 - x^2"), "m2(1:S,S)");
        assert_eq!(key("y^2 - x^3"), "m2[3/2]");
        assert_eq!(key("y^2 - x^4"), "m2(2:S,S)");
        assert_eq!(key("y^2 - 9*x^4"), "m2(2:S,S)");
        assert_eq!(key("y^4 - x^6"), "m4(3/2:[3/2],[3/2])");
        assert_eq!(key("(y^2 - x^3)*(x + 1)*(x + 2)*(x + 3)"), "m2[3/2]");
        assert_eq!(key("x*y*(x + y)*(x - y)*(x + 2*y)*(x - 2*y)"), "m6(1:S,S,S,S,S,S)");
        assert_eq!(key("(y + x^2 + x^3)*(y + 2*x^2 + x^3)"), "m2(2:S,S)");
        assert_eq!(key("x^2 - y^3"), "m2[3/2]");
    }

    #[test]
    fn factor_order_does_not_matter() {
        let a = classify(&parse_curve("(y^2 - x^3)*(y - x^2)").unwrap(), &PlanePoint::origin(), &ExpandPolicy::default())
            .unwrap();
        let b = classify(&parse_curve("(y - x^2)*(y^2 - x^3)").unwrap(), &PlanePoint::origin(), &ExpandPolicy::default())
            .unwrap();
        assert!(diagrams_equal(&a.diagram, &b.diagram));
    }

    #[test]
    fn errors() {
        let o = PlanePoint::origin();
        let p = ExpandPolicy::default();
        let c = |s: &str| parse_curve(s).unwrap();
        assert_eq!(classify(&c("x + y^2"), &o, &p).unwrap_err(), Error::SmoothPoint);
        assert_eq!(classify(&c("x + y^2 + 1"), &o, &p).unwrap_err(), Error::NotOnCurve);
        assert_eq!(classify(&c("(y - x^2)^2*(y + x)"), &o, &p).unwrap_err(), Error::NonReduced);
        assert_eq!(classify(&c("0"), &o, &p).unwrap_err(), Error::ZeroPolynomial);
        let at = PlanePoint::new(int(1), int(2));
        let moved = classify(&c("(y - 2)^2 - (x - 1)^3"), &at, &p).unwrap();
        assert_eq!(moved.diagram.canonical_key(), "m2[3/2]");
    }
}
