//! Newton–Puiseux expansion of all branches of a curve at the origin.

mod bipoly;
mod branch;
mod expand;
mod resultant;

pub use branch::{contact_order, verify_branch, BranchCheck, BranchSet, GeometricBranch, PuiseuxBranch};
pub use resultant::{intersection_multiplicity, noether_intersection, resultant_y};

use crate::arith::rational::Rational;
use crate::curve::{multiplicity_at_origin, CurvePoly};
use crate::Error;
use bipoly::BiPoly;
use expand::{Expander, Parts};
use num_traits::Zero;

/// Limits on how far an expansion may go before giving up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandPolicy {
    /// Largest `X`-order (in the local parameter of the tree) that the
    /// expansion may reach while branches are still coinciding.
    pub cap: u64,
    /// When set, every series is carried at least to this `x`-order even if
    /// the branch structure is settled earlier.
    pub min_order: Option<Rational>,
}

impl Default for ExpandPolicy {
    fn default() -> Self {
        ExpandPolicy { cap: 200, min_order: None }
    }
}

impl ExpandPolicy {
    fn expander(&self) -> Expander {
        Expander { cap: self.cap, min_order: self.min_order.clone() }
    }
}

/// Checks that `f` passes through the origin and is `y`-regular of order
/// equal to its multiplicity.
fn check_regular(f: &CurvePoly) -> Result<u32, Error> {
    let m = multiplicity_at_origin(f)?;
    if m == 0 {
        return Err(Error::NotOnCurve);
    }
    if f.coeff(0, m).is_zero() {
        return Err(Error::Contract(format!("curve is not y-regular of order {m}")));
    }
    Ok(m)
}

/// Branches of a reduced curve `f` at the origin. `f` must be `y`-regular of
/// order equal to its multiplicity (see [`crate::curve::regularize`]).
pub fn puiseux_expand(f: &CurvePoly, policy: &ExpandPolicy) -> Result<BranchSet, Error> {
    let m = check_regular(f)?;
    let tree = policy.expander().run(BiPoly::from_curve(f), Parts::Single(0))?;
    let bs = BranchSet::from_tree(&tree);
    debug_assert_eq!(bs.multiplicity, m);
    Ok(bs)
}

/// Branches of `Π factors` at the origin, each tagged with the index of the
/// factor it lies on. Factors missing the origin contribute nothing.
pub fn puiseux_expand_factors(factors: &[CurvePoly], policy: &ExpandPolicy) -> Result<BranchSet, Error> {
    let whole = CurvePoly::product(factors);
    let m = check_regular(&whole)?;
    let z = Rational::zero();
    let parts: Vec<(usize, BiPoly)> = factors
        .iter()
        .enumerate()
        .filter(|(_, g)| g.eval(&z, &z).is_zero())
        .map(|(k, g)| (k, BiPoly::from_curve(g)))
        .collect();
    let tree = policy.expander().run(BiPoly::from_curve(&whole), Parts::Many(parts))?;
    let bs = BranchSet::from_tree(&tree);
    debug_assert_eq!(bs.multiplicity, m);
    Ok(bs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::arith::Alg;
    use crate::curve::parse_curve;

    fn c(s: &str) -> CurvePoly {
        parse_curve(s).unwrap()
    }

    fn expand(s: &str) -> BranchSet {
        puiseux_expand(&c(s), &ExpandPolicy::default()).unwrap()
    }

    #[test]
    fn cusp() {
        let bs = expand("y^2 - x^3");
        assert_eq!(bs.multiplicity, 2);
        assert_eq!(bs.branches.len(), 1);
        assert_eq!(bs.geometric.len(), 1);
        let b = &bs.branches[0];
        assert_eq!(b.ramification, 2);
        assert_eq!(b.char_exponents, vec![rat(3, 2)]);
        assert_eq!(verify_branch(&c("y^2 - x^3"), b, &int(10)), BranchCheck::Pass);
    }

    #[test]
    fn node_matches_square_root_series() {
        let f = c("y^2 - x^2 - x^3");
        let bs = expand("y^2 - x^2 - x^3");
        assert_eq!(bs.geometric.len(), 2);
        assert_eq!(bs.contact[0][1], int(1));
        // y = ±x·sqrt(1 + x) = ±(x + x^2/2 - x^3/8 + x^4/16 - ...)
        let expected = [rat(1, 1), rat(1, 2), rat(-1, 8), rat(1, 16), rat(-5, 128)];
        let mut signs = Vec::new();
        for b in &bs.branches {
            assert_eq!(b.ramification, 1);
            let d = b.dense();
            let s = d[1].as_rational().unwrap().clone();
            signs.push(s.clone());
            for (k, e) in expected.iter().enumerate() {
                if let Some(v) = d.get(k + 1) {
                    assert_eq!(v.as_rational().unwrap(), &(e * &s));
                }
            }
            assert_eq!(verify_branch(&f, b, b.order.as_ref().unwrap()), BranchCheck::Pass);
        }
        signs.sort();
        assert_eq!(signs, vec![int(-1), int(1)]);
    }

    #[test]
    fn tacnode_contact() {
        let bs = expand("y^2 - x^4");
        assert_eq!(bs.geometric.len(), 2);
        assert_eq!(bs.contact[0][1], int(2));
        let bs = expand("y^2 - x^5");
        assert_eq!(bs.geometric.len(), 1);
        assert_eq!(bs.branches[0].char_exponents, vec![rat(5, 2)]);
    }

    #[test]
    fn conjugate_branches_fold() {
        // y^2 + x^2: two branches over Q(i)
        let bs = expand("y^2 + x^2");
        assert_eq!(bs.branches.len(), 1);
        assert_eq!(bs.geometric.len(), 2);
        assert_eq!(bs.contact[0][1], int(1));
        // (y^2 - 2x^4)(y - x^2) : three smooth branches at contact 2
        let bs = expand("(y^2 - 2*x^4)*(y - x^2)");
        assert_eq!(bs.geometric.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(bs.contact[i][j], int(2));
                }
            }
        }
    }

    #[test]
    fn exact_branch() {
        let bs = expand("y*(y - x^3)");
        assert_eq!(bs.geometric.len(), 2);
        assert_eq!(bs.contact[0][1], int(3));
        assert!(bs.branches.iter().any(|b| b.order.is_none()));
    }

    #[test]
    fn non_reduced_is_rejected() {
        let e = puiseux_expand(&c("y^2*(y - x)"), &ExpandPolicy::default());
        assert_eq!(e.unwrap_err(), Error::NonReduced);
        let e = puiseux_expand(&c("(y - x^2)^2*(y + x)"), &ExpandPolicy::default());
        assert!(e.is_err());
    }

    #[test]
    fn truncation_cap() {
        let e = puiseux_expand(&c("(y - x^2)*(y - x^2 - x^30)"), &ExpandPolicy { cap: 10, min_order: None });
        assert!(matches!(e, Err(Error::TruncationCap { .. })));
        let bs = puiseux_expand(&c("(y - x^2)*(y - x^2 - x^30)"), &ExpandPolicy::default()).unwrap();
        assert_eq!(bs.contact[0][1], int(30));
    }

    #[test]
    fn contact_order_between_separate_curves() {
        let a = expand("y^2 - x^3").branches[0].clone();
        let b = expand("y^2 - 2*x^3").branches[0].clone();
        assert_eq!(contact_order(&a, &b), Ok(rat(3, 2)));
        let a = expand("y - x^2").branches[0].clone();
        let b = expand("y - x^2 - x^5").branches[0].clone();
        assert!(matches!(contact_order(&a, &b), Err(Error::TruncationCap { .. })));
        let deep = ExpandPolicy { min_order: Some(int(8)), ..ExpandPolicy::default() };
        let b = puiseux_expand(&c("y - x^2 - x^5"), &deep).unwrap().branches[0].clone();
        assert!(b.order.as_ref().unwrap() >= &int(8));
        assert!(contact_order(&a, &b).is_err());
        let a = puiseux_expand(&c("y - x^2"), &deep).unwrap().branches[0].clone();
        assert_eq!(contact_order(&a, &b), Ok(int(5)));
        assert_eq!(contact_order(&b, &a), Ok(int(5)));
        let a = expand("y^2 - x^3").branches[0].clone();
        let b = expand("y^2 - x^3 - x^4").branches[0].clone();
        assert_eq!(contact_order(&a, &b), Ok(rat(5, 2)));
    }

    #[test]
    fn corrupted_branch_fails_at_first_wrong_term() {
        let f = c("y^2 - x^3");
        let mut b = expand("y^2 - x^3").branches[0].clone();
        // x = t^2, y = t^3 + t^4
        b.terms = vec![(rat(3, 2), Alg::one()), (int(2), Alg::one())];
        b.order = Some(int(10));
        assert_eq!(verify_branch(&f, &b, &int(10)), BranchCheck::Fail { t_order: 7 });
    }

    #[test]
    fn factor_tags_and_intersection() {
        let g = c("y^2 - x^3");
        let h = c("y^2 + x^3");
        let bs = puiseux_expand_factors(&[g.clone(), h.clone()], &ExpandPolicy::default()).unwrap();
        assert_eq!(noether_intersection(&bs, 0, 1), 6);
        assert_eq!(intersection_multiplicity(&g, &h), Ok(6));
        let g = c("y - x^2");
        let h = c("(y - x^2 - x^5)*(y + x)*(x - 3)");
        let bs = puiseux_expand_factors(&[g.clone(), h.clone()], &ExpandPolicy::default()).unwrap();
        assert_eq!(noether_intersection(&bs, 0, 1), 6);
        assert_eq!(intersection_multiplicity(&g, &h), Ok(6));
    }
}
