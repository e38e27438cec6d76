use proptest::prelude::*;
use sextic_core::arith::poly::{poly_gcd_q, q_divrem, q_from_ints, q_monic, q_mul, squarefree_decompose_q, QPoly, UniPoly};
use sextic_core::arith::rational::{int, rat, Rational};
use sextic_core::arith::{alg_zero_test, factor_rational, Alg, AlgebraicValue, Context, ZeroDecision};
use sextic_core::classify::classify;
use sextic_core::curve::{
    localize, multiplicity_at_origin, newton_polygon, parse_curve, regularize, CurvePoly, PlanePoint,
};
use sextic_core::puiseux::ExpandPolicy;

fn nonzero_q(max_degree: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_degree + 1)
        .prop_filter_map("zero polynomial", |c| {
            let p = q_from_ints(&c);
            (!p.is_empty()).then_some(p)
        })
}

fn divides(d: &[Rational], p: &[Rational]) -> bool {
    q_divrem(p, d).1.is_empty()
}

fn uni(p: &[Rational]) -> UniPoly {
    UniPoly::from_rationals(p)
}

fn rationals(p: &UniPoly) -> QPoly {
    p.to_rationals().expect("rational coefficients")
}

fn rational_of(a: &Alg) -> Rational {
    a.as_rational().cloned().expect("rational coefficient")
}

proptest! {
    #[test]
    fn gcd_is_greatest_common_divisor(a in nonzero_q(3), b in nonzero_q(3), c in nonzero_q(2)) {
        let (u, v) = (q_mul(&a, &c), q_mul(&b, &c));
        let g = rationals(&poly_gcd_q(&uni(&u), &uni(&v)));
        prop_assert!(divides(&g, &u) && divides(&g, &v));
        prop_assert!(divides(&c, &g), "common divisor {c:?} does not divide gcd {g:?}");
    }

    #[test]
    fn squarefree_decomposition_reconstructs(a in nonzero_q(2), b in nonzero_q(2), k in 1u32..=3) {
        let mut p = a.clone();
        for _ in 0..k {
            p = q_mul(&p, &b);
        }
        let mut prod = vec![int(1)];
        for (f, m) in squarefree_decompose_q(&uni(&p)) {
            for _ in 0..m {
                prod = q_mul(&prod, &rationals(&f));
            }
        }
        prop_assert_eq!(prod, q_monic(&p));
    }

    #[test]
    fn factors_multiply_back_and_are_irreducible(a in nonzero_q(3), b in nonzero_q(3)) {
        let p = q_mul(&a, &b);
        let factors = factor_rational(&uni(&p));
        let lead = p.last().unwrap().clone();
        let prod = factors.iter().fold(vec![lead], |acc, f| q_mul(&acc, &rationals(f)));
        prop_assert_eq!(prod, p);
        for f in &factors {
            prop_assert_eq!(factor_rational(f), vec![f.clone()]);
        }
    }

    #[test]
    fn zero_test_splits_preserve_defining_product(roots in prop::collection::btree_set(-4i64..=4, 2..=4), r in -4i64..=4, quad in any::<bool>()) {
        // (x - r1)...(x - rk), optionally times x^2 + 1 to keep an irrational part
        let mut def: QPoly = vec![int(1)];
        for &t in &roots {
            def = q_mul(&def, &[int(-t), int(1)]);
        }
        if quad {
            def = q_mul(&def, &[int(1), int(0), int(1)]);
        }
        let level: Vec<Alg> = def.iter().cloned().map(Alg::Rat).collect();
        let ctx = Context::rational().with_level(&level).unwrap();
        let value = ctx.sub(&ctx.generator(1), &Alg::from_i64(r));
        let pieces = match alg_zero_test(&AlgebraicValue { context: ctx.clone(), value }) {
            ZeroDecision::Split(p) => p.into_iter().map(|(c, _)| c).collect(),
            _ => vec![ctx.clone()],
        };
        let prod = pieces
            .iter()
            .fold(vec![int(1)], |acc, c| q_mul(&acc, &c.defining(1).iter().map(rational_of).collect::<Vec<_>>()));
        prop_assert_eq!(prod, def);
    }
}

fn poly_through_origin() -> impl Strategy<Value = CurvePoly> {
    prop::collection::vec(((0u32..6, 0u32..6), -5i64..=5), 1..10).prop_map(|ts| {
        CurvePoly::from_terms(ts.into_iter().filter(|(k, _)| *k != (0, 0)).map(|(k, c)| (k, int(c))))
    })
}

proptest! {
    #[test]
    fn hull_lies_below_support(f in poly_through_origin()) {
        prop_assume!(!f.is_zero());
        let p = newton_polygon(&f).unwrap();
        let g = f.div_monomial(p.content.0, p.content.1);
        for e in &p.edges {
            let (a, b) = ((e.start.0 as i64, e.start.1 as i64), (e.end.0 as i64, e.end.1 as i64));
            for &(i, j) in g.terms().keys() {
                let cross = (b.0 - a.0) * (j as i64 - a.1) - (b.1 - a.1) * (i as i64 - a.0);
                prop_assert!(cross >= 0, "({i},{j}) below edge {:?}-{:?}", e.start, e.end);
            }
        }
    }

    #[test]
    fn localize_inverts(f in poly_through_origin(), x in -20i64..20, y in -20i64..20, d in 1i64..5) {
        let p = PlanePoint::new(rat(x, d), rat(y, d));
        prop_assert_eq!(localize(&localize(&f, &p), &p.neg()), f);
    }

    #[test]
    fn regularize_keeps_multiplicity(f in poly_through_origin()) {
        prop_assume!(!f.is_zero());
        let m = multiplicity_at_origin(&f).unwrap();
        let (g, _) = regularize(&f).unwrap();
        prop_assert_eq!(multiplicity_at_origin(&g).unwrap(), m);
        prop_assert_ne!(g.coeff(0, m), int(0));
    }
}

const GERMS: [&str; 10] = [
    "y^2 - x^3",
    "x*y*(x - y)",
    "(y - x^2)*(y^2 - x^3)",
    "(y^2 - x^3)*(y^2 - 2*x^3)",
    "y^3 - x^7",
    "x*(y - x^2)*(y + x^2)",
    "(y^2 - x^3)^2 - x^5*y",
    "y*(y - x^3)*(y - x^3 - x^5)",
    "(y^2 - 2*x^2)*(y - x^2)",
    "(x^2 - y^3)*(y^2 - x^5)",
];

fn classified(f: &CurvePoly) -> sextic_core::classify::Classification {
    classify(f, &PlanePoint::origin(), &ExpandPolicy::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn key_invariant_under_rational_linear_maps(i in 0..GERMS.len(), m in prop::array::uniform4((-6i64..=6, 1i64..=3))) {
        let q: Vec<Rational> = m.iter().map(|&(n, d)| rat(n, d)).collect();
        prop_assume!(&q[0] * &q[3] != &q[1] * &q[2]);
        let f = parse_curve(GERMS[i]).unwrap();
        let z = int(0);
        let g = f.affine([[q[0].clone(), q[1].clone(), z.clone()], [q[2].clone(), q[3].clone(), z]]);
        prop_assert_eq!(classified(&g).diagram, classified(&f).diagram);
    }

    #[test]
    fn key_invariant_under_homothety(i in 0..GERMS.len(), n in -9i64..=9, d in 1i64..=9) {
        prop_assume!(n != 0);
        let c = rat(n, d);
        let z = int(0);
        let f = parse_curve(GERMS[i]).unwrap();
        let g = f.affine([[c.clone(), z.clone(), z.clone()], [z.clone(), c, z]]);
        prop_assert_eq!(classified(&g).diagram, classified(&f).diagram);
    }

    #[test]
    fn branch_structure(i in 0..GERMS.len(), j in 0..GERMS.len()) {
        let f = parse_curve(GERMS[i]).unwrap();
        let g = parse_curve(GERMS[j]).unwrap();
        let fg = f.mul(&g);
        prop_assume!(sextic_core::curve::is_locally_reduced(&fg));
        let c = classified(&fg);
        let bs = &c.branches;
        let total: u64 = bs.branches.iter().map(|b| b.ramification * b.conjugates() as u64).sum();
        prop_assert_eq!(total, bs.multiplicity as u64);

        let poly = newton_polygon(&c.local).unwrap();
        for b in &bs.branches {
            if let Some((q, _)) = b.terms.first() {
                prop_assert!(poly.edges.iter().any(|e| &e.exponent == q), "leading exponent {q} is not an edge slope");
            }
        }
        let n = bs.geometric.len();
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    if a != b && b != k && a != k {
                        let lo = bs.contact[a][k].clone().min(bs.contact[k][b].clone());
                        prop_assert!(bs.contact[a][b] >= lo, "ultrametric inequality fails");
                    }
                }
            }
        }
    }
}
