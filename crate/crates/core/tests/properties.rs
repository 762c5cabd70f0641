use belyi_core::belyi::{counting, face_vector, fullerene_passport};
use belyi_core::compose::{ExtPoint, Moebius};
use belyi_core::multipoly::{parse, sequential_linear_solve, Equation, VarSet};
use belyi_core::numgeom::{inverse_stereographic, ComplexPoint};
use belyi_core::{GaussRat, RationalMap, UniPoly};
use num_traits::Zero;
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-9i64..=9, -3i64..=3, 1i64..=4).prop_map(|(re, im, d)| {
        let r = GaussRat::from_ints(re, im);
        &r / &GaussRat::from_int(d)
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(gauss(), 0..=max_deg + 1).prop_map(UniPoly::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn moebius() -> impl Strategy<Value = Moebius> {
    (gauss(), gauss(), gauss(), gauss()).prop_filter_map("invertible", |(a, b, c, d)| Moebius::new(a, b, c, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(p in poly(4), q in poly(4), r in poly(3)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &UniPoly::one(), p.clone());
    }

    #[test]
    fn gcd_axioms(p in nonzero_poly(4), q in nonzero_poly(4), c in nonzero_poly(2)) {
        let pc = &p * &c;
        let qc = &q * &c;
        let g = pc.gcd(&qc);
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&pc) && g.divides(&qc));
        prop_assert!(c.divides(&g));
        prop_assert_eq!(g.clone(), qc.gcd(&pc));
        prop_assert_eq!(pc.exact_div(&c), Some(p.clone()));
    }

    #[test]
    fn derivative_axioms(p in poly(5), q in poly(5), a in gauss()) {
        prop_assert_eq!((&p + &q).derivative(), &p.derivative() + &q.derivative());
        prop_assert_eq!(p.scale(&a).derivative(), p.derivative().scale(&a));
        prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
    }

    #[test]
    fn chain_rule(p in poly(4), q in poly(3)) {
        let lhs = p.compose(&q).derivative();
        let rhs = &p.derivative().compose(&q) * &q.derivative();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(4), q in poly(4), n in 1usize..5) {
        prop_assert_eq!((&p * &q).substitute_power(n), &p.substitute_power(n) * &q.substitute_power(n));
        prop_assert_eq!((&p + &q).substitute_power(n), &p.substitute_power(n) + &q.substitute_power(n));
        prop_assert_eq!(p.substitute_power(n), p.compose(&UniPoly::monomial(GaussRat::from_int(1), n)));
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(p in nonzero_poly(3), q in nonzero_poly(2)) {
        let f = &(&p * &q) * &q;
        let back = f
            .squarefree_decomposition()
            .into_iter()
            .fold(UniPoly::one(), |acc, (g, e)| &acc * &g.pow(e));
        prop_assert_eq!(back, f.monic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ratmap_composition_is_associative(
        f in (nonzero_poly(2), nonzero_poly(2)),
        g in (nonzero_poly(2), nonzero_poly(1)),
        h in (nonzero_poly(1), nonzero_poly(1)),
    ) {
        let mk = |(n, d): (UniPoly, UniPoly)| RationalMap::new(GaussRat::from_int(1), n, d).ok();
        if let (Some(f), Some(g), Some(h)) = (mk(f), mk(g), mk(h)) {
            prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        }
    }

    #[test]
    fn moebius_group_laws(m in moebius(), n in moebius(), k in moebius(), x in gauss()) {
        prop_assert_eq!(m.compose(&n).compose(&k), m.compose(&n.compose(&k)));
        prop_assert_eq!(m.compose(&m.inverse()), Moebius::identity());
        let p = ExtPoint::Finite(x);
        prop_assert_eq!(m.compose(&n).apply(&p), m.apply(&n.apply(&p)));
        prop_assert_eq!(m.to_rational_map().compose(&n.to_rational_map()), m.compose(&n).to_rational_map());
    }

    #[test]
    fn three_point_maps(m in moebius()) {
        let src = [ExtPoint::int(0), ExtPoint::int(1), ExtPoint::Infinity];
        let dst = [m.apply(&src[0]), m.apply(&src[1]), m.apply(&src[2])];
        prop_assert_eq!(Moebius::from_three_points(&src, &dst).unwrap(), m);
    }

    #[test]
    fn elimination_replay_annihilates(a in -5i64..=5, b in -5i64..=5, c in -5i64..=5, p in -9i64..=9, q in -9i64..=9, r in -9i64..=9) {
        let vars = VarSet::new(&["x", "y", "z"]);
        let eqs = [
            format!("x + ({a})*y + ({b})*z - ({p})"),
            format!("y - ({c})*z^2 - ({q})"),
            format!("z - ({r})"),
        ];
        let system: Vec<Equation> =
            eqs.iter().enumerate().map(|(i, s)| Equation::new(format!("e{i}"), parse(&vars, s).unwrap())).collect();
        let trace = sequential_linear_solve(&system, &["x", "y", "z"], &[]).unwrap();
        prop_assert!(trace.free_vars.is_empty());
        for res in trace.replay(&system).unwrap() {
            prop_assert!(res.is_zero());
        }
        let y = q + c * r * r;
        let x = p - a * y - b * r;
        let want = parse(&vars, &x.to_string()).unwrap();
        prop_assert_eq!(trace.resolved_value("x"), Some(&want));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn projected_points_lie_on_sphere(re in -50.0f64..50.0, im in -50.0f64..50.0) {
        let s = inverse_stereographic(ComplexPoint::new(re, im));
        prop_assert!(s.sphere_residual().abs() <= 1e-12);
    }
}

#[test]
fn face_vector_identities() {
    for p6 in 0..100u64 {
        let fv = face_vector(p6);
        assert!(fv.satisfies_face_system(), "p6 = {p6}");
        assert_eq!(fv.f0 as i64 - fv.f1 as i64 + fv.f2 as i64, 2);
        assert_eq!(3 * fv.f0, 2 * fv.f1);
        assert_eq!(fv.p5, 12);
        assert_eq!(fv.realizable, p6 != 1);
        assert_eq!(fullerene_passport(p6).degree(), 2 * fv.f1);
        assert_eq!(counting(p6).excess, 3);
    }
}

#[test]
fn zero_polynomial_has_no_degree() {
    assert!(UniPoly::new(vec![GaussRat::zero(); 3]).degree().is_none());
}
