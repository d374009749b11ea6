use coaxal_core::bary::collinear;
use coaxal_core::centers::{complement, isogonal_conjugate, named_center, tripolar, tripole, CenterId};
use coaxal_core::circles::{circle_through_3, power, radical_axis};
use coaxal_core::theorems::*;
use coaxal_core::*;
use proptest::prelude::*;

fn triangle() -> impl Strategy<Value = ExactTriangle> {
    (2i64..40, 2i64..40, 2i64..40)
        .prop_filter("strict triangle inequality", |(a, b, c)| a + b > *c && b + c > *a && c + a > *b)
        .prop_map(|(a, b, c)| ExactTriangle::from_int_sides(a, b, c).unwrap())
}

fn scalene() -> impl Strategy<Value = ExactTriangle> {
    triangle().prop_filter("scalene", |t| t.is_scalene())
}

/// Finite, off the sidelines, with finite cevian traces.
fn point() -> impl Strategy<Value = ExactPoint> {
    (-9i64..16, -9i64..16, -9i64..16)
        .prop_filter("generic point", |&(x, y, z)| {
            x != 0 && y != 0 && z != 0 && x + y + z != 0 && x + y != 0 && y + z != 0 && z + x != 0
        })
        .prop_map(|(x, y, z)| ExactPoint::ints(x, y, z))
}

fn ok_or_precondition(r: Result<CheckReport>) -> std::result::Result<(), TestCaseError> {
    match r {
        Ok(r) => {
            prop_assert!(r.passed(), "failed {:?}", r.failed_subs());
            Ok(())
        }
        Err(e) => {
            prop_assert!(is_precondition_error(&e), "unexpected error {e}");
            Ok(())
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isogonal_conjugation_is_an_involution(t in triangle(), p in point()) {
        let q = isogonal_conjugate(&t, &p).unwrap();
        prop_assert_eq!(isogonal_conjugate(&t, &q).unwrap(), p);
    }

    #[test]
    fn tripole_inverts_tripolar(p in point()) {
        prop_assert_eq!(tripole(&tripolar(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn complement_lies_on_the_line_through_the_centroid(p in point()) {
        let c = complement(&p).unwrap();
        prop_assert!(collinear(&ExactPoint::centroid(), &p, &c));
    }

    #[test]
    fn radical_axis_points_have_equal_power(
        t in triangle(),
        a in point(), b in point(), c in point(), d in point(), e in point(), f in point(), x in point(),
    ) {
        let (Ok(c1), Ok(c2)) = (circle_through_3(&t, &a, &b, &c), circle_through_3(&t, &d, &e, &f)) else {
            return Ok(());
        };
        prop_assume!(!c1.is_degenerate() && !c2.is_degenerate());
        let Ok(axis) = radical_axis(&c1, &c2) else { return Ok(()) };
        let Ok(through_x) = coaxal_core::bary::join(&x, &ExactPoint::vertex(0)) else { return Ok(()) };
        let Ok(m) = coaxal_core::bary::meet(&axis, &through_x) else { return Ok(()) };
        prop_assume!(m.is_finite());
        prop_assert_eq!(power(&t, &c1, &m).unwrap(), power(&t, &c2, &m).unwrap());
    }

    #[test]
    fn conic_through_incenter_symmedian_and_x56_x58(t in scalene()) {
        let conic = incenter_centroid_conic(&t).unwrap();
        for id in [CenterId::I, CenterId::K, CenterId::X56, CenterId::X58] {
            prop_assert!(conic.contains(&named_center(&t, id).unwrap()), "{:?}", id);
        }
    }

    #[test]
    fn theorem5_verdict_is_scale_invariant(t in scalene(), q in point(), k in 2i64..7) {
        let big = t.scaled(&Exact::from_int(k)).unwrap();
        match (check_theorem5(&t, &q), check_theorem5(&big, &q)) {
            (Ok(r1), Ok(r2)) => {
                prop_assert_eq!(r1.witnesses.get("coaxal"), r2.witnesses.get("coaxal"));
                prop_assert_eq!(r1.witnesses.get("q_on_conic"), r2.witnesses.get("q_on_conic"));
            }
            (Err(e1), Err(e2)) => prop_assert_eq!(e1, e2),
            (a, b) => prop_assert!(false, "backends disagree: {:?} vs {:?}", a.map(|r| r.verdict), b.map(|r| r.verdict)),
        }
    }

    #[test]
    fn theorem5_holds_for_random_q(t in scalene(), q in point()) {
        ok_or_precondition(check_theorem5(&t, &q))?;
    }

    #[test]
    fn theorem10_holds_for_random_p_and_q(t in scalene(), p in point(), q in point()) {
        prop_assume!(p != q);
        ok_or_precondition(check_theorem10(&t, &p, &q))?;
    }

    #[test]
    fn theorem10_q_at_r_is_coaxal(t in scalene(), p in point()) {
        let Ok(loc) = theorem10_locus(&t, &p) else { return Ok(()) };
        prop_assume!(!loc.r.is_vertex() && loc.r != p);
        if let Ok(r) = check_theorem10(&t, &p, &loc.r) {
            prop_assert!(r.passed(), "failed {:?}", r.failed_subs());
            prop_assert_eq!(r.witnesses.get("coaxal").and_then(|v| v.as_bool()), Some(true));
        }
    }

    #[test]
    fn theorem7_holds_on_the_euler_line(t in scalene(), num in -5i64..6, den in 1i64..5) {
        prop_assume!(!t.is_right());
        let o = named_center(&t, CenterId::O).unwrap();
        let h = named_center(&t, CenterId::H).unwrap();
        let p = o.lerp(&h, &Exact::from_ratio(num, den)).unwrap();
        prop_assume!(!p.on_sideline() && p != h);
        let r = check_theorem7(&t, &p);
        if let Ok(r) = &r {
            prop_assert_eq!(r.witnesses.get("coaxal_with_o_on_axis").and_then(|v| v.as_bool()), Some(true));
        }
        ok_or_precondition(r)?;
    }
}
