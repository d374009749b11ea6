use coaxal_core::centers::{named_center, CenterId};
use coaxal_core::theorems::*;
use coaxal_core::*;

fn t131415() -> ExactTriangle {
    ExactTriangle::from_int_sides(13, 14, 15).unwrap()
}

fn flag(r: &CheckReport, key: &str) -> Option<bool> {
    r.witnesses.get(key).and_then(|v| v.as_bool())
}

fn center(t: &ExactTriangle, id: CenterId) -> ExactPoint {
    named_center(t, id).unwrap()
}

#[test]
fn theorem5_named_points_on_the_conic_give_a_pencil() {
    let t = t131415();
    for id in [CenterId::K, CenterId::X56, CenterId::X58] {
        let r = check_theorem5(&t, &center(&t, id)).unwrap();
        assert!(r.passed(), "{id:?}: {:?}", r.failed_subs());
        assert_eq!(flag(&r, "q_on_conic"), Some(true));
        assert_eq!(flag(&r, "coaxal"), Some(true));
        assert_eq!(r.sub("x58_on_axis"), Some(true));
    }
}

#[test]
fn theorem5_point_off_the_conic_is_not_coaxal() {
    let t = t131415();
    let r = check_theorem5(&t, &ExactPoint::ints(1, 2, 3)).unwrap();
    assert!(r.passed());
    assert_eq!(flag(&r, "q_on_conic"), Some(false));
    assert_eq!(flag(&r, "coaxal"), Some(false));
}

#[test]
fn theorem5_rejects_equilateral_and_vertices() {
    let eq = ExactTriangle::from_int_sides(5, 5, 5).unwrap();
    assert_eq!(check_theorem5(&eq, &ExactPoint::ints(1, 2, 3)).unwrap_err(), GeomError::EquilateralExcluded);
    assert_eq!(check_theorem5(&t131415(), &ExactPoint::vertex(1)).unwrap_err(), GeomError::VertexInput);
}

#[test]
fn theorem10_q_at_r_is_tangent() {
    let t = t131415();
    let p = ExactPoint::ints(7, 3, 5);
    let loc = theorem10_locus(&t, &p).unwrap();
    let r = check_theorem10(&t, &p, &loc.r).unwrap();
    assert!(r.passed(), "{:?}", r.failed_subs());
    assert_eq!(flag(&r, "coaxal"), Some(true));
    assert_eq!(r.sub("axis_tangent_at_r"), Some(true));
}

#[test]
fn theorem10_off_locus() {
    let t = t131415();
    let r = check_theorem10(&t, &ExactPoint::ints(7, 3, 5), &ExactPoint::ints(1, 2, 3)).unwrap();
    assert!(r.passed(), "{:?}", r.failed_subs());
    assert_eq!(flag(&r, "q_on_locus"), Some(false));
    assert_eq!(flag(&r, "coaxal"), Some(false));
    assert_eq!(r.sub("rbc_at_r_is_scaled_delta"), Some(true));
}

#[test]
fn theorem10_locus_contains_p_and_r() {
    let t = t131415();
    let p = ExactPoint::ints(7, 3, 5);
    let loc = theorem10_locus(&t, &p).unwrap();
    assert!(loc.contains(&p));
    assert!(loc.contains(&loc.r));
    assert_eq!(loc.r, r_point(&t, &p).unwrap());
}

#[test]
fn lemma6_on_several_triangles() {
    for (a, b, c) in [(13, 14, 15), (6, 8, 10), (4, 13, 15)] {
        let t = ExactTriangle::from_int_sides(a, b, c).unwrap();
        let r = check_lemma6(&t).unwrap();
        assert!(r.passed(), "{a},{b},{c}: {:?}", r.failed_subs());
    }
}

#[test]
fn inversion_suite_cases() {
    let t = t131415();
    for case in InversionCase::ALL {
        let r = check_inversion_suite(&t, case).unwrap();
        assert!(r.passed(), "{case:?}: {:?}", r.failed_subs());
    }
    let k = check_inversion_suite(&t, InversionCase::K).unwrap();
    assert!(!k.downgrades.is_empty());
}

#[test]
fn lemma8_incenter_and_circumcenter() {
    let t = t131415();
    for id in [CenterId::I, CenterId::O] {
        let r = check_lemma8(&t, &center(&t, id)).unwrap();
        assert!(r.passed(), "{id:?}: {:?}", r.failed_subs());
        assert_eq!(r.sub("coaxal"), Some(true));
    }
}

#[test]
fn theorem7_euler_line_points() {
    let t = t131415();
    for id in [CenterId::G, CenterId::NinePoint] {
        let r = check_theorem7(&t, &center(&t, id)).unwrap();
        assert!(r.passed(), "{id:?}: {:?}", r.failed_subs());
        assert_eq!(flag(&r, "p_on_euler_line"), Some(true));
        assert_eq!(flag(&r, "coaxal_with_o_on_axis"), Some(true));
    }
}

#[test]
fn theorem7_incenter_is_off_the_euler_line() {
    let t = t131415();
    let r = check_theorem7(&t, &center(&t, CenterId::I)).unwrap();
    assert!(r.passed(), "{:?}", r.failed_subs());
    assert_eq!(flag(&r, "p_on_euler_line"), Some(false));
    assert_eq!(flag(&r, "coaxal_with_o_on_axis"), Some(false));
}

#[test]
fn orthocenter_gives_a_pencil_for_any_q() {
    let t = t131415();
    for q in [center(&t, CenterId::O), ExactPoint::ints(2, 3, 5)] {
        let r = check_ph_remark(&t, &q).unwrap();
        assert!(r.passed(), "{:?}", r.failed_subs());
        assert_eq!(r.sub("coaxal"), Some(true));
    }
    let right = ExactTriangle::from_int_sides(6, 8, 10).unwrap();
    assert!(check_ph_remark(&right, &ExactPoint::ints(2, 3, 5)).is_err());
}

#[test]
fn float_backend_agrees_on_13_14_15() {
    let t = t131415().cast::<f64>().unwrap();
    let k = named_center(&t, CenterId::K).unwrap();
    let r = check_theorem5(&t, &k).unwrap();
    assert!(r.passed(), "{:?}", r.failed_subs());
    assert_eq!(flag(&r, "coaxal"), Some(true));
}
