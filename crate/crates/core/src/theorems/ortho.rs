//! Circles through the vertices centered on the midlines or on the
//! orthotransversal of a point.

use super::{others, same_value, second_on_sideline, wires, VERTEX_NAMES};
use crate::bary::{collinear, join, HLine, HPoint, TriangleMetric};
use crate::cartesian::{CartCircle, Cycle, Line2};
use crate::centers::{named_center, CenterId};
use crate::circles::{coaxal, from_cartesian, power, radical_axis, Circle};
use crate::constructions::{euler_line, foot, identity_derived, orthotransversal, perpendicular_at, reflect_point};
use crate::error::{GeomError, Result};
use crate::report::{wire, CheckReport, ReportBuilder};
use crate::scalar::Scalar;

fn ortho_preconditions<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<HPoint<S>> {
    if p.is_vertex() {
        return Err(GeomError::VertexInput);
    }
    if !p.is_finite() {
        return Err(GeomError::PointAtInfinity);
    }
    let h = named_center(t, CenterId::H)?;
    if *p == h {
        return Err(GeomError::Degenerate("P = H: every chord through H is a radical axis".into()));
    }
    Ok(h)
}

/// Circles through each vertex and `p` centered on the midline parallel to
/// the opposite side.
pub fn lemma8_circles<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<[Circle<S>; 3]> {
    let v = t.embedding()?;
    let cp = t.to_cartesian(p)?;
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let (j, k) = others(i);
        let midline = Line2::through(&v[i].midpoint(&v[j]), &v[i].midpoint(&v[k]))?;
        let bisector = Line2::through(&v[i], &cp)?.perpendicular_through(&v[i].midpoint(&cp))?;
        let center = bisector
            .intersect(&midline)
            .ok_or_else(|| GeomError::Degenerate("P on an altitude: center at infinity".into()))?;
        out.push(from_cartesian(t, &Cycle::Circle(CartCircle::through(center, &v[i])))?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

pub fn check_lemma8<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<CheckReport> {
    let h = ortho_preconditions(t, p)?;
    let mut b = ReportBuilder::new("lemma8", t);
    b.input("p", p);
    let circles = lemma8_circles(t, p)?;
    let half = power(t, &Circle::circumcircle(t), &h)? / S::from_int(2);
    b.witness("half_power_of_h", wire(&half));
    let ph = join(p, &h)?;
    for i in 0..3 {
        let name = VERTEX_NAMES[i];
        let altitude_foot = foot(t, &HPoint::vertex(i), &HLine::sideline(i))?;
        b.check(&format!("circle_{name}_through_p_and_altitude_foot"), circles[i].contains(p) && circles[i].contains(&altitude_foot));
        b.check(&format!("half_power_{name}"), same_value(&power(t, &circles[i], &h)?, &half));
    }
    for (x, y) in [(0, 1), (1, 2), (2, 0)] {
        let ax = radical_axis(&circles[x], &circles[y])?;
        b.check(&format!("axis_{}{}_is_ph", VERTEX_NAMES[x], VERTEX_NAMES[y]), ax == ph);
    }
    let pv = coaxal(&circles[0], &circles[1], &circles[2])?;
    b.witness("pencil_minors", wires(&pv.witness_minors));
    b.check("coaxal", pv.coaxal);
    Ok(b.finish())
}

pub fn check_lemma9<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<CheckReport> {
    ortho_preconditions(t, p)?;
    let mut b = ReportBuilder::new("lemma9", t);
    b.input("p", p);
    let circles = lemma8_circles(t, p)?;
    let ot = orthotransversal(t, p)?;
    let mut pts = Vec::with_capacity(3);
    for i in 0..3 {
        let altitude_foot = foot(t, &HPoint::vertex(i), &HLine::sideline(i))?;
        let o = second_on_sideline(&circles[i], i, &altitude_foot)?;
        b.check(&format!("point_{}_on_orthotransversal", VERTEX_NAMES[i]), o == ot.points[i]);
        pts.push(o);
    }
    b.witness("points", &pts).witness("orthotransversal", &ot.line);
    let col = collinear(&pts[0], &pts[1], &pts[2]);
    b.check("collinear", col);
    if col {
        let line = join(&pts[0], &pts[1]).or_else(|_| join(&pts[0], &pts[2]))?;
        b.check("line_is_orthotransversal", line == ot.line);
    }
    Ok(b.finish())
}

/// Circle centered at `center` through vertex `i`; for a center at infinity
/// on the sideline, the perpendicular to that sideline through the vertex.
pub fn centered_through_vertex<S: Scalar>(t: &TriangleMetric<S>, center: &HPoint<S>, i: usize) -> Result<Circle<S>> {
    if !center.is_finite() {
        let l = perpendicular_at(t, &HLine::sideline(i), &HPoint::vertex(i))?;
        return Ok(Circle::degenerate_line(t, l));
    }
    let c = CartCircle::through(t.to_cartesian(center)?, &t.vertex_cart(i)?);
    from_cartesian(t, &Cycle::Circle(c))
}

pub fn check_theorem7<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<CheckReport> {
    if t.is_equilateral() {
        return Err(GeomError::Equilateral);
    }
    ortho_preconditions(t, p)?;
    let mut b = ReportBuilder::new("theorem7", t);
    b.input("p", p);
    let euler = euler_line(&identity_derived(t)?)?;
    let on_euler = euler.contains(p);
    b.witness("p_on_euler_line", on_euler);
    let ot = orthotransversal(t, p)?;
    b.witness("centers", &ot.points);
    let mut circles = Vec::with_capacity(3);
    let mut reflections_ok = true;
    for i in 0..3 {
        let c = centered_through_vertex(t, &ot.points[i], i)?;
        let refl = reflect_point(t, &HPoint::vertex(i), &HLine::sideline(i))?;
        reflections_ok &= c.contains(&refl);
        circles.push(c);
    }
    b.check("circles_through_vertex_reflections", reflections_ok);
    let pv = coaxal(&circles[0], &circles[1], &circles[2])?;
    b.witness("coaxal", pv.coaxal);
    b.witness("pencil_minors", wires(&pv.witness_minors));
    let o = named_center(t, CenterId::O)?;
    let o_on_axis = match &pv.common_radical_axis {
        Some(ax) => {
            b.witness("radical_axis", ax);
            ax.contains(&o)
        }
        None => false,
    };
    let claim = pv.coaxal && o_on_axis;
    b.witness("coaxal_with_o_on_axis", claim);
    b.check("euler_iff_coaxal_with_o", on_euler == claim);
    Ok(b.finish())
}
