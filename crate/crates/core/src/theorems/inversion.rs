//! The four special points of the conic `(IG)*` seen through inversion in
//! the incircle, and the cyclic quadrilaterals of the mixtilinear case.

use super::{cevian_circles, others, require_scalene, same_value, vertex_circle, VERTEX_NAMES};
use crate::bary::{collinear, concurrent, join, meet, HLine, HPoint, TriangleMetric};
use crate::cartesian::{CartCircle, Cycle};
use crate::centers::{named_center, tripolar, CenterId};
use crate::circles::{
    circle_center, circle_through_3, coaxal, from_cartesian, orthogonal, power, radical_axis, radius2, Circle,
    CircleKind,
};
use crate::constructions::{
    apollonius_circle, bisector_feet, circumcevian_triangle, derived_triangle, euler_line, invert_bary_circle,
    invert_bary_point, orthocorrespondent, orthotransversal, perpendicular_at, reflect_point, DerivedTriangle,
};
use crate::error::{GeomError, Result};
use crate::report::{wire, CheckReport, ReportBuilder};
use crate::scalar::Scalar;

pub fn check_lemma6<S: Scalar>(t: &TriangleMetric<S>) -> Result<CheckReport> {
    require_scalene(t)?;
    let mut b = ReportBuilder::new("lemma6", t);
    let x56 = named_center(t, CenterId::X56)?;
    let ap = circumcevian_triangle(t, &x56)?;
    let arcs = [CenterId::Mprime, CenterId::Nprime, CenterId::Pprime].map(|id| named_center(t, id));
    let contacts = [CenterId::D, CenterId::E, CenterId::F].map(|id| named_center(t, id));
    let feet = bisector_feet(t)?.internal;
    let circ = Circle::circumcircle(t);
    let mut us = Vec::with_capacity(3);
    for v in 0..3 {
        let (j, k) = others(v);
        let name = VERTEX_NAMES[v];
        let arc = arcs[v].clone()?;
        let contact = contacts[v].clone()?;
        let c1 = circle_through_3(t, &ap[v], &arc, &feet[v])?;
        let c2 = circle_through_3(t, &ap[j], &ap[k], &feet[v])?;
        b.check(&format!("arc_midpoint_circle_{name}_through_contact"), c1.contains(&contact));
        b.check(&format!("chord_circle_{name}_through_contact"), c2.contains(&contact));
        let u = meet(&radical_axis(&c1, &circ)?, &radical_axis(&c2, &circ)?)?;
        b.check(&format!("radical_center_{name}_on_sideline"), HLine::sideline(v).contains(&u));
        let (axa, _) = vertex_circle(t, v, &feet[v], &ap[v])?;
        b.check(&format!("radical_center_{name}_on_vertex_circle"), axa.contains(&u));
        us.push(u);
    }
    b.witness("radical_centers", &us);
    let col = collinear(&us[0], &us[1], &us[2]);
    b.check("radical_centers_collinear", col);
    if col {
        let line = join(&us[0], &us[1])?;
        b.witness("line", &line);
        b.check("line_is_tripolar_of_x57", line == tripolar(&named_center(t, CenterId::X57)?)?);
        let i = named_center(t, CenterId::I)?;
        b.check("line_is_orthotransversal_of_incenter", line == orthotransversal(t, &i)?.line);
    }
    Ok(b.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InversionCase {
    X56,
    X58,
    K,
    I,
}

impl InversionCase {
    pub const ALL: [InversionCase; 4] = [InversionCase::X56, InversionCase::X58, InversionCase::K, InversionCase::I];

    pub fn check_id(self) -> &'static str {
        match self {
            InversionCase::X56 => "inversion-x56",
            InversionCase::X58 => "inversion-x58",
            InversionCase::K => "inversion-k",
            InversionCase::I => "inversion-i",
        }
    }

    pub fn center(self) -> CenterId {
        match self {
            InversionCase::X56 => CenterId::X56,
            InversionCase::X58 => CenterId::X58,
            InversionCase::K => CenterId::K,
            InversionCase::I => CenterId::I,
        }
    }
}

/// Inversion in the incircle: center `I`, power `r²`.
struct IncircleInversion<'a, S: Scalar> {
    t: &'a TriangleMetric<S>,
    center: HPoint<S>,
    power: S,
}

impl<'a, S: Scalar> IncircleInversion<'a, S> {
    fn new(t: &'a TriangleMetric<S>) -> Result<Self> {
        let s = t.semiperimeter()?;
        let power = t.area2().clone() / (s.clone() * s);
        Ok(Self { t, center: named_center(t, CenterId::I)?, power })
    }

    fn point(&self, p: &HPoint<S>) -> Result<HPoint<S>> {
        invert_bary_point(self.t, &self.center, &self.power, p)
    }

    fn circle(&self, c: &Circle<S>) -> Result<Circle<S>> {
        invert_bary_circle(self.t, &self.center, &self.power, c)
    }

    fn image_vertices(&self) -> Result<[HPoint<S>; 3]> {
        Ok([self.point(&HPoint::vertex(0))?, self.point(&HPoint::vertex(1))?, self.point(&HPoint::vertex(2))?])
    }
}

fn side_of<S: Scalar>(v: &[HPoint<S>; 3], i: usize) -> Result<HLine<S>> {
    let (j, k) = others(i);
    join(&v[j], &v[k])
}

/// Orthotransversal with respect to the derived triangle, in reference
/// coordinates.
fn derived_orthotransversal<S: Scalar>(dt: &DerivedTriangle<S>, p: &HPoint<S>) -> Result<HLine<S>> {
    let ot = orthotransversal(&dt.metric, &dt.point_from_ref(p)?)?;
    dt.line_to_ref(&ot.line)
}

pub fn check_inversion_suite<S: Scalar>(t: &TriangleMetric<S>, case: InversionCase) -> Result<CheckReport> {
    if t.is_equilateral() {
        return Err(GeomError::EquilateralExcluded);
    }
    let mut b = ReportBuilder::new(case.check_id(), t);
    b.input("case", case.check_id());
    let psi = IncircleInversion::new(t)?;
    let i = psi.center.clone();
    let r2 = psi.power.clone();
    b.witness("inversion_power", wire(&r2));
    let quarter = r2.clone() / S::from_int(4);

    let a1 = psi.image_vertices()?;
    let contacts = [CenterId::D, CenterId::E, CenterId::F].map(|id| named_center(t, id));
    let contacts = [contacts[0].clone()?, contacts[1].clone()?, contacts[2].clone()?];
    let half = S::from_ratio(1, 2);
    let mut mids_ok = true;
    for v in 0..3 {
        let (j, k) = others(v);
        mids_ok &= a1[v] == contacts[j].lerp(&contacts[k], &half)?;
    }
    b.witness("image_vertices", &a1);
    b.check("vertex_images_are_contact_midpoints", mids_ok);

    let dt = derived_triangle(t, &a1[0], &a1[1], &a1[2])?;
    let o1 = dt.center(CenterId::O)?;
    b.witness("image_triangle_acute", dt.metric.is_acute());
    b.check("incenter_is_image_orthocenter", dt.center(CenterId::H)? == i);

    let circ = Circle::circumcircle(t);
    let circ1 = psi.circle(&circ)?;
    b.check("circumcircle_image_through_image_vertices", circ1 == circle_through_3(t, &a1[0], &a1[1], &a1[2])?);
    b.check("circumcircle_image_centered_at_o1", circle_center(t, &circ1)? == o1);
    b.check("circumcircle_image_radius_half_inradius", same_value(&radius2(t, &circ1)?, &quarter));

    let mut gamma_ok = true;
    for v in 0..3 {
        let (j, k) = others(v);
        let g = psi.circle(&Circle::degenerate_line(t, HLine::sideline(v)))?;
        gamma_ok &= same_value(&radius2(t, &g)?, &quarter)
            && g.contains(&i)
            && g.contains(&contacts[v])
            && g.contains(&a1[j])
            && g.contains(&a1[k]);
    }
    b.check("sideline_images_congruent_through_incenter", gamma_ok);

    let feet = bisector_feet(t)?.internal;
    let mut trace_images = Vec::with_capacity(3);
    let mut refl_ok = true;
    for v in 0..3 {
        let x1 = psi.point(&feet[v])?;
        refl_ok &= x1 == reflect_point(t, &a1[v], &side_of(&a1, v)?)?;
        trace_images.push(x1);
    }
    b.check("trace_images_are_vertex_reflections", refl_ok);

    let q = named_center(t, case.center())?;
    let cc = cevian_circles(t, &i, &q)?;
    let mut images = Vec::with_capacity(3);
    for c in &cc.circles {
        images.push(psi.circle(c)?);
    }

    if case == InversionCase::I {
        let mut altitudes_ok = true;
        let mut lines = Vec::with_capacity(3);
        for v in 0..3 {
            match images[v].kind() {
                CircleKind::DegenerateLine(l) => {
                    altitudes_ok &= *l == perpendicular_at(t, &side_of(&a1, v)?, &a1[v])?
                        && l.contains(&trace_images[v]);
                    lines.push(l.clone());
                }
                CircleKind::CircumForm(_) => altitudes_ok = false,
            }
        }
        b.check("images_are_altitudes", altitudes_ok);
        let conc = lines.len() == 3 && concurrent(&lines[0], &lines[1], &lines[2]) && lines.iter().all(|l| l.contains(&i));
        b.check("altitudes_concurrent_at_incenter", conc);
        let pv = coaxal(&images[0], &images[1], &images[2])?;
        b.witness("axis_undefined", pv.axis_undefined);
        b.note("degenerate pencil of concurrent lines; the center line is the line at infinity");
        return Ok(b.finish());
    }

    let mut centers = Vec::with_capacity(3);
    let mut on_sides = true;
    let mut through = true;
    for v in 0..3 {
        let o = circle_center(t, &images[v])?;
        on_sides &= side_of(&a1, v)?.contains(&o);
        through &= images[v].contains(&a1[v]) && images[v].contains(&trace_images[v]);
        centers.push(o);
    }
    b.witness("image_centers", &centers);
    b.check("image_centers_on_image_sidelines", on_sides);
    b.check("images_through_vertices_and_reflections", through);
    let col = collinear(&centers[0], &centers[1], &centers[2]);
    b.check("image_centers_collinear", col);
    let center_line = if col { join(&centers[0], &centers[1]).ok() } else { None };
    let pv = coaxal(&images[0], &images[1], &images[2])?;
    b.check("images_coaxal", pv.coaxal);
    b.check(
        "o1_on_radical_axis",
        pv.common_radical_axis.as_ref().map(|ax| ax.contains(&o1)).unwrap_or(false),
    );

    match case {
        InversionCase::X56 => {
            let mut antipodal = true;
            for v in 0..3 {
                antipodal &= psi.point(&cc.circumcevian[v])? == a1[v].lerp(&o1, &S::from_int(2))?;
            }
            b.check("circumcevian_images_antipodal", antipodal);
            if let Some(l) = &center_line {
                b.check("center_line_is_orthotransversal_of_o1", *l == derived_orthotransversal(&dt, &o1)?);
            }
        }
        InversionCase::X58 => {
            b.check("images_through_o1", images.iter().all(|c| c.contains(&o1)));
            let n1 = dt.center(CenterId::NinePoint)?;
            if let Some(l) = &center_line {
                b.check("center_line_is_orthotransversal_of_n1", *l == derived_orthotransversal(&dt, &n1)?);
            }
        }
        InversionCase::K => {
            let mut orth = true;
            let mut apol = true;
            for v in 0..3 {
                orth &= orthogonal(t, &images[v], &circ1)?;
                apol &= images[v] == dt.circle_to_ref(t, &apollonius_circle(&dt.metric, v)?)?;
            }
            b.check("images_orthogonal_to_o1_circle", orth);
            b.check("images_are_image_apollonius_circles", apol);
            let part = match symmedian_pencil(t)? {
                Some(part) => part,
                None => {
                    b.downgrade("tangent-circle pencil points are irrational; checked in floating point");
                    let tf = t.cast::<f64>()?;
                    symmedian_pencil(&tf)?.ok_or(GeomError::NotExact("float pencil"))?
                }
            };
            b.witness("pencil_discriminant", part.discriminant);
            if let Some(l1) = &part.l1 {
                b.witness("l1", l1);
            }
            for (name, pass) in part.subs {
                b.check(&name, pass);
            }
            if !part.intersects {
                b.note("tangent-circle pencil does not intersect: candidate counterexample to the two common points");
            }
        }
        InversionCase::I => unreachable!(),
    }
    Ok(b.finish())
}

struct PencilPart {
    subs: Vec<(String, bool)>,
    discriminant: f64,
    intersects: bool,
    l1: Option<[String; 3]>,
}

/// Circles on the diameters joining each image vertex to the center of the
/// image Apollonius circle, and their common points on the Euler line.
/// `None` when those points are not representable in the backend.
fn symmedian_pencil<T: Scalar>(t: &TriangleMetric<T>) -> Result<Option<PencilPart>> {
    let psi = IncircleInversion::new(t)?;
    let i = psi.center.clone();
    let a1 = psi.image_vertices()?;
    let dt = derived_triangle(t, &a1[0], &a1[1], &a1[2])?;
    let circ1 = circle_through_3(t, &a1[0], &a1[1], &a1[2])?;
    let euler = euler_line(&dt)?;
    let mut centers = Vec::with_capacity(3);
    let mut pencil = Vec::with_capacity(3);
    for v in 0..3 {
        let ap = dt.circle_to_ref(t, &apollonius_circle(&dt.metric, v)?)?;
        let oa = circle_center(t, &ap)?;
        let c = CartCircle::with_diameter(&t.to_cartesian(&a1[v])?, &t.to_cartesian(&oa)?);
        pencil.push((from_cartesian(t, &Cycle::Circle(c.clone()))?, c));
        centers.push(oa);
    }
    let mut subs = Vec::new();
    let pv = coaxal(&pencil[0].0, &pencil[1].0, &pencil[2].0)?;
    subs.push(("pencil_coaxal".to_string(), pv.coaxal));
    subs.push((
        "pencil_axis_is_image_euler_line".to_string(),
        pv.common_radical_axis.as_ref().map(|ax| *ax == euler).unwrap_or(false),
    ));
    let half = power(t, &circ1, &i)? / T::from_int(2);
    let halves = pencil.iter().map(|(c, _)| power(t, c, &i)).collect::<Result<Vec<_>>>()?;
    subs.push(("pencil_power_of_incenter_is_half".to_string(), halves.iter().all(|x| same_value(x, &half))));

    let (disc, pts) = pencil[0].1.line_intersections(&t.line_to_cartesian(&euler)?);
    let intersects = disc.is_positive() && !disc.vanishes(&pencil[0].1.radius2);
    subs.push(("pencil_intersects".to_string(), intersects));
    let mut part = PencilPart { subs, discriminant: disc.to_f64(), intersects, l1: None };
    if !intersects {
        return Ok(Some(part));
    }
    let Some(pts) = pts else {
        return Ok(None);
    };
    let center_line = join(&centers[0], &centers[1])?;
    let k1 = dt.center(CenterId::K)?;
    for (idx, pt) in pts.iter().enumerate() {
        let l = t.from_cartesian(pt)?;
        let tag = if idx == 0 { "l1" } else { "l1_prime" };
        if idx == 0 {
            part.l1 = Some(l.wire());
        }
        part.subs.push((format!("{tag}_on_pencil"), pencil.iter().all(|(c, _)| c.contains(&l))));
        part.subs.push((format!("{tag}_orthotransversal_is_center_line"), derived_orthotransversal(&dt, &l)? == center_line));
        let oc = dt.point_to_ref(&orthocorrespondent(&dt.metric, &dt.point_from_ref(&l)?)?)?;
        part.subs.push((format!("{tag}_orthocorrespondent_is_k1"), oc == k1));
    }
    Ok(Some(part))
}
