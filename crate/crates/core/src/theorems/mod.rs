//! Executable checks: each builds its configuration from constructions and
//! compares it with the claimed incidences and closed forms.

mod cevian;
mod inversion;
mod ortho;

pub use cevian::{
    check_lemma1, check_lemma2, check_lemma3, check_lemma4, check_ph_remark, check_theorem10,
    check_theorem5, circle_from_t, delta_determinant, lemma2_points, r_point, radical_axis_rbc,
    theorem10_locus, Lemma1Circles, Theorem10Kind, Theorem10Locus,
};
pub use inversion::{check_inversion_suite, check_lemma6, InversionCase};
pub use ortho::{centered_through_vertex, check_lemma8, check_lemma9, check_theorem7, lemma8_circles};

use std::fmt;

use crate::bary::{join, HLine, HPoint, TriangleMetric};
use crate::centers::{named_center, CenterId};
use crate::circles::{
    circle_through_3, circumconic_from_line, conic_line_second_intersection, radical_axis, Circle,
    Conic,
};
use crate::constructions::{cevian_triangle, circumcevian_triangle, CevianTriple};
use crate::error::{GeomError, Result};
use crate::report::{CheckReport, ReportBuilder};
use crate::scalar::Scalar;
use crate::vec3::max_abs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma6,
    Lemma8,
    Lemma9,
    Theorem5,
    Theorem7,
    Theorem10,
    InversionX56,
    InversionX58,
    InversionK,
    InversionI,
    PEqualsH,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::Lemma1,
        CheckId::Lemma2,
        CheckId::Lemma3,
        CheckId::Lemma4,
        CheckId::Lemma6,
        CheckId::Lemma8,
        CheckId::Lemma9,
        CheckId::Theorem5,
        CheckId::Theorem7,
        CheckId::Theorem10,
        CheckId::InversionX56,
        CheckId::InversionX58,
        CheckId::InversionK,
        CheckId::InversionI,
        CheckId::PEqualsH,
    ];

    /// Checks that reject the equilateral triangle before any sampling.
    pub fn excludes_equilateral(self) -> bool {
        matches!(
            self,
            CheckId::Theorem5
                | CheckId::Theorem10
                | CheckId::PEqualsH
                | CheckId::InversionX56
                | CheckId::InversionX58
                | CheckId::InversionK
                | CheckId::InversionI
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Lemma1 => "lemma1",
            CheckId::Lemma2 => "lemma2",
            CheckId::Lemma3 => "lemma3",
            CheckId::Lemma4 => "lemma4",
            CheckId::Lemma6 => "lemma6",
            CheckId::Lemma8 => "lemma8",
            CheckId::Lemma9 => "lemma9",
            CheckId::Theorem5 => "theorem5",
            CheckId::Theorem7 => "theorem7",
            CheckId::Theorem10 => "theorem10",
            CheckId::InversionX56 => "inversion-x56",
            CheckId::InversionX58 => "inversion-x58",
            CheckId::InversionK => "inversion-k",
            CheckId::InversionI => "inversion-i",
            CheckId::PEqualsH => "p-equals-h",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Errors that reject the input outright, as opposed to an unlucky sample.
pub fn is_precondition_error(e: &GeomError) -> bool {
    matches!(
        e,
        GeomError::Equilateral
            | GeomError::EquilateralExcluded
            | GeomError::InvalidTriangle(_)
            | GeomError::VertexInput
            | GeomError::NotExact(_)
    )
}

/// Report for a sample the construction could not complete.
pub fn degenerate_report<S: Scalar>(check: CheckId, t: &TriangleMetric<S>, err: &GeomError) -> CheckReport {
    let mut b = ReportBuilder::new(check.as_str(), t);
    b.degenerate(err.to_string());
    b.finish()
}

pub(crate) fn others(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

pub(crate) fn wires<S: Scalar>(xs: &[S]) -> Vec<String> {
    xs.iter().map(|x| x.to_wire()).collect()
}

pub(crate) fn require_scalene<S: Scalar>(t: &TriangleMetric<S>) -> Result<()> {
    if !t.is_scalene() {
        return Err(GeomError::InvalidTriangle("scalene triangle required".into()));
    }
    Ok(())
}

/// The circumconic `(IG)*`, isogonal image of the line through the incenter
/// and the centroid.
pub fn incenter_centroid_conic<S: Scalar>(t: &TriangleMetric<S>) -> Result<Conic<S>> {
    let i = named_center(t, CenterId::I)?;
    circumconic_from_line(t, &join(&i, &HPoint::centroid())?)
}

/// Tangent of the circumcircle at a vertex, `[0 : c² : b²]` at `A`.
pub(crate) fn circumcircle_tangent<S: Scalar>(t: &TriangleMetric<S>, i: usize) -> HLine<S> {
    let (j, k) = others(i);
    let mut l = [S::zero(), S::zero(), S::zero()];
    l[j] = t.sq()[k].clone();
    l[k] = t.sq()[j].clone();
    HLine::new(l).expect("positive squared sides")
}

/// The circle of the pencil spanned by the circumcircle and the degenerate
/// member on `axis` that passes through `p`.
pub fn pencil_circle<S: Scalar>(t: &TriangleMetric<S>, axis: &HLine<S>, p: &HPoint<S>) -> Result<Circle<S>> {
    if !p.is_finite() {
        return Err(GeomError::PointAtInfinity);
    }
    let circ = Circle::circumcircle(t);
    let c0 = circ.eval(p);
    let s = p.coord_sum();
    let lp = axis.eval(p);
    let scale = max_abs(axis.triple()) * max_abs(p.triple()) * S::from_int(3);
    if lp.vanishes(&scale) {
        if circ.contains(p) {
            return Err(GeomError::Degenerate("point on both the circumcircle and the axis".into()));
        }
        return Ok(Circle::degenerate_line(t, axis.clone()));
    }
    let lambda = -c0 / (s * lp);
    Ok(Circle::from_line_part(t, axis.triple().clone().map(|c| c * lambda.clone())))
}

/// Circle through vertex `i`, the point `x` and the circumcircle point
/// `a_prime`. When `a_prime` is the vertex itself, the circle tangent to the
/// circumcircle there is taken. The flag reports that case.
pub(crate) fn vertex_circle<S: Scalar>(
    t: &TriangleMetric<S>,
    i: usize,
    x: &HPoint<S>,
    a_prime: &HPoint<S>,
) -> Result<(Circle<S>, bool)> {
    let v = HPoint::vertex(i);
    if *a_prime == v {
        return Ok((pencil_circle(t, &circumcircle_tangent(t, i), x)?, true));
    }
    Ok((circle_through_3(t, &v, x, a_prime)?, false))
}

/// Second intersection of a circle through vertex `i` with the circumcircle.
pub(crate) fn second_on_circumcircle<S: Scalar>(
    t: &TriangleMetric<S>,
    c: &Circle<S>,
    i: usize,
) -> Result<(HLine<S>, HPoint<S>)> {
    let circ = Circle::circumcircle(t);
    let axis = radical_axis(&circ, c)?;
    let p = conic_line_second_intersection(&circ, &axis, &HPoint::vertex(i))?;
    Ok((axis, p))
}

/// Second intersection of a circle with sideline `i`, given one common point.
pub(crate) fn second_on_sideline<S: Scalar>(c: &Circle<S>, i: usize, known: &HPoint<S>) -> Result<HPoint<S>> {
    conic_line_second_intersection(c, &HLine::sideline(i), known)
}

/// The circles `(AXA′)`, `(BYB′)`, `(CZC′)` for the cevian triangle of `p`
/// and the circumcevian triangle of `q`.
pub struct CevianCircles<S: Scalar> {
    pub traces: CevianTriple<S>,
    pub circumcevian: [HPoint<S>; 3],
    pub circles: [Circle<S>; 3],
    pub tangent_at_vertex: [bool; 3],
}

pub fn cevian_circles<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>, q: &HPoint<S>) -> Result<CevianCircles<S>> {
    let traces = cevian_triangle(p)?;
    let circumcevian = circumcevian_triangle(t, q)?;
    let pts = traces.points();
    let mut circles = Vec::with_capacity(3);
    let mut tangent = [false; 3];
    for i in 0..3 {
        let (c, tan) = vertex_circle(t, i, pts[i], &circumcevian[i])?;
        circles.push(c);
        tangent[i] = tan;
    }
    let [c0, c1, c2]: [Circle<S>; 3] = circles.try_into().map_err(|_| GeomError::ZeroTriple)?;
    Ok(CevianCircles { traces, circumcevian, circles: [c0, c1, c2], tangent_at_vertex: tangent })
}

/// Equality of scalars: exact, or relative to their magnitude for floats.
pub(crate) fn same_value<S: Scalar>(a: &S, b: &S) -> bool {
    (a.clone() - b.clone()).vanishes(&(a.abs() + b.abs() + S::one()))
}

pub(crate) const VERTEX_NAMES: [&str; 3] = ["a", "b", "c"];
pub(crate) const SIDE_NAMES: [&str; 3] = ["bc", "ca", "ab"];
