//! Circles in circumcircle-normal form, powers, radical axes, coaxal
//! pencils, circumconics, and second intersections with lines.
//!
//! A circle is `a²yz + b²zx + c²xy + (x+y+z)(ux+vy+wz) = 0`, carried by its
//! line part `(u, v, w)`. A line `l` enters pencils as the degenerate member
//! `(x+y+z)·l = 0`. Both are handled uniformly through the 4-vector
//! `(k; L)`, with `k = 1` for circles and `k = 0` for lines.

use serde::Serialize;

use crate::bary::{join, HLine, HPoint, TriangleMetric};
use crate::cartesian::{CartCircle, Cycle};
use crate::error::{GeomError, Result};
use crate::scalar::{half, Scalar};
use crate::vec3::{self, cross, det3, dot, max_abs, mat_vec, proj_eq, Triple};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum CircleKind<S: Scalar> {
    CircumForm([S; 3]),
    DegenerateLine(HLine<S>),
}

#[derive(Clone, Debug)]
pub struct Circle<S: Scalar> {
    sq: Triple<S>,
    kind: CircleKind<S>,
}

impl<S: Scalar> PartialEq for Circle<S> {
    fn eq(&self, o: &Self) -> bool {
        if self.sq != o.sq {
            return false;
        }
        match (&self.kind, &o.kind) {
            (CircleKind::CircumForm(l1), CircleKind::CircumForm(l2)) => {
                let scale = max_abs(l1) + max_abs(l2) + max_abs(&self.sq);
                (0..3).all(|i| (l1[i].clone() - l2[i].clone()).vanishes(&scale))
            }
            (CircleKind::DegenerateLine(a), CircleKind::DegenerateLine(b)) => a == b,
            _ => false,
        }
    }
}

impl<S: Scalar> Circle<S> {
    pub fn circumcircle(t: &TriangleMetric<S>) -> Self {
        Self::from_line_part(t, [S::zero(), S::zero(), S::zero()])
    }

    pub fn from_line_part(t: &TriangleMetric<S>, l: [S; 3]) -> Self {
        Circle { sq: t.sq().clone(), kind: CircleKind::CircumForm(l) }
    }

    pub fn degenerate_line(t: &TriangleMetric<S>, l: HLine<S>) -> Self {
        Circle { sq: t.sq().clone(), kind: CircleKind::DegenerateLine(l) }
    }

    pub fn kind(&self) -> &CircleKind<S> {
        &self.kind
    }

    pub fn line_part(&self) -> Option<&[S; 3]> {
        match &self.kind {
            CircleKind::CircumForm(l) => Some(l),
            CircleKind::DegenerateLine(_) => None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.kind, CircleKind::DegenerateLine(_))
    }

    fn check_metric(&self, t: &TriangleMetric<S>) -> Result<()> {
        if &self.sq != t.sq() {
            return Err(GeomError::MetricMismatch);
        }
        Ok(())
    }

    fn same_metric(&self, o: &Self) -> Result<()> {
        if self.sq != o.sq {
            return Err(GeomError::MetricMismatch);
        }
        Ok(())
    }

    /// `(k; u, v, w)`.
    pub fn pencil_vector(&self) -> [S; 4] {
        match &self.kind {
            CircleKind::CircumForm(l) => [S::one(), l[0].clone(), l[1].clone(), l[2].clone()],
            CircleKind::DegenerateLine(l) => {
                let [a, b, c] = l.triple().clone();
                [S::zero(), a, b, c]
            }
        }
    }

    fn from_pencil_vector(sq: &Triple<S>, v: [S; 4]) -> Result<Self> {
        let [k, u, w0, w1] = v;
        let kind = if k.is_zero() {
            CircleKind::DegenerateLine(HLine::new([u, w0, w1])?)
        } else {
            CircleKind::CircumForm([u / k.clone(), w0 / k.clone(), w1 / k])
        };
        Ok(Circle { sq: sq.clone(), kind })
    }

    /// Member `self + λ·(other − self)` of the pencil spanned by two circles.
    pub fn pencil_member(&self, other: &Self, lambda: &S) -> Result<Self> {
        self.same_metric(other)?;
        let a = self.pencil_vector();
        let b = other.pencil_vector();
        let v = [0, 1, 2, 3].map(|i| a[i].clone() + lambda.clone() * (b[i].clone() - a[i].clone()));
        Self::from_pencil_vector(&self.sq, v)
    }

    /// Symmetric matrix of the quadratic form.
    pub fn matrix(&self) -> [Triple<S>; 3] {
        let [k, l0, l1, l2] = self.pencil_vector();
        let l = [l0, l1, l2];
        let h = half::<S>();
        [0, 1, 2].map(|i| {
            [0, 1, 2].map(|j| {
                if i == j {
                    l[i].clone()
                } else {
                    let opposite = 3 - i - j;
                    h.clone() * (k.clone() * self.sq[opposite].clone() + l[i].clone() + l[j].clone())
                }
            })
        })
    }

    pub fn eval(&self, p: &HPoint<S>) -> S {
        quad(&self.matrix(), p.triple())
    }

    pub fn contains(&self, p: &HPoint<S>) -> bool {
        form_vanishes(&self.matrix(), p.triple())
    }
}

fn quad<S: Scalar>(m: &[Triple<S>; 3], p: &Triple<S>) -> S {
    dot(p, &mat_vec(m, p))
}

fn bilinear<S: Scalar>(m: &[Triple<S>; 3], p: &Triple<S>, q: &Triple<S>) -> S {
    dot(p, &mat_vec(m, q))
}

fn matrix_scale<S: Scalar>(m: &[Triple<S>; 3]) -> S {
    let mut s = S::zero();
    for row in m {
        let r = max_abs(row);
        if r > s {
            s = r;
        }
    }
    s
}

fn form_vanishes<S: Scalar>(m: &[Triple<S>; 3], p: &Triple<S>) -> bool {
    let mp = max_abs(p);
    let scale = matrix_scale(m) * mp.clone() * mp * S::from_int(9);
    quad(m, p).vanishes(&scale)
}

/// Anything with a symmetric 3×3 matrix: circles and conics.
pub trait QuadraticForm<S: Scalar> {
    fn form_matrix(&self) -> [Triple<S>; 3];
}

impl<S: Scalar> QuadraticForm<S> for Circle<S> {
    fn form_matrix(&self) -> [Triple<S>; 3] {
        self.matrix()
    }
}

impl<S: Scalar> QuadraticForm<S> for Conic<S> {
    fn form_matrix(&self) -> [Triple<S>; 3] {
        self.m.clone()
    }
}

pub fn circumcircle<S: Scalar>(t: &TriangleMetric<S>) -> Circle<S> {
    Circle::circumcircle(t)
}

/// `a²yz + b²zx + c²xy`.
fn circum_value<S: Scalar>(sq: &Triple<S>, p: &Triple<S>) -> S {
    let [x, y, z] = p.clone();
    sq[0].clone() * y.clone() * z.clone() + sq[1].clone() * z * x.clone() + sq[2].clone() * x * y
}

pub fn circle_through_3<S: Scalar>(
    t: &TriangleMetric<S>,
    p1: &HPoint<S>,
    p2: &HPoint<S>,
    p3: &HPoint<S>,
) -> Result<Circle<S>> {
    let pts = [p1, p2, p3];
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(GeomError::CoincidentPoints);
    }
    if crate::bary::collinear(p1, p2, p3) {
        return Ok(Circle::degenerate_line(t, join(p1, p2)?));
    }
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::PointAtInfinity);
    }
    let rows = pts.map(|p| {
        let s = p.coord_sum();
        vec3::scale(p.triple(), &s)
    });
    let rhs = pts.map(|p| -circum_value(t.sq(), p.triple()));
    let l = vec3::solve3(&rows, &rhs)
        .ok_or_else(|| GeomError::Degenerate("singular circle system".into()))?;
    Ok(Circle::from_line_part(t, l))
}

/// Power of a finite point; negative inside, zero on the circle.
pub fn power<S: Scalar>(t: &TriangleMetric<S>, c: &Circle<S>, p: &HPoint<S>) -> Result<S> {
    c.check_metric(t)?;
    if c.is_degenerate() {
        return Err(GeomError::Degenerate("power wrt a degenerate circle".into()));
    }
    if !p.is_finite() {
        return Err(GeomError::PointAtInfinity);
    }
    let s = p.coord_sum();
    Ok(-c.eval(p) / (s.clone() * s))
}

pub fn radical_axis<S: Scalar>(c1: &Circle<S>, c2: &Circle<S>) -> Result<HLine<S>> {
    c1.same_metric(c2)?;
    if c1 == c2 {
        return Err(GeomError::IdenticalCircles);
    }
    let a = c1.pencil_vector();
    let b = c2.pencil_vector();
    if a[0].is_zero() && b[0].is_zero() {
        return Err(GeomError::Degenerate("radical axis of two lines is undefined".into()));
    }
    HLine::new([1, 2, 3].map(|i| b[0].clone() * a[i].clone() - a[0].clone() * b[i].clone()))
}

#[derive(Clone, Debug, Serialize)]
pub struct PencilVerdict<S: Scalar> {
    pub coaxal: bool,
    pub common_radical_axis: Option<HLine<S>>,
    /// Set when three concurrent lines form the pencil; every line through
    /// their common point serves as axis.
    pub axis_undefined: bool,
    /// The four 3×3 minors of the matrix of rows `(k; u, v, w)`. For three
    /// proper circles these are `det(L1, L2, L3)` and the 2×2 minors of
    /// `L2 − L1`, `L3 − L1`.
    pub witness_minors: Vec<S>,
}

pub fn coaxal<S: Scalar>(c1: &Circle<S>, c2: &Circle<S>, c3: &Circle<S>) -> Result<PencilVerdict<S>> {
    c1.same_metric(c2)?;
    c1.same_metric(c3)?;
    let rows = [c1, c2, c3].map(|c| c.pencil_vector());
    let row_scale: Vec<S> = rows
        .iter()
        .map(|r| {
            let mut m = S::zero();
            for x in r {
                if x.abs() > m {
                    m = x.abs();
                }
            }
            m
        })
        .collect();
    let scale = row_scale[0].clone() * row_scale[1].clone() * row_scale[2].clone() * S::from_int(6);
    let cols: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
    let minors: Vec<S> = cols
        .iter()
        .map(|c| {
            let pick = |r: &[S; 4]| [r[c[0]].clone(), r[c[1]].clone(), r[c[2]].clone()];
            det3(&pick(&rows[0]), &pick(&rows[1]), &pick(&rows[2]))
        })
        .collect();
    let is_coaxal = minors.iter().all(|m| m.vanishes(&scale));
    let all_lines = rows.iter().all(|r| r[0].is_zero());
    let mut axis = None;
    if is_coaxal && !all_lines {
        for (x, y) in [(c1, c2), (c1, c3), (c2, c3)] {
            if let Ok(l) = radical_axis(x, y) {
                axis = Some(l);
                break;
            }
        }
    }
    Ok(PencilVerdict {
        coaxal: is_coaxal,
        common_radical_axis: axis,
        axis_undefined: is_coaxal && all_lines,
        witness_minors: minors,
    })
}

/// Embedded circle (or line) of a member.
pub fn to_cartesian<S: Scalar>(t: &TriangleMetric<S>, c: &Circle<S>) -> Result<Cycle<S>> {
    c.check_metric(t)?;
    match &c.kind {
        CircleKind::DegenerateLine(l) => Ok(Cycle::Line(t.line_to_cartesian(l)?)),
        CircleKind::CircumForm(l) => {
            // |X − M|² − ρ² − |X|² is affine, with value −L_i − |V_i|² at vertex i.
            let v = t.embedding()?;
            let vals = [0, 1, 2].map(|i| -l[i].clone() - v[i].norm2());
            let [alpha, beta, gamma] = t.affine_from_vertex_values(&vals)?;
            let h = half::<S>();
            let center = crate::cartesian::CartesianPoint::new(-alpha * h.clone(), -beta * h);
            let radius2 = center.norm2() - gamma;
            Ok(Cycle::Circle(CartCircle::new(center, radius2)))
        }
    }
}

pub fn from_cartesian<S: Scalar>(t: &TriangleMetric<S>, c: &Cycle<S>) -> Result<Circle<S>> {
    match c {
        Cycle::Line(l) => Ok(Circle::degenerate_line(t, t.line_from_cartesian(l)?)),
        Cycle::Circle(cc) => {
            let v = t.embedding()?;
            Ok(Circle::from_line_part(t, [0, 1, 2].map(|i| -cc.power(&v[i]))))
        }
    }
}

fn embedded_circle<S: Scalar>(t: &TriangleMetric<S>, c: &Circle<S>) -> Result<CartCircle<S>> {
    match to_cartesian(t, c)? {
        Cycle::Circle(cc) => Ok(cc),
        Cycle::Line(_) => Err(GeomError::NoCenter),
    }
}

pub fn circle_center<S: Scalar>(t: &TriangleMetric<S>, c: &Circle<S>) -> Result<HPoint<S>> {
    if c.is_degenerate() {
        return Err(GeomError::NoCenter);
    }
    t.from_cartesian(&embedded_circle(t, c)?.center)
}

pub fn radius2<S: Scalar>(t: &TriangleMetric<S>, c: &Circle<S>) -> Result<S> {
    if c.is_degenerate() {
        return Err(GeomError::NoCenter);
    }
    Ok(embedded_circle(t, c)?.radius2)
}

pub fn orthogonal<S: Scalar>(t: &TriangleMetric<S>, c1: &Circle<S>, c2: &Circle<S>) -> Result<bool> {
    if c1.is_degenerate() || c2.is_degenerate() {
        return Err(GeomError::Degenerate("orthogonality needs proper circles".into()));
    }
    let a = embedded_circle(t, c1)?;
    let b = embedded_circle(t, c2)?;
    Ok(a.orthogonal_to(&b))
}

/// Conic through a symmetric matrix; circumconics have a zero diagonal.
#[derive(Clone, Debug, Serialize)]
pub struct Conic<S: Scalar> {
    m: [Triple<S>; 3],
}

impl<S: Scalar> Conic<S> {
    /// `λyz + μzx + νxy = 0`.
    pub fn circum(coeffs: [S; 3]) -> Result<Self> {
        if vec3::is_zero_triple(&coeffs) {
            return Err(GeomError::ZeroTriple);
        }
        let h = half::<S>();
        let [l, m, n] = coeffs.map(|c| c * h.clone());
        let z = S::zero();
        Ok(Conic {
            m: [
                [z.clone(), n.clone(), m.clone()],
                [n, z.clone(), l.clone()],
                [m, l, z],
            ],
        })
    }

    pub fn from_matrix(m: [Triple<S>; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                if m[i][j] != m[j][i] {
                    return Err(GeomError::Degenerate("conic matrix not symmetric".into()));
                }
            }
        }
        Ok(Conic { m })
    }

    pub fn matrix(&self) -> &[Triple<S>; 3] {
        &self.m
    }

    /// `(λ : μ : ν)` when the conic passes through the vertices.
    pub fn circum_coeffs(&self) -> Option<Triple<S>> {
        if (0..3).all(|i| self.m[i][i].is_zero()) {
            let two = S::from_int(2);
            Some([
                self.m[1][2].clone() * two.clone(),
                self.m[2][0].clone() * two.clone(),
                self.m[0][1].clone() * two,
            ])
        } else {
            None
        }
    }

    pub fn eval(&self, p: &HPoint<S>) -> S {
        quad(&self.m, p.triple())
    }

    pub fn contains(&self, p: &HPoint<S>) -> bool {
        form_vanishes(&self.m, p.triple())
    }

    /// Polar line of a point; the tangent when the point is on the conic.
    pub fn polar(&self, p: &HPoint<S>) -> Result<HLine<S>> {
        HLine::new(mat_vec(&self.m, p.triple()))
    }

    pub fn is_degenerate(&self) -> bool {
        vec3::det3_vanishes(&self.m[0], &self.m[1], &self.m[2])
    }
}

/// The circumconic whose points have isogonal conjugates on `l`.
pub fn circumconic_from_line<S: Scalar>(t: &TriangleMetric<S>, l: &HLine<S>) -> Result<Conic<S>> {
    if (0..3).any(|i| *l == HLine::sideline(i)) {
        return Err(GeomError::Sideline("conic degenerates"));
    }
    let sq = t.sq();
    let c = l.triple();
    Conic::circum([0, 1, 2].map(|i| c[i].clone() * sq[i].clone()))
}

pub fn on_conic<S: Scalar>(k: &Conic<S>, p: &HPoint<S>) -> bool {
    k.contains(p)
}

/// Second point where `l` meets the curve, given one common point. Returns
/// `known` itself when `l` is tangent there.
pub fn conic_line_second_intersection<S: Scalar, Q: QuadraticForm<S>>(
    k: &Q,
    l: &HLine<S>,
    known: &HPoint<S>,
) -> Result<HPoint<S>> {
    let m = k.form_matrix();
    let p = known.triple();
    if !l.contains(known) {
        return Err(GeomError::NotIncident("known point not on line"));
    }
    if !form_vanishes(&m, p) {
        return Err(GeomError::NotIncident("known point not on curve"));
    }
    // another point of l: meet with a sideline, avoiding `known`
    let d = (0..3)
        .map(|i| cross(l.triple(), HLine::<S>::sideline(i).triple()))
        .find(|d| !vec3::is_zero_triple(d) && !proj_eq(d, p))
        .ok_or(GeomError::Degenerate("line has no second point".into()))?;
    let fd = quad(&m, &d);
    let b = bilinear(&m, p, &d);
    let scale = matrix_scale(&m) * max_abs(p) * max_abs(&d) * S::from_int(9);
    let scale_d = matrix_scale(&m) * max_abs(&d) * max_abs(&d) * S::from_int(9);
    if fd.vanishes(&scale_d) && b.vanishes(&scale) {
        return Err(GeomError::LineOnCurve);
    }
    let two = S::from_int(2);
    let out = vec3::sub(&vec3::scale(p, &fd), &vec3::scale(&d, &(two * b)));
    HPoint::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::{isogonal_conjugate, named_center, CenterId};
    use crate::scalar::Exact;

    type P = HPoint<Exact>;
    type L = HLine<Exact>;

    fn t() -> TriangleMetric<Exact> {
        TriangleMetric::from_int_sides(13, 14, 15).unwrap()
    }

    fn e(n: i64) -> Exact {
        Exact::from_int(n)
    }

    #[test]
    fn circumcircle_membership() {
        let t = t();
        let c = circumcircle(&t);
        assert!(c.contains(&P::vertex(0)));
        let i = P::ints(13, 14, 15);
        assert!(!c.contains(&i));
        assert_eq!(c.eval(&i), e(114660));
        assert!(c.contains(&P::ints(-169, 421, 421)));
    }

    #[test]
    fn power_of_incenter_is_minus_2rr() {
        let t = t();
        let i = named_center(&t, CenterId::I).unwrap();
        let expect = -e(2) * t.circumradius().unwrap() * t.inradius().unwrap();
        assert_eq!(expect, e(-65));
        assert_eq!(power(&t, &circumcircle(&t), &i).unwrap(), expect);
        assert!(power(&t, &circumcircle(&t), &P::ints(1, -1, 0)).is_err());
    }

    #[test]
    fn incircle_through_contact_points() {
        let t = t();
        let c = |id| named_center(&t, id).unwrap();
        let inc = circle_through_3(&t, &c(CenterId::D), &c(CenterId::E), &c(CenterId::F)).unwrap();
        // power of the vertices is the squared tangent length (s − a)²
        assert_eq!(inc.line_part().unwrap(), &[e(-64), e(-49), e(-36)]);
        assert_eq!(circle_center(&t, &inc).unwrap(), c(CenterId::I));
        assert_eq!(radius2(&t, &inc).unwrap(), e(16));
        assert_eq!(circle_center(&t, &circumcircle(&t)).unwrap(), c(CenterId::O));
        assert!(!orthogonal(&t, &inc, &circumcircle(&t)).unwrap());
        assert!(!orthogonal(&t, &inc, &inc).unwrap());
    }

    #[test]
    fn circle_through_vertices_and_degenerate_inputs() {
        let t = t();
        let c = circle_through_3(&t, &P::vertex(0), &P::vertex(1), &P::vertex(2)).unwrap();
        assert_eq!(c, circumcircle(&t));
        let g = P::ints(1, 1, 1);
        let line = circle_through_3(&t, &P::vertex(0), &g, &P::ints(0, 1, 1)).unwrap();
        assert_eq!(line.kind(), &CircleKind::DegenerateLine(L::ints(0, 1, -1)));
        assert_eq!(
            circle_through_3(&t, &g, &g, &P::vertex(0)),
            Err(GeomError::CoincidentPoints)
        );
        assert!(matches!(circle_center(&t, &line), Err(GeomError::NoCenter)));
    }

    #[test]
    fn radical_axis_with_circumcircle_is_line_aq() {
        let t = t();
        // P = I gives X = (0:14:15); Q = G gives A' = (−169:421:421)
        let c = circle_through_3(&t, &P::vertex(0), &P::ints(0, 14, 15), &P::ints(-169, 421, 421)).unwrap();
        assert_eq!(radical_axis(&circumcircle(&t), &c).unwrap(), L::ints(0, 1, -1));
        assert_eq!(radical_axis(&c, &circumcircle(&t)).unwrap(), L::ints(0, 1, -1));
        assert_eq!(radical_axis(&c, &c), Err(GeomError::IdenticalCircles));
    }

    #[test]
    fn pencil_members_are_coaxal() {
        let t = t();
        let base = circumcircle(&t);
        let l = [e(3), e(-1), e(2)];
        let members: Vec<_> = (0..3)
            .map(|k| Circle::from_line_part(&t, l.clone().map(|x| x * e(k))))
            .collect();
        let v = coaxal(&members[0], &members[1], &members[2]).unwrap();
        assert!(v.coaxal);
        assert_eq!(v.common_radical_axis.unwrap(), L::ints(3, -1, 2));
        assert_eq!(members[0], base);
        let off = Circle::from_line_part(&t, [e(1), e(0), e(0)]);
        assert!(!coaxal(&members[0], &members[1], &off).unwrap().coaxal);
    }

    #[test]
    fn concurrent_lines_are_coaxal_without_axis() {
        let t = t();
        let ls = [L::ints(0, 1, -1), L::ints(1, 0, -1), L::ints(1, -1, 0)].map(|l| Circle::degenerate_line(&t, l));
        let v = coaxal(&ls[0], &ls[1], &ls[2]).unwrap();
        assert!(v.coaxal && v.axis_undefined && v.common_radical_axis.is_none());
        let other = Circle::degenerate_line(&t, L::ints(1, 2, 0));
        assert!(!coaxal(&ls[0], &ls[1], &other).unwrap().coaxal);
    }

    #[test]
    fn metric_mixing_is_rejected() {
        let a = circumcircle(&t());
        let b = circumcircle(&TriangleMetric::<Exact>::from_int_sides(3, 4, 5).unwrap());
        assert_eq!(radical_axis(&a, &b), Err(GeomError::MetricMismatch));
    }

    #[test]
    fn ig_conic() {
        let t = t();
        let k = circumconic_from_line(&t, &L::ints(-1, 2, -1)).unwrap();
        assert_eq!(k.circum_coeffs().unwrap(), [e(-169), e(392), e(-225)]);
        for p in [P::ints(169, 196, 225), P::ints(169, 224, 300), P::ints(13, 14, 15), P::vertex(1)] {
            assert!(on_conic(&k, &p));
        }
        assert_eq!(k.eval(&P::ints(1, 1, 1)), e(-2));
        assert!(!on_conic(&k, &P::ints(1, 2, 3)));
        assert!(circumconic_from_line(&t, &L::sideline(0)).is_err());
        // isogonal image of a point of the line lands on the conic
        let x = isogonal_conjugate(&t, &P::ints(3, 2, 1)).unwrap();
        assert!(on_conic(&k, &x));
    }

    #[test]
    fn second_intersections() {
        let t = t();
        let c = circumcircle(&t);
        let a = P::vertex(0);
        let ag = L::ints(0, 1, -1);
        assert_eq!(conic_line_second_intersection(&c, &ag, &a).unwrap(), P::ints(-169, 421, 421));
        let ai = join(&a, &P::ints(13, 14, 15)).unwrap();
        let m = conic_line_second_intersection(&c, &ai, &a).unwrap();
        assert_eq!(m, named_center(&t, CenterId::Mprime).unwrap());
        // tangent at A: c²y + b²z = 0
        let tangent = L::ints(0, 225, 196);
        assert_eq!(conic_line_second_intersection(&c, &tangent, &a).unwrap(), a);
        assert!(conic_line_second_intersection(&c, &ag, &P::ints(1, 1, 1)).is_err());
        let k = circumconic_from_line(&t, &L::ints(-1, 2, -1)).unwrap();
        let x56 = conic_line_second_intersection(&k, &join(&a, &P::ints(169, 224, 300)).unwrap(), &a).unwrap();
        assert_eq!(x56, P::ints(169, 224, 300));
    }

    #[test]
    fn cartesian_round_trip() {
        let t = t();
        let c = Circle::from_line_part(&t, [e(5), e(-7), e(11)]);
        let back = from_cartesian(&t, &to_cartesian(&t, &c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
