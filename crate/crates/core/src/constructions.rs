//! Cevian and circumcevian triangles, bisector feet, Apollonius circles,
//! central similarity, orthotransversals, inversion, and triangles built
//! from points of the reference triangle.

use serde::Serialize;

use crate::bary::{collinear, join, meet, HLine, HPoint, TriangleMetric};
use crate::cartesian::{self, CartesianPoint, Cycle, Line2};
use crate::centers::{named_center, tripole, CenterId};
use crate::circles::{self, power, Circle, CircleKind};
use crate::error::{GeomError, Result};
use crate::scalar::Scalar;
use crate::vec3::{self, adjugate, mat_vec, transpose, Triple};

/// Traces of a point on `BC`, `CA`, `AB`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CevianTriple<S: Scalar> {
    pub x: HPoint<S>,
    pub y: HPoint<S>,
    pub z: HPoint<S>,
}

impl<S: Scalar> CevianTriple<S> {
    pub fn points(&self) -> [&HPoint<S>; 3] {
        [&self.x, &self.y, &self.z]
    }
}

pub fn cevian_triangle<S: Scalar>(p: &HPoint<S>) -> Result<CevianTriple<S>> {
    if p.on_sideline() {
        return Err(GeomError::TraceAtVertex);
    }
    let [u, v, w] = p.triple().clone();
    let z = S::zero();
    Ok(CevianTriple {
        x: HPoint::new([z.clone(), v.clone(), w.clone()])?,
        y: HPoint::new([u.clone(), z.clone(), w])?,
        z: HPoint::new([u, v, z])?,
    })
}

/// Second intersections `A′, B′, C′` of `AQ`, `BQ`, `CQ` with the circumcircle.
pub fn circumcevian_triangle<S: Scalar>(t: &TriangleMetric<S>, q: &HPoint<S>) -> Result<[HPoint<S>; 3]> {
    if q.is_vertex() {
        return Err(GeomError::VertexInput);
    }
    let sq = t.sq();
    let p = q.triple();
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        // A′ = (−a²vw : v(b²w + c²v) : w(b²w + c²v))
        let m = sq[j].clone() * p[k].clone() + sq[k].clone() * p[j].clone();
        let mut c = [S::zero(), S::zero(), S::zero()];
        c[i] = -(sq[i].clone() * p[j].clone() * p[k].clone());
        c[j] = p[j].clone() * m.clone();
        c[k] = p[k].clone() * m;
        out.push(HPoint::new(c)?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

#[derive(Clone, Debug, Serialize)]
pub struct BisectorFeet<S: Scalar> {
    pub internal: [HPoint<S>; 3],
    /// At infinity for an isosceles pair of sides.
    pub external: [HPoint<S>; 3],
}

pub fn bisector_feet<S: Scalar>(t: &TriangleMetric<S>) -> Result<BisectorFeet<S>> {
    let s = t.sides()?;
    let foot = |i: usize, sign: S| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mut c = [S::zero(), S::zero(), S::zero()];
        c[j] = s[j].clone();
        c[k] = sign * s[k].clone();
        HPoint::new(c)
    };
    Ok(BisectorFeet {
        internal: [foot(0, S::one())?, foot(1, S::one())?, foot(2, S::one())?],
        external: [foot(0, -S::one())?, foot(1, -S::one())?, foot(2, -S::one())?],
    })
}

/// Locus of points whose distances to the two other vertices are in the
/// ratio of the adjacent sides, e.g. `|PB| : |PC| = c : b` at vertex `A`.
///
/// Built from `b²|PB|² − c²|PC|² = 0`, which needs squared sides only.
pub fn apollonius_circle<S: Scalar>(t: &TriangleMetric<S>, vertex: usize) -> Result<Circle<S>> {
    let sq = t.sq();
    let (j, k) = ((vertex + 1) % 3, (vertex + 2) % 3);
    let diff = sq[j].clone() - sq[k].clone();
    if diff.vanishes(&(sq[j].abs() + sq[k].abs())) {
        return Err(GeomError::ApolloniusDegenerate);
    }
    let mut l = [S::zero(), S::zero(), S::zero()];
    l[j] = sq[vertex].clone() * sq[k].clone() / diff.clone();
    l[k] = -(sq[vertex].clone() * sq[j].clone()) / diff;
    Ok(Circle::from_line_part(t, l))
}

/// `center + k·(p − center)`.
pub fn central_similarity<S: Scalar>(center: &HPoint<S>, k: &S, p: &HPoint<S>) -> Result<HPoint<S>> {
    let c = center.normalize()?;
    let q = p.normalize()?;
    HPoint::new(vec3::add(&c, &vec3::scale(&vec3::sub(&q, &c), k)))
}

/// Perpendicular to `l` through `p`.
pub fn perpendicular_at<S: Scalar>(t: &TriangleMetric<S>, l: &HLine<S>, p: &HPoint<S>) -> Result<HLine<S>> {
    let cl = t.line_to_cartesian(l)?;
    let cp = t.to_cartesian(p)?;
    t.line_from_cartesian(&cl.perpendicular_through(&cp)?)
}

pub fn foot<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>, l: &HLine<S>) -> Result<HPoint<S>> {
    let cl = t.line_to_cartesian(l)?;
    t.from_cartesian(&cl.foot(&t.to_cartesian(p)?))
}

pub fn reflect_point<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>, l: &HLine<S>) -> Result<HPoint<S>> {
    let cl = t.line_to_cartesian(l)?;
    t.from_cartesian(&cl.reflect(&t.to_cartesian(p)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct Orthotransversal<S: Scalar> {
    /// Where the perpendicular to `Vp` at `p` meets the sideline opposite `V`.
    pub points: [HPoint<S>; 3],
    pub line: HLine<S>,
}

pub fn orthotransversal<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<Orthotransversal<S>> {
    if p.is_vertex() {
        return Err(GeomError::VertexInput);
    }
    let cp = t.to_cartesian(p)?;
    let mut pts = Vec::with_capacity(3);
    for i in 0..3 {
        let v = t.vertex_cart(i)?;
        let perp = Line2::through(&v, &cp)?.perpendicular_through(&cp)?;
        let perp = t.line_from_cartesian(&perp)?;
        let side = HLine::sideline(i);
        pts.push(meet(&perp, &side).map_err(|_| {
            GeomError::Degenerate("perpendicular coincides with a sideline".into())
        })?);
    }
    let points = [pts[0].clone(), pts[1].clone(), pts[2].clone()];
    if !collinear(&points[0], &points[1], &points[2]) {
        return Err(GeomError::NotCollinear);
    }
    let line = join(&points[0], &points[1])
        .or_else(|_| join(&points[0], &points[2]))
        .or_else(|_| join(&points[1], &points[2]))
        .map_err(|_| GeomError::Degenerate("orthotransversal points coincide".into()))?;
    Ok(Orthotransversal { points, line })
}

/// Tripole of the orthotransversal.
pub fn orthocorrespondent<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<HPoint<S>> {
    tripole(&orthotransversal(t, p)?.line)
}

pub fn invert_point<S: Scalar>(
    center: &CartesianPoint<S>,
    pow: &S,
    p: &CartesianPoint<S>,
) -> Result<CartesianPoint<S>> {
    cartesian::invert_point(center, pow, p)
}

pub fn invert_circle<S: Scalar>(center: &CartesianPoint<S>, pow: &S, c: &Cycle<S>) -> Result<Cycle<S>> {
    cartesian::invert_cycle(center, pow, c)
}

/// Inversion of a barycentric point, computed in the embedding.
pub fn invert_bary_point<S: Scalar>(
    t: &TriangleMetric<S>,
    center: &HPoint<S>,
    pow: &S,
    p: &HPoint<S>,
) -> Result<HPoint<S>> {
    let c = t.to_cartesian(center)?;
    t.from_cartesian(&invert_point(&c, pow, &t.to_cartesian(p)?)?)
}

/// Inversion of a circle or degenerate line, computed in the embedding.
pub fn invert_bary_circle<S: Scalar>(
    t: &TriangleMetric<S>,
    center: &HPoint<S>,
    pow: &S,
    c: &Circle<S>,
) -> Result<Circle<S>> {
    let cc = t.to_cartesian(center)?;
    let image = invert_circle(&cc, pow, &circles::to_cartesian(t, c)?)?;
    circles::from_cartesian(t, &image)
}

/// A triangle whose vertices are points of the reference triangle, with
/// coordinate transfer in both directions.
#[derive(Clone, Debug)]
pub struct DerivedTriangle<S: Scalar> {
    pub vertices: [HPoint<S>; 3],
    pub metric: TriangleMetric<S>,
    /// Columns are the normalized vertices.
    to_ref: [Triple<S>; 3],
}

pub fn derived_triangle<S: Scalar>(
    t: &TriangleMetric<S>,
    p1: &HPoint<S>,
    p2: &HPoint<S>,
    p3: &HPoint<S>,
) -> Result<DerivedTriangle<S>> {
    if collinear(p1, p2, p3) {
        return Err(GeomError::InvalidTriangle("collinear vertices".into()));
    }
    let n = [p1.normalize()?, p2.normalize()?, p3.normalize()?];
    let metric = match t.embedding() {
        Ok(_) => TriangleMetric::from_vertices([t.to_cartesian(p1)?, t.to_cartesian(p2)?, t.to_cartesian(p3)?])?,
        Err(_) => TriangleMetric::from_sq([t.dist2(p2, p3)?, t.dist2(p3, p1)?, t.dist2(p1, p2)?])?,
    };
    Ok(DerivedTriangle {
        vertices: [p1.clone(), p2.clone(), p3.clone()],
        metric,
        to_ref: transpose(&n),
    })
}

impl<S: Scalar> DerivedTriangle<S> {
    pub fn point_to_ref(&self, p: &HPoint<S>) -> Result<HPoint<S>> {
        HPoint::new(mat_vec(&self.to_ref, p.triple()))
    }

    pub fn point_from_ref(&self, p: &HPoint<S>) -> Result<HPoint<S>> {
        HPoint::new(mat_vec(&adjugate(&self.to_ref), p.triple()))
    }

    pub fn line_to_ref(&self, l: &HLine<S>) -> Result<HLine<S>> {
        HLine::new(mat_vec(&transpose(&adjugate(&self.to_ref)), l.triple()))
    }

    pub fn line_from_ref(&self, l: &HLine<S>) -> Result<HLine<S>> {
        HLine::new(mat_vec(&transpose(&self.to_ref), l.triple()))
    }

    /// Re-expresses a circle of the derived triangle relative to the
    /// reference: the line part is minus the powers of the reference vertices.
    pub fn circle_to_ref(&self, reference: &TriangleMetric<S>, c: &Circle<S>) -> Result<Circle<S>> {
        match c.kind() {
            CircleKind::DegenerateLine(l) => Ok(Circle::degenerate_line(reference, self.line_to_ref(l)?)),
            CircleKind::CircumForm(_) => {
                let mut l = Vec::with_capacity(3);
                for i in 0..3 {
                    let v = self.point_from_ref(&HPoint::vertex(i))?;
                    l.push(-power(&self.metric, c, &v)?);
                }
                Ok(Circle::from_line_part(reference, [l[0].clone(), l[1].clone(), l[2].clone()]))
            }
        }
    }

    pub fn center(&self, id: CenterId) -> Result<HPoint<S>> {
        self.point_to_ref(&named_center(&self.metric, id)?)
    }
}

/// Line through the circumcenter and orthocenter, in reference coordinates.
pub fn euler_line<S: Scalar>(dt: &DerivedTriangle<S>) -> Result<HLine<S>> {
    if dt.metric.is_equilateral() {
        return Err(GeomError::Equilateral);
    }
    let o = dt.center(CenterId::O)?;
    let h = dt.center(CenterId::H)?;
    join(&o, &h)
}

/// The reference triangle as a derived triangle of itself.
pub fn identity_derived<S: Scalar>(t: &TriangleMetric<S>) -> Result<DerivedTriangle<S>> {
    derived_triangle(t, &HPoint::vertex(0), &HPoint::vertex(1), &HPoint::vertex(2))
}
