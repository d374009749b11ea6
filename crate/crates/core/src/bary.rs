//! Homogeneous barycentric points and lines, incidence, and the triangle
//! metric with its Cartesian embedding.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cartesian::{CartCircle, CartesianPoint, Line2};
use crate::error::{GeomError, Result};
use crate::scalar::{convert, half, sq, Scalar};
use crate::vec3::{self, Triple};

/// A point `(x : y : z)`, equal to every nonzero multiple of itself.
#[derive(Clone)]
pub struct HPoint<S> {
    coords: Triple<S>,
}

/// A line `[l : m : n]`, the set of points with `l·x + m·y + n·z = 0`.
#[derive(Clone)]
pub struct HLine<S> {
    coeffs: Triple<S>,
}

macro_rules! homogeneous_common {
    ($ty:ident, $field:ident, $open:literal, $close:literal) => {
        impl<S: Scalar> $ty<S> {
            pub fn new(v: Triple<S>) -> Result<Self> {
                if v.iter().all(|x| x.is_zero()) {
                    return Err(GeomError::ZeroTriple);
                }
                Ok(Self { $field: v })
            }

            /// Integer triple; panics on `(0, 0, 0)`.
            pub fn ints(x: i64, y: i64, z: i64) -> Self {
                Self::new([S::from_int(x), S::from_int(y), S::from_int(z)])
                    .expect("nonzero triple")
            }

            pub fn triple(&self) -> &Triple<S> {
                &self.$field
            }

            pub fn into_triple(self) -> Triple<S> {
                self.$field
            }

            pub fn canonical(&self) -> Triple<S> {
                S::canonical_triple(&self.$field)
            }

            pub fn scaled(&self, k: &S) -> Self {
                Self { $field: vec3::scale(&self.$field, k) }
            }

            pub fn to_f64(&self) -> [f64; 3] {
                let c = self.canonical();
                [c[0].to_f64(), c[1].to_f64(), c[2].to_f64()]
            }

            pub fn wire(&self) -> [String; 3] {
                let c = self.canonical();
                [c[0].to_wire(), c[1].to_wire(), c[2].to_wire()]
            }

            /// The same element over another backend.
            pub fn cast<T: Scalar>(&self) -> $ty<T> {
                $ty { $field: self.$field.clone().map(|x| convert(&x)) }
            }
        }

        impl<S: Scalar> PartialEq for $ty<S> {
            fn eq(&self, other: &Self) -> bool {
                vec3::proj_eq(&self.$field, &other.$field)
            }
        }

        impl<S: Scalar> fmt::Debug for $ty<S> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let c = self.canonical();
                write!(f, "{}{} : {} : {}{}", $open, c[0], c[1], c[2], $close)
            }
        }

        impl<S: Scalar> Serialize for $ty<S> {
            fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
                self.wire().serialize(s)
            }
        }
    };
}

homogeneous_common!(HPoint, coords, "(", ")");
homogeneous_common!(HLine, coeffs, "[", "]");

impl<S: Scalar> HPoint<S> {
    pub fn vertex(i: usize) -> Self {
        let mut v = [S::zero(), S::zero(), S::zero()];
        v[i] = S::one();
        Self { coords: v }
    }

    pub fn centroid() -> Self {
        Self::ints(1, 1, 1)
    }

    pub fn coord_sum(&self) -> S {
        vec3::sum(&self.coords)
    }

    pub fn is_finite(&self) -> bool {
        let scale = vec3::max_abs(&self.coords) * S::from_int(3);
        !self.coord_sum().vanishes(&scale)
    }

    pub fn is_vertex(&self) -> bool {
        (0..3).any(|i| *self == Self::vertex(i))
    }

    /// Whether the point lies on one of the sidelines.
    pub fn on_sideline(&self) -> bool {
        let scale = vec3::max_abs(&self.coords);
        self.coords.iter().any(|c| c.vanishes(&scale))
    }

    /// Representative with coordinate sum 1.
    pub fn normalize(&self) -> Result<Triple<S>> {
        if !self.is_finite() {
            return Err(GeomError::PointAtInfinity);
        }
        let s = self.coord_sum();
        Ok(self.coords.clone().map(|c| c / s.clone()))
    }

    /// Affine combination `(1 − t)·self + t·other` of finite points.
    pub fn lerp(&self, other: &Self, t: &S) -> Result<Self> {
        let p = self.normalize()?;
        let q = other.normalize()?;
        let one_minus = S::one() - t.clone();
        Self::new(vec3::add(&vec3::scale(&p, &one_minus), &vec3::scale(&q, t)))
    }

    pub fn on(&self, l: &HLine<S>) -> bool {
        l.contains(self)
    }
}

impl<S: Scalar> HLine<S> {
    pub fn sideline(i: usize) -> Self {
        let mut v = [S::zero(), S::zero(), S::zero()];
        v[i] = S::one();
        Self { coeffs: v }
    }

    pub fn at_infinity() -> Self {
        Self::ints(1, 1, 1)
    }

    pub fn eval(&self, p: &HPoint<S>) -> S {
        vec3::dot(&self.coeffs, &p.coords)
    }

    pub fn contains(&self, p: &HPoint<S>) -> bool {
        let scale = vec3::dot_scale(&self.coeffs, &p.coords);
        self.eval(p).vanishes(&scale)
    }

    /// The point at infinity of the line.
    pub fn infinite_point(&self) -> Result<HPoint<S>> {
        meet(self, &Self::at_infinity())
    }
}

/// Line through two distinct points.
pub fn join<S: Scalar>(p: &HPoint<S>, q: &HPoint<S>) -> Result<HLine<S>> {
    if p == q {
        return Err(GeomError::EqualElements);
    }
    HLine::new(vec3::cross(p.triple(), q.triple()))
}

/// Common point of two distinct lines.
pub fn meet<S: Scalar>(l: &HLine<S>, m: &HLine<S>) -> Result<HPoint<S>> {
    if l == m {
        return Err(GeomError::EqualElements);
    }
    HPoint::new(vec3::cross(l.triple(), m.triple()))
}

pub fn collinear<S: Scalar>(p: &HPoint<S>, q: &HPoint<S>, r: &HPoint<S>) -> bool {
    vec3::det3_vanishes(p.triple(), q.triple(), r.triple())
}

pub fn concurrent<S: Scalar>(l: &HLine<S>, m: &HLine<S>, n: &HLine<S>) -> bool {
    vec3::det3_vanishes(l.triple(), m.triple(), n.triple())
}

/// Signed ratio `UB/UC` of directed segments on the common line of `u`, `b`, `c`.
pub fn signed_ratio<S: Scalar>(u: &HPoint<S>, b: &HPoint<S>, c: &HPoint<S>) -> Result<S> {
    if !collinear(u, b, c) {
        return Err(GeomError::NotCollinear);
    }
    if u == c {
        return Err(GeomError::RatioUndefined);
    }
    let un = u.normalize()?;
    let bn = b.normalize()?;
    let cn = c.normalize()?;
    let ub = vec3::sub(&bn, &un);
    let uc = vec3::sub(&cn, &un);
    // pick the largest component of UC to divide by
    let mut best = 0;
    for i in 1..3 {
        if uc[i].abs() > uc[best].abs() {
            best = i;
        }
    }
    Ok(ub[best].clone() / uc[best].clone())
}

/// Side lengths with the derived quantities of a triangle and, when its
/// coordinates are representable, a Cartesian embedding.
///
/// Squared sides are always available; unsquared sides, the area and the
/// embedding may be missing on the exact backend when they are irrational.
#[derive(Clone, Debug)]
pub struct TriangleMetric<S> {
    sq: Triple<S>,
    sides: Option<Triple<S>>,
    area2: S,
    area: Option<S>,
    embedding: Option<[CartesianPoint<S>; 3]>,
}

impl<S: Scalar> TriangleMetric<S> {
    /// Triangle with side lengths `a = BC`, `b = CA`, `c = AB`, embedded as
    /// `B = (0, 0)`, `C = (a, 0)` and `A` above the x-axis.
    pub fn from_sides(a: S, b: S, c: S) -> Result<Self> {
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(GeomError::InvalidTriangle("side lengths must be positive".into()));
        }
        let per = a.clone() + b.clone() + c.clone();
        let f1 = b.clone() + c.clone() - a.clone();
        let f2 = c.clone() + a.clone() - b.clone();
        let f3 = a.clone() + b.clone() - c.clone();
        if !(f1.is_positive() && f2.is_positive() && f3.is_positive()) {
            return Err(GeomError::InvalidTriangle("triangle inequality violated".into()));
        }
        let area2 = per * f1 * f2 * f3 / S::from_int(16);
        if area2.vanishes(&sq(&(a.clone() + b.clone() + c.clone()))) {
            return Err(GeomError::InvalidTriangle("degenerate triangle".into()));
        }
        let area = area2.sqrt_checked();
        let sqs = [sq(&a), sq(&b), sq(&c)];
        let embedding = area.as_ref().map(|area| {
            let ax = (sqs[0].clone() + sqs[2].clone() - sqs[1].clone()) / (a.clone() + a.clone());
            let ay = area.clone() * S::from_int(2) / a.clone();
            [
                CartesianPoint::new(ax, ay),
                CartesianPoint::origin(),
                CartesianPoint::new(a.clone(), S::zero()),
            ]
        });
        Ok(Self { sq: sqs, sides: Some([a, b, c]), area2, area, embedding })
    }

    pub fn from_int_sides(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_sides(S::from_int(a), S::from_int(b), S::from_int(c))
    }

    /// Triangle known only through its squared sides. Lengths, area and the
    /// embedding are filled in when they happen to be representable.
    pub fn from_sq(sqs: Triple<S>) -> Result<Self> {
        if !sqs.iter().all(|x| x.is_positive()) {
            return Err(GeomError::InvalidTriangle("side lengths must be positive".into()));
        }
        if let (Some(a), Some(b), Some(c)) =
            (sqs[0].sqrt_checked(), sqs[1].sqrt_checked(), sqs[2].sqrt_checked())
        {
            return Self::from_sides(a, b, c);
        }
        let [a2, b2, c2] = sqs.clone();
        let two = S::from_int(2);
        let sixteen_area2 = two.clone() * (a2.clone() * b2.clone() + b2.clone() * c2.clone() + c2.clone() * a2.clone())
            - sq(&a2)
            - sq(&b2)
            - sq(&c2);
        let scale = sq(&(a2.clone() + b2.clone() + c2.clone()));
        if !sixteen_area2.is_positive() || sixteen_area2.vanishes(&scale) {
            return Err(GeomError::InvalidTriangle("triangle inequality violated".into()));
        }
        let area2 = sixteen_area2 / S::from_int(16);
        let area = area2.sqrt_checked();
        Ok(Self { sq: sqs, sides: None, area2, area, embedding: None })
    }

    /// Triangle with the given embedded vertices.
    pub fn from_vertices(v: [CartesianPoint<S>; 3]) -> Result<Self> {
        let cross = v[1].sub(&v[0]).cross(&v[2].sub(&v[0]));
        let scale = v.iter().fold(S::one(), |m, p| m + p.norm2());
        if cross.vanishes(&scale) {
            return Err(GeomError::InvalidTriangle("collinear vertices".into()));
        }
        let sqs = [v[1].dist2(&v[2]), v[2].dist2(&v[0]), v[0].dist2(&v[1])];
        let sides = match (sqs[0].sqrt_checked(), sqs[1].sqrt_checked(), sqs[2].sqrt_checked()) {
            (Some(a), Some(b), Some(c)) => Some([a, b, c]),
            _ => None,
        };
        let area = cross.abs() * half::<S>();
        Ok(Self {
            sq: sqs,
            sides,
            area2: sq(&area),
            area: Some(area),
            embedding: Some(v),
        })
    }

    /// The same triangle over another backend, rebuilt from its side
    /// lengths when they are known and from their squares otherwise.
    pub fn cast<T: Scalar>(&self) -> Result<TriangleMetric<T>> {
        match &self.sides {
            Some(s) => TriangleMetric::from_sides(convert(&s[0]), convert(&s[1]), convert(&s[2])),
            None => TriangleMetric::from_sq(self.sq.clone().map(|x| convert(&x))),
        }
    }

    /// Squared side lengths `(a², b², c²)`.
    pub fn sq(&self) -> &Triple<S> {
        &self.sq
    }

    pub fn sides(&self) -> Result<Triple<S>> {
        self.sides.clone().ok_or(GeomError::NotExact("irrational side length"))
    }

    pub fn has_exact_sides(&self) -> bool {
        self.sides.is_some()
    }

    pub fn area2(&self) -> &S {
        &self.area2
    }

    pub fn area(&self) -> Result<S> {
        self.area.clone().ok_or(GeomError::NotExact("irrational area"))
    }

    pub fn semiperimeter(&self) -> Result<S> {
        let [a, b, c] = self.sides()?;
        Ok((a + b + c) * half::<S>())
    }

    pub fn inradius(&self) -> Result<S> {
        Ok(self.area()? / self.semiperimeter()?)
    }

    pub fn circumradius(&self) -> Result<S> {
        let [a, b, c] = self.sides()?;
        Ok(a * b * c / (self.area()? * S::from_int(4)))
    }

    /// `R²`, available from squared sides alone.
    pub fn circumradius_sq(&self) -> S {
        self.sq[0].clone() * self.sq[1].clone() * self.sq[2].clone()
            / (self.area2.clone() * S::from_int(16))
    }

    /// Cosine of the angle at vertex `i`.
    pub fn cos(&self, i: usize) -> Result<S> {
        let s = self.sides()?;
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        Ok((self.sq[j].clone() + self.sq[k].clone() - self.sq[i].clone())
            / (S::from_int(2) * s[j].clone() * s[k].clone()))
    }

    /// Conway's `S_A, S_B, S_C` (half of `b² + c² − a²`, cyclically).
    pub fn conway(&self) -> Triple<S> {
        let [a2, b2, c2] = self.sq.clone();
        [
            (b2.clone() + c2.clone() - a2.clone()) * half::<S>(),
            (c2.clone() + a2.clone() - b2.clone()) * half::<S>(),
            (a2 + b2 - c2) * half::<S>(),
        ]
    }

    pub fn is_equilateral(&self) -> bool {
        let scale = self.sq[0].abs() + self.sq[1].abs() + self.sq[2].abs();
        (self.sq[0].clone() - self.sq[1].clone()).vanishes(&scale)
            && (self.sq[1].clone() - self.sq[2].clone()).vanishes(&scale)
    }

    /// No two sides equal.
    pub fn is_scalene(&self) -> bool {
        let scale = self.sq[0].abs() + self.sq[1].abs() + self.sq[2].abs();
        (0..3).all(|i| !(self.sq[i].clone() - self.sq[(i + 1) % 3].clone()).vanishes(&scale))
    }

    pub fn is_right(&self) -> bool {
        let scale = self.sq[0].abs() + self.sq[1].abs() + self.sq[2].abs();
        self.conway().iter().any(|s| s.vanishes(&scale))
    }

    pub fn is_acute(&self) -> bool {
        self.conway().iter().all(|s| s.is_positive())
    }

    /// Copy with all lengths multiplied by `k > 0`.
    pub fn scaled(&self, k: &S) -> Result<Self> {
        match &self.sides {
            Some([a, b, c]) => {
                Self::from_sides(a.clone() * k.clone(), b.clone() * k.clone(), c.clone() * k.clone())
            }
            None => {
                let v = self.embedding()?.clone().map(|p| p.scale(k));
                Self::from_vertices(v)
            }
        }
    }

    pub fn embedding(&self) -> Result<&[CartesianPoint<S>; 3]> {
        self.embedding.as_ref().ok_or(GeomError::NotExact("no rational embedding (non-Heronian triangle)"))
    }

    pub fn vertex_cart(&self, i: usize) -> Result<CartesianPoint<S>> {
        Ok(self.embedding()?[i].clone())
    }

    /// Cartesian point of a finite barycentric point.
    pub fn to_cartesian(&self, p: &HPoint<S>) -> Result<CartesianPoint<S>> {
        let w = p.normalize()?;
        let v = self.embedding()?;
        let mut out = CartesianPoint::origin();
        for i in 0..3 {
            out = out.add(&v[i].scale(&w[i]));
        }
        Ok(out)
    }

    /// Normalized barycentrics of a Cartesian point.
    pub fn from_cartesian(&self, pt: &CartesianPoint<S>) -> Result<HPoint<S>> {
        let w = self.affine_weights(pt)?;
        HPoint::new(w)
    }

    fn affine_weights(&self, pt: &CartesianPoint<S>) -> Result<Triple<S>> {
        let v = self.embedding()?;
        let d = v[1].sub(&v[0]).cross(&v[2].sub(&v[0]));
        Ok([0, 1, 2].map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            v[j].sub(pt).cross(&v[k].sub(pt)) / d.clone()
        }))
    }

    /// Affine function `f(X) = α·X.x + β·X.y + γ` taking the given values at
    /// the vertices, returned as `(α, β, γ)`.
    pub fn affine_from_vertex_values(&self, vals: &Triple<S>) -> Result<Triple<S>> {
        let v = self.embedding()?;
        let d = v[1].sub(&v[0]).cross(&v[2].sub(&v[0]));
        let mut coef = [S::zero(), S::zero(), S::zero()];
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            // λ_i(X) = [v_j × v_k + X.x (v_j.y − v_k.y) + X.y (v_k.x − v_j.x)] / d
            let cst = v[j].cross(&v[k]);
            let cx = v[j].y.clone() - v[k].y.clone();
            let cy = v[k].x.clone() - v[j].x.clone();
            let w = vals[i].clone() / d.clone();
            coef[0] = coef[0].clone() + cx * w.clone();
            coef[1] = coef[1].clone() + cy * w.clone();
            coef[2] = coef[2].clone() + cst * w;
        }
        Ok(coef)
    }

    pub fn line_to_cartesian(&self, l: &HLine<S>) -> Result<Line2<S>> {
        let [a, b, c] = self.affine_from_vertex_values(l.triple())?;
        if a.is_zero() && b.is_zero() {
            return Err(GeomError::Degenerate("line at infinity has no Cartesian form".into()));
        }
        Line2::new(a, b, c)
    }

    pub fn line_from_cartesian(&self, l: &Line2<S>) -> Result<HLine<S>> {
        let v = self.embedding()?;
        HLine::new([l.eval(&v[0]), l.eval(&v[1]), l.eval(&v[2])])
    }

    /// Squared distance of two finite points, from squared sides alone.
    pub fn dist2(&self, p: &HPoint<S>, q: &HPoint<S>) -> Result<S> {
        let d = vec3::sub(&p.normalize()?, &q.normalize()?);
        let [a2, b2, c2] = self.sq.clone();
        Ok(-(a2 * d[1].clone() * d[2].clone() + b2 * d[2].clone() * d[0].clone() + c2 * d[0].clone() * d[1].clone()))
    }

    /// Whether four finite points lie on one circle, via the lifted 4×4
    /// determinant. Four collinear points count as concyclic (a line is a
    /// degenerate circle).
    pub fn concyclic(&self, pts: [&HPoint<S>; 4]) -> Result<bool> {
        for i in 0..4 {
            for j in i + 1..4 {
                if pts[i] == pts[j] {
                    return Err(GeomError::CoincidentPoints);
                }
            }
        }
        let c: Vec<CartesianPoint<S>> =
            pts.iter().map(|p| self.to_cartesian(p)).collect::<Result<_>>()?;
        // subtract the last row to reduce to a 3×3 determinant
        let rows: Vec<Triple<S>> = (0..3)
            .map(|i| {
                let d = c[i].sub(&c[3]);
                [c[i].norm2() - c[3].norm2(), d.x, d.y]
            })
            .collect();
        Ok(vec3::det3_vanishes(&rows[0], &rows[1], &rows[2]))
    }

    /// Cartesian circle through three finite points.
    pub fn cart_circle_through(&self, p: &HPoint<S>, q: &HPoint<S>, r: &HPoint<S>) -> Result<CartCircle<S>> {
        CartCircle::through3(&self.to_cartesian(p)?, &self.to_cartesian(q)?, &self.to_cartesian(r)?)
            .ok_or(GeomError::NotCollinear)
    }

    pub fn wire_sides(&self) -> [String; 3] {
        match &self.sides {
            Some(s) => s.clone().map(|x| x.to_wire()),
            None => self.sq.clone().map(|x| format!("sqrt({})", x.to_wire())),
        }
    }
}
