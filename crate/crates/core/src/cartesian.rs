//! Plane geometry in the Cartesian embedding of a reference triangle.
//!
//! Used for everything metric: perpendiculars, reflections, circle centers
//! and inversion. Exact on the rational backend whenever the embedding is.

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::scalar::{half, sq, two, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CartesianPoint<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> CartesianPoint<S> {
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(S::zero(), S::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.x.clone() + o.x.clone(), self.y.clone() + o.y.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn dot(&self, o: &Self) -> S {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone()
    }

    pub fn cross(&self, o: &Self) -> S {
        self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone()
    }

    pub fn norm2(&self) -> S {
        self.dot(self)
    }

    pub fn dist2(&self, o: &Self) -> S {
        self.sub(o).norm2()
    }

    pub fn midpoint(&self, o: &Self) -> Self {
        self.add(o).scale(&half())
    }

    /// Approximate equality on the float backend, exact otherwise.
    pub fn same(&self, o: &Self) -> bool {
        let scale = self.x.abs() + self.y.abs() + o.x.abs() + o.y.abs() + S::one();
        (self.x.clone() - o.x.clone()).vanishes(&scale)
            && (self.y.clone() - o.y.clone()).vanishes(&scale)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// The line `a·x + b·y + c = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Line2<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> Line2<S> {
    pub fn new(a: S, b: S, c: S) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(GeomError::Degenerate("line with zero normal".into()));
        }
        Ok(Self { a, b, c })
    }

    pub fn through(p: &CartesianPoint<S>, q: &CartesianPoint<S>) -> Result<Self> {
        if p.same(q) {
            return Err(GeomError::EqualElements);
        }
        let d = q.sub(p);
        // normal (-dy, dx)
        let a = -d.y.clone();
        let b = d.x.clone();
        let c = -(a.clone() * p.x.clone() + b.clone() * p.y.clone());
        Self::new(a, b, c)
    }

    /// Line through `p` with normal vector `n`.
    pub fn with_normal(p: &CartesianPoint<S>, n: &CartesianPoint<S>) -> Result<Self> {
        let c = -(n.x.clone() * p.x.clone() + n.y.clone() * p.y.clone());
        Self::new(n.x.clone(), n.y.clone(), c)
    }

    /// Line through `p` with direction `d`.
    pub fn with_direction(p: &CartesianPoint<S>, d: &CartesianPoint<S>) -> Result<Self> {
        Self::with_normal(p, &CartesianPoint::new(-d.y.clone(), d.x.clone()))
    }

    pub fn normal(&self) -> CartesianPoint<S> {
        CartesianPoint::new(self.a.clone(), self.b.clone())
    }

    pub fn direction(&self) -> CartesianPoint<S> {
        CartesianPoint::new(-self.b.clone(), self.a.clone())
    }

    pub fn eval(&self, p: &CartesianPoint<S>) -> S {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()
    }

    pub fn contains(&self, p: &CartesianPoint<S>) -> bool {
        let scale = self.a.abs() * p.x.abs() + self.b.abs() * p.y.abs() + self.c.abs();
        self.eval(p).vanishes(&scale)
    }

    /// Perpendicular to `self` through `p`.
    pub fn perpendicular_through(&self, p: &CartesianPoint<S>) -> Result<Self> {
        Self::with_direction(p, &self.normal())
    }

    pub fn parallel_through(&self, p: &CartesianPoint<S>) -> Result<Self> {
        Self::with_normal(p, &self.normal())
    }

    /// Intersection point, `None` for parallel lines.
    pub fn intersect(&self, o: &Self) -> Option<CartesianPoint<S>> {
        let det = self.a.clone() * o.b.clone() - self.b.clone() * o.a.clone();
        let scale = self.a.abs() * o.b.abs() + self.b.abs() * o.a.abs();
        if det.vanishes(&scale) {
            return None;
        }
        let x = (self.b.clone() * o.c.clone() - self.c.clone() * o.b.clone()) / det.clone();
        let y = (self.c.clone() * o.a.clone() - self.a.clone() * o.c.clone()) / det;
        Some(CartesianPoint::new(x, y))
    }

    pub fn foot(&self, p: &CartesianPoint<S>) -> CartesianPoint<S> {
        let n = self.normal();
        let t = self.eval(p) / n.norm2();
        p.sub(&n.scale(&t))
    }

    pub fn reflect(&self, p: &CartesianPoint<S>) -> CartesianPoint<S> {
        let f = self.foot(p);
        f.scale(&two()).sub(p)
    }

    pub fn is_parallel(&self, o: &Self) -> bool {
        let det = self.a.clone() * o.b.clone() - self.b.clone() * o.a.clone();
        let scale = self.a.abs() * o.b.abs() + self.b.abs() * o.a.abs();
        det.vanishes(&scale)
    }

    pub fn same_line(&self, o: &Self) -> bool {
        let s1 = self.a.abs() + self.b.abs() + self.c.abs();
        let s2 = o.a.abs() + o.b.abs() + o.c.abs();
        let scale = s1 * s2;
        let ab = self.a.clone() * o.b.clone() - self.b.clone() * o.a.clone();
        let ac = self.a.clone() * o.c.clone() - self.c.clone() * o.a.clone();
        let bc = self.b.clone() * o.c.clone() - self.c.clone() * o.b.clone();
        ab.vanishes(&scale) && ac.vanishes(&scale) && bc.vanishes(&scale)
    }
}

/// Circle by center and squared radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CartCircle<S> {
    pub center: CartesianPoint<S>,
    pub radius2: S,
}

impl<S: Scalar> CartCircle<S> {
    pub fn new(center: CartesianPoint<S>, radius2: S) -> Self {
        Self { center, radius2 }
    }

    pub fn through(center: CartesianPoint<S>, p: &CartesianPoint<S>) -> Self {
        let r2 = center.dist2(p);
        Self::new(center, r2)
    }

    pub fn with_diameter(p: &CartesianPoint<S>, q: &CartesianPoint<S>) -> Self {
        Self::new(p.midpoint(q), p.dist2(q) / S::from_int(4))
    }

    /// Circle through three points; `None` when they are collinear.
    pub fn through3(
        p: &CartesianPoint<S>,
        q: &CartesianPoint<S>,
        r: &CartesianPoint<S>,
    ) -> Option<Self> {
        let l1 = Line2::through(p, q).ok()?.perpendicular_through(&p.midpoint(q)).ok()?;
        let l2 = Line2::through(q, r).ok()?.perpendicular_through(&q.midpoint(r)).ok()?;
        let c = l1.intersect(&l2)?;
        Some(Self::through(c, p))
    }

    /// Power of a point: `|p − center|² − radius²`.
    pub fn power(&self, p: &CartesianPoint<S>) -> S {
        p.dist2(&self.center) - self.radius2.clone()
    }

    fn scale_of(&self, p: &CartesianPoint<S>) -> S {
        p.dist2(&self.center) + self.radius2.abs() + S::one()
    }

    pub fn contains(&self, p: &CartesianPoint<S>) -> bool {
        self.power(p).vanishes(&self.scale_of(p))
    }

    pub fn same(&self, o: &Self) -> bool {
        let scale = self.radius2.abs() + o.radius2.abs() + S::one();
        self.center.same(&o.center) && (self.radius2.clone() - o.radius2.clone()).vanishes(&scale)
    }

    /// Orthogonality: `d² = r₁² + r₂²`.
    pub fn orthogonal_to(&self, o: &Self) -> bool {
        let d2 = self.center.dist2(&o.center);
        let scale = d2.clone() + self.radius2.abs() + o.radius2.abs();
        (d2 - self.radius2.clone() - o.radius2.clone()).vanishes(&scale)
    }

    pub fn radical_axis(&self, o: &Self) -> Result<Line2<S>> {
        // power difference is linear: -2(c1 - c2)·X + |c1|² - |c2|² - r1² + r2²
        let d = self.center.sub(&o.center).scale(&-two::<S>());
        let c = self.center.norm2() - o.center.norm2() - self.radius2.clone() + o.radius2.clone();
        Line2::new(d.x, d.y, c).map_err(|_| GeomError::IdenticalCircles)
    }

    /// Intersections with a line as `(discriminant, points)`; points are
    /// `None` when the square root of the discriminant is not available in
    /// the backend or the line misses the circle.
    pub fn line_intersections(
        &self,
        l: &Line2<S>,
    ) -> (S, Option<[CartesianPoint<S>; 2]>) {
        let f = l.foot(&self.center);
        let dist2 = f.dist2(&self.center);
        let disc = self.radius2.clone() - dist2;
        let dir = l.direction();
        let len2 = dir.norm2();
        let ratio = disc.clone() / len2;
        match ratio.sqrt_checked() {
            Some(t) if !disc.is_negative() => {
                let off = dir.scale(&t);
                (disc, Some([f.add(&off), f.sub(&off)]))
            }
            _ => (disc, None),
        }
    }
}

/// A circle or a line: the objects closed under inversion.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cycle<S> {
    Circle(CartCircle<S>),
    Line(Line2<S>),
}

impl<S: Scalar> Cycle<S> {
    pub fn contains(&self, p: &CartesianPoint<S>) -> bool {
        match self {
            Cycle::Circle(c) => c.contains(p),
            Cycle::Line(l) => l.contains(p),
        }
    }

    pub fn same(&self, o: &Self) -> bool {
        match (self, o) {
            (Cycle::Circle(a), Cycle::Circle(b)) => a.same(b),
            (Cycle::Line(a), Cycle::Line(b)) => a.same_line(b),
            _ => false,
        }
    }
}

/// Inversion with the given center and power.
pub fn invert_point<S: Scalar>(
    center: &CartesianPoint<S>,
    power: &S,
    p: &CartesianPoint<S>,
) -> Result<CartesianPoint<S>> {
    let d = p.sub(center);
    let n2 = d.norm2();
    if n2.vanishes(&(p.norm2() + center.norm2() + S::one())) {
        return Err(GeomError::Degenerate("inversion of the center".into()));
    }
    Ok(center.add(&d.scale(&(power.clone() / n2))))
}

pub fn invert_cycle<S: Scalar>(
    center: &CartesianPoint<S>,
    power: &S,
    cycle: &Cycle<S>,
) -> Result<Cycle<S>> {
    match cycle {
        Cycle::Line(l) => {
            if l.contains(center) {
                return Ok(Cycle::Line(l.clone()));
            }
            let f = l.foot(center);
            let f1 = invert_point(center, power, &f)?;
            Ok(Cycle::Circle(CartCircle::with_diameter(center, &f1)))
        }
        Cycle::Circle(c) => {
            let pc = c.power(center);
            if c.contains(center) {
                // antipode of the center maps to the foot of the image line
                let antipode = c.center.scale(&two()).sub(center);
                let a1 = invert_point(center, power, &antipode)?;
                let l = Line2::with_normal(&a1, &antipode.sub(center))?;
                return Ok(Cycle::Line(l));
            }
            let k = power.clone() / pc.clone();
            let new_center = center.add(&c.center.sub(center).scale(&k));
            let r2 = c.radius2.clone() * sq(&k);
            Ok(Cycle::Circle(CartCircle::new(new_center, r2)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    fn p(x: i64, y: i64) -> CartesianPoint<Exact> {
        CartesianPoint::new(Exact::from_int(x), Exact::from_int(y))
    }

    #[test]
    fn reflection_and_foot() {
        let l = Line2::through(&p(0, 0), &p(4, 0)).unwrap();
        assert_eq!(l.reflect(&p(1, 3)), p(1, -3));
        assert_eq!(l.foot(&p(1, 3)), p(1, 0));
    }

    #[test]
    fn inversion_is_involutive_on_points_and_cycles() {
        let o = p(1, 1);
        let pow = Exact::from_int(5);
        let q = p(4, -2);
        let q1 = invert_point(&o, &pow, &q).unwrap();
        assert_eq!(invert_point(&o, &pow, &q1).unwrap(), q);

        let cycles = [
            Cycle::Line(Line2::through(&p(0, 0), &p(3, 1)).unwrap()),
            Cycle::Line(Line2::through(&p(1, 1), &p(3, 2)).unwrap()),
            Cycle::Circle(CartCircle::new(p(5, 5), Exact::from_int(4))),
            Cycle::Circle(CartCircle::through(p(2, 3), &o)),
        ];
        for c in &cycles {
            let img = invert_cycle(&o, &pow, c).unwrap();
            let back = invert_cycle(&o, &pow, &img).unwrap();
            assert!(back.same(c), "{c:?} -> {img:?} -> {back:?}");
        }
    }

    #[test]
    fn circle_through_three_points() {
        let c = CartCircle::through3(&p(0, 0), &p(4, 0), &p(0, 2)).unwrap();
        assert_eq!(c.center, p(2, 1));
        assert_eq!(c.radius2, Exact::from_int(5));
        assert!(CartCircle::through3(&p(0, 0), &p(1, 1), &p(2, 2)).is_none());
    }
}
