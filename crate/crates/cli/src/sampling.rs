//! Exact rational samplers: points on and off the loci the checks
//! characterize.

use coaxal_core::bary::{join, HLine, HPoint, TriangleMetric};
use coaxal_core::centers::{named_center, CenterId};
use coaxal_core::circles::{conic_line_second_intersection, Conic};
use coaxal_core::theorems::{Theorem10Kind, Theorem10Locus};
use coaxal_core::{GeomError, Result, Scalar};
use rand::Rng;

const MAX_DRAWS: usize = 200;

/// A nonzero rational `n/d` with `|n| ≤ 24`, `1 ≤ d ≤ 7`.
pub fn rational<S: Scalar, R: Rng>(rng: &mut R) -> S {
    loop {
        let n = rng.gen_range(-24..=24);
        if n != 0 {
            return S::from_ratio(n, rng.gen_range(1..=7));
        }
    }
}

/// A finite point off the sidelines with small integer coordinates.
pub fn point<S: Scalar, R: Rng>(rng: &mut R) -> HPoint<S> {
    loop {
        let c: [i64; 3] = [(); 3].map(|_| rng.gen_range(-9..=15));
        let [x, y, z] = c;
        // a vanishing pair sum puts a cevian trace at infinity
        if c.iter().any(|x| *x == 0) || x + y + z == 0 || x + y == 0 || y + z == 0 || z + x == 0 {
            continue;
        }
        return HPoint::ints(c[0], c[1], c[2]);
    }
}

/// A random point failing `on`, for the negative side of an equivalence.
pub fn point_off<S: Scalar, R: Rng>(rng: &mut R, on: impl Fn(&HPoint<S>) -> bool) -> Result<HPoint<S>> {
    for _ in 0..MAX_DRAWS {
        let p = point(rng);
        if !on(&p) {
            return Ok(p);
        }
    }
    Err(GeomError::Degenerate("no off-locus sample found".into()))
}

/// Second intersection of a circumconic with the line through `A` and
/// `(0 : 1 : τ)`.
pub fn on_circumconic_at<S: Scalar>(k: &Conic<S>, tau: &S) -> Result<HPoint<S>> {
    let a = HPoint::vertex(0);
    let line = join(&a, &HPoint::new([S::zero(), S::one(), tau.clone()])?)?;
    let q = conic_line_second_intersection(k, &line, &a)?;
    if q.on_sideline() || !q.is_finite() {
        return Err(GeomError::Degenerate("conic sample on a sideline or at infinity".into()));
    }
    Ok(q)
}

pub fn on_circumconic<S: Scalar, R: Rng>(rng: &mut R, k: &Conic<S>) -> Result<HPoint<S>> {
    for _ in 0..MAX_DRAWS {
        if let Ok(q) = on_circumconic_at(k, &rational(rng)) {
            return Ok(q);
        }
    }
    Err(GeomError::Degenerate("no conic sample found".into()))
}

/// `p + τ(q − p)` on normalized representatives, off the sidelines.
pub fn on_line_through<S: Scalar, R: Rng>(rng: &mut R, p: &HPoint<S>, q: &HPoint<S>) -> Result<HPoint<S>> {
    for _ in 0..MAX_DRAWS {
        let x = p.lerp(q, &rational(rng))?;
        if !x.on_sideline() && x.is_finite() && x != *p && x != *q {
            return Ok(x);
        }
    }
    Err(GeomError::Degenerate("no line sample found".into()))
}

/// A point of the locus of the general coaxality theorem, at parameter `τ`
/// when given.
pub fn on_theorem10_locus<S: Scalar, R: Rng>(
    rng: &mut R,
    p: &HPoint<S>,
    loc: &Theorem10Locus<S>,
    tau: Option<&S>,
) -> Result<HPoint<S>> {
    match (&loc.kind, tau) {
        (Theorem10Kind::Conic(k), Some(tau)) => on_circumconic_at(k, tau),
        (Theorem10Kind::Conic(k), None) => on_circumconic(rng, k),
        (Theorem10Kind::Line { vertex, .. }, Some(tau)) => HPoint::vertex(*vertex).lerp(p, tau),
        (Theorem10Kind::Line { vertex, .. }, None) => on_line_through(rng, &HPoint::vertex(*vertex), p),
    }
}

/// A point `P = (p : q : r)` for which the line `P*P_C` passes through `A`,
/// so that the locus splits into a line through `A`.
pub fn degenerate_theorem10_p<S: Scalar, R: Rng>(rng: &mut R, t: &TriangleMetric<S>) -> Result<HPoint<S>> {
    let sq = t.sq();
    for _ in 0..MAX_DRAWS {
        let p = S::from_int(rng.gen_range(1..=9));
        let q = S::from_int(rng.gen_range(1..=9));
        let den = sq[1].clone() * (p.clone() + q.clone()) - sq[2].clone() * q.clone();
        if den.is_zero() {
            continue;
        }
        let r = sq[2].clone() * p.clone() * q.clone() / den;
        let pt = HPoint::new([p, q, r])?;
        let [p, q, r] = pt.triple().clone();
        let traces_finite = !(q.clone() + r.clone()).is_zero() && !(r + p).is_zero();
        if traces_finite && !pt.on_sideline() && pt.is_finite() && pt != named_center(t, CenterId::H)? {
            return Ok(pt);
        }
    }
    Err(GeomError::Degenerate("no degenerate sample found".into()))
}

/// A random point of the Euler line `O + τ(H − O)`.
pub fn on_euler_line<S: Scalar, R: Rng>(rng: &mut R, t: &TriangleMetric<S>) -> Result<HPoint<S>> {
    let o = named_center(t, CenterId::O)?;
    let h = named_center(t, CenterId::H)?;
    for _ in 0..MAX_DRAWS {
        let x = o.lerp(&h, &rational(rng))?;
        if !x.is_vertex() && x != h && !x.on_sideline() {
            return Ok(x);
        }
    }
    Err(GeomError::Degenerate("no Euler line sample found".into()))
}

pub fn off_line<S: Scalar, R: Rng>(rng: &mut R, l: &HLine<S>) -> Result<HPoint<S>> {
    point_off(rng, |p| l.contains(p))
}
