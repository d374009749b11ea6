//! Small helpers over homogeneous triples.

use crate::scalar::Scalar;

pub type Triple<S> = [S; 3];

pub fn cross<S: Scalar>(p: &Triple<S>, q: &Triple<S>) -> Triple<S> {
    [
        p[1].clone() * q[2].clone() - p[2].clone() * q[1].clone(),
        p[2].clone() * q[0].clone() - p[0].clone() * q[2].clone(),
        p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone(),
    ]
}

pub fn dot<S: Scalar>(p: &Triple<S>, q: &Triple<S>) -> S {
    p[0].clone() * q[0].clone() + p[1].clone() * q[1].clone() + p[2].clone() * q[2].clone()
}

/// Sum of absolute products, the magnitude scale of [`dot`].
pub fn dot_scale<S: Scalar>(p: &Triple<S>, q: &Triple<S>) -> S {
    p[0].abs() * q[0].abs() + p[1].abs() * q[1].abs() + p[2].abs() * q[2].abs()
}

pub fn det3<S: Scalar>(p: &Triple<S>, q: &Triple<S>, r: &Triple<S>) -> S {
    dot(&cross(q, r), p)
}

pub fn max_abs<S: Scalar>(p: &Triple<S>) -> S {
    let mut m = S::zero();
    for x in p {
        let a = x.abs();
        if a > m {
            m = a;
        }
    }
    m
}

pub fn is_zero_triple<S: Scalar>(p: &Triple<S>) -> bool {
    p.iter().all(|x| x.is_zero())
}

pub fn det3_vanishes<S: Scalar>(p: &Triple<S>, q: &Triple<S>, r: &Triple<S>) -> bool {
    let scale = max_abs(p) * max_abs(q) * max_abs(r) * S::from_int(6);
    det3(p, q, r).vanishes(&scale)
}

/// Projective equality: the cross product vanishes and neither triple is zero.
pub fn proj_eq<S: Scalar>(p: &Triple<S>, q: &Triple<S>) -> bool {
    let sp = max_abs(p);
    let sq = max_abs(q);
    if sp.is_zero() || sq.is_zero() {
        return false;
    }
    let scale = sp * sq * S::from_int(2);
    cross(p, q).iter().all(|c| c.vanishes(&scale))
}

pub fn scale<S: Scalar>(p: &Triple<S>, k: &S) -> Triple<S> {
    [p[0].clone() * k.clone(), p[1].clone() * k.clone(), p[2].clone() * k.clone()]
}

pub fn add<S: Scalar>(p: &Triple<S>, q: &Triple<S>) -> Triple<S> {
    [p[0].clone() + q[0].clone(), p[1].clone() + q[1].clone(), p[2].clone() + q[2].clone()]
}

pub fn sub<S: Scalar>(p: &Triple<S>, q: &Triple<S>) -> Triple<S> {
    [p[0].clone() - q[0].clone(), p[1].clone() - q[1].clone(), p[2].clone() - q[2].clone()]
}

pub fn sum<S: Scalar>(p: &Triple<S>) -> S {
    p[0].clone() + p[1].clone() + p[2].clone()
}

/// Solves `m · x = rhs` by Cramer's rule; `None` when `m` is singular.
pub fn solve3<S: Scalar>(m: &[Triple<S>; 3], rhs: &Triple<S>) -> Option<Triple<S>> {
    let d = det3(&m[0], &m[1], &m[2]);
    let scale = max_abs(&m[0]) * max_abs(&m[1]) * max_abs(&m[2]) * S::from_int(6);
    if d.vanishes(&scale) {
        return None;
    }
    let col = |j: usize| -> [Triple<S>; 3] {
        let mut out = m.clone();
        for i in 0..3 {
            out[i][j] = rhs[i].clone();
        }
        out
    };
    let mut x: Triple<S> = [S::zero(), S::zero(), S::zero()];
    for (j, xj) in x.iter_mut().enumerate() {
        let c = col(j);
        *xj = det3(&c[0], &c[1], &c[2]) / d.clone();
    }
    Some(x)
}

/// Rows of a 3×3 matrix product `a · b`.
pub fn mat_mul<S: Scalar>(a: &[Triple<S>; 3], b: &[Triple<S>; 3]) -> [Triple<S>; 3] {
    let col = |j: usize| [b[0][j].clone(), b[1][j].clone(), b[2][j].clone()];
    let cols = [col(0), col(1), col(2)];
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| dot(&a[i], &cols[j])))
}

pub fn mat_vec<S: Scalar>(a: &[Triple<S>; 3], v: &Triple<S>) -> Triple<S> {
    [dot(&a[0], v), dot(&a[1], v), dot(&a[2], v)]
}

pub fn transpose<S: Scalar>(a: &[Triple<S>; 3]) -> [Triple<S>; 3] {
    [0, 1, 2].map(|i| [a[0][i].clone(), a[1][i].clone(), a[2][i].clone()])
}

/// Inverse up to the scalar factor `1/det` (the adjugate).
pub fn adjugate<S: Scalar>(a: &[Triple<S>; 3]) -> [Triple<S>; 3] {
    // Columns of the inverse are cross products of rows.
    let c0 = cross(&a[1], &a[2]);
    let c1 = cross(&a[2], &a[0]);
    let c2 = cross(&a[0], &a[1]);
    transpose(&[c0, c1, c2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    fn t(v: [i64; 3]) -> Triple<Exact> {
        v.map(Exact::from_int)
    }

    #[test]
    fn cross_of_incenter_and_centroid() {
        assert_eq!(cross(&t([13, 14, 15]), &t([1, 1, 1])), t([-1, 2, -1]));
    }

    #[test]
    fn solve_matches_adjugate() {
        let m = [t([2, 1, 0]), t([1, 3, 1]), t([0, 1, 4])];
        let rhs = t([1, 2, 3]);
        let x = solve3(&m, &rhs).unwrap();
        assert_eq!(mat_vec(&m, &x), rhs);
        let adj = adjugate(&m);
        let prod = mat_mul(&m, &adj);
        let d = det3(&m[0], &m[1], &m[2]);
        for (i, row) in prod.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expect = if i == j { d.clone() } else { Exact::from_int(0) };
                assert_eq!(*v, expect);
            }
        }
    }
}
