//! Named triangle centers, point transforms, and the one-parameter family
//! of centers on the incenter–centroid line and its isogonal image.

use serde::Serialize;

use crate::bary::{HLine, HPoint, TriangleMetric};
use crate::error::{GeomError, Result};
use crate::scalar::{sq, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CenterId {
    I,
    G,
    O,
    H,
    K,
    NinePoint,
    Nagel,
    Spieker,
    X56,
    X57,
    X58,
    Ia,
    Ib,
    Ic,
    D,
    E,
    F,
    Mprime,
    Nprime,
    Pprime,
}

impl CenterId {
    pub const ALL: [CenterId; 20] = [
        CenterId::I,
        CenterId::G,
        CenterId::O,
        CenterId::H,
        CenterId::K,
        CenterId::NinePoint,
        CenterId::Nagel,
        CenterId::Spieker,
        CenterId::X56,
        CenterId::X57,
        CenterId::X58,
        CenterId::Ia,
        CenterId::Ib,
        CenterId::Ic,
        CenterId::D,
        CenterId::E,
        CenterId::F,
        CenterId::Mprime,
        CenterId::Nprime,
        CenterId::Pprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CenterId::I => "I",
            CenterId::G => "G",
            CenterId::O => "O",
            CenterId::H => "H",
            CenterId::K => "K",
            CenterId::NinePoint => "N",
            CenterId::Nagel => "Nagel",
            CenterId::Spieker => "Spieker",
            CenterId::X56 => "X56",
            CenterId::X57 => "X57",
            CenterId::X58 => "X58",
            CenterId::Ia => "Ia",
            CenterId::Ib => "Ib",
            CenterId::Ic => "Ic",
            CenterId::D => "D",
            CenterId::E => "E",
            CenterId::F => "F",
            CenterId::Mprime => "M'",
            CenterId::Nprime => "N'",
            CenterId::Pprime => "P'",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        Self::ALL.into_iter().find(|c| {
            c.name().eq_ignore_ascii_case(s)
                || format!("{c:?}").eq_ignore_ascii_case(s)
        })
    }

    /// Whether the formula needs unsquared side lengths.
    pub fn needs_sides(self) -> bool {
        !matches!(self, CenterId::G | CenterId::O | CenterId::H | CenterId::K | CenterId::NinePoint)
    }
}

/// Builds `(f(0) : f(1) : f(2))`.
fn cyc<S: Scalar>(f: impl Fn(usize, usize, usize) -> S) -> Result<HPoint<S>> {
    HPoint::new([f(0, 1, 2), f(1, 2, 0), f(2, 0, 1)])
}

pub fn named_center<S: Scalar>(t: &TriangleMetric<S>, id: CenterId) -> Result<HPoint<S>> {
    let q = t.sq().clone();
    let sc = t.conway();
    if !id.needs_sides() {
        return match id {
            CenterId::G => Ok(HPoint::centroid()),
            CenterId::O => cyc(|i, _, _| q[i].clone() * sc[i].clone()),
            CenterId::H => cyc(|_, j, k| sc[j].clone() * sc[k].clone()),
            CenterId::K => HPoint::new(q.clone()),
            CenterId::NinePoint => cyc(|i, j, k| {
                q[i].clone() * (q[j].clone() + q[k].clone()) - sq(&(q[j].clone() - q[k].clone()))
            }),
            _ => unreachable!(),
        };
    }
    let s = t.sides()?;
    // b + c - a, cyclically
    let e = |i: usize| s[(i + 1) % 3].clone() + s[(i + 2) % 3].clone() - s[i].clone();
    let pair = |i: usize| s[(i + 1) % 3].clone() + s[(i + 2) % 3].clone();
    match id {
        CenterId::I => HPoint::new(s.clone()),
        CenterId::Nagel => cyc(|i, _, _| e(i)),
        CenterId::Spieker => cyc(|i, _, _| pair(i)),
        CenterId::X56 => cyc(|i, j, k| q[i].clone() * e(j) * e(k)),
        CenterId::X57 => cyc(|i, j, k| s[i].clone() * e(j) * e(k)),
        CenterId::X58 => cyc(|i, j, k| q[i].clone() * pair(j) * pair(k)),
        CenterId::Ia | CenterId::Ib | CenterId::Ic => {
            let idx = match id {
                CenterId::Ia => 0,
                CenterId::Ib => 1,
                _ => 2,
            };
            let mut v = s.clone();
            v[idx] = -v[idx].clone();
            HPoint::new(v)
        }
        CenterId::D | CenterId::E | CenterId::F => {
            let idx = match id {
                CenterId::D => 0,
                CenterId::E => 1,
                _ => 2,
            };
            // D = (0 : s − c : s − b), with 2(s − c) = a + b − c
            HPoint::new([0, 1, 2].map(|i| if i == idx { S::zero() } else { e(3 - i - idx) }))
        }
        CenterId::Mprime | CenterId::Nprime | CenterId::Pprime => {
            let idx = match id {
                CenterId::Mprime => 0,
                CenterId::Nprime => 1,
                _ => 2,
            };
            // circumcevian of I at the given vertex: (−a² : b(b+c) : c(b+c))
            let v = [0, 1, 2].map(|i| {
                if i == idx {
                    -q[i].clone()
                } else {
                    s[i].clone() * pair(idx)
                }
            });
            HPoint::new(v)
        }
        _ => unreachable!(),
    }
}

/// `(x : y : z) ↦ (a²yz : b²zx : c²xy)`.
pub fn isogonal_conjugate<S: Scalar>(t: &TriangleMetric<S>, p: &HPoint<S>) -> Result<HPoint<S>> {
    if p.is_vertex() {
        return Err(GeomError::VertexInput);
    }
    let [x, y, z] = p.triple().clone();
    let q = t.sq();
    HPoint::new([
        q[0].clone() * y.clone() * z.clone(),
        q[1].clone() * z * x.clone(),
        q[2].clone() * x * y,
    ])
}

/// Image under the homothety at the centroid with ratio −1/2.
pub fn complement<S: Scalar>(p: &HPoint<S>) -> Result<HPoint<S>> {
    if !p.is_finite() {
        return Err(GeomError::PointAtInfinity);
    }
    let s = p.coord_sum();
    HPoint::new(p.triple().clone().map(|c| s.clone() - c))
}

/// `(u : v : w) ↦ [1/u : 1/v : 1/w]`, with denominators cleared.
pub fn tripolar<S: Scalar>(p: &HPoint<S>) -> Result<HLine<S>> {
    if p.is_vertex() {
        return Err(GeomError::VertexInput);
    }
    let [u, v, w] = p.triple().clone();
    HLine::new([v.clone() * w.clone(), w * u.clone(), u * v])
}

pub fn tripole<S: Scalar>(l: &HLine<S>) -> Result<HPoint<S>> {
    if (0..3).any(|i| *l == HLine::sideline(i)) {
        return Err(GeomError::Sideline("tripole of a sideline"));
    }
    let [u, v, w] = l.triple().clone();
    HPoint::new([v.clone() * w.clone(), w * u.clone(), u * v])
}

/// Similarity coefficient of the central similarity at the incenter.
#[derive(Clone, Debug, PartialEq)]
pub enum KParam<S> {
    Finite(S),
    /// `k → ∞`, where the family reaches the incenter.
    Infinity,
}

impl<S: Scalar> KParam<S> {
    pub fn wire(&self) -> String {
        match self {
            KParam::Finite(k) => k.to_wire(),
            KParam::Infinity => "inf".into(),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Some(KParam::Infinity),
            other => S::parse_wire(other).map(KParam::Finite),
        }
    }
}

/// Denominators `b + c + (2k − 1)a`, cyclically.
fn family_terms<S: Scalar>(t: &TriangleMetric<S>, k: &S) -> Result<[S; 3]> {
    let s = t.sides()?;
    let m = k.clone() + k.clone() - S::one();
    Ok([0, 1, 2].map(|i| {
        s[(i + 1) % 3].clone() + s[(i + 2) % 3].clone() + m.clone() * s[i].clone()
    }))
}

/// `Q*(k) = (b + c + (2k − 1)a : …)`, a point of the line IG.
pub fn lemma3_qstar<S: Scalar>(t: &TriangleMetric<S>, k: &KParam<S>) -> Result<HPoint<S>> {
    match k {
        KParam::Infinity => named_center(t, CenterId::I),
        KParam::Finite(k) => HPoint::new(family_terms(t, k)?),
    }
}

/// `Q(k) = (a²/(b + c + (2k − 1)a) : …)`, a point of the circumconic `(IG)*`.
///
/// A vanishing denominator is handled by clearing denominators, which puts
/// `Q` at the corresponding vertex.
pub fn lemma3_q<S: Scalar>(t: &TriangleMetric<S>, k: &KParam<S>) -> Result<HPoint<S>> {
    match k {
        KParam::Infinity => named_center(t, CenterId::I),
        KParam::Finite(k) => {
            let d = family_terms(t, k)?;
            let q = t.sq();
            cyc(|i, j, l| q[i].clone() * d[j].clone() * d[l].clone())
                .map_err(|_| GeomError::Degenerate("Q(k) undefined: two vanishing denominators".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bary::join;
    use crate::scalar::Exact;

    type P = HPoint<Exact>;

    fn t() -> TriangleMetric<Exact> {
        TriangleMetric::from_int_sides(13, 14, 15).unwrap()
    }

    fn k(n: i64, d: i64) -> KParam<Exact> {
        KParam::Finite(Exact::from_ratio(n, d))
    }

    #[test]
    fn named_center_examples() {
        let t = t();
        assert_eq!(named_center(&t, CenterId::X57).unwrap(), P::ints(13, 16, 20));
        assert_eq!(named_center(&t, CenterId::Spieker).unwrap(), P::ints(29, 28, 27));
        assert_eq!(named_center(&t, CenterId::G).unwrap(), P::ints(1, 1, 1));
        assert_eq!(named_center(&t, CenterId::Nagel).unwrap(), P::ints(8, 7, 6));
        assert_eq!(named_center(&t, CenterId::X56).unwrap(), P::ints(169, 224, 300));
        // (169/29 : 7 : 25/3) = (a²/(b+c) : …)
        let x58 = P::new([Exact::from_ratio(169, 29), Exact::from_int(7), Exact::from_ratio(25, 3)]).unwrap();
        assert_eq!(named_center(&t, CenterId::X58).unwrap(), x58);
        // contact points: D = (0 : s−c : s−b) with s = 21
        assert_eq!(named_center(&t, CenterId::D).unwrap(), P::ints(0, 6, 7));
        assert_eq!(named_center(&t, CenterId::E).unwrap(), P::ints(6, 0, 8));
        assert_eq!(named_center(&t, CenterId::F).unwrap(), P::ints(7, 8, 0));
        assert_eq!(named_center(&t, CenterId::Ia).unwrap(), P::ints(-13, 14, 15));
    }

    #[test]
    fn metric_centers_match_embedding() {
        let t = t();
        let o = t.to_cartesian(&named_center(&t, CenterId::O).unwrap()).unwrap();
        for i in 0..3 {
            assert_eq!(o.dist2(&t.vertex_cart(i).unwrap()), t.circumradius_sq());
        }
        let h = t.to_cartesian(&named_center(&t, CenterId::H).unwrap()).unwrap();
        let v = t.embedding().unwrap();
        for i in 0..3 {
            let (j, l) = ((i + 1) % 3, (i + 2) % 3);
            assert_eq!(h.sub(&v[i]).dot(&v[j].sub(&v[l])), Exact::from_int(0));
        }
        let n = t.to_cartesian(&named_center(&t, CenterId::NinePoint).unwrap()).unwrap();
        assert_eq!(n, o.midpoint(&h));
        // incircle tangency points are at distance r from I
        let i = t.to_cartesian(&named_center(&t, CenterId::I).unwrap()).unwrap();
        let r = t.inradius().unwrap();
        for id in [CenterId::D, CenterId::E, CenterId::F] {
            let p = t.to_cartesian(&named_center(&t, id).unwrap()).unwrap();
            assert_eq!(p.dist2(&i), r.clone() * r.clone());
        }
        // arc midpoints are equidistant from the other two vertices
        for (idx, id) in [CenterId::Mprime, CenterId::Nprime, CenterId::Pprime].into_iter().enumerate() {
            let m = t.to_cartesian(&named_center(&t, id).unwrap()).unwrap();
            assert_eq!(m.dist2(&v[(idx + 1) % 3]), m.dist2(&v[(idx + 2) % 3]));
            assert_eq!(m.dist2(&o), t.circumradius_sq());
        }
    }

    #[test]
    fn isogonal_examples() {
        let t = t();
        assert_eq!(isogonal_conjugate(&t, &P::ints(1, 1, 1)).unwrap(), P::ints(169, 196, 225));
        assert_eq!(isogonal_conjugate(&t, &P::ints(13, 14, 15)).unwrap(), P::ints(13, 14, 15));
        assert_eq!(isogonal_conjugate(&t, &P::ints(8, 7, 6)).unwrap(), P::ints(169, 224, 300));
        assert_eq!(isogonal_conjugate(&t, &P::vertex(0)), Err(GeomError::VertexInput));
        let ia = named_center(&t, CenterId::Ia).unwrap();
        assert_eq!(isogonal_conjugate(&t, &ia).unwrap(), ia);
    }

    #[test]
    fn complement_examples() {
        let t = t();
        assert_eq!(complement(&P::ints(13, 14, 15)).unwrap(), P::ints(29, 28, 27));
        assert_eq!(complement(&P::ints(1, 1, 1)).unwrap(), P::ints(1, 1, 1));
        let h = named_center(&t, CenterId::H).unwrap();
        assert_eq!(complement(&h).unwrap(), named_center(&t, CenterId::O).unwrap());
        assert_eq!(isogonal_conjugate(&t, &h).unwrap(), named_center(&t, CenterId::O).unwrap());
        assert_eq!(complement(&P::ints(1, -1, 0)), Err(GeomError::PointAtInfinity));
    }

    #[test]
    fn tripolar_examples() {
        assert_eq!(tripolar(&P::ints(1, 1, 1)).unwrap(), HLine::ints(1, 1, 1));
        assert_eq!(tripolar(&P::ints(13, 16, 20)).unwrap(), HLine::ints(80, 65, 52));
        assert_eq!(tripole(&HLine::ints(80, 65, 52)).unwrap(), P::ints(13, 16, 20));
        assert!(tripolar(&P::vertex(2)).is_err());
        assert!(tripole(&HLine::<Exact>::sideline(1)).is_err());
    }

    #[test]
    fn lemma3_special_values() {
        let t = t();
        let c = |id| named_center(&t, id).unwrap();
        assert_eq!(lemma3_qstar(&t, &k(0, 1)).unwrap(), c(CenterId::Nagel));
        assert_eq!(lemma3_q(&t, &k(0, 1)).unwrap(), c(CenterId::X56));
        assert_eq!(lemma3_qstar(&t, &k(1, 2)).unwrap(), c(CenterId::Spieker));
        assert_eq!(lemma3_q(&t, &k(1, 2)).unwrap(), c(CenterId::X58));
        assert_eq!(lemma3_qstar(&t, &k(1, 1)).unwrap(), c(CenterId::G));
        assert_eq!(lemma3_q(&t, &k(1, 1)).unwrap(), c(CenterId::K));
        assert_eq!(lemma3_q(&t, &KParam::Infinity).unwrap(), c(CenterId::I));
        assert_eq!(lemma3_qstar(&t, &KParam::Infinity).unwrap(), c(CenterId::I));
    }

    #[test]
    fn lemma3_line_through_centroid_is_constant() {
        let t = t();
        let g = P::ints(1, 1, 1);
        for n in -10..10 {
            if n == 3 {
                continue; // k = 1 gives Q* = G
            }
            let qs = lemma3_qstar(&t, &k(n, 3)).unwrap();
            assert_eq!(join(&g, &qs).unwrap(), HLine::ints(-1, 2, -1));
        }
    }

    #[test]
    fn zero_denominator_is_cleared() {
        let t = t();
        // b + c + (2k − 1)a = 0 for k = (a − b − c)/(2a) = −16/26
        let q = lemma3_q(&t, &k(-8, 13)).unwrap();
        assert_eq!(q, P::vertex(0));
    }
}
