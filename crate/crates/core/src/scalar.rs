//! Scalar backends.
//!
//! Every geometric routine in this crate is generic over [`Scalar`]. Two
//! backends are provided: arbitrary-precision rationals, where every
//! predicate is decided exactly, and `f64`, where equality predicates use a
//! relative tolerance (default `1e-9`, adjustable with
//! [`set_float_tolerance`]).

use std::fmt::{Debug, Display};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Default relative tolerance of the float backend.
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-9;

// Zero bits mean "unset".
static FLOAT_TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0);

/// Overrides the relative tolerance used by the `f64` backend.
pub fn set_float_tolerance(tol: f64) {
    FLOAT_TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
}

/// Current relative tolerance used by the `f64` backend.
pub fn float_tolerance() -> f64 {
    match FLOAT_TOLERANCE_BITS.load(Ordering::Relaxed) {
        0 => DEFAULT_FLOAT_TOLERANCE,
        bits => f64::from_bits(bits),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

/// A real number backend.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    const BACKEND: Backend;

    fn from_int(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_f64(&self) -> f64;

    /// Square root when it exists in the backend: perfect rational squares
    /// for the exact backend, any non-negative value for floats.
    fn sqrt_checked(&self) -> Option<Self>;

    /// Whether `self` is zero relative to the magnitude `scale`.
    ///
    /// Exact backend: `self == 0`, `scale` ignored.
    fn vanishes(&self, scale: &Self) -> bool;

    /// Canonical representative of a homogeneous triple: primitive integers
    /// for the exact backend, unit max-norm for floats. The sign is chosen
    /// so that the coordinate sum is positive, or, when the sum vanishes,
    /// the first nonzero entry is positive.
    fn canonical_triple(t: &[Self; 3]) -> [Self; 3];

    /// Lossless textual form used in reports ("num/den" for rationals).
    fn to_wire(&self) -> String;

    fn parse_wire(s: &str) -> Option<Self>;
}

pub type Exact = BigRational;

fn sign_fix<S: Scalar>(t: [S; 3]) -> [S; 3] {
    let sum = t[0].clone() + t[1].clone() + t[2].clone();
    let scale = t.iter().fold(S::zero(), |m, x| m + x.abs());
    let flip = if !sum.vanishes(&scale) {
        sum.is_negative()
    } else {
        t.iter()
            .find(|x| !x.vanishes(&scale))
            .map(|x| x.is_negative())
            .unwrap_or(false)
    };
    if flip {
        t.map(|x| -x)
    } else {
        t
    }
}

impl Scalar for Exact {
    const BACKEND: Backend = Backend::Exact;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt_checked(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    fn vanishes(&self, _scale: &Self) -> bool {
        self.is_zero()
    }

    fn canonical_triple(t: &[Self; 3]) -> [Self; 3] {
        let lcm = t
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = t
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if gcd.is_zero() {
            return t.clone();
        }
        let out = [0, 1, 2].map(|i| BigRational::from_integer(&ints[i] / &gcd));
        sign_fix(out)
    }

    fn to_wire(&self) -> String {
        self.to_string()
    }

    fn parse_wire(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            return Some(BigRational::new(n, d));
        }
        if let Ok(n) = s.parse::<BigInt>() {
            return Some(BigRational::from_integer(n));
        }
        // Terminating decimals are still exact.
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s),
        };
        let (int_part, frac_part) = body.split_once('.')?;
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let digits = format!("{int_part}{frac_part}");
        let n: BigInt = digits.parse().ok()?;
        let d = num_traits::pow(BigInt::from(10), frac_part.len());
        Some(BigRational::new(n * sign, d))
    }
}

impl Scalar for f64 {
    const BACKEND: Backend = Backend::Float;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sqrt_checked(&self) -> Option<Self> {
        if *self < 0.0 {
            // Tiny negative values are rounding noise around zero.
            if *self > -float_tolerance() {
                return Some(0.0);
            }
            return None;
        }
        Some(self.sqrt())
    }

    fn vanishes(&self, scale: &Self) -> bool {
        self.abs() <= float_tolerance() * scale.abs().max(f64::MIN_POSITIVE)
    }

    fn canonical_triple(t: &[Self; 3]) -> [Self; 3] {
        let m = t.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if m == 0.0 {
            return *t;
        }
        sign_fix(t.map(|x| x / m))
    }

    fn to_wire(&self) -> String {
        format!("{self:?}")
    }

    fn parse_wire(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n.trim().parse().ok()?;
            let d: f64 = d.trim().parse().ok()?;
            return Some(n / d);
        }
        s.parse().ok()
    }
}

/// Converts between backends through `f64` (lossy for exact targets only
/// when the source is not a dyadic rational).
pub fn convert<S: Scalar, T: Scalar>(x: &S) -> T {
    if S::BACKEND == T::BACKEND {
        return T::parse_wire(&x.to_wire()).expect("same backend round trip");
    }
    match T::BACKEND {
        Backend::Float => T::parse_wire(&format!("{:?}", x.to_f64())).unwrap(),
        Backend::Exact => {
            let r = BigRational::from_f64(x.to_f64()).unwrap_or_else(BigRational::zero);
            T::parse_wire(&r.to_string()).unwrap()
        }
    }
}

pub(crate) fn two<S: Scalar>() -> S {
    S::one() + S::one()
}

pub(crate) fn half<S: Scalar>() -> S {
    S::one() / two::<S>()
}

pub(crate) fn sq<S: Scalar>(x: &S) -> S {
    x.clone() * x.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    #[test]
    fn exact_sqrt_only_for_squares() {
        assert_eq!(q(9, 4).sqrt_checked(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt_checked(), None);
        assert_eq!(q(-4, 1).sqrt_checked(), None);
        assert_eq!(q(0, 1).sqrt_checked(), Some(q(0, 1)));
    }

    #[test]
    fn canonical_clears_denominators() {
        let t = [q(169, 16), q(14, 1), q(75, 4)];
        assert_eq!(Exact::canonical_triple(&t), [q(169, 1), q(224, 1), q(300, 1)]);
        let t = [q(1, 1), q(-2, 1), q(1, 1)];
        assert_eq!(Exact::canonical_triple(&t), [q(1, 1), q(-2, 1), q(1, 1)]);
        let t = [q(-2, 1), q(4, 1), q(-2, 1)];
        assert_eq!(Exact::canonical_triple(&t), [q(1, 1), q(-2, 1), q(1, 1)]);
        let t = [q(-3, 1), q(-6, 1), q(9, 1)];
        assert_eq!(Exact::canonical_triple(&t), [q(1, 1), q(2, 1), q(-3, 1)]);
    }

    #[test]
    fn wire_round_trip() {
        for s in ["13", "-169/29", "25/3", "0"] {
            assert_eq!(Exact::parse_wire(s).unwrap().to_wire(), s);
        }
        assert_eq!(Exact::parse_wire("0.5"), Some(q(1, 2)));
        assert_eq!(Exact::parse_wire("-1.25"), Some(q(-5, 4)));
        assert_eq!(Exact::parse_wire("1/0"), None);
        assert_eq!(f64::parse_wire("3/4"), Some(0.75));
    }

    #[test]
    fn float_tolerance_is_relative() {
        assert!(1e-12f64.vanishes(&1.0));
        assert!(!1e-6f64.vanishes(&1.0));
        assert!(1e-3f64.vanishes(&1e7));
        assert_eq!(float_tolerance(), DEFAULT_FLOAT_TOLERANCE);
    }
}
