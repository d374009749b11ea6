//! Textual forms of command-line inputs.

use coaxal_core::bary::{HPoint, TriangleMetric};
use coaxal_core::centers::{named_center, CenterId, KParam};
use coaxal_core::{Exact, ExactPoint, Scalar};

pub fn scalar(s: &str) -> Result<Exact, String> {
    Exact::parse_wire(s).ok_or_else(|| format!("not a rational number: {s:?}"))
}

fn triple(s: &str) -> Result<[Exact; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated values, got {s:?}"));
    }
    Ok([scalar(parts[0])?, scalar(parts[1])?, scalar(parts[2])?])
}

pub fn sides(s: &str) -> Result<[Exact; 3], String> {
    let t = triple(s)?;
    if t.iter().any(|x| *x <= Exact::from_int(0)) {
        return Err(format!("side lengths must be positive: {s:?}"));
    }
    Ok(t)
}

pub fn point(s: &str) -> Result<ExactPoint, String> {
    ExactPoint::new(triple(s)?).map_err(|e| e.to_string())
}

/// A point given by coordinates or by the name of a center.
#[derive(Clone, Debug, PartialEq)]
pub enum PointArg {
    Named(CenterId),
    Coords(ExactPoint),
}

impl PointArg {
    pub fn resolve<S: Scalar>(&self, t: &TriangleMetric<S>) -> coaxal_core::Result<HPoint<S>> {
        match self {
            PointArg::Named(id) => named_center(t, *id),
            PointArg::Coords(p) => Ok(p.cast()),
        }
    }
}

pub fn point_arg(s: &str) -> Result<PointArg, String> {
    match CenterId::parse(s) {
        Some(id) => Ok(PointArg::Named(id)),
        None => point(s).map(PointArg::Coords),
    }
}

pub fn k_param(s: &str) -> Result<KParam<Exact>, String> {
    KParam::parse(s).ok_or_else(|| format!("not a rational number or 'inf': {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(scalar("3/2").unwrap(), scalar("1.5").unwrap());
        assert!(sides("13,14,15").is_ok());
        assert!(sides("13,0,15").is_err());
        assert!(point("0,0,0").is_err());
        assert_eq!(k_param("inf").unwrap(), KParam::Infinity);
        assert!(scalar("x").is_err());
        assert_eq!(point_arg("k").unwrap(), PointArg::Named(CenterId::K));
        assert!(matches!(point_arg("7,3,5").unwrap(), PointArg::Coords(_)));
    }
}
