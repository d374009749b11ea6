//! Named centers, the `Q(k)`/`Q*(k)` family and the conic `(IG)*` as JSON.

use std::collections::BTreeMap;

use coaxal_core::bary::TriangleMetric;
use coaxal_core::centers::{lemma3_q, lemma3_qstar, named_center, CenterId, KParam};
use coaxal_core::theorems::incenter_centroid_conic;
use coaxal_core::{GeomError, Scalar};
use serde_json::{json, Value};

/// Centers only used by checks that exclude the equilateral triangle.
const SCALENE_ONLY: [CenterId; 2] = [CenterId::X56, CenterId::X58];

fn center<S: Scalar>(t: &TriangleMetric<S>, id: CenterId) -> coaxal_core::Result<coaxal_core::HPoint<S>> {
    if t.is_equilateral() && SCALENE_ONLY.contains(&id) {
        return Err(GeomError::EquilateralExcluded);
    }
    named_center(t, id)
}

fn point_or_error<S: Scalar>(r: coaxal_core::Result<coaxal_core::HPoint<S>>) -> Value {
    match r {
        Ok(p) => json!(p),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

/// Everything `centers` prints. With `only`, just that center, and an error
/// when it is undefined for the triangle.
pub fn centers_json<S: Scalar>(
    t: &TriangleMetric<S>,
    only: Option<CenterId>,
    ks: &[KParam<S>],
) -> Result<Value, GeomError> {
    let mut out = serde_json::Map::new();
    out.insert("triangle".into(), json!(t.wire_sides()));
    out.insert("backend".into(), json!(S::BACKEND));
    if let Some(id) = only {
        out.insert(id.name().into(), json!(center(t, id)?));
        return Ok(Value::Object(out));
    }
    let centers: BTreeMap<&str, Value> =
        CenterId::ALL.iter().map(|&id| (id.name(), point_or_error(center(t, id)))).collect();
    out.insert("centers".into(), json!(centers));
    let family: Vec<Value> = ks
        .iter()
        .map(|k| {
            json!({
                "k": k.wire(),
                "q": point_or_error(lemma3_q(t, k)),
                "qstar": point_or_error(lemma3_qstar(t, k)),
            })
        })
        .collect();
    out.insert("family".into(), json!(family));
    let conic = match incenter_centroid_conic(t) {
        Ok(k) => json!(k.circum_coeffs().map(|c| {
            let c = coaxal_core::HPoint::new(c).map(|p| p.wire());
            c.ok()
        })),
        Err(e) => json!({ "error": e.to_string() }),
    };
    out.insert("ig_star_conic".into(), conic);
    Ok(Value::Object(out))
}
