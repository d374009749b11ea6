use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("point at infinity not normalizable")]
    PointAtInfinity,
    #[error("join/meet of equal elements")]
    EqualElements,
    #[error("homogeneous triple is zero")]
    ZeroTriple,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("ratio undefined")]
    RatioUndefined,
    #[error("isogonal conjugate undefined at vertex")]
    VertexInput,
    #[error("trace degenerates to vertex")]
    TraceAtVertex,
    #[error("sideline input: {0}")]
    Sideline(&'static str),
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    #[error("equilateral: Euler line undefined")]
    Equilateral,
    #[error("equilateral excluded")]
    EquilateralExcluded,
    #[error("Apollonius circle degenerates to a line")]
    ApolloniusDegenerate,
    #[error("not representable exactly: {0}")]
    NotExact(&'static str),
    #[error("identical circles")]
    IdenticalCircles,
    #[error("line has no center")]
    NoCenter,
    #[error("circles belong to different triangle metrics")]
    MetricMismatch,
    #[error("point is not incident: {0}")]
    NotIncident(&'static str),
    #[error("coincident points")]
    CoincidentPoints,
    #[error("line lies on the curve")]
    LineOnCurve,
    #[error("degenerate: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
