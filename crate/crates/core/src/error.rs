use thiserror::Error;

/// Errors raised by the constructions, oracles and file formats.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("points {first} and {second} coincide")]
    Coincident { first: usize, second: usize },
    #[error("need at least {needed} points, got {got}")]
    TooFew { needed: usize, got: usize },
    #[error("point set is not in strictly convex position")]
    NotConvex,
    #[error("chains are not separated by a line")]
    NotSeparated,
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("grid needs at least 3 rows and 3 columns, got {rows}x{cols}")]
    GridTooSmall { rows: usize, cols: usize },
    #[error("grid coordinates must be finite and strictly increasing")]
    GridNotMonotone,
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("graph is not plane: edges {0} and {1} intersect")]
    NotPlane(usize, usize),
    #[error("Steiner points on the circle around vertex {vertex} collide")]
    RadiusCollision { vertex: usize },
    #[error("total degree {total_degree} exceeds 6n-12 for n = {n}")]
    DegreeBoundViolated { n: usize, total_degree: usize },
    #[error("({x}, {alpha}) is outside the domain of the bound function")]
    DomainError { x: f64, alpha: f64 },
    #[error("vertices {0} and {1} are not connected")]
    Disconnected(usize, usize),
    #[error("invalid instance spec: {0}")]
    Spec(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
