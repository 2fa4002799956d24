use thiserror::Error;

use crate::detect::ForbiddenWitness;
use crate::divide::{DivideViolation, PairViolation};
use crate::modular::HomogeneousSet;
use crate::structure::{AbxViolation, StructureViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} lies inside the set it is compared against")]
    VertexInSet(usize),
    #[error("set is empty")]
    EmptySet,
    #[error("graph to substitute is empty")]
    EmptyGraph,

    #[error("set {set} is not a proper homogeneous set: {reason}")]
    NotHomogeneous { set: String, reason: String },
    #[error("graph is not prime: {0} is a proper homogeneous set")]
    NotPrime(HomogeneousSet),
    #[error("graph contains an induced {}: {:?}", .0.pattern, .0.vertices)]
    Contains(ForbiddenWitness),
    #[error("graph has no induced co-C4")]
    NoCoC4,

    #[error("sets do not partition the vertex set: {0}")]
    NotPartition(String),
    #[error("lemma preconditions violated: {0:?}")]
    AbxPrecondition(Vec<AbxViolation>),
    #[error("structure partition violates {0:?}")]
    InvalidStructure(Vec<StructureViolation>),
    #[error("split divide violates {0:?}")]
    InvalidDivide(Vec<DivideViolation>),
    #[error("composable pair violates {0:?}")]
    InvalidPair(Vec<PairViolation>),
    #[error("malformed decomposition tree: {0}")]
    MalformedTree(String),
    #[error("generated graph failed its self-audit: {0}")]
    Audit(String),
}
