use thiserror::Error;

use crate::bitset::ElemSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    CompositeBase(u32),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} is not in the ground set")]
    UnknownElement(usize),
    #[error("rank {requested} out of range (matroid rank {rank})")]
    RankOutOfRange { requested: usize, rank: usize },
    #[error("resource cap exceeded: {0}")]
    ResourceExceeded(String),
    #[error("set {0} is not a flat")]
    NotAFlat(ElemSet),
    #[error("rank axiom violated ({axiom}) on {witness:?}")]
    AxiomViolation {
        axiom: String,
        witness: Vec<ElemSet>,
    },
    #[error("element {0} is not spanned by the restriction")]
    NotSpanned(usize),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("matroid is not overfull for the given parameters")]
    NotOverfull,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error at line {line}, path `{path}`: {message}")]
    Parse {
        line: usize,
        path: String,
        message: String,
    },
    #[error("replay failed at step {step}: {cause}")]
    Replay { step: usize, cause: Box<Error> },
}

impl Error {
    pub fn is_resource_exceeded(&self) -> bool {
        match self {
            Error::ResourceExceeded(_) => true,
            Error::Replay { cause, .. } => cause.is_resource_exceeded(),
            _ => false,
        }
    }
}
