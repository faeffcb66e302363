use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: left is {lhs_dst}x{lhs_src}, right is {rhs_dst}x{rhs_src}")]
    DimMismatch {
        op: &'static str,
        lhs_dst: usize,
        lhs_src: usize,
        rhs_dst: usize,
        rhs_src: usize,
    },
    #[error("scalars from different fields cannot be mixed")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse {text:?} as a scalar: {reason}")]
    BadScalar { text: String, reason: String },
    #[error("morphism is not idempotent")]
    NotIdempotent,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("axiom {label} fails")]
    AxiomViolation { label: String },
    #[error("law {label} fails")]
    LawFailure { label: String },
    #[error("multiplication table is not associative: witness ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("table is not an inverse-property loop: witness ({0}, {1})")]
    NotIPLoop(usize, usize),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("Hopf module is not strong: (c1) fails")]
    NotStrong,
    #[error("map is not a module morphism")]
    NotEquivariant,
    #[error("map is not a Hopf module morphism")]
    NotMorphism,
    #[error("objects live over different weak Hopf quasigroups")]
    HMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
