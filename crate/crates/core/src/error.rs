use thiserror::Error;

/// Which group axiom a candidate multiplication table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomKind {
    NoIdentity,
    NotLatinSquare,
    NotAssociative,
    NoInverse,
}

impl AxiomKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomKind::NoIdentity => "no-identity",
            AxiomKind::NotLatinSquare => "not-latin-square",
            AxiomKind::NotAssociative => "not-associative",
            AxiomKind::NoInverse => "no-inverse",
        }
    }
}

impl std::fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The table is not a group; the witness pins the first failure found.
    #[error("group axiom violated ({kind}): {witness}")]
    AxiomViolation { kind: AxiomKind, witness: String },

    #[error("element closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),

    #[error("empty generator set")]
    EmptyGeneratorSet,

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("subgroup enumeration exceeded the cap of {0} subgroups")]
    SubgroupCapExceeded(usize),

    #[error("graph has {vertices} vertices, over the certificate cap of {cap}")]
    CertificateCapExceeded { vertices: usize, cap: usize },

    #[error("{p} does not divide the group order {order}")]
    NoSuchPrime { p: usize, order: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
