use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("not unital: unit fails on basis element e{0}")]
    NotUnital(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("embedding does not send 1_B to 1_A")]
    EmbeddingNotUnital,
    #[error("embedding is not multiplicative on basis pair (b{0}, b{1})")]
    NotHomomorphism(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("axiom {axiom} fails: {witness}")]
    AxiomFailure { axiom: String, witness: String },
    #[error("antipode value leaves T: {0}")]
    NotInT(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension cap exceeded: {what} has dimension {dim} > cap {cap} (raise with --dim-cap)")]
    DimensionCapExceeded { what: String, dim: usize, cap: usize },
    #[error("stage {stage} requires {needs}")]
    StageDependency { stage: String, needs: String },
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("unknown dump target {0:?}")]
    UnknownDumpTarget(String),
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
