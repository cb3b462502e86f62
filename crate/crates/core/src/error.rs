use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("quiver has a directed cycle through vertex {0}")]
    CyclicQuiver(usize),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {0} out of range")]
    InvalidVertex(usize),

    #[error("modules live over different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("embedding requires m' > m (got m = {0}, m' = {1})")]
    BadEmbedding(usize, usize),

    #[error("module support leaves the computation window: {0}")]
    WindowExhausted(String),

    #[error("decomposition failed after {0} attempts")]
    DecompositionFailed(usize),

    #[error("endomorphism ring of an indecomposable has residue field larger than F_p (dim {0})")]
    ResidueExtension(usize),

    #[error("isomorphism test inconclusive after its sample budget")]
    Inconclusive,

    #[error("quiver is not of Dynkin type; enumeration requires representation-finite input")]
    NotDynkin,

    #[error("projective-injective module has no degree")]
    ProjectiveInjective,

    #[error("expected an indecomposable module, got {0} summands")]
    Decomposable(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sink complement reached: the minimal left approximation is not injective")]
    SinkEnd,

    #[error("Bongartz complement reached: the minimal right approximation is not surjective")]
    BongartzEnd,

    #[error("complement chain of length t = {t} outside [2m, 2m+1] for m = {m}")]
    ChainLength { t: usize, m: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("unknown id {0}")]
    UnknownId(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
