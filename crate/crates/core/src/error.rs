use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {parts:?} has more than {k} nonzero parts")]
    TooManyParts { parts: Vec<u32>, k: usize },

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("{0:?} is not a permutation word")]
    NotAPermutation(Vec<u32>),

    #[error("index sets have different sizes ({0} and {1})")]
    IndexSetSize(usize, usize),

    #[error("index set {0:?} is not strictly increasing and positive")]
    BadIndexSet(Vec<usize>),

    #[error("composition has nonzero part at index {0} outside the index set")]
    OutsideIndexSet(usize),

    #[error("ambient n = {n} is too small for length {len}")]
    AmbientTooSmall { n: usize, len: usize },

    #[error("entry {entry} lies outside [1, {n}]")]
    EntryOutOfRange { entry: u32, n: usize },

    #[error("polynomial is not in the span of the basis: stuck at monomial {0:?}")]
    NotInSpan(Vec<u32>),

    #[error("shape {0:?} is not a partition, required for this flavor")]
    FlavorMismatch(Vec<u32>),

    #[error("row lengths {rows:?} disagree with shape {shape:?}")]
    ShapeMismatch { shape: Vec<u32>, rows: Vec<u32> },

    #[error("matrix is not square")]
    NotSquare,

    #[error("matrix is not lower triangular")]
    NotLowerTriangular,

    #[error("biword rows have different lengths ({0} and {1})")]
    BiwordLength(usize, usize),

    #[error("pair is not in the image of the correspondence: {0}")]
    NotInImage(String),

    #[error("column {0} cannot be placed while keeping rows weakly decreasing")]
    ColumnPlacement(u32),

    #[error("diagram is not in the Kohnert closure of D_a: {0}")]
    NotInClosure(String),

    #[error("input is outside the domain of the involution: {0}")]
    OutsideDomain(String),

    #[error("not a snake: {0}")]
    NotASnake(String),

    #[error("invalid snake tabloid: {0}")]
    InvalidTabloid(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
