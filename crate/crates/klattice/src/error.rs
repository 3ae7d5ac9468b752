use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rows must be positive and weakly decreasing")]
    MalformedPartition,

    #[error("cannot parse {0:?} as a partition")]
    ParsePartition(String),

    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("part {part} exceeds the bound {k}")]
    NotKBounded { part: usize, k: usize },

    #[error("partition has a cell of hook length {0}, so it is not a core for that modulus")]
    NotACore(usize),

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("point pairs integrally with a root; it lies on a wall and belongs to no open alcove")]
    NonGenericPoint,

    #[error("weight is not in the finite Weyl orbit of any fundamental weight")]
    NotAnOrbitWeight,

    #[error("generator subset must omit at least one of 0..={0}")]
    FullGeneratorSet(usize),

    #[error("node cap {cap} exceeded: lattice needs at least {needed} nodes")]
    NodeCapExceeded { cap: usize, needed: usize },

    #[error("partition [{0}] fits in no union of m-1 rectangles, so it is outside the lattice")]
    NotAMember(String),

    #[error("malformed lattice JSON: {0}")]
    MalformedJson(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
