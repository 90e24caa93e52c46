use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("size mismatch: S_{left} vs S_{right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{0} is not a valid composition")]
    InvalidComposition(String),
    #[error("{0} is not a valid permutation")]
    InvalidPermutation(String),
    #[error("subset element {element} outside [1, {max}]")]
    SubsetOutOfRange { element: usize, max: usize },
    #[error("{0} is not strictly increasing")]
    UnsortedSubset(String),
    #[error("interval [{start}, {end}] is not inside [1, {n}]")]
    BadInterval { start: usize, end: usize, n: usize },
    #[error("{left} and {right} are not anagrams")]
    NotAnagrams { left: String, right: String },
    #[error("{finer} does not refine {coarser}")]
    NotRefinement { finer: String, coarser: String },
    #[error("Dynkin element of the empty set")]
    EmptySet,
    #[error("n = {n} exceeds the enumeration guard {max}")]
    GuardExceeded { n: usize, max: usize },
    #[error("family is not square: {members} members in dimension {dim}")]
    NonSquare { members: usize, dim: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
