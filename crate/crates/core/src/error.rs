use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("table entry ({row}, {col}) = {value} is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("group order {order} exceeds the order cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("subgroup is not contained in the ambient subgroup (element {0} is outside)")]
    NotContained(usize),
    #[error("subgroup is not normal: conjugation by element {0} moves it")]
    NotNormal(usize),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("monoid table is not square or empty")]
    Shape,
    #[error("table entry ({row}, {col}) = {value} is out of range for size {size}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("monoid size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("{identity} is not a two-sided identity (fails against {witness})")]
    BadIdentity { identity: usize, witness: usize },
    #[error("{zero} is not a two-sided zero (fails against {witness})")]
    BadZero { zero: usize, witness: usize },
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("element {element} has several inverses ({first} and {second})")]
    InverseNotUnique {
        element: usize,
        first: usize,
        second: usize,
    },
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDoNotCommute(usize, usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("subset is not closed: {0}")]
    NotClosed(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
