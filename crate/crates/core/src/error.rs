use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table sizes disagree: {0}")]
    SizeMismatch(String),
    #[error("multiplication is not associative: ({a}{b}){c} != {a}({b}{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("signature too weak for {0}")]
    SignatureTooWeak(&'static str),
    #[error("elements {0} and {1} are not compatible")]
    NotCompatible(usize, usize),
    #[error("no zero projection")]
    NoRestrictionZero,
    #[error("element {f} is not below {e}")]
    NotBelow { e: usize, f: usize },
    #[error("image of the semilattice generates a proper ideal")]
    Degenerate,
    #[error("not a meet morphism at ({0}, {1})")]
    NotMeetMorphism(usize, usize),
    #[error("element {0} has no left unit among the projections")]
    NoLocalUnits(usize),
    #[error("not a slice: {0}")]
    NotASlice(String),
    #[error("{what} has {count} members, above the limit {limit}")]
    TooLarge {
        what: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("not a restriction semigroup: {0}")]
    NotRestriction(String),
    #[error("not a range semigroup: {0}")]
    NotRange(String),
    #[error("restriction to projections is degenerate")]
    DegenerateOnProjections,
    #[error("not a morphism: {0}")]
    NotMorphism(String),
    #[error("constellation is not inductive: {0}")]
    NotInductive(String),
    #[error("semigroup is not proper: {0} sigma {1} with equal stars")]
    NotProper(usize, usize),
    #[error("(P1) fails for monoid element {t}")]
    P1Violation { t: usize },
    #[error("(P2) fails for t={t}, e={e}, f={f}")]
    P2Violation { t: usize, e: usize, f: usize },
    #[error("partial action is not proper: {0}")]
    NotProperAction(String),
    #[error("inverse semigroup is not E-unitary: {0}")]
    NotEUnitary(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("elements live over different bases")]
    CategoryMismatch,
    #[error("arrow {0} has no inverse")]
    NotGroupoid(usize),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
