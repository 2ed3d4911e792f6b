use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("irreducibility is only defined for polynomials of degree >= 1")]
    ConstantPolynomial,
    #[error("no default modulus for degree {0} (supported: 2..=10)")]
    UnsupportedDegree(u32),
    #[error("invalid polynomial {input:?}: {reason}")]
    PolyParse { input: String, reason: String },
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("modulus degree {0} is outside the supported range 2..=16")]
    FieldDegree(u32),
    #[error("field elements belong to different fields")]
    ContextMismatch,
    #[error("value {bits} is not an element of GF(2^{k})")]
    ElementOutOfRange { bits: u32, k: u32 },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("the degree of the zero element is undefined")]
    DegreeOfZero,

    #[error("seeding must have a power-of-two length >= 2, got {0}")]
    SeedingSize(usize),
    #[error("player {player} appears more than once in the seeding")]
    DuplicatePlayer { player: u32 },
    #[error("player {player} is not in 0..{players}")]
    UnknownPlayer { player: u32, players: usize },
    #[error("a player cannot meet itself")]
    SamePlayer,
    #[error("round {round} is outside 1..={rounds}")]
    RoundOutOfRange { round: u32, rounds: u32 },
    #[error("player map is not a bijection on 0..{0}")]
    NotBijective(usize),
    #[error("size mismatch: {left} vs {right} players")]
    SizeMismatch { left: usize, right: usize },
    #[error("column {column}: {reason}")]
    SeedingParse { column: usize, reason: String },

    #[error("node {node} does not lie on line {line}")]
    NodeNotOnLine { node: u32, line: String },
    #[error("invalid node-line assignment: {0}")]
    InvalidAssignment(String),
    #[error("invalid plane: {0}")]
    InvalidPlane(String),

    #[error("{0} rounds is outside the supported range 1..=16")]
    RoundsOutOfRange(u32),
    #[error("zero cannot generate a tournament")]
    ZeroMultiplier,
    #[error("schedule contains no tournaments")]
    EmptySchedule,
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("{0}")]
    Format(String),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::Line {
            line,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
