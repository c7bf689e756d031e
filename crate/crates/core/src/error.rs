use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the p-adic order of zero is undefined")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{a} is not a unit modulo {m}")]
    NotCoprime { a: i64, m: u64 },
    #[error("modulus must be at least {min}, got {m}")]
    ModulusTooSmall { m: u64, min: u64 },
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("d must exceed 2, got {0}")]
    DTooSmall(u64),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("cyclotomic levels differ: {left} vs {right}")]
    LevelMismatch { left: u64, right: u64 },
    #[error("cannot lift from level {from} to level {to}: {from} does not divide {to}")]
    LevelNotDivisible { from: u64, to: u64 },
    #[error("B1 needs a primitive nontrivial character (modulus {modulus}, conductor {conductor})")]
    NotPrimitive { modulus: u64, conductor: u64 },

    #[error("invalid G-module presentation: {0}")]
    InvalidModule(String),
    #[error("module is infinite")]
    InfiniteModule,
    #[error("module has {0} elements, more than the enumeration limit")]
    ModuleTooLarge(String),
    #[error("Herbrand exponent undefined: a cohomology group is infinite")]
    ChiUndefined,

    #[error("{0} is not a Fermat prime")]
    NotFermatPrime(u64),
    #[error("odd class number of the degree-{0} base is not known; allowed primes are 2, 3, 5, 17, 257")]
    UnsupportedBase(u64),
    #[error("need gcd(d, p) <= 2, got gcd({d}, {p}) = {gcd}")]
    GcdCondition { d: u64, p: u64, gcd: u64 },
    #[error("q must be an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("ramification index {e} is impossible in a degree-{p} extension")]
    InvalidRamification { e: u64, p: u64 },
    #[error("no admissible a: need max(0, chi - s) <= lambda_K (chi = {chi}, s = {s}, lambda_K = {lambda_k})")]
    EmptyDecomposition { lambda_k: u64, chi: i64, s: u64 },

    #[error("growth fit needs at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("no exact fit lambda*n + mu*p^n + nu on any 4-point tail")]
    NoFit,
    #[error("{0}")]
    InvalidArgument(String),

    #[error("level {n} exceeds the bound {bound}")]
    LevelBound { n: u32, bound: u32 },
    #[error("Galois-orbit product of B1 values is not a positive rational (conductor {conductor})")]
    OrbitNotRational { conductor: u64 },
    #[error("ord2 differences {diffs:?} have not stabilized; increase n_max")]
    NotStabilized { diffs: Vec<i64> },
    #[error("ord2 differences {diffs:?} grow like 2^n, a nonzero mu signature")]
    MuSignature { diffs: Vec<i64> },
}

pub type Result<T> = std::result::Result<T, Error>;
