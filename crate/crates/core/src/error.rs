use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("value outside the domain: {0}")]
    Domain(String),
    #[error("cannot combine Q(sqrt {0}) with Q(sqrt {1})")]
    MixedRadicands(u64, u64),
    #[error("expected a rational value, got {0}")]
    Irrational(String),
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not of the form x^n + sum A_i x^(n-i) y^i: {0}")]
    NotWeightEnumerator(String),
    #[error("polynomial does not lie in the span of the {family} basis of degree {degree}")]
    NotInRing { family: String, degree: usize },
    #[error("no basis in degree {degree} for family {family}")]
    EmptyBasis { family: String, degree: usize },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("group closure exceeded {0} elements")]
    ClosureCap(usize),
    #[error("Molien series has irrational residue: {0}")]
    IrrationalResidue(String),
    #[error("extremal construction failed: {0}")]
    Extremal(String),
    #[error("zeta polynomial undefined: {0}")]
    ZetaUndefined(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("the two zeta methods disagree for {0}")]
    ZetaMismatch(String),
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("root finder did not converge: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
