use std::fmt;

/// Steps of the decomposition driver, used to attribute failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    RootData,
    HighestWeights,
    OmegaRho,
    Orbits,
    Representatives,
    PairedWeights,
    SelfConjugateWeights,
    Verification,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Step::RootData => "step 1 (Cartan and root data)",
            Step::HighestWeights => "step 2 (highest weight vectors)",
            Step::OmegaRho => "step 3 (omega in the representation)",
            Step::Orbits => "step 4 (Theta orbits)",
            Step::Representatives => "step 5 (orbit representatives)",
            Step::PairedWeights => "step 6 (conjugate weight pairs)",
            Step::SelfConjugateWeights => "step 7 (self-conjugate weights)",
            Step::Verification => "verification",
        };
        f.write_str(s)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("square root of non-positive value {0}")]
    NonPositive(String),
    #[error("eigenvalues do not lie in Q(i): characteristic polynomial {0}")]
    EigenvalueOutsideField(String),
    #[error("operators do not commute on the given subspace")]
    NotCommuting,
    #[error("subspace is not invariant under the operator family")]
    NotInvariant,
    #[error("operator is not diagonalizable on the given subspace")]
    NotSemisimple,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("subspace is not stable under conjugation")]
    NotSelfConjugate,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("bracket of basis elements {0} and {1} leaves the span")]
    NotClosed(usize, usize),
    #[error("Killing form is degenerate")]
    NotSemisimpleAlgebra,
    #[error("not a Cartan subalgebra: {0}")]
    NotCartan(String),
    #[error("degenerate root {0}: alpha([e, f]) = 0")]
    DegenerateRoot(String),
    #[error("Weyl word search did not terminate")]
    NonTerminating,
    #[error("representation identity fails for basis pair ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("weight {0} is fixed by Theta")]
    WeightNotInOrbit2(String),
    #[error("image is not proportional to the highest weight vector")]
    NotScalar,
    #[error("Schur scalar vanished")]
    ZeroD,
    #[error("no admissible highest weight vector left in isotypical component {0}")]
    ExhaustionFailure(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("bad signature so({0},{1})")]
    BadSignature(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{step}: {source}")]
    Step {
        step: Step,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(self, step: Step) -> Error {
        match self {
            e @ Error::Step { .. } => e,
            e => Error::Step {
                step,
                source: Box::new(e),
            },
        }
    }

    /// The underlying error with any step attribution removed.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::Step { source, .. } => source.root_cause(),
            e => e,
        }
    }
}

impl From<crate::exactnum::ScalarParseError> for Error {
    fn from(e: crate::exactnum::ScalarParseError) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
