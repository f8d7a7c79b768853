use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    NotUnital(usize),
    #[error("malformed algebra data: {0}")]
    Malformed(String),
    #[error("quotient is not finite-dimensional (paths of length {0} survive)")]
    InfiniteDimensional(usize),
    #[error("malformed relation: {0}")]
    BadRelation(String),
    #[error("module axiom fails for basis pair ({0}, {1})")]
    NotAModule(usize, usize),
    #[error("module is not unital")]
    UnitNotIdentity,
    #[error("algebra or side mismatch: {0}")]
    Mismatch(String),
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("the semisimple quotient does not split over the ground field")]
    NotSplit,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("d∘d is nonzero at degree {0}")]
    NotAComplex(i32),
    #[error("differential at degree {0} is not a module homomorphism")]
    NotEquivariant(i32),
    #[error("map does not commute with differentials at degree {0}")]
    NotAChainMap(i32),
    #[error("shape mismatch at degree {0}")]
    Shape(i32),
    #[error("sample is not closed: {0}")]
    SampleNotClosed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degree {degree} lies outside the trustworthy range [{lo}, {hi}] of the window")]
    WindowExceeded { degree: i32, lo: i32, hi: i32 },
}
