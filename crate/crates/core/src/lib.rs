pub mod bounds;
pub mod corpus;
pub mod graph;
pub mod io;
pub mod poly;
pub mod scalar;
pub mod stability;
pub mod suites;
pub mod tree;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type Rational = BigRational;
pub type IntPoly = poly::MultiPoly<BigInt>;
pub type RatPoly = poly::UniPoly<BigRational>;
pub type FloatPoly = poly::UniPoly<f64>;
