//! Exact symbolic computation for the Block-type Lie algebra with basis
//! `x(a,i)`, `a` in `Z`, `i >= 0`, and bracket
//! `[x(a,i), x(b,j)] = ((b-1) i - (a-1) j) x(a+b, i+j-1)`.
//!
//! The crate covers the algebra itself ([`lie`]), its universal enveloping
//! algebra in PBW normal form ([`enveloping`]), exact rational linear
//! algebra ([`linalg`]), Whittaker modules with a truncated Whittaker-vector
//! solver, Hankel goodness checks and defect descent ([`whittaker`]), and
//! the JSON formats shared by the command line and the C interface
//! ([`json`], [`cli`]).

pub mod cli;
pub mod enveloping;
pub mod error;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod whittaker;

pub use enveloping::{bracket_decompose, BracketDecomposition, UeaElement};
pub use error::{Error, Result};
pub use lie::{bracket, BracketTerm, GenIndex, Partition, QDegree, Subalgebra};
pub use linalg::RationalMatrix;
pub use poly::CenterPoly;
pub use whittaker::{
    Character, GeneratorCutoff, Ideal, ModuleVector, Truncation, WhittakerCheck, WhittakerModule,
};

pub type Rational = num_rational::BigRational;
