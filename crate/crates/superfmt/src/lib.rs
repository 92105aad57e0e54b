//! Exact-arithmetic matrix realizations of Lie superalgebras in arbitrary
//! matrix formats.
//!
//! A *matrix format* is a choice of ordered homogeneous basis of a graded
//! vector space, recorded as the sign pattern of the diagonal involution ε:
//! the familiar *block* format puts all even basis vectors first, while the
//! *diagonal* format alternates even and odd ones so that matrix diagonals
//! alternate in parity. This crate constructs, converts and verifies the
//! standard objects of the theory in any such format, entirely over exact
//! rationals:
//!
//! * graded operations: supertrace, supertranspose (both sign conventions),
//!   homogeneous decomposition and the graded commutator ([`graded`]);
//! * format-changing transformations: permutations, the alternating
//!   arrangement and the signed permutations relating block and diagonal
//!   realizations of orthosymplectic algebras ([`formats`]);
//! * Chevalley bases, Cartan matrices with closed-form inverses, supermetrics
//!   and membership predicates for `sl(n+1|n)` and `osp(2m±1|2m)`
//!   ([`algebras`]);
//! * the principal `osp(1|2)` embedding, its bosonic completion and
//!   highest-weight generators, both in closed form and via an exact kernel
//!   solver ([`embeddings`]);
//! * simple root systems read off from a format, with odd-root counting
//!   ([`rootspace`]);
//! * windowed truncations of the infinite-dimensional limits `sl∞` and `osp∞`
//!   ([`infinite`]).
//!
//! Every identity checked by the crate is an exact equality of rational
//! matrices; there are no tolerances anywhere.
//!
//! The `superfmt` binary exposes the same functionality on the command line;
//! see the crate README and the `examples/` directory for entry points.

pub mod algebras;
pub mod cli;
pub mod embeddings;
pub mod error;
pub mod formats;
pub mod graded;
pub mod infinite;
pub mod linsolve;
pub mod matrix;
pub mod rational;
pub mod report;
pub mod rootspace;

pub use algebras::{AlgebraId, CartanData, ChevalleyBasis, Family, FormatKind};
pub use embeddings::{BosonicPair, PrincipalTriple};
pub use error::{Error, Result};
pub use formats::{FormatChanger, OspVariant, Permutation};
pub use graded::{Format, GradedMatrix};
pub use infinite::WindowedMatrix;
pub use matrix::Matrix;
pub use rational::Rational;
pub use report::VerificationReport;
pub use rootspace::{SimpleRoot, WeightSymbol};

