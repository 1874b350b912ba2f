//! Exact arithmetic substrate: rationals, univariate polynomials in `t`,
//! real-root isolation, quotient rings, banded determinants and dense
//! symmetric eigensolvers.

pub mod banded;
pub mod eigen;
pub mod poly;
pub mod quotient;
pub mod rational;
pub mod ring;
pub mod roots;

pub use banded::{banded_determinant, cofactor_determinant, DeterminantError, PolyMatrix};
pub use eigen::{symmetric_eigen, tridiagonal_eigenvalues, EigenError, SymmetricEigen, SymmetricMatrix};
pub use poly::RingPolynomial;
pub use quotient::{QuotientElement, QuotientError};
pub use rational::{parse_rational, rat, rational_string, to_f64, Rational};
pub use ring::{Laurent, Ring};
pub use roots::{isolate_real_roots, refine_enclosure, RootEnclosure, RootError};
