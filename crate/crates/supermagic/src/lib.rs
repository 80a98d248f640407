//! Exact computational algebra for composition superalgebras, triality,
//! the characteristic-3 Supermagic Square, and the Jordan superalgebras
//! attached to them, over odd prime fields GF(p).
//!
//! Everything is structure-constant based and exact: algebras are built
//! from explicit multiplication tables over GF(p), identities are checked
//! on basis tuples, and isomorphisms are explicit matrices that are
//! machine-verified to preserve brackets.

pub mod composition;
pub mod derivations;
pub mod error;
pub mod field;
pub mod harness;
pub mod io;
pub mod isomaps;
pub mod jordan;
pub mod linalg;
pub mod report;
pub mod simplicity;
pub mod square;
pub mod superalgebra;
pub mod superspace;
pub mod tkk;
pub mod triality;

pub use error::{Error, Result};
pub use field::{PrimeField, Scalar};
pub use linalg::{Matrix, Subspace};
pub use superalgebra::{AlgebraKind, BilinearForm, CheckMode, SuperAlgebra};
pub use superspace::{Parity, SuperSpace};
