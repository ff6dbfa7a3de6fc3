//! Exact computations in combinatorial Hopf algebras built on packed words.

pub mod compext;
pub mod composition;
pub mod error;
pub mod hopf;
pub mod ispw;
pub mod perms;
pub mod pword;
pub mod qsymnsym;
pub mod report;
pub mod scalars;
pub mod series;
pub mod suites;
pub mod wmat;
pub mod wmatdual;

pub use error::{AlgebraError, Result};
