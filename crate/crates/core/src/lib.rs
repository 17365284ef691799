//! Exact classification of regular subalgebras of semisimple Lie algebras.
//!
//! A regular subalgebra `s = t ⊕ ⊕_{α∈T} g_α` is determined by a closed set of
//! roots `T` and a Cartan part `t`. It is *λ-wide* when the simple module `V(λ)`
//! stays indecomposable on restriction to `s`, *wide* when this holds for every
//! `λ`, and *narrow* when every nontrivial `V(λ)` splits.
//!
//! The crate decides these properties combinatorially, through the symmetrized
//! closure `[T ∪ −T]` and the submodule it generates from a highest weight
//! vector, and independently through an oracle that computes the commutant
//! `(End V)^s` and its radical. Everything runs over exact rationals.
//!
//! Modules:
//!
//! - [`rootsys`]: root systems, pairings, Weyl groups, Chevalley structure constants.
//! - [`closedsets`]: closed subsets, closures, conjugacy and enumeration.
//! - [`repmod`]: explicit modules (adjoint, and `V(λ)` in type A).
//! - [`wideness`]: the classification engine and the commutant oracle.
//! - [`fflv`]: Dyck paths and FFLV multi-exponents for type A.

pub mod closedsets;
pub mod error;
pub mod fflv;
pub mod linalg;
pub mod poly;
pub mod repmod;
pub mod rootsys;
pub mod scalar;
pub mod wideness;

pub use closedsets::{ClosedSubset, EnumerationMode, RootSet};
pub use error::{Error, Result};
pub use fflv::{DyckPath, LemmaClause, MultiExponent};
pub use linalg::{SparseMatrix, SparseVec, Subspace};
pub use repmod::{CartanMode, ExplicitModule, Generator, ModuleCaps, RegularSubalgebra};
pub use rootsys::{Root, RootSystem, TypeLetter, Weight, WeylElement};
pub use scalar::Q;
pub use wideness::{
    ClassifyOptions, Classification, Commutant, CommutantSummary, LambdaVerdict, OracleOutcome, Verdict,
};
