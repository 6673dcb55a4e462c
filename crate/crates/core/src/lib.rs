//! Exact computations behind the equivariant-formality certificate for
//! isotropy actions on compact symmetric spaces.
//!
//! The pipeline for one symmetric pair is:
//!
//! 1. [`rootsys`]: build the root system of g in rational coordinates;
//! 2. [`involution`]: realize σ on the torus as a diagram involution and
//!    split t_g = t_k ⊕ t_p;
//! 3. [`restricted`]: restrict the roots to t_k, check the root-system axioms
//!    and read off the reduced type k′;
//! 4. [`formality`]: r = |W(k′)|/|W(k)| compartments per k-chamber, and
//!    dim H*(M^T) = 2^(rank g − rank k)·r compared with dim H*(M) from the
//!    [`catalog`].
//!
//! [`weyl`] supplies Weyl group orders from the closed-form table and from an
//! independent brute-force closure.

pub mod catalog;
pub mod diagram;
pub mod error;
pub mod formality;
pub mod involution;
pub mod linalg;
pub mod restricted;
pub mod rootsys;
pub mod weyl;

pub use catalog::{Catalog, Regime, SymmetricPairEntry};
pub use error::{Error, Result};
pub use formality::{check_formality, FormalityReport};
pub use involution::{make_involution, DiagramInvolution, InvolutionName, PairCase, TorusSplit};
pub use linalg::{Rat, Vector};
pub use restricted::{build_restricted, RestrictedRootSystem};
pub use rootsys::{build_root_system, CartanType, RootSystem, Series};
pub use weyl::{weyl_order_bfs, weyl_order_closed_form, WeylOrder};
