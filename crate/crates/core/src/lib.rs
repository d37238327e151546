//! Exact middle homology of links of isolated singularities of weighted
//! homogeneous polynomials.
//!
//! * [`weights`]: weight vectors, degrees, Brieskorn-Pham and chain forms.
//! * [`homology`]: Betti number and torsion of `H_{n-1}(L_f, Z)`.
//! * [`oracle`]: Smith normal form cross-check for Brieskorn-Pham links.
//! * [`catalog`]: parse weight catalogs, scan them, emit reports.

pub mod bignum;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod homology;
pub mod oracle;
pub mod weights;

pub use error::{Error, Result};
pub use homology::{betti, homology_summary, orlik_torsion, HomologyResult, SubsetTable};
pub use weights::{
    bp_exponents, chain_exponents, fano_degree, find_chain_orderings, link_descriptor,
    validate_weights, FormVariant, LinkDescriptor, PolynomialForm, WeightVector,
};
