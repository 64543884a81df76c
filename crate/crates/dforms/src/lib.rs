//! Exact combinatorics of the multiplicative structure on degree-`d`
//! monomials.
//!
//! The crate implements, over the monomial basis and with arbitrary
//! precision throughout:
//!
//! * the `*`-product turning the degree-`d` forms into a polynomial ring in
//!   `d` variables, with the explicit inverse isomorphisms ([`star`]);
//! * the stability predicates (stable, strongly stable, block stable,
//!   p-Borel) on monomial spaces and ideals ([`stability`]);
//! * Macaulay representations, growth bounds, O-sequences, lexsegment and
//!   piecewise lexsegment constructions ([`macaulay`]);
//! * the linear transforms between one-row Betti tables and their
//!   m-invariants, Eliahou-Kervaire tables of stable ideals, and the exact
//!   feasibility decision for one-row tables with witness construction
//!   ([`betti`]);
//! * the duality between degree-`d`-generated ideals and y-side ideals with
//!   finite quotient, the stretch/Alexander-dual/compress pipeline, and
//!   their agreement check ([`duality`]);
//! * exhaustive desk-scale enumerators verifying the equivalences
//!   ([`oracle`]).
//!
//! Variable indices are 0-based internally (`x_0, x_1, ...`); the 1-based
//! conventions of the `x`- and `y`-sides are applied at I/O boundaries only.
//! All values are immutable after construction and all operations are pure,
//! so everything is safe to share and send across threads.

pub mod betti;
pub mod duality;
pub mod error;
pub mod ideal;
pub mod macaulay;
pub mod monomial;
pub mod oracle;
pub mod stability;
pub mod star;

pub use error::{Error, Result};
pub use ideal::{Basis, MonomialIdeal};
pub use monomial::{Monomial, MonomialSpace, WVector};
pub use star::YMonomial;
