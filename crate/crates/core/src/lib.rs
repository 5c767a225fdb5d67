//! Exact computer algebra for the diagram category of `GL_t`, the RTT
//! Yangian and the centralizer construction.
//!
//! Module map:
//!
//! - [`field`]: rationals, `Q(t)`, prime fields.
//! - [`diagram`]: walled Brauer diagrams and their linear combinations.
//! - [`algebra`]: presented algebras and PBW straightening shared by the next two.
//! - [`tensor`]: the evaluation functor at `t = N`.
//! - [`envelope`]: `U(gl_M)` in PBW normal form and its Gelfand invariants.
//! - [`yangian`]: the truncated Yangian `Y(gl_n)`, matrix series and automorphisms.
//! - [`centralizer`]: the maps into `U(gl_{N+n})` and the injectivity checks.
//! - [`invariants`]: chain/cycle decomposition of graded invariants.
//! - [`harness`]: suites, configuration and JSON reports behind the `verify` binary.

pub mod field;
pub mod lincomb;
pub mod linalg;
pub mod diagram;
pub mod tensor;
pub mod algebra;
pub mod envelope;
pub mod yangian;
pub mod centralizer;
pub mod invariants;
pub mod harness;
