//! Exact combinatorics of three-valued truth tables of bracketed
//! implication chains.
//!
//! For every n there are a Catalan number of ways to bracket the chain
//! `p1 ⇒ p2 ⇒ … ⇒ pn`, and 3^n ways to assign false/true/unknown to the
//! variables. Evaluating every bracketing against every assignment under
//! strong Kleene implication yields 3^n·C_n truth-table rows in total.
//! This crate counts those rows by outcome along independent routes and
//! cross-checks them against each other:
//!
//! * [`oracle`]: brute-force enumeration of every (bracketing, assignment)
//!   pair, plus a faster per-subtree counting variant;
//! * [`recurrence`]: exact big-integer convolution recurrences and closed
//!   forms;
//! * [`series`]: truncated power series with exact rational coefficients
//!   for the generating functions and their pairwise products;
//! * [`asymptotics`]: growth laws of shape `c·3·12^(n-1)/sqrt(pi·n^3)` and
//!   exact-to-estimate convergence reports.
//!
//! [`verify`] wires the routes together into a pass/fail report.

pub mod asymptotics;
pub mod logic;
pub mod oracle;
pub mod recurrence;
pub mod series;
pub mod verify;

mod error;
pub use error::{Error, Result};
