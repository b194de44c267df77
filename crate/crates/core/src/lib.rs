//! Exact learning of definite Horn formulas.
//!
//! The crate provides the closure machinery for definite Horn formulas
//! ([`horn`]), the Guigues-Duquenne canonical basis ([`gd`]), teachers for
//! the standard, entailment and closure query protocols ([`oracle`]), the
//! learners ([`learn`]) and the query simulations between protocols
//! ([`reduce`]).
//!
//! ```
//! use hornlearn::{corpus, gd::gd_basis, learn::clh, oracle::Teacher};
//!
//! let target = corpus::gd_example();
//! let mut teacher = Teacher::new(target.clone());
//! let report = clh(&mut teacher).unwrap();
//! assert!(report.output.same_implication_set(&gd_basis(&target)));
//! ```

pub mod error;
pub mod format;
pub mod gd;
pub mod gen;
pub mod horn;
pub mod learn;
pub mod oracle;
pub mod reduce;

pub use error::{Error, ParseErrorKind, Result};
pub use gen::{corpus, random_formula, GenConfig};
pub use horn::{Assignment, EntailmentClause, HornFormula, Implication, VarSet};
pub use oracle::{QueryStats, Strategy, Teacher};
