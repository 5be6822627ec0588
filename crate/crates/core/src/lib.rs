//! Evaluation of group-fairness definitions in Basic fuzzy Logic.
//!
//! Definitions are BL formulas over loosely specified predicates (group
//! membership, discrimination, bias) whose truth values live in `[0, 1]`.
//! A [`Logic`] picks the connectives: Gödel, Product or Łukasiewicz.
//!
//! - [`logic`]: truth values, t-norms, residua, negations
//! - [`expr`]: formula syntax, parser and evaluator
//! - [`fairness`]: standard-form bias, worst-case bias, generation spaces
//! - [`discrimination`]: classical measures and per-logic discrimination
//! - [`aggregation`]: Rawl / Unbias / Fair reductions over many biases
//! - [`roc`]: ROC curves, ABROCA, RBROCA and the synthetic sweep
//! - [`hooker_williams`]: the HW criterion and its truth-value forms
//! - [`belief`]: fitting stakeholder discrimination beliefs

pub mod aggregation;
pub mod belief;
pub mod discrimination;
pub mod expr;
pub mod fairness;
pub mod hooker_williams;
pub mod logic;
pub mod roc;

pub use expr::{evaluate, parse, Expr, Valuation};
pub use logic::{weak_neg, Logic, TruthValue};
