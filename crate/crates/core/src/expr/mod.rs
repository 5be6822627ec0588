//! Formula syntax tree, parser and truth-value evaluator.

mod ast;
mod eval;
mod parser;

pub use ast::Expr;
pub use eval::{evaluate, EvalError, Valuation};
pub use parser::{parse, ParseError};
