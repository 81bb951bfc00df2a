//! The ring-construction expression language.
//!
//! ```text
//! Expr   := Term { "x" Term } ;
//! Term   := "Z" "/" INT | "GF" "(" INT "," INT ")" | "M" "(" INT "," Expr ")"
//!         | "UT" "(" INT "," Expr ")" | "TE" "(" Expr ")" | "BT" "(" Expr ")"
//!         | "NIL" "(" Expr "," INT ")" | "POLYQ" "(" Expr "," "[" INT {"," INT} "]" ")"
//!         | "GR" "(" Expr "," GExpr ")" | "MODJ" "(" Expr ")"
//!         | "CORNER" "(" Expr "," INT ")" | "QUOT" "(" Expr "," "[" INT {"," INT} "]" ")"
//!         | "(" Expr ")" ;
//! GExpr  := GTerm { "x" GTerm } ;
//! GTerm  := "C" INT | "S3" | "D4" | "Q8" | "(" GExpr ")" ;
//! ```
//!
//! `GF(q)` is accepted as shorthand for `GF(p, k)` when `q = p^k`.
//! `x` is right-associative. Element arguments (`CORNER`, `QUOT`, `POLYQ`
//! coefficients) are canonical element indices of the inner ring.

mod ast;
mod eval;
mod parser;

pub use ast::{GroupExpr, RingExpr};
pub use eval::{evaluate, evaluate_group};
pub use parser::{parse, parse_group, ParseError, ParseErrorKind};
