//! Noncommutative operator algebra generated by `X`, `D` and `T_q^{±1}`.

mod algebra;
mod block;
mod bracket;
mod equality;
mod tier2;
mod word;

pub use algebra::{dilate, MonomialKey, OpMonomial, Operator};
pub use block::{Block2, BlockOp2};
pub use bracket::{q_bracket, BracketKind, OpAlgebra};
pub use equality::{
    numeric_equal, op_equal, symbolic_equal, Discrepancy, EqualityReport, Method, Operand,
};
pub use tier2::{
    check_q, Compiled, DiagRational, SparsePoly, Stage, TPoly, Tier2Operator, Tier2Pipeline,
};
pub use word::{normal_form, Expr, Generator, Word};
