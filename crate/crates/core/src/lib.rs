//! Neutrosophic logic over the non-standard unit interval `]⁻0, 1⁺[`.
//!
//! A proposition carries three set-valued components: truth `T`,
//! indeterminacy `I` and falsehood `F`. Each is an arbitrary subset of the
//! non-standard unit interval (a union of intervals and points whose ends may
//! sit infinitesimally below or above a real), and nothing ties the three
//! together. Absolute truth is `T = {1⁺}`, relative truth `T = {1}`.
//!
//! * [`nonstd`]: bounds with monad tags (`⁻a`, `a⁺`, `⁻a⁺`) and their arithmetic.
//! * [`nsset`]: canonical unions of intervals and points, Minkowski
//!   operations, inf/sup and clamping into `]⁻0, 1⁺[`.
//! * [`logic`]: truth-value triples, the eight connectives and expression
//!   evaluation.
//! * [`taxonomy`]: which classical, fuzzy or paraconsistent logic a value
//!   reduces to, and the intuitionistic fuzzy set constraints.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod logic;
pub mod nonstd;
pub mod nsset;
pub mod taxonomy;

pub use logic::{evaluate, Connective, ConstantMode, Env, EvalConfig, Expr, NLValue};
pub use nonstd::{Monad, NsBound, NsOrdering};
pub use nsset::{Interval, NsSet, Piece};
pub use taxonomy::{classify, truth_grade, LogicClass, LogicFlag, TruthGrade};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("standard part must be a finite real")]
    NonFinite,
    #[error("multiplication needs non-negative standard parts")]
    NegativeOperand,
    #[error("set operation on an empty operand")]
    EmptyOperand,
    #[error("inf/sup of an empty set")]
    EmptySet,
    #[error("division by zero")]
    DivisionByZero,
    #[error("interval lower end exceeds upper end, or an end is a binad")]
    MalformedInterval,
    #[error("value outside the admissible range")]
    OutOfRange,
    #[error("truth component is empty")]
    EmptyComponent,
    #[error("truth component leaves the non-standard unit interval")]
    OutOfUnitInterval,
    #[error("unbound atom `{0}`")]
    UnboundAtom(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse {
        offset: usize,
        message: &'static str,
    },
}
