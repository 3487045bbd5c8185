//! Truth-value triples and the connectives between them.
//!
//! Every connective is applied componentwise, with the same formula on `T`,
//! `I` and `F`, using the set operations of [`crate::nsset`]. Products bind
//! tighter than sums and differences, which associate left to right:
//!
//! | connective | formula on one component             |
//! |------------|--------------------------------------|
//! | `¬a`       | `C ⊖ a`                              |
//! | `a ∧ b`    | `a ⊙ b`                              |
//! | `a ∨ b`    | `a ⊕ b ⊖ a ⊙ b`                      |
//! | `a ⊻ b`    | `a ⊙ (C ⊖ b) ⊕ b ⊙ (C ⊖ a) ⊖ a ⊙ b ⊙ (C ⊖ a) ⊙ (C ⊖ b)` |
//! | `a → b`    | `C ⊖ a ⊕ a ⊙ b`                      |
//! | `a ↔ b`    | `(C ⊖ a ⊕ a ⊙ b) ⊙ (C ⊖ b ⊕ a ⊙ b)`  |
//! | `a \| b`   | `C ⊖ a ⊙ b`                          |
//! | `a ↓ b`    | `(C ⊖ a) ⊙ (C ⊖ b)`                  |
//!
//! `C` is `{1}` or `{1⁺}` depending on [`ConstantMode`]. The exclusive-or
//! complements are `C ⊖ a`; read as a product the formula does not reduce to
//! XOR on Boolean inputs. After each connective, every component is clamped
//! into `]⁻0, 1⁺[`.
//!
//! Operands that occur several times in a formula are independent copies in
//! the default compositional evaluation, so results are hulls that may be
//! wider than the true image. [`EvalConfig::correlated`] switches to sampling
//! the scalar formula instead.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::nonstd::NsBound;
use crate::nsset::{NsSet, Piece};
use crate::Error;

/// Which constant stands for "one" in the complement terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstantMode {
    /// `{1}`: Boolean corners reduce exactly to classical tables.
    #[default]
    Classical,
    /// `{1⁺}`: keeps the absolute/relative distinction.
    Literal,
}

impl ConstantMode {
    pub fn constant(self) -> NsBound {
        match self {
            ConstantMode::Classical => NsBound::ONE,
            ConstantMode::Literal => NsBound::ONE_PLUS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalConfig {
    pub constant_mode: ConstantMode,
    /// Sample the pointwise formula instead of composing set operations.
    pub correlated: bool,
}

impl EvalConfig {
    pub fn classical() -> Self {
        EvalConfig::default()
    }

    pub fn literal() -> Self {
        EvalConfig {
            constant_mode: ConstantMode::Literal,
            correlated: false,
        }
    }

    pub fn with_correlated(self, correlated: bool) -> Self {
        EvalConfig { correlated, ..self }
    }
}

/// A neutrosophic truth value `(T, I, F)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NLValue {
    t: NsSet,
    i: NsSet,
    f: NsSet,
}

impl NLValue {
    /// Checks that every component is nonempty and inside `]⁻0, 1⁺[`. The
    /// component sums then automatically satisfy `⁻0 ≤ n_inf ≤ n_sup ≤ 3⁺`.
    pub fn new(t: NsSet, i: NsSet, f: NsSet) -> Result<Self, Error> {
        for c in [&t, &i, &f] {
            if c.is_empty() {
                return Err(Error::EmptyComponent);
            }
            if !c.within_unit() {
                return Err(Error::OutOfUnitInterval);
            }
        }
        Ok(NLValue { t, i, f })
    }

    /// Singleton components with exact values.
    pub fn from_reals(t: f64, i: f64, f: f64) -> Result<Self, Error> {
        NLValue::new(
            NsSet::point(NsBound::exact(t)?),
            NsSet::point(NsBound::exact(i)?),
            NsSet::point(NsBound::exact(f)?),
        )
    }

    pub fn truth(&self) -> &NsSet {
        &self.t
    }

    pub fn indeterminacy(&self) -> &NsSet {
        &self.i
    }

    pub fn falsehood(&self) -> &NsSet {
        &self.f
    }

    pub fn components(&self) -> [&NsSet; 3] {
        [&self.t, &self.i, &self.f]
    }

    /// `inf T + inf I + inf F`.
    pub fn n_inf(&self) -> NsBound {
        let [t, i, f] = self
            .components()
            .map(|c| c.inf().expect("nonempty component"));
        t.add(i).add(f)
    }

    /// `sup T + sup I + sup F`.
    pub fn n_sup(&self) -> NsBound {
        let [t, i, f] = self
            .components()
            .map(|c| c.sup().expect("nonempty component"));
        t.add(i).add(f)
    }

    fn map_pair<F>(&self, other: &NLValue, mut op: F) -> Result<NLValue, Error>
    where
        F: FnMut(&NsSet, &NsSet) -> Result<NsSet, Error>,
    {
        Ok(NLValue {
            t: op(&self.t, &other.t)?.clamp(),
            i: op(&self.i, &other.i)?.clamp(),
            f: op(&self.f, &other.f)?.clamp(),
        })
    }
}

impl fmt::Display for NLValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(T={}, I={}, F={})", self.t, self.i, self.f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    And,
    /// Weak (inclusive) disjunction.
    Or,
    /// Strong (exclusive) disjunction.
    Xor,
    Imp,
    Iff,
    /// Sheffer stroke.
    Nand,
    /// Peirce arrow.
    Nor,
}

impl Connective {
    pub const ALL: [Connective; 7] = [
        Connective::And,
        Connective::Or,
        Connective::Xor,
        Connective::Imp,
        Connective::Iff,
        Connective::Nand,
        Connective::Nor,
    ];

    /// The two-valued truth table.
    pub fn classical(self, a: bool, b: bool) -> bool {
        match self {
            Connective::And => a && b,
            Connective::Or => a || b,
            Connective::Xor => a != b,
            Connective::Imp => !a || b,
            Connective::Iff => a == b,
            Connective::Nand => !(a && b),
            Connective::Nor => !(a || b),
        }
    }
}

/// Arithmetic shared by whole sets and single sampled bounds, so that both
/// evaluation modes run the very same formula.
trait Carrier: Sized {
    fn plus(&self, rhs: &Self) -> Result<Self, Error>;
    fn minus(&self, rhs: &Self) -> Result<Self, Error>;
    fn times(&self, rhs: &Self) -> Result<Self, Error>;
}

impl Carrier for NsSet {
    fn plus(&self, rhs: &Self) -> Result<Self, Error> {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Result<Self, Error> {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Result<Self, Error> {
        self.mul(rhs)
    }
}

impl Carrier for NsBound {
    fn plus(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(NsBound::add(*self, *rhs))
    }
    fn minus(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(NsBound::sub(*self, *rhs))
    }
    fn times(&self, rhs: &Self) -> Result<Self, Error> {
        NsBound::mul(*self, *rhs)
    }
}

fn not_formula<C: Carrier>(a: &C, one: &C) -> Result<C, Error> {
    one.minus(a)
}

fn binary_formula<C: Carrier>(op: Connective, a: &C, b: &C, one: &C) -> Result<C, Error> {
    match op {
        Connective::And => a.times(b),
        Connective::Or => a.plus(b)?.minus(&a.times(b)?),
        Connective::Xor => {
            let not_a = one.minus(a)?;
            let not_b = one.minus(b)?;
            let both = a.times(b)?.times(&not_a)?.times(&not_b)?;
            a.times(&not_b)?.plus(&b.times(&not_a)?)?.minus(&both)
        }
        Connective::Imp => one.minus(a)?.plus(&a.times(b)?),
        Connective::Iff => {
            let ab = a.times(b)?;
            let left = one.minus(a)?.plus(&ab)?;
            let right = one.minus(b)?.plus(&ab)?;
            left.times(&right)
        }
        Connective::Nand => one.minus(&a.times(b)?),
        Connective::Nor => one.minus(a)?.times(&one.minus(b)?),
    }
}

pub fn nl_not(a: &NLValue, cfg: EvalConfig) -> NLValue {
    let one = NsSet::point(cfg.constant_mode.constant());
    let neg = |c: &NsSet| not_formula(c, &one).expect("nonempty operands").clamp();
    NLValue {
        t: neg(&a.t),
        i: neg(&a.i),
        f: neg(&a.f),
    }
}

/// Applies a binary connective by composing set operations.
pub fn nl_binary(
    op: Connective,
    a: &NLValue,
    b: &NLValue,
    cfg: EvalConfig,
) -> Result<NLValue, Error> {
    let one = NsSet::point(cfg.constant_mode.constant());
    a.map_pair(b, |x, y| binary_formula(op, x, y, &one))
}

pub fn nl_and(a: &NLValue, b: &NLValue, cfg: EvalConfig) -> Result<NLValue, Error> {
    nl_binary(Connective::And, a, b, cfg)
}

pub fn nl_or(a: &NLValue, b: &NLValue, cfg: EvalConfig) -> Result<NLValue, Error> {
    nl_binary(Connective::Or, a, b, cfg)
}

pub fn nl_xor(a: &NLValue, b: &NLValue, cfg: EvalConfig) -> Result<NLValue, Error> {
    nl_binary(Connective::Xor, a, b, cfg)
}

pub fn nl_imp(a: &NLValue, b: &NLValue, cfg: EvalConfig) -> Result<NLValue, Error> {
    nl_binary(Connective::Imp, a, b, cfg)
}

pub fn nl_iff(a: &NLValue, b: &NLValue, cfg: EvalConfig) -> Result<NLValue, Error> {
    nl_binary(Connective::Iff, a, b, cfg)
}

pub fn nl_nand(a: &NLValue, b: &NLValue, cfg: EvalConfig) -> Result<NLValue, Error> {
    nl_binary(Connective::Nand, a, b, cfg)
}

pub fn nl_nor(a: &NLValue, b: &NLValue, cfg: EvalConfig) -> Result<NLValue, Error> {
    nl_binary(Connective::Nor, a, b, cfg)
}

/// n-ary form of a binary connective as a left fold. `None` for no operands.
pub fn nl_fold(
    op: Connective,
    values: &[NLValue],
    cfg: EvalConfig,
) -> Option<Result<NLValue, Error>> {
    let (first, rest) = values.split_first()?;
    Some(
        rest.iter()
            .try_fold(first.clone(), |acc, v| nl_binary(op, &acc, v, cfg)),
    )
}

/// Grid resolution per interval in correlated mode.
pub const CORRELATED_SAMPLES: usize = 32;

fn samples(piece: &Piece) -> Vec<NsBound> {
    match piece {
        Piece::Point(p) if p.monad() == crate::Monad::Binad => {
            alloc::vec![p.lower_part(), p.upper_part()]
        }
        Piece::Point(p) => alloc::vec![*p],
        Piece::Interval(iv) => {
            let (lo, hi) = (iv.lo.standard_part(), iv.hi.standard_part());
            let mut out = Vec::with_capacity(CORRELATED_SAMPLES + 1);
            out.push(iv.lo);
            for k in 1..CORRELATED_SAMPLES {
                let x = lo + (hi - lo) * (k as f64) / (CORRELATED_SAMPLES as f64);
                if x > lo && x < hi {
                    out.push(NsBound::exact(x).expect("finite"));
                }
            }
            out.push(iv.hi);
            out
        }
    }
}

/// Hull of `f` over the sample points, as a closed piece, or the single
/// value itself when every sample agrees.
fn hull<I: Iterator<Item = Result<NsBound, Error>>>(values: I) -> Result<Piece, Error> {
    let mut lo: Option<NsBound> = None;
    let mut hi: Option<NsBound> = None;
    let mut first: Option<NsBound> = None;
    let mut constant = true;
    for v in values {
        let v = v?;
        match first {
            None => first = Some(v),
            Some(f) => constant &= f == v,
        }
        let (l, h) = (v.lower_part(), v.upper_part());
        if lo.is_none_or(|cur| l.ns_cmp(cur) == crate::NsOrdering::Less) {
            lo = Some(l);
        }
        if hi.is_none_or(|cur| h.ns_cmp(cur) == crate::NsOrdering::Greater) {
            hi = Some(h);
        }
    }
    let (lo, hi) = (
        lo.expect("at least one sample"),
        hi.expect("at least one sample"),
    );
    Ok(match first {
        Some(p) if constant => Piece::Point(p),
        _ if lo == hi => Piece::Point(lo),
        _ => Piece::closed(lo, hi),
    })
}

/// Correlated evaluation of one component. With `same` set, both operands are
/// the same variable and only the diagonal is sampled.
fn correlated_component(
    op: Option<Connective>,
    a: &NsSet,
    b: &NsSet,
    same: bool,
    one: NsBound,
) -> Result<NsSet, Error> {
    let formula = |x: NsBound, y: NsBound| match op {
        None => not_formula(&x, &one),
        Some(op) => binary_formula(op, &x, &y, &one),
    };
    let mut pieces = Vec::new();
    for pa in a.pieces() {
        let xs = samples(&pa);
        if same || op.is_none() {
            pieces.push(hull(xs.iter().map(|&x| formula(x, x)))?);
            continue;
        }
        for pb in b.pieces() {
            let ys = samples(&pb);
            pieces.push(hull(
                xs.iter()
                    .flat_map(|&x| ys.iter().map(move |&y| formula(x, y))),
            )?);
        }
    }
    Ok(NsSet::normalize(pieces)?.clamp())
}

/// Propositional formula over named atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Atom(String),
    Not(Box<Expr>),
    Bin(Connective, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn atom(name: impl Into<String>) -> Self {
        Expr::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Self {
        Expr::Not(Box::new(e))
    }

    pub fn bin(op: Connective, a: Expr, b: Expr) -> Self {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    /// Distinct atom names, sorted.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Expr::Atom(name) => {
                out.insert(name.as_str());
            }
            Expr::Not(e) => e.collect_atoms(out),
            Expr::Bin(_, a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

/// Lookup of atom values during evaluation.
pub trait Env {
    fn lookup(&self, name: &str) -> Option<&NLValue>;
}

impl Env for BTreeMap<String, NLValue> {
    fn lookup(&self, name: &str) -> Option<&NLValue> {
        self.get(name)
    }
}

impl<E: Env + ?Sized> Env for &E {
    fn lookup(&self, name: &str) -> Option<&NLValue> {
        (**self).lookup(name)
    }
}

/// Evaluates `e` bottom-up.
///
/// In correlated mode each connective samples its scalar formula over the
/// operand components instead of composing set operations; when both operands
/// are the same subexpression they are sampled as one variable, so `A ∨ A`
/// yields the image of `t + t − t²` rather than of `t₁ + t₂ − t₁t₂`.
pub fn evaluate<E: Env + ?Sized>(e: &Expr, env: &E, cfg: EvalConfig) -> Result<NLValue, Error> {
    match e {
        Expr::Atom(name) => env
            .lookup(name)
            .cloned()
            .ok_or_else(|| Error::UnboundAtom(name.clone())),
        Expr::Not(inner) => {
            let a = evaluate(inner, env, cfg)?;
            if cfg.correlated {
                correlated(None, &a, &a, false, cfg)
            } else {
                Ok(nl_not(&a, cfg))
            }
        }
        Expr::Bin(op, l, r) => {
            let a = evaluate(l, env, cfg)?;
            let b = evaluate(r, env, cfg)?;
            if cfg.correlated {
                correlated(Some(*op), &a, &b, l == r, cfg)
            } else {
                nl_binary(*op, &a, &b, cfg)
            }
        }
    }
}

fn correlated(
    op: Option<Connective>,
    a: &NLValue,
    b: &NLValue,
    same: bool,
    cfg: EvalConfig,
) -> Result<NLValue, Error> {
    let one = cfg.constant_mode.constant();
    Ok(NLValue {
        t: correlated_component(op, &a.t, &b.t, same, one)?,
        i: correlated_component(op, &a.i, &b.i, same, one)?,
        f: correlated_component(op, &a.f, &b.f, same, one)?,
    })
}

/// Correlated-mode application of a single binary connective to two
/// independent operands.
pub fn nl_binary_correlated(
    op: Connective,
    a: &NLValue,
    b: &NLValue,
    cfg: EvalConfig,
) -> Result<NLValue, Error> {
    correlated(Some(op), a, b, false, cfg)
}
