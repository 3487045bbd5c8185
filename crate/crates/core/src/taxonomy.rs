//! Which logics a truth value reduces to, and the intuitionistic fuzzy set
//! membership constraints that neutrosophic values are free of.
//!
//! When all three components are exact singletons `(t, i, f)` with
//! `n = t + i + f`:
//!
//! | flag                       | condition                              |
//! |----------------------------|----------------------------------------|
//! | `IntuitionisticIncomplete` | `0 < n < 1`, `i = 0`                   |
//! | `Fuzzy`                    | `n = 1`, `i = 0`                       |
//! | `Ifl`                      | `n = 1`                                |
//! | `Boolean`                  | fuzzy and `t, f ∈ {0, 1}`              |
//! | `MultiValued`              | `0 ≤ t, i, f ≤ 1`                      |
//! | `Paraconsistent`           | `n > 1`, `i = 0`, `t < 1`, `f < 1`     |
//! | `Dialetheist`              | `t = f = 1`, `i = 0`                   |
//! | `Faillibilist`             | `i > 0`                                |
//! | `ParadoxForm`              | `t = f = 1`, any indeterminacy         |
//!
//! The conditions overlap, so a value carries a set of flags. Equalities are
//! tested with an absolute tolerance of `1e-12`.

use core::fmt;

use crate::logic::NLValue;
use crate::nonstd::{NsBound, NsOrdering};
use crate::nsset::NsSet;
use crate::Error;

pub const TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicFlag {
    Boolean,
    Fuzzy,
    IntuitionisticIncomplete,
    Ifl,
    MultiValued,
    Paraconsistent,
    Dialetheist,
    Faillibilist,
    ParadoxForm,
}

impl LogicFlag {
    pub const ALL: [LogicFlag; 9] = [
        LogicFlag::Boolean,
        LogicFlag::Fuzzy,
        LogicFlag::IntuitionisticIncomplete,
        LogicFlag::Ifl,
        LogicFlag::MultiValued,
        LogicFlag::Paraconsistent,
        LogicFlag::Dialetheist,
        LogicFlag::Faillibilist,
        LogicFlag::ParadoxForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LogicFlag::Boolean => "Boolean",
            LogicFlag::Fuzzy => "Fuzzy",
            LogicFlag::IntuitionisticIncomplete => "IntuitionisticIncomplete",
            LogicFlag::Ifl => "IFL",
            LogicFlag::MultiValued => "MultiValued",
            LogicFlag::Paraconsistent => "Paraconsistent",
            LogicFlag::Dialetheist => "Dialetheist",
            LogicFlag::Faillibilist => "Faillibilist",
            LogicFlag::ParadoxForm => "ParadoxForm",
        }
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for LogicFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct FlagSet(u16);

impl FlagSet {
    pub fn insert(&mut self, flag: LogicFlag) {
        self.0 |= flag.bit();
    }

    pub fn contains(self, flag: LogicFlag) -> bool {
        self.0 & flag.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = LogicFlag> {
        LogicFlag::ALL
            .into_iter()
            .filter(move |f| self.contains(*f))
    }
}

impl FromIterator<LogicFlag> for FlagSet {
    fn from_iter<I: IntoIterator<Item = LogicFlag>>(iter: I) -> Self {
        let mut s = FlagSet::default();
        for f in iter {
            s.insert(f);
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogicClass {
    /// All components are exact single points.
    pub singleton: bool,
    /// `t + i + f`, present only for singletons.
    pub n: Option<f64>,
    pub flags: FlagSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruthGrade {
    /// `T = {1⁺}`: true in all possible worlds.
    AbsoluteTruth,
    /// `T = {1}`: true in at least one world.
    RelativeTruth,
    AbsoluteFalsehood,
    RelativeFalsehood,
    Ungraded,
}

impl TruthGrade {
    pub fn name(self) -> &'static str {
        match self {
            TruthGrade::AbsoluteTruth => "AbsoluteTruth",
            TruthGrade::RelativeTruth => "RelativeTruth",
            TruthGrade::AbsoluteFalsehood => "AbsoluteFalsehood",
            TruthGrade::RelativeFalsehood => "RelativeFalsehood",
            TruthGrade::Ungraded => "None",
        }
    }
}

impl fmt::Display for TruthGrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn eq(x: f64, y: f64) -> bool {
    (x - y).abs() <= TOLERANCE
}

fn gt(x: f64, y: f64) -> bool {
    x > y + TOLERANCE
}

fn lt(x: f64, y: f64) -> bool {
    x < y - TOLERANCE
}

fn in_unit(x: f64) -> bool {
    (-TOLERANCE..=1.0 + TOLERANCE).contains(&x)
}

fn exact_point(s: &NsSet) -> Option<f64> {
    s.as_point()
        .filter(|p| p.is_exact())
        .map(NsBound::standard_part)
}

fn flags_for_point(t: f64, i: f64, f: f64) -> FlagSet {
    let n = t + i + f;
    let mut flags = FlagSet::default();
    let no_indeterminacy = eq(i, 0.0);
    let fuzzy = eq(n, 1.0) && no_indeterminacy;
    if fuzzy {
        flags.insert(LogicFlag::Fuzzy);
        let crisp = |x: f64| eq(x, 0.0) || eq(x, 1.0);
        if crisp(t) && crisp(f) {
            flags.insert(LogicFlag::Boolean);
        }
    }
    if gt(n, 0.0) && lt(n, 1.0) && no_indeterminacy {
        flags.insert(LogicFlag::IntuitionisticIncomplete);
    }
    if eq(n, 1.0) {
        flags.insert(LogicFlag::Ifl);
    }
    if in_unit(t) && in_unit(i) && in_unit(f) {
        flags.insert(LogicFlag::MultiValued);
    }
    if gt(n, 1.0) && no_indeterminacy && lt(t, 1.0) && lt(f, 1.0) {
        flags.insert(LogicFlag::Paraconsistent);
    }
    if eq(t, 1.0) && eq(f, 1.0) {
        flags.insert(LogicFlag::ParadoxForm);
        if no_indeterminacy {
            flags.insert(LogicFlag::Dialetheist);
        }
    }
    if gt(i, 0.0) {
        flags.insert(LogicFlag::Faillibilist);
    }
    flags
}

fn within_standard_unit(s: &NsSet) -> bool {
    match (s.inf(), s.sup()) {
        (Ok(lo), Ok(hi)) => lo.ns_cmp(NsBound::ZERO).is_ge() && hi.ns_cmp(NsBound::ONE).is_le(),
        _ => false,
    }
}

pub fn classify(v: &NLValue) -> LogicClass {
    let [t, i, f] = v.components();
    if let (Some(t), Some(i), Some(f)) = (exact_point(t), exact_point(i), exact_point(f)) {
        return LogicClass {
            singleton: true,
            n: Some(t + i + f),
            flags: flags_for_point(t, i, f),
        };
    }
    let mut flags = FlagSet::default();
    if v.components().into_iter().all(within_standard_unit) {
        flags.insert(LogicFlag::MultiValued);
    }
    if i.inf()
        .map(|lo| lo.ns_cmp(NsBound::ZERO) == NsOrdering::Greater)
        .unwrap_or(false)
    {
        flags.insert(LogicFlag::Faillibilist);
    }
    if exact_point(t).is_some_and(|x| eq(x, 1.0)) && exact_point(f).is_some_and(|x| eq(x, 1.0)) {
        flags.insert(LogicFlag::ParadoxForm);
    }
    LogicClass {
        singleton: false,
        n: None,
        flags,
    }
}

/// Absolute versus relative truth (or falsehood). Truth is inspected first.
pub fn truth_grade(v: &NLValue) -> TruthGrade {
    let grade = |s: &NsSet| match s.as_point() {
        Some(p) if p == NsBound::ONE_PLUS => Some(true),
        Some(p) if p == NsBound::ONE => Some(false),
        _ => None,
    };
    match (grade(v.truth()), grade(v.falsehood())) {
        (Some(true), _) => TruthGrade::AbsoluteTruth,
        (Some(false), _) => TruthGrade::RelativeTruth,
        (None, Some(true)) => TruthGrade::AbsoluteFalsehood,
        (None, Some(false)) => TruthGrade::RelativeFalsehood,
        (None, None) => TruthGrade::Ungraded,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IfsVerdict {
    pub accepted: bool,
    /// `1 − m − n` when accepted.
    pub indeterminacy: Option<f64>,
}

fn check_unit(x: f64) -> Result<(), Error> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfRange)
    }
}

/// Intuitionistic fuzzy set: membership `m` and non-membership `n` with `m + n ≤ 1`.
pub fn ifs_check(m: f64, n: f64) -> Result<IfsVerdict, Error> {
    check_unit(m)?;
    check_unit(n)?;
    if m + n <= 1.0 + TOLERANCE {
        let rest = 1.0 - m - n;
        Ok(IfsVerdict {
            accepted: true,
            indeterminacy: Some(if rest < 0.0 { 0.0 } else { rest }),
        })
    } else {
        Ok(IfsVerdict {
            accepted: false,
            indeterminacy: None,
        })
    }
}

/// Interval-valued IFS: `sup M + sup N ≤ 1` for exact subsets of `[0, 1]`.
pub fn ivifs_check(m: &NsSet, n: &NsSet) -> Result<bool, Error> {
    for s in [m, n] {
        if s.is_empty() || !s.is_exact() || !within_standard_unit(s) {
            return Err(Error::OutOfRange);
        }
    }
    let total = m.sup()?.standard_part() + n.sup()?.standard_part();
    Ok(total <= 1.0 + TOLERANCE)
}

/// IFS of the second type: `m² + n² ≤ 1`.
pub fn ifs2_check(m: f64, n: f64) -> Result<bool, Error> {
    check_unit(m)?;
    check_unit(n)?;
    Ok(m * m + n * n <= 1.0 + TOLERANCE)
}
