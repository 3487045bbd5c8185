//! Non-standard scalars: a real standard part plus a monad tag.
//!
//! A bound `a` is either the exact real `a`, the left monad `⁻a` (reals
//! infinitely close to `a` from below), the right monad `a⁺`, or the binad
//! `⁻a⁺` (the union of both monads, not containing `a` itself).
//!
//! The infinitesimal is never stored. Arithmetic is first order: every monad
//! operand contributes its own positive infinitesimal, products of
//! infinitesimals vanish, and the tag of a result is read from the signs of
//! the surviving first-order coefficients. All coefficients positive gives a
//! right monad, all negative a left monad, none an exact value, and mixed
//! signs a binad. On sums this is exactly the absorption table
//! (`⁻a + ⁻b = ⁻(a+b)`, `a⁺ + b⁺ = (a+b)⁺`, `⁻a + b⁺ = ⁻(a+b)⁺`).
//! Subtraction and multiplication use the same model. In particular
//! `0.5⁺ · ⁻0.4` is the binad `⁻0.2⁺`.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Which side(s) of the standard part a bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Monad {
    Exact,
    /// `⁻a`
    Left,
    /// `a⁺`
    Right,
    /// `⁻a⁺`
    Binad,
}

impl Monad {
    fn from_sides(below: bool, above: bool) -> Self {
        match (below, above) {
            (false, false) => Monad::Exact,
            (true, false) => Monad::Left,
            (false, true) => Monad::Right,
            (true, true) => Monad::Binad,
        }
    }

    /// Whether the bound may lie infinitesimally below its standard part.
    pub fn below(self) -> bool {
        matches!(self, Monad::Left | Monad::Binad)
    }

    /// Whether the bound may lie infinitesimally above its standard part.
    pub fn above(self) -> bool {
        matches!(self, Monad::Right | Monad::Binad)
    }

    /// Mirror image: left and right swap.
    pub fn flip(self) -> Self {
        Monad::from_sides(self.above(), self.below())
    }

    /// Tag combination for a sum.
    pub fn join(self, other: Monad) -> Self {
        Monad::from_sides(self.below() || other.below(), self.above() || other.above())
    }

    /// Tag after scaling the infinitesimal by a real factor of the given sign.
    fn scale(self, factor: f64) -> Self {
        if factor > 0.0 {
            self
        } else if factor < 0.0 {
            self.flip()
        } else {
            Monad::Exact
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Monad::Exact => "",
            Monad::Left => "-",
            Monad::Right => "+",
            Monad::Binad => "-+",
        }
    }

    fn rank(self) -> u8 {
        match self {
            Monad::Left => 0,
            Monad::Exact => 1,
            Monad::Right => 2,
            Monad::Binad => 3,
        }
    }
}

/// Outcome of comparing two bounds. Binads have no order relative to
/// anything sharing their standard part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl NsOrdering {
    pub fn to_ordering(self) -> Option<Ordering> {
        match self {
            NsOrdering::Less => Some(Ordering::Less),
            NsOrdering::Equal => Some(Ordering::Equal),
            NsOrdering::Greater => Some(Ordering::Greater),
            NsOrdering::Incomparable => None,
        }
    }

    pub fn is_le(self) -> bool {
        matches!(self, NsOrdering::Less | NsOrdering::Equal)
    }

    pub fn is_ge(self) -> bool {
        matches!(self, NsOrdering::Greater | NsOrdering::Equal)
    }
}

impl From<Ordering> for NsOrdering {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => NsOrdering::Less,
            Ordering::Equal => NsOrdering::Equal,
            Ordering::Greater => NsOrdering::Greater,
        }
    }
}

/// A non-standard finite number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NsBound {
    standard_part: f64,
    monad: Monad,
}

impl NsBound {
    pub const ZERO: NsBound = NsBound {
        standard_part: 0.0,
        monad: Monad::Exact,
    };
    pub const ONE: NsBound = NsBound {
        standard_part: 1.0,
        monad: Monad::Exact,
    };
    /// `⁻0`, the lower end of the non-standard unit interval.
    pub const LEFT_ZERO: NsBound = NsBound {
        standard_part: 0.0,
        monad: Monad::Left,
    };
    /// `1⁺`, the upper end of the non-standard unit interval (absolute truth).
    pub const ONE_PLUS: NsBound = NsBound {
        standard_part: 1.0,
        monad: Monad::Right,
    };
    /// `3⁺`, the largest admissible component sum.
    pub const THREE_PLUS: NsBound = NsBound {
        standard_part: 3.0,
        monad: Monad::Right,
    };

    pub fn new(standard_part: f64, monad: Monad) -> Result<Self, Error> {
        if !standard_part.is_finite() {
            return Err(Error::NonFinite);
        }
        // -0.0 and 0.0 are the same standard part; keep one bit pattern.
        let standard_part = if standard_part == 0.0 {
            0.0
        } else {
            standard_part
        };
        Ok(NsBound {
            standard_part,
            monad,
        })
    }

    pub fn exact(x: f64) -> Result<Self, Error> {
        NsBound::new(x, Monad::Exact)
    }

    pub fn left(x: f64) -> Result<Self, Error> {
        NsBound::new(x, Monad::Left)
    }

    pub fn right(x: f64) -> Result<Self, Error> {
        NsBound::new(x, Monad::Right)
    }

    pub fn binad(x: f64) -> Result<Self, Error> {
        NsBound::new(x, Monad::Binad)
    }

    /// Builds a bound from arithmetic results. Finite inputs to `+`, `-`, `*`
    /// on values of the unit-interval scale stay finite; an overflow here is a
    /// caller bug.
    fn from_parts(x: f64, monad: Monad) -> Self {
        debug_assert!(x.is_finite(), "non-finite standard part");
        let standard_part = if x == 0.0 { 0.0 } else { x };
        NsBound {
            standard_part,
            monad,
        }
    }

    pub fn standard_part(self) -> f64 {
        self.standard_part
    }

    pub fn monad(self) -> Monad {
        self.monad
    }

    pub fn is_exact(self) -> bool {
        self.monad == Monad::Exact
    }

    pub fn with_monad(self, monad: Monad) -> Self {
        NsBound { monad, ..self }
    }

    /// Lowest non-binad candidate: the left half of a binad, otherwise self.
    pub fn lower_part(self) -> Self {
        match self.monad {
            Monad::Binad => self.with_monad(Monad::Left),
            _ => self,
        }
    }

    /// Highest non-binad candidate: the right half of a binad, otherwise self.
    pub fn upper_part(self) -> Self {
        match self.monad {
            Monad::Binad => self.with_monad(Monad::Right),
            _ => self,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, rhs: NsBound) -> NsBound {
        NsBound::from_parts(
            self.standard_part + rhs.standard_part,
            self.monad.join(rhs.monad),
        )
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, rhs: NsBound) -> NsBound {
        NsBound::from_parts(
            self.standard_part - rhs.standard_part,
            self.monad.join(rhs.monad.flip()),
        )
    }

    /// Product of two bounds with non-negative standard parts.
    ///
    /// `(a + αε₁)(b + βε₂) = ab + bαε₁ + aβε₂`, so each operand's tag survives
    /// scaled by the other's standard part; an exact zero annihilates.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: NsBound) -> Result<NsBound, Error> {
        if self.standard_part < 0.0 || rhs.standard_part < 0.0 {
            return Err(Error::NegativeOperand);
        }
        let monad = self
            .monad
            .scale(rhs.standard_part)
            .join(rhs.monad.scale(self.standard_part));
        Ok(NsBound::from_parts(
            self.standard_part * rhs.standard_part,
            monad,
        ))
    }

    /// Division by a nonzero real; a negative divisor mirrors the tag.
    pub fn div_scalar(self, k: f64) -> Result<NsBound, Error> {
        if k == 0.0 {
            return Err(Error::DivisionByZero);
        }
        if !k.is_finite() {
            return Err(Error::NonFinite);
        }
        NsBound::new(self.standard_part / k, self.monad.scale(k))
    }

    pub fn ns_cmp(self, other: NsBound) -> NsOrdering {
        match self.standard_part.partial_cmp(&other.standard_part) {
            Some(Ordering::Equal) => {
                if self.monad == Monad::Binad || other.monad == Monad::Binad {
                    return NsOrdering::Incomparable;
                }
                self.monad.rank().cmp(&other.monad.rank()).into()
            }
            Some(o) => o.into(),
            None => NsOrdering::Incomparable,
        }
    }

    /// A total order used only to lay out canonical forms: by standard part,
    /// then Left < Exact < Right < Binad.
    pub fn canonical_cmp(&self, other: &NsBound) -> Ordering {
        self.standard_part
            .total_cmp(&other.standard_part)
            .then(self.monad.rank().cmp(&other.monad.rank()))
    }

    /// True when `next` is the immediate successor of `self` in the tag
    /// order of one standard part (`⁻c` then `c`, or `c` then `c⁺`).
    pub(crate) fn is_followed_by(self, next: NsBound) -> bool {
        self.standard_part == next.standard_part
            && matches!(
                (self.monad, next.monad),
                (Monad::Left, Monad::Exact) | (Monad::Exact, Monad::Right)
            )
    }
}

/// Free-function spelling of [`NsBound::add`].
pub fn ns_add(a: NsBound, b: NsBound) -> NsBound {
    a.add(b)
}

pub fn ns_sub(a: NsBound, b: NsBound) -> NsBound {
    a.sub(b)
}

pub fn ns_mul(a: NsBound, b: NsBound) -> Result<NsBound, Error> {
    a.mul(b)
}

pub fn ns_cmp(a: NsBound, b: NsBound) -> NsOrdering {
    a.ns_cmp(b)
}

pub fn standard_part(a: NsBound) -> f64 {
    a.standard_part()
}

impl PartialOrd for NsBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.ns_cmp(*other).to_ordering()
    }
}

impl From<f64> for NsBound {
    /// Panics on a non-finite value; use [`NsBound::exact`] for fallible input.
    fn from(x: f64) -> Self {
        NsBound::exact(x).expect("finite standard part")
    }
}

impl fmt::Display for NsBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // f64's Display is the shortest string that parses back to the same bits.
        write!(f, "{}{}", self.standard_part, self.monad.suffix())
    }
}

/// Length of the numeric prefix `-?digits(.digits)?` of `s`, if any.
pub(crate) fn scan_number(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut i = 0;
    if bytes.first() == Some(&b'-') {
        i += 1;
    }
    let int_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == int_start {
        return None;
    }
    if i < bytes.len() && bytes[i] == b'.' {
        let frac_start = i + 1;
        let mut j = frac_start;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        if j == frac_start {
            return None;
        }
        i = j;
    }
    Some(i)
}

/// Parses the monad suffix at the start of `s`, returning the tag and the
/// number of bytes consumed.
pub(crate) fn scan_suffix(s: &str) -> (Monad, usize) {
    if s.starts_with("-+") {
        (Monad::Binad, 2)
    } else if s.starts_with('-') {
        (Monad::Left, 1)
    } else if s.starts_with('+') {
        (Monad::Right, 1)
    } else {
        (Monad::Exact, 0)
    }
}

impl FromStr for NsBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num_len = scan_number(s).ok_or(Error::Parse {
            offset: 0,
            message: "expected a number",
        })?;
        let value: f64 = s[..num_len].parse().map_err(|_| Error::Parse {
            offset: 0,
            message: "invalid number",
        })?;
        let (monad, suffix_len) = scan_suffix(&s[num_len..]);
        let end = num_len + suffix_len;
        if end != s.len() {
            return Err(Error::Parse {
                offset: end,
                message: "malformed monad suffix",
            });
        }
        NsBound::new(value, monad)
    }
}
