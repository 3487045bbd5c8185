//! Sub-unitary sets: finite unions of intervals and isolated points whose
//! ends are non-standard bounds, with Minkowski-style arithmetic.
//!
//! Every [`NsSet`] is kept in a canonical form so that structural equality is
//! set equality and printing is deterministic:
//!
//! * intervals are sorted, pairwise disjoint and non-adjacent;
//! * no point lies in, or touches a closed end of, an interval;
//! * interval ends are never binads (a binad has no definite side), while a
//!   binad may appear as an isolated point;
//! * a left and a right monad point with the same standard part are stored as
//!   one binad point.
//!
//! Arithmetic works piecewise: every pair of pieces is combined with the
//! endpoint rules of interval arithmetic and the results are unioned. For the
//! positive sets these operations are meant for, the inf and sup of a result
//! are exactly the endpoint formulas, e.g. `inf(S1 ⊖ S2) = inf S1 − sup S2`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::nonstd::{scan_number, scan_suffix, Monad, NsBound, NsOrdering};
use crate::Error;

/// One interval of a set. `lo` is strictly below `hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: NsBound,
    pub hi: NsBound,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    pub fn closed(lo: NsBound, hi: NsBound) -> Self {
        Interval {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    pub fn contains(&self, x: NsBound) -> bool {
        let above_lo = match self.lo.ns_cmp(x) {
            NsOrdering::Less => true,
            NsOrdering::Equal => !self.lo_open,
            _ => false,
        };
        let below_hi = match x.ns_cmp(self.hi) {
            NsOrdering::Less => true,
            NsOrdering::Equal => !self.hi_open,
            _ => false,
        };
        above_lo && below_hi
    }
}

/// A raw set literal, before normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Piece {
    Point(NsBound),
    Interval(Interval),
}

impl Piece {
    pub fn point(x: NsBound) -> Self {
        Piece::Point(x)
    }

    pub fn closed(lo: NsBound, hi: NsBound) -> Self {
        Piece::Interval(Interval::closed(lo, hi))
    }

    pub fn interval(lo: NsBound, hi: NsBound, lo_open: bool, hi_open: bool) -> Self {
        Piece::Interval(Interval {
            lo,
            hi,
            lo_open,
            hi_open,
        })
    }
}

/// A canonical union of intervals and points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NsSet {
    intervals: Vec<Interval>,
    points: Vec<NsBound>,
}

/// Closed-or-open span used internally by the piecewise operations. Points
/// are degenerate spans with `lo == hi`, both closed.
#[derive(Debug, Clone, Copy)]
struct Span {
    lo: NsBound,
    hi: NsBound,
    lo_open: bool,
    hi_open: bool,
    degenerate: bool,
}

impl Span {
    fn point(p: NsBound) -> Self {
        Span {
            lo: p,
            hi: p,
            lo_open: false,
            hi_open: false,
            degenerate: true,
        }
    }

    fn into_piece(self) -> Piece {
        if self.degenerate {
            Piece::Point(self.lo)
        } else {
            // A binad has no side; widen to its outer monad.
            Piece::Interval(Interval {
                lo: self.lo.lower_part(),
                hi: self.hi.upper_part(),
                lo_open: self.lo_open,
                hi_open: self.hi_open,
            })
        }
    }
}

fn is_exact_zero(x: NsBound) -> bool {
    x.is_exact() && x.standard_part() == 0.0
}

impl NsSet {
    pub fn empty() -> Self {
        NsSet::default()
    }

    pub fn point(x: NsBound) -> Self {
        NsSet {
            intervals: Vec::new(),
            points: alloc::vec![x],
        }
    }

    /// Closed interval `[lo, hi]`.
    pub fn closed(lo: NsBound, hi: NsBound) -> Result<Self, Error> {
        NsSet::normalize([Piece::closed(lo, hi)])
    }

    /// Builds the canonical set for a list of literals.
    pub fn normalize<I: IntoIterator<Item = Piece>>(raw: I) -> Result<Self, Error> {
        let mut intervals = Vec::new();
        let mut points = Vec::new();
        for piece in raw {
            match piece {
                Piece::Point(p) => push_point(&mut points, p),
                Piece::Interval(iv) => {
                    if iv.lo.monad() == Monad::Binad || iv.hi.monad() == Monad::Binad {
                        return Err(Error::MalformedInterval);
                    }
                    match iv.lo.ns_cmp(iv.hi) {
                        NsOrdering::Less => intervals.push(iv),
                        NsOrdering::Equal if !iv.lo_open && !iv.hi_open => points.push(iv.lo),
                        NsOrdering::Equal => {}
                        _ => return Err(Error::MalformedInterval),
                    }
                }
            }
        }
        Ok(canonicalize(intervals, points))
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn points(&self) -> &[NsBound] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty() && self.points.is_empty()
    }

    /// The single element of a one-point set.
    pub fn as_point(&self) -> Option<NsBound> {
        match (self.intervals.as_slice(), self.points.as_slice()) {
            ([], [p]) => Some(*p),
            _ => None,
        }
    }

    /// True when no bound carries a monad tag.
    pub fn is_exact(&self) -> bool {
        self.points.iter().all(|p| p.is_exact())
            && self
                .intervals
                .iter()
                .all(|iv| iv.lo.is_exact() && iv.hi.is_exact())
    }

    /// Pieces in canonical print order.
    pub fn pieces(&self) -> Vec<Piece> {
        let mut out: Vec<Piece> = self
            .intervals
            .iter()
            .map(|iv| Piece::Interval(*iv))
            .chain(self.points.iter().map(|p| Piece::Point(*p)))
            .collect();
        out.sort_by(|a, b| piece_start(a).canonical_cmp(&piece_start(b)));
        out
    }

    pub fn contains(&self, x: NsBound) -> bool {
        if x.monad() == Monad::Binad {
            return self.contains(x.lower_part()) && self.contains(x.upper_part());
        }
        self.points.iter().any(|p| {
            *p == x || (p.monad() == Monad::Binad && (p.lower_part() == x || p.upper_part() == x))
        }) || self.intervals.iter().any(|iv| iv.contains(x))
    }

    /// Greatest lower bound; open ends and binad halves count as candidates.
    pub fn inf(&self) -> Result<NsBound, Error> {
        self.candidates(NsBound::lower_part)
            .min_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
            .ok_or(Error::EmptySet)
    }

    /// Least upper bound; see [`NsSet::inf`].
    pub fn sup(&self) -> Result<NsBound, Error> {
        self.candidates(NsBound::upper_part)
            .max_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
            .ok_or(Error::EmptySet)
    }

    fn candidates(&self, part: fn(NsBound) -> NsBound) -> impl Iterator<Item = NsBound> + '_ {
        self.intervals
            .iter()
            .flat_map(|iv| [iv.lo, iv.hi])
            .chain(self.points.iter().map(move |p| part(*p)))
    }

    fn spans(&self) -> Vec<Span> {
        let mut out: Vec<Span> = self
            .intervals
            .iter()
            .map(|iv| Span {
                lo: iv.lo,
                hi: iv.hi,
                lo_open: iv.lo_open,
                hi_open: iv.hi_open,
                degenerate: false,
            })
            .collect();
        for p in &self.points {
            if p.monad() == Monad::Binad {
                out.push(Span::point(p.lower_part()));
                out.push(Span::point(p.upper_part()));
            } else {
                out.push(Span::point(*p));
            }
        }
        out
    }

    fn pairwise<F>(&self, other: &NsSet, mut op: F) -> Result<NsSet, Error>
    where
        F: FnMut(&Span, &Span) -> Result<Span, Error>,
    {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyOperand);
        }
        let rhs = other.spans();
        let mut out = Vec::new();
        for a in self.spans() {
            for b in &rhs {
                out.push(op(&a, b)?.into_piece());
            }
        }
        NsSet::normalize(out)
    }

    /// Minkowski sum `{a + b}`.
    pub fn add(&self, other: &NsSet) -> Result<NsSet, Error> {
        self.pairwise(other, |a, b| {
            Ok(Span {
                lo: a.lo.add(b.lo),
                hi: a.hi.add(b.hi),
                lo_open: a.lo_open || b.lo_open,
                hi_open: a.hi_open || b.hi_open,
                degenerate: a.degenerate && b.degenerate,
            })
        })
    }

    /// Minkowski difference `{a − b}`; ends cross: `(lo₁ − hi₂, hi₁ − lo₂)`.
    ///
    /// With `S1 = {1⁺}` this also covers the complement rule whose printed
    /// upper end reads "100 − inf S2"; the only consistent reading is
    /// `1⁺ − inf S2`, which is what falls out here.
    pub fn sub(&self, other: &NsSet) -> Result<NsSet, Error> {
        self.pairwise(other, |a, b| {
            Ok(Span {
                lo: a.lo.sub(b.hi),
                hi: a.hi.sub(b.lo),
                lo_open: a.lo_open || b.hi_open,
                hi_open: a.hi_open || b.lo_open,
                degenerate: a.degenerate && b.degenerate,
            })
        })
    }

    /// Minkowski product `{a · b}` of sets with non-negative standard parts.
    ///
    /// For exact bounds the ends are `(lo₁·lo₂, hi₁·hi₂)`. Monads at zero can
    /// reorder corners (`⁻0 · 0.5 = ⁻0` sits below `0 · 0 = 0`), so all four
    /// corners are compared. Multiplying by `{1⁺}` is a genuine product and
    /// tags propagate.
    pub fn mul(&self, other: &NsSet) -> Result<NsSet, Error> {
        self.pairwise(other, |a, b| {
            let corners = [
                (a.lo, a.lo_open, b.lo, b.lo_open),
                (a.lo, a.lo_open, b.hi, b.hi_open),
                (a.hi, a.hi_open, b.lo, b.lo_open),
                (a.hi, a.hi_open, b.hi, b.hi_open),
            ];
            let mut lo: Option<(NsBound, bool)> = None;
            let mut hi: Option<(NsBound, bool)> = None;
            for (x, x_open, y, y_open) in corners {
                let v = x.mul(y)?;
                let attained = (!x_open && !y_open)
                    || (!x_open && is_exact_zero(x))
                    || (!y_open && is_exact_zero(y));
                lo = Some(extreme(lo, v.lower_part(), attained, NsOrdering::Less));
                hi = Some(extreme(hi, v.upper_part(), attained, NsOrdering::Greater));
            }
            let (lo, lo_attained) = lo.expect("four corners");
            let (hi, hi_attained) = hi.expect("four corners");
            if a.degenerate && b.degenerate {
                return Ok(Span::point(a.lo.mul(b.lo)?));
            }
            Ok(Span {
                lo,
                hi,
                lo_open: !lo_attained,
                hi_open: !hi_attained,
                degenerate: false,
            })
        })
    }

    /// `{x / k}` for a nonzero real `k`.
    pub fn div_scalar(&self, k: f64) -> Result<NsSet, Error> {
        if k == 0.0 {
            return Err(Error::DivisionByZero);
        }
        if self.is_empty() {
            return Err(Error::EmptyOperand);
        }
        let mut out = Vec::new();
        for p in &self.points {
            out.push(Piece::Point(p.div_scalar(k)?));
        }
        for iv in &self.intervals {
            let (lo, hi) = (iv.lo.div_scalar(k)?, iv.hi.div_scalar(k)?);
            out.push(if k > 0.0 {
                Piece::interval(lo, hi, iv.lo_open, iv.hi_open)
            } else {
                Piece::interval(hi, lo, iv.hi_open, iv.lo_open)
            });
        }
        NsSet::normalize(out)
    }

    /// Maps everything with standard part below 0 to `⁻0` and above 1 to
    /// `1⁺`; the rest is kept with its tags.
    pub fn clamp(&self) -> NsSet {
        let mut intervals = Vec::new();
        let mut points = Vec::new();
        for p in &self.points {
            let sp = p.standard_part();
            if sp < 0.0 {
                points.push(NsBound::LEFT_ZERO);
            } else if sp > 1.0 {
                points.push(NsBound::ONE_PLUS);
            } else {
                push_point(&mut points, *p);
            }
        }
        for iv in &self.intervals {
            let (lo_sp, hi_sp) = (iv.lo.standard_part(), iv.hi.standard_part());
            if hi_sp < 0.0 {
                points.push(NsBound::LEFT_ZERO);
                continue;
            }
            if lo_sp > 1.0 {
                points.push(NsBound::ONE_PLUS);
                continue;
            }
            let (lo, lo_open) = if lo_sp < 0.0 {
                points.push(NsBound::LEFT_ZERO);
                (NsBound::LEFT_ZERO, false)
            } else {
                (iv.lo, iv.lo_open)
            };
            let (hi, hi_open) = if hi_sp > 1.0 {
                points.push(NsBound::ONE_PLUS);
                (NsBound::ONE_PLUS, false)
            } else {
                (iv.hi, iv.hi_open)
            };
            match lo.ns_cmp(hi) {
                NsOrdering::Less => intervals.push(Interval {
                    lo,
                    hi,
                    lo_open,
                    hi_open,
                }),
                NsOrdering::Equal if !lo_open && !hi_open => points.push(lo),
                _ => {}
            }
        }
        canonicalize(intervals, points)
    }

    /// Every bound lies within `]⁻0, 1⁺[`.
    pub fn within_unit(&self) -> bool {
        match (self.inf(), self.sup()) {
            (Ok(lo), Ok(hi)) => {
                lo.ns_cmp(NsBound::LEFT_ZERO).is_ge() && hi.ns_cmp(NsBound::ONE_PLUS).is_le()
            }
            _ => false,
        }
    }
}

fn extreme(
    cur: Option<(NsBound, bool)>,
    v: NsBound,
    attained: bool,
    better: NsOrdering,
) -> (NsBound, bool) {
    match cur {
        None => (v, attained),
        Some((c, c_att)) => match v.ns_cmp(c) {
            o if o == better => (v, attained),
            NsOrdering::Equal => (c, c_att || attained),
            _ => (c, c_att),
        },
    }
}

fn piece_start(p: &Piece) -> NsBound {
    match p {
        Piece::Point(x) => *x,
        Piece::Interval(iv) => iv.lo,
    }
}

fn push_point(points: &mut Vec<NsBound>, p: NsBound) {
    if p.monad() == Monad::Binad {
        points.push(p.lower_part());
        points.push(p.upper_part());
    } else {
        points.push(p);
    }
}

fn merge_intervals(mut intervals: Vec<Interval>) -> Vec<Interval> {
    intervals.sort_by(|a, b| a.lo.canonical_cmp(&b.lo).then(a.lo_open.cmp(&b.lo_open)));
    let mut out: Vec<Interval> = Vec::with_capacity(intervals.len());
    for next in intervals {
        if let Some(cur) = out.last_mut() {
            let joins = match next.lo.ns_cmp(cur.hi) {
                NsOrdering::Less => true,
                NsOrdering::Equal => !(cur.hi_open && next.lo_open),
                _ => !cur.hi_open && !next.lo_open && cur.hi.is_followed_by(next.lo),
            };
            if joins {
                match next.hi.ns_cmp(cur.hi) {
                    NsOrdering::Greater => {
                        cur.hi = next.hi;
                        cur.hi_open = next.hi_open;
                    }
                    NsOrdering::Equal => cur.hi_open = cur.hi_open && next.hi_open,
                    _ => {}
                }
                continue;
            }
        }
        out.push(next);
    }
    out
}

/// Tries to fold a (non-binad) point into an interval: drops it if already
/// contained, closes a matching open end, or extends a closed end to an
/// adjacent monad position.
fn absorb(intervals: &mut [Interval], p: NsBound) -> bool {
    for iv in intervals.iter_mut() {
        if iv.contains(p) {
            return true;
        }
        if iv.lo == p {
            iv.lo_open = false;
            return true;
        }
        if iv.hi == p {
            iv.hi_open = false;
            return true;
        }
        if !iv.hi_open && iv.hi.is_followed_by(p) {
            iv.hi = p;
            return true;
        }
        if !iv.lo_open && p.is_followed_by(iv.lo) {
            iv.lo = p;
            return true;
        }
    }
    false
}

/// `points` may contain anything but binads.
fn canonicalize(intervals: Vec<Interval>, mut points: Vec<NsBound>) -> NsSet {
    let mut intervals = merge_intervals(intervals);
    points.sort_by(NsBound::canonical_cmp);
    points.dedup();
    loop {
        let before = points.len();
        points.retain(|p| !absorb(&mut intervals, *p));
        if points.len() == before {
            break;
        }
        // An extended end may now reach the next interval.
        intervals = merge_intervals(intervals);
    }
    // Re-pair ⁻c and c⁺ into the binad ⁻c⁺.
    let mut merged: Vec<NsBound> = Vec::with_capacity(points.len());
    for p in points {
        if p.monad() == Monad::Right {
            if let Some(pos) = merged
                .iter()
                .position(|q| q.monad() == Monad::Left && q.standard_part() == p.standard_part())
            {
                merged[pos] = p.with_monad(Monad::Binad);
                continue;
            }
        }
        merged.push(p);
    }
    merged.sort_by(NsBound::canonical_cmp);
    NsSet {
        intervals,
        points: merged,
    }
}

/// Free-function spellings of the set operations.
pub fn set_add(s1: &NsSet, s2: &NsSet) -> Result<NsSet, Error> {
    s1.add(s2)
}

pub fn set_sub(s1: &NsSet, s2: &NsSet) -> Result<NsSet, Error> {
    s1.sub(s2)
}

pub fn set_mul(s1: &NsSet, s2: &NsSet) -> Result<NsSet, Error> {
    s1.mul(s2)
}

pub fn set_div_scalar(s: &NsSet, k: f64) -> Result<NsSet, Error> {
    s.div_scalar(k)
}

pub fn set_inf(s: &NsSet) -> Result<NsBound, Error> {
    s.inf()
}

pub fn set_sup(s: &NsSet) -> Result<NsBound, Error> {
    s.sup()
}

pub fn clamp(s: &NsSet) -> NsSet {
    s.clamp()
}

pub fn contains(s: &NsSet, x: NsBound) -> bool {
    s.contains(x)
}

impl fmt::Display for NsSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let pieces = self.pieces();
        let mut i = 0;
        while i < pieces.len() {
            if i > 0 {
                f.write_str(" U ")?;
            }
            match pieces[i] {
                Piece::Interval(iv) => {
                    write!(
                        f,
                        "{}{},{}{}",
                        if iv.lo_open { ']' } else { '[' },
                        iv.lo,
                        iv.hi,
                        if iv.hi_open { '[' } else { ']' }
                    )?;
                    i += 1;
                }
                Piece::Point(_) => {
                    f.write_str("{")?;
                    let mut first = true;
                    while let Some(Piece::Point(p)) = pieces.get(i) {
                        if !first {
                            f.write_str(",")?;
                        }
                        write!(f, "{p}")?;
                        first = false;
                        i += 1;
                    }
                    f.write_str("}")?;
                }
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: &'static str) -> Error {
        Error::Parse {
            offset: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, message: &'static str) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(message))
        }
    }

    fn bound(&mut self) -> Result<NsBound, Error> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let num_len = scan_number(rest).ok_or_else(|| self.err("expected a number"))?;
        let value: f64 = rest[..num_len]
            .parse()
            .map_err(|_| self.err("invalid number"))?;
        let (monad, suffix_len) = scan_suffix(&rest[num_len..]);
        let end = num_len + suffix_len;
        if matches!(rest[end..].chars().next(), Some('+' | '-')) {
            self.pos += end;
            return Err(self.err("malformed monad suffix"));
        }
        let b = NsBound::new(value, monad).map_err(|_| self.err("number out of range"))?;
        self.pos += end;
        Ok(b)
    }

    fn term(&mut self, out: &mut Vec<Piece>) -> Result<(), Error> {
        self.skip_ws();
        match self.peek() {
            Some('{') => {
                self.pos += 1;
                loop {
                    out.push(Piece::Point(self.bound()?));
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect('}', "expected ',' or '}'")
            }
            Some(c @ ('[' | ']')) => {
                let start = self.pos;
                self.pos += 1;
                let lo = self.bound()?;
                self.expect(',', "expected ','")?;
                let hi = self.bound()?;
                self.skip_ws();
                let hi_open = match self.peek() {
                    Some(']') => false,
                    Some('[') => true,
                    _ => return Err(self.err("expected ']' or '['")),
                };
                self.pos += 1;
                if lo.monad() == Monad::Binad
                    || hi.monad() == Monad::Binad
                    || lo.ns_cmp(hi) == NsOrdering::Greater
                {
                    return Err(Error::Parse {
                        offset: start,
                        message: "malformed interval",
                    });
                }
                out.push(Piece::interval(lo, hi, c == ']', hi_open));
                Ok(())
            }
            _ => Err(self.err("expected '{', '[' or ']'")),
        }
    }
}

/// Parses a set literal at the start of `src` and returns it with the number
/// of bytes consumed. Grammar: `term ('U' term)*`, where a term is `{b, ...}`
/// or an interval whose outward-facing brackets (`]a,b[`) mark open ends.
pub fn parse_set_prefix(src: &str) -> Result<(NsSet, usize), Error> {
    let mut cur = Cursor { src, pos: 0 };
    let mut pieces = Vec::new();
    cur.term(&mut pieces)?;
    loop {
        let save = cur.pos;
        cur.skip_ws();
        let rest = &src[cur.pos..];
        let is_union = rest.starts_with('U')
            && !rest[1..].starts_with(|c: char| c.is_alphanumeric() || c == '_');
        if !is_union {
            cur.pos = save;
            break;
        }
        cur.pos += 1;
        cur.term(&mut pieces)?;
    }
    let set = NsSet::normalize(pieces).map_err(|e| match e {
        Error::MalformedInterval => Error::Parse {
            offset: 0,
            message: "malformed interval",
        },
        other => other,
    })?;
    Ok((set, cur.pos))
}

impl FromStr for NsSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (set, used) = parse_set_prefix(s)?;
        if !s[used..].trim().is_empty() {
            return Err(Error::Parse {
                offset: used,
                message: "trailing input after set",
            });
        }
        Ok(set)
    }
}
