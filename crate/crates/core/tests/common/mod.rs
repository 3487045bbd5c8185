//! Reference computations that do not go through the crate's arithmetic.
//!
//! * [`eps`]: first-order hyperreals `a + c₁ε₁ + c₂ε₂` with one independent
//!   positive infinitesimal per operand, multiplied out as polynomials.
//! * [`grid`]: brute-force images of set operations over a 10⁻³ grid.

#![allow(dead_code)]

pub mod eps {
    use neutrosophic_core::Monad;

    /// `re + c[0]·ε₁ + c[1]·ε₂`, with `ε₁ε₂`, `ε₁²`, `ε₂²` dropped.
    #[derive(Debug, Clone, Copy)]
    pub struct Lin {
        pub re: f64,
        pub c: [f64; 2],
    }

    impl Lin {
        pub fn add(self, o: Lin) -> Lin {
            Lin {
                re: self.re + o.re,
                c: [self.c[0] + o.c[0], self.c[1] + o.c[1]],
            }
        }
        pub fn sub(self, o: Lin) -> Lin {
            Lin {
                re: self.re - o.re,
                c: [self.c[0] - o.c[0], self.c[1] - o.c[1]],
            }
        }
        pub fn mul(self, o: Lin) -> Lin {
            Lin {
                re: self.re * o.re,
                c: [
                    self.c[0] * o.re + self.re * o.c[0],
                    self.c[1] * o.re + self.re * o.c[1],
                ],
            }
        }
    }

    /// Elements of the monad as infinitesimal coefficients on the operand's
    /// own variable: a binad holds both a below and an above element.
    pub fn choices(m: Monad) -> &'static [f64] {
        match m {
            Monad::Exact => &[0.0],
            Monad::Left => &[-1.0],
            Monad::Right => &[1.0],
            Monad::Binad => &[-1.0, 1.0],
        }
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum Op {
        Add,
        Sub,
        Mul,
    }

    /// Standard part and tag of `a op b` read off the sign pattern of the
    /// first-order coefficients over every element combination.
    pub fn apply(op: Op, a: (f64, Monad), b: (f64, Monad)) -> (f64, Monad) {
        let mut below = false;
        let mut above = false;
        let mut re = None;
        for &ca in choices(a.1) {
            for &cb in choices(b.1) {
                let x = Lin {
                    re: a.0,
                    c: [ca, 0.0],
                };
                let y = Lin {
                    re: b.0,
                    c: [0.0, cb],
                };
                let r = match op {
                    Op::Add => x.add(y),
                    Op::Sub => x.sub(y),
                    Op::Mul => x.mul(y),
                };
                re = Some(r.re);
                below |= r.c.iter().any(|c| *c < 0.0);
                above |= r.c.iter().any(|c| *c > 0.0);
            }
        }
        let tag = match (below, above) {
            (false, false) => Monad::Exact,
            (true, false) => Monad::Left,
            (false, true) => Monad::Right,
            (true, true) => Monad::Binad,
        };
        (re.expect("at least one element"), tag)
    }
}

pub mod grid {
    use neutrosophic_core::{NsSet, Piece};

    pub const STEP: f64 = 1e-3;

    /// Multiples of 10⁻³ inside an exact set, honoring open ends.
    pub fn points(s: &NsSet) -> Vec<f64> {
        let mut out = Vec::new();
        for piece in s.pieces() {
            match piece {
                Piece::Point(p) => out.push(p.standard_part()),
                Piece::Interval(iv) => {
                    let lo = iv.lo.standard_part();
                    let hi = iv.hi.standard_part();
                    let first = (lo / STEP).round() as i64;
                    let last = (hi / STEP).round() as i64;
                    for k in first..=last {
                        let x = k as f64 * STEP;
                        let at_lo = (x - lo).abs() < 1e-12;
                        let at_hi = (x - hi).abs() < 1e-12;
                        if (at_lo && iv.lo_open) || (at_hi && iv.hi_open) {
                            continue;
                        }
                        if (x >= lo || at_lo) && (x <= hi || at_hi) {
                            out.push(if at_lo {
                                lo
                            } else if at_hi {
                                hi
                            } else {
                                x
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// All values `f(a, b)` over grid points of both sets.
    pub fn image(s1: &NsSet, s2: &NsSet, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        let ys = points(s2);
        let mut out = Vec::new();
        for x in points(s1) {
            out.extend(ys.iter().map(|&y| f(x, y)));
        }
        out
    }

    pub fn min_max(values: &[f64]) -> (f64, f64) {
        values
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }

    /// Membership of a real in a set, widened by `slack` on every piece.
    pub fn near_contains(s: &NsSet, x: f64, slack: f64) -> bool {
        s.pieces().iter().any(|p| match p {
            Piece::Point(q) => (q.standard_part() - x).abs() <= slack,
            Piece::Interval(iv) => {
                iv.lo.standard_part() - slack <= x && x <= iv.hi.standard_part() + slack
            }
        })
    }
}

pub mod gen {
    use neutrosophic_core::{Connective, Expr, NLValue, NsBound, NsSet, Piece};
    use rand::Rng;

    /// A multiple of 10⁻³ in `[lo, hi]`.
    pub fn grid_real<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
        let k = rng.gen_range((lo * 1000.0).round() as i64..=(hi * 1000.0).round() as i64);
        k as f64 / 1000.0
    }

    /// Closed exact interval inside `[0, 1]` with grid endpoints and width at
    /// most `max_width`.
    pub fn grid_interval<R: Rng>(rng: &mut R, max_width: f64) -> NsSet {
        let lo = grid_real(rng, 0.0, 1.0 - max_width);
        let hi = grid_real(rng, lo, lo + max_width);
        NsSet::closed(NsBound::exact(lo).unwrap(), NsBound::exact(hi).unwrap()).unwrap()
    }

    /// A dyadic rational `k / 1024` in `[0, 1]`; sums and products of a few
    /// of these are exact in binary floating point.
    pub fn dyadic<R: Rng>(rng: &mut R) -> f64 {
        rng.gen_range(0..=1024) as f64 / 1024.0
    }

    fn random_bound<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> NsBound {
        let x = grid_real(rng, lo, hi);
        let monad = match rng.gen_range(0..6) {
            0 => neutrosophic_core::Monad::Left,
            1 => neutrosophic_core::Monad::Right,
            _ => neutrosophic_core::Monad::Exact,
        };
        NsBound::new(x, monad).unwrap()
    }

    /// Arbitrary component inside `]⁻0, 1⁺[`: a few intervals and points,
    /// possibly with monad tags (`⁻0` and `1⁺` included).
    pub fn component<R: Rng>(rng: &mut R, tagged: bool) -> NsSet {
        component_with(rng, tagged, 3)
    }

    /// Like [`component`], with at most `max_points` isolated points. Point
    /// counts multiply under every set operation, so nested expressions need
    /// a small value here.
    pub fn component_with<R: Rng>(rng: &mut R, tagged: bool, max_points: usize) -> NsSet {
        let n = rng.gen_range(1..=3);
        let mut pieces = Vec::new();
        let mut points = 0;
        for _ in 0..n {
            let b = |rng: &mut R, lo: f64, hi: f64| {
                if tagged {
                    random_bound(rng, lo, hi)
                } else {
                    NsBound::exact(grid_real(rng, lo, hi)).unwrap()
                }
            };
            if points < max_points && rng.gen_bool(0.4) {
                points += 1;
                let p = b(rng, 0.0, 1.0);
                pieces.push(Piece::Point(p));
            } else {
                let lo = b(rng, 0.0, 0.9);
                let hi = b(rng, lo.standard_part() + 0.01, 1.0);
                pieces.push(Piece::interval(
                    lo,
                    hi,
                    rng.gen_bool(0.2),
                    rng.gen_bool(0.2),
                ));
            }
        }
        NsSet::normalize(pieces).unwrap()
    }

    pub fn value<R: Rng>(rng: &mut R, tagged: bool) -> NLValue {
        value_with(rng, tagged, 3)
    }

    pub fn value_with<R: Rng>(rng: &mut R, tagged: bool, max_points: usize) -> NLValue {
        let mut c = || component_with(rng, tagged, max_points);
        NLValue::new(c(), c(), c()).unwrap()
    }

    pub fn connective<R: Rng>(rng: &mut R) -> Connective {
        Connective::ALL[rng.gen_range(0..Connective::ALL.len())]
    }

    /// Random expression over atoms `A0..A{atoms-1}`.
    pub fn expr<R: Rng>(rng: &mut R, depth: u32, atoms: usize) -> Expr {
        if depth == 0 || rng.gen_bool(0.25) {
            return Expr::atom(format!("A{}", rng.gen_range(0..atoms)));
        }
        if rng.gen_bool(0.2) {
            Expr::not(expr(rng, depth - 1, atoms))
        } else {
            let op = connective(rng);
            Expr::bin(op, expr(rng, depth - 1, atoms), expr(rng, depth - 1, atoms))
        }
    }
}
