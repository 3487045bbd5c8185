//! Acceptance gate: one line per criterion, nonzero exit when any fails.
//!
//! Run with `cargo test -p neutrosophic-cli --test acceptance`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{eps, gen, grid};
use neutrosophic_cli::{
    format_value, parse_program, run_program, value_from_json, Outcome, OutputFormat, Program,
    Statement,
};
use neutrosophic_core::logic::{
    nl_and, nl_binary, nl_binary_correlated, nl_nand, nl_nor, nl_not, nl_or,
};
use neutrosophic_core::nonstd::{ns_add, ns_mul, ns_sub};
use neutrosophic_core::nsset::{clamp, set_add, set_inf, set_mul, set_sub, set_sup};
use neutrosophic_core::taxonomy::ifs_check;
use neutrosophic_core::{
    classify, evaluate, Connective, EvalConfig, LogicFlag, Monad, NLValue, NsBound, NsSet, Piece,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORKED: &str = "(T=[0.3,0.4] U [0.45,0.5], I={0.1}, F={0.6} U [0.66,0.7])";

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);
type TruthTable = (Connective, fn(bool, bool) -> bool);
type EndpointCase = (&'static str, NsSet, f64, f64, fn(f64, f64) -> f64);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bit(x: &NsSet) -> Option<bool> {
    match x.as_point()? {
        p if p == NsBound::ONE => Some(true),
        p if p == NsBound::ZERO => Some(false),
        _ => None,
    }
}

fn boolean_reduction() -> Verdict {
    let cfg = EvalConfig::classical();
    let corners: Vec<(bool, bool)> =
        [(false, false), (false, true), (true, false), (true, true)].into();
    let value =
        |(t, f): (bool, bool)| NLValue::from_reals(t as u8 as f64, 0.0, f as u8 as f64).unwrap();
    let tables: [TruthTable; 7] = [
        (Connective::And, |a, b| a && b),
        (Connective::Or, |a, b| a || b),
        (Connective::Xor, |a, b| a ^ b),
        (Connective::Imp, |a, b| !a || b),
        (Connective::Iff, |a, b| a == b),
        (Connective::Nand, |a, b| !(a && b)),
        (Connective::Nor, |a, b| !(a || b)),
    ];
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for (op, table) in tables {
        for &a in &corners {
            for &b in &corners {
                cases += 1;
                let got = nl_binary(op, &value(a), &value(b), cfg).map_err(|e| e.to_string())?;
                let want = [table(a.0, b.0), table(false, false), table(a.1, b.1)];
                let bits = got.components().map(bit);
                if bits != want.map(Some) {
                    mismatches.push(format!("{op:?} {a:?} {b:?} -> {got}"));
                }
            }
        }
    }
    for a in [(true, false), (false, true)] {
        cases += 1;
        let got = nl_not(&value(a), cfg);
        if got.components().map(bit) != [Some(!a.0), Some(true), Some(!a.1)] {
            mismatches.push(format!("Not {a:?} -> {got}"));
        }
    }
    ensure(mismatches.is_empty(), || {
        format!("{} mismatches: {:?}", mismatches.len(), mismatches)
    })?;
    Ok(format!("0 mismatches over {cases} cases"))
}

fn fuzzy_reduction() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let cfg = EvalConfig::classical();
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let (t1, t2): (f64, f64) = (rng.gen(), rng.gen());
        let a = NLValue::from_reals(t1, 0.0, 1.0 - t1).unwrap();
        let b = NLValue::from_reals(t2, 0.0, 1.0 - t2).unwrap();
        let t = |v: NLValue| {
            v.truth()
                .as_point()
                .map(NsBound::standard_part)
                .ok_or_else(|| format!("non-singleton {v}"))
        };
        worst = worst.max((t(nl_and(&a, &b, cfg).unwrap())? - t1 * t2).abs());
        worst = worst.max((t(nl_or(&a, &b, cfg).unwrap())? - (t1 + t2 - t1 * t2)).abs());
    }
    ensure(worst <= 1e-12, || format!("max error {worst:e}"))?;
    Ok(format!("1000 pairs, max error {worst:e}"))
}

fn monad_laws() -> Verdict {
    let tags = [Monad::Exact, Monad::Left, Monad::Right, Monad::Binad];
    let mut checked = 0;
    for k in 0..=10 {
        for j in 0..=10 {
            let (a, b) = (k as f64 / 10.0, j as f64 / 10.0);
            for ta in tags {
                for tb in tags {
                    let (x, y) = (NsBound::new(a, ta).unwrap(), NsBound::new(b, tb).unwrap());
                    let ops: [(eps::Op, NsBound); 3] = [
                        (eps::Op::Add, ns_add(x, y)),
                        (eps::Op::Sub, ns_sub(x, y)),
                        (eps::Op::Mul, ns_mul(x, y).map_err(|e| e.to_string())?),
                    ];
                    for (op, got) in ops {
                        checked += 1;
                        let (re, tag) = eps::apply(op, (a, ta), (b, tb));
                        ensure(
                            got.standard_part() == re + 0.0 && got.monad() == tag,
                            || format!("{op:?}({x}, {y}) = {got}, oracle {re} {tag:?}"),
                        )?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{checked} combinations agree with the first-order oracle"
    ))
}

fn positive_interval(rng: &mut ChaCha8Rng) -> (f64, f64, NsSet) {
    let lo = gen::grid_real(rng, 0.001, 0.9);
    let hi = gen::grid_real(rng, lo, lo + 0.1);
    (
        lo,
        hi,
        NsSet::closed(NsBound::exact(lo).unwrap(), NsBound::exact(hi).unwrap()).unwrap(),
    )
}

fn endpoint_formulas() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let (a1, b1, s1) = positive_interval(&mut rng);
        let (a2, b2, s2) = positive_interval(&mut rng);
        let cases: [EndpointCase; 3] = [
            (
                "add",
                set_add(&s1, &s2).unwrap(),
                a1 + a2,
                b1 + b2,
                |x, y| x + y,
            ),
            (
                "sub",
                set_sub(&s1, &s2).unwrap(),
                a1 - b2,
                b1 - a2,
                |x, y| x - y,
            ),
            (
                "mul",
                set_mul(&s1, &s2).unwrap(),
                a1 * a2,
                b1 * b2,
                |x, y| x * y,
            ),
        ];
        for (name, got, inf, sup, f) in cases {
            let (gi, gs) = (set_inf(&got).unwrap(), set_sup(&got).unwrap());
            ensure(
                gi == NsBound::exact(inf).unwrap() && gs == NsBound::exact(sup).unwrap(),
                || format!("{name} {s1} {s2}: got [{gi}, {gs}], formula [{inf}, {sup}]"),
            )?;
            let image = grid::image(&s1, &s2, f);
            let (lo, hi) = grid::min_max(&image);
            ensure((lo - inf).abs() <= 1e-9 && (hi - sup).abs() <= 1e-9, || {
                format!("{name} {s1} {s2}: grid hull [{lo}, {hi}] vs [{inf}, {sup}]")
            })?;
            if let Some(x) = image.iter().find(|x| !grid::near_contains(&got, **x, 1e-9)) {
                return Err(format!("{name} {s1} {s2}: grid element {x} outside {got}"));
            }
        }
    }
    Ok("500 interval pairs, exact endpoints, grid hull within 1e-9".into())
}

fn clamp_safety() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let configs = [
        EvalConfig::classical(),
        EvalConfig::literal(),
        EvalConfig::classical().with_correlated(true),
        EvalConfig::literal().with_correlated(true),
    ];
    for n in 0..1000 {
        let env: BTreeMap<String, NLValue> = (0..4)
            .map(|k| (format!("A{k}"), gen::value_with(&mut rng, true, 1)))
            .collect();
        let e = gen::expr(&mut rng, 3, 4);
        let v = evaluate(&e, &env, configs[n % configs.len()]).map_err(|err| err.to_string())?;
        for c in v.components() {
            let (lo, hi) = (set_inf(c).unwrap(), set_sup(c).unwrap());
            ensure(
                lo.ns_cmp(NsBound::LEFT_ZERO).is_ge() && hi.ns_cmp(NsBound::ONE_PLUS).is_le(),
                || format!("component {c} out of range"),
            )?;
            ensure(&clamp(c) == c, || format!("clamp not idempotent on {c}"))?;
        }
        ensure(v.n_sup().ns_cmp(NsBound::THREE_PLUS).is_le(), || {
            format!("n_sup of {v} exceeds 3+")
        })?;
    }
    Ok("1000 evaluations inside ]-0, 1+[, n_sup <= 3+, clamp idempotent".into())
}

fn de_morgan() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cfg = EvalConfig::classical();
    for _ in 0..1000 {
        let mut single = || {
            NLValue::from_reals(
                gen::dyadic(&mut rng),
                gen::dyadic(&mut rng),
                gen::dyadic(&mut rng),
            )
            .unwrap()
        };
        let (a, b) = (single(), single());
        let nand = nl_nand(&a, &b, cfg).unwrap();
        let nor = nl_nor(&a, &b, cfg).unwrap();
        ensure(nand == nl_not(&nl_and(&a, &b, cfg).unwrap(), cfg), || {
            format!("nand {a} {b}")
        })?;
        ensure(nor == nl_not(&nl_or(&a, &b, cfg).unwrap(), cfg), || {
            format!("nor {a} {b}")
        })?;
    }
    Ok("1000 singleton pairs, exact".into())
}

fn paradox() -> Verdict {
    let v = NLValue::from_reals(1.0, 0.0, 1.0).map_err(|e| e.to_string())?;
    let c = classify(&v);
    ensure(
        c.flags.contains(LogicFlag::Dialetheist) && c.flags.contains(LogicFlag::ParadoxForm),
        || format!("flags {:?}", c.flags.iter().collect::<Vec<_>>()),
    )?;
    let ifs = ifs_check(1.0, 1.0).map_err(|e| e.to_string())?;
    ensure(!ifs.accepted, || "ifs_check(1, 1) accepted".into())?;
    Ok("(1,0,1) is Dialetheist and ParadoxForm; ifs_check(1,1) rejects".into())
}

fn sampled(s: &NsSet) -> Vec<f64> {
    let mut out = Vec::new();
    for p in s.pieces() {
        match p {
            Piece::Point(x) => out.push(x.standard_part()),
            Piece::Interval(iv) => {
                let (lo, hi) = (iv.lo.standard_part(), iv.hi.standard_part());
                out.extend((0..=100).map(|k| lo + (hi - lo) * k as f64 / 100.0));
            }
        }
    }
    out
}

fn correlated_containment() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for cfg in [EvalConfig::classical(), EvalConfig::literal()] {
        correlated_containment_in(&mut rng, cfg)?;
    }
    Ok(
        "200 interval pairs contained, 200 singleton pairs coincide, 7 connectives, both constants"
            .into(),
    )
}

fn correlated_containment_in(rng: &mut ChaCha8Rng, cfg: EvalConfig) -> Result<(), String> {
    for _ in 0..200 {
        let (a, b) = (gen::value(rng, false), gen::value(rng, false));
        for op in Connective::ALL {
            let wide = nl_binary(op, &a, &b, cfg).unwrap();
            let tight = nl_binary_correlated(op, &a, &b, cfg).unwrap();
            for (w, t) in wide.components().into_iter().zip(tight.components()) {
                if let Some(x) = sampled(t)
                    .into_iter()
                    .find(|x| !grid::near_contains(w, *x, 1e-9))
                {
                    return Err(format!("{cfg:?} {op:?} {a} {b}: {x} in {t} but not in {w}"));
                }
            }
        }
    }
    for _ in 0..200 {
        let mut single = || NLValue::from_reals(rng.gen(), rng.gen(), rng.gen()).unwrap();
        let (a, b) = (single(), single());
        for op in Connective::ALL {
            let (x, y) = (
                nl_binary(op, &a, &b, cfg).unwrap(),
                nl_binary_correlated(op, &a, &b, cfg).unwrap(),
            );
            ensure(x == y, || format!("{cfg:?} {op:?} {a} {b}: {x} vs {y}"))?;
        }
    }
    Ok(())
}

fn classification_grid() -> Verdict {
    let mut violations = Vec::new();
    for t in 0..=10 {
        for i in 0..=10 {
            for f in 0..=10 {
                let (t, i, f) = (t as f64 / 10.0, i as f64 / 10.0, f as f64 / 10.0);
                let flags = classify(&NLValue::from_reals(t, i, f).unwrap()).flags;
                let has = |x| flags.contains(x);
                use LogicFlag::*;
                let ok = (!has(Boolean) || has(Fuzzy))
                    && (!has(Fuzzy) || has(Ifl))
                    && (!has(Dialetheist) || !has(Fuzzy))
                    && !(has(Paraconsistent) && has(IntuitionisticIncomplete))
                    && has(ParadoxForm) == (t == 1.0 && f == 1.0);
                if !ok {
                    violations.push((t, i, f));
                }
            }
        }
    }
    ensure(violations.is_empty(), || {
        format!(
            "{} violations, first {:?}",
            violations.len(),
            violations.first()
        )
    })?;
    Ok("1331 grid points, 0 violations".into())
}

fn random_program(rng: &mut ChaCha8Rng) -> Program {
    let atoms = rng.gen_range(1..=4);
    let mut statements: Vec<Statement> = (0..atoms)
        .map(|k| Statement::Assign {
            name: format!("A{k}"),
            value: gen::value(rng, true),
        })
        .collect();
    for _ in 0..rng.gen_range(1..=5) {
        let e = gen::expr(rng, 4, atoms);
        statements.push(match rng.gen_range(0..3) {
            0 => Statement::Eval(e),
            1 => Statement::Classify(e),
            _ => Statement::Table(e),
        });
    }
    Program {
        statements,
        positions: Vec::new(),
    }
}

fn cli_round_trip() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in 0..500 {
        let program = random_program(&mut rng);
        let first = program.to_string();
        let parsed = parse_program(&first).map_err(|e| format!("program {n}: {e}\n{first}"))?;
        ensure(parsed.statements == program.statements, || {
            format!("program {n} changed on parse:\n{first}")
        })?;
        let second = parsed.to_string();
        ensure(first == second, || {
            format!("program {n} renders differently:\n{first}\n{second}")
        })?;
    }

    let src = format!("A = {WORKED};\neval !A;\n");
    let program = parse_program(&src).map_err(|e| e.to_string())?;
    let out = run_program(&program, EvalConfig::classical()).map_err(|e| e.to_string())?;
    let [Outcome::Eval { value, .. }] = out.as_slice() else {
        return Err(format!("unexpected outcomes {out:?}"));
    };
    type Shape = (&'static [(f64, f64)], &'static [f64]);
    let want: [Shape; 3] = [
        (&[(0.5, 0.55), (0.6, 0.7)], &[]),
        (&[], &[0.9]),
        (&[(0.3, 0.34)], &[0.4]),
    ];
    for (c, (intervals, points)) in value.components().into_iter().zip(want) {
        let close = |x: NsBound, y: f64| x.is_exact() && (x.standard_part() - y).abs() <= 1e-12;
        ensure(
            c.intervals().len() == intervals.len() && c.points().len() == points.len(),
            || format!("shape of {c}"),
        )?;
        for (iv, (lo, hi)) in c.intervals().iter().zip(intervals) {
            ensure(
                close(iv.lo, *lo) && close(iv.hi, *hi) && !iv.lo_open && !iv.hi_open,
                || format!("{c}"),
            )?;
        }
        for (p, x) in c.points().iter().zip(points) {
            ensure(close(*p, *x), || format!("{c}"))?;
        }
    }
    let text = format_value(value, OutputFormat::Text);
    let json = format_value(value, OutputFormat::Json);
    let from_text = neutrosophic_cli::parse_value(&text).map_err(|e| e.to_string())?;
    let from_json = value_from_json(&json).map_err(|e| e.to_string())?;
    ensure(&from_text == value && &from_json == value, || {
        format!("{text} / {json} do not round-trip")
    })?;
    Ok(format!(
        "500 programs byte-identical; !A = {text} round-trips through text and JSON"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Boolean reduction", boolean_reduction),
        ("fuzzy reduction", fuzzy_reduction),
        ("monad laws", monad_laws),
        ("endpoint formulas", endpoint_formulas),
        ("clamp safety", clamp_safety),
        ("De Morgan at singletons", de_morgan),
        ("paradox representability", paradox),
        ("correlated containment", correlated_containment),
        ("classification grid", classification_grid),
        ("CLI round-trip", cli_round_trip),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, check)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let ms = t.elapsed().as_millis();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({ms} ms)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({ms} ms)", k + 1);
            }
        }
    }
    let total = start.elapsed();
    let within = total < Duration::from_secs(60);
    println!(
        "{} of 10 criteria passed in {:.1} s",
        10 - failed,
        total.as_secs_f64()
    );
    if !within {
        println!("FAIL suite exceeded 60 s");
    }
    if failed == 0 && within {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
