//! Statement execution.

use std::collections::BTreeMap;

use neutrosophic_core::taxonomy::{classify, truth_grade};
use neutrosophic_core::{
    evaluate, EvalConfig, Expr, LogicClass, NLValue, NsBound, NsSet, TruthGrade,
};

use crate::dsl::{Pos, Program, Statement};

/// Largest number of atoms `table` will enumerate.
pub const MAX_TABLE_ATOMS: usize = 8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RunError {
    #[error("statement {index} ({pos}): {source}")]
    Eval {
        index: usize,
        pos: Pos,
        source: neutrosophic_core::Error,
    },
    #[error("statement {index} ({pos}): table over {atoms} atoms exceeds the limit of {MAX_TABLE_ATOMS}")]
    TooManyAtoms {
        index: usize,
        pos: Pos,
        atoms: usize,
    },
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TableError {
    #[error("table over {0} atoms exceeds the limit of {MAX_TABLE_ATOMS}")]
    TooManyAtoms(usize),
    #[error(transparent)]
    Eval(#[from] neutrosophic_core::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    /// Atom name and its Boolean corner, in atom order.
    pub assignment: Vec<(String, bool)>,
    /// Truth component of the evaluated expression.
    pub truth: NsSet,
    pub expected: bool,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Eval {
        index: usize,
        expr: Expr,
        value: NLValue,
    },
    Classify {
        index: usize,
        expr: Expr,
        value: NLValue,
        class: LogicClass,
        grade: TruthGrade,
    },
    Table {
        index: usize,
        expr: Expr,
        report: TableReport,
    },
}

fn classical_truth(e: &Expr, assignment: &BTreeMap<&str, bool>) -> bool {
    match e {
        Expr::Atom(name) => assignment[name.as_str()],
        Expr::Not(inner) => !classical_truth(inner, assignment),
        Expr::Bin(op, l, r) => op.classical(
            classical_truth(l, assignment),
            classical_truth(r, assignment),
        ),
    }
}

/// Evaluates `e` in classical mode on every Boolean corner assignment of its
/// atoms (true is `(1,0,0)`, false is `(0,0,1)`) and compares the truth
/// component with the two-valued result.
pub fn table(e: &Expr) -> Result<TableReport, TableError> {
    let atoms: Vec<&str> = e.atoms().into_iter().collect();
    if atoms.len() > MAX_TABLE_ATOMS {
        return Err(TableError::TooManyAtoms(atoms.len()));
    }
    let truth = NLValue::from_reals(1.0, 0.0, 0.0)?;
    let falsity = NLValue::from_reals(0.0, 0.0, 1.0)?;
    let cfg = EvalConfig::classical();
    let mut rows = Vec::with_capacity(1 << atoms.len());
    for bits in 0..(1usize << atoms.len()) {
        let assignment: BTreeMap<&str, bool> = atoms
            .iter()
            .enumerate()
            .map(|(k, a)| (*a, bits & (1 << (atoms.len() - 1 - k)) != 0))
            .collect();
        let env: BTreeMap<String, NLValue> = assignment
            .iter()
            .map(|(a, b)| {
                (
                    a.to_string(),
                    if *b { truth.clone() } else { falsity.clone() },
                )
            })
            .collect();
        let value = evaluate(e, &env, cfg)?;
        let expected = classical_truth(e, &assignment);
        let want = if expected {
            NsBound::ONE
        } else {
            NsBound::ZERO
        };
        let matches = value.truth().as_point() == Some(want);
        rows.push(TableRow {
            assignment: atoms
                .iter()
                .map(|a| (a.to_string(), assignment[a]))
                .collect(),
            truth: value.truth().clone(),
            expected,
            matches,
        });
    }
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    Ok(TableReport { rows, mismatches })
}

/// Runs the statements in order and stops at the first failure.
pub fn run_program(program: &Program, cfg: EvalConfig) -> Result<Vec<Outcome>, RunError> {
    let mut env: BTreeMap<String, NLValue> = BTreeMap::new();
    let mut out = Vec::new();
    for (index, stmt) in program.statements.iter().enumerate() {
        let pos = program.position(index);
        let fail = |source| RunError::Eval { index, pos, source };
        match stmt {
            Statement::Assign { name, value } => {
                env.insert(name.clone(), value.clone());
            }
            Statement::Eval(e) => {
                let value = evaluate(e, &env, cfg).map_err(fail)?;
                out.push(Outcome::Eval {
                    index,
                    expr: e.clone(),
                    value,
                });
            }
            Statement::Classify(e) => {
                let value = evaluate(e, &env, cfg).map_err(fail)?;
                let class = classify(&value);
                let grade = truth_grade(&value);
                out.push(Outcome::Classify {
                    index,
                    expr: e.clone(),
                    value,
                    class,
                    grade,
                });
            }
            Statement::Table(e) => {
                let report = table(e).map_err(|err| match err {
                    TableError::TooManyAtoms(atoms) => RunError::TooManyAtoms { index, pos, atoms },
                    TableError::Eval(source) => fail(source),
                })?;
                out.push(Outcome::Table {
                    index,
                    expr: e.clone(),
                    report,
                });
            }
        }
    }
    Ok(out)
}
