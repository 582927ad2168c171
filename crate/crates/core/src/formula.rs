//! CNF formulas read with not-all-equal semantics.
//!
//! A clause is NAE-satisfied when at least one of its literals is true and at
//! least one is false. Formulas are kept occurrence-faithful: repeated and
//! complementary literals inside a clause are never simplified away, because
//! the reduction maps every occurrence to its own clause-gadget vertex.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, ParseErrorKind, Result};

/// Default variable cap for [`brute_force_nae`].
pub const DEFAULT_NAE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 1-based variable index.
    pub variable: u32,
    pub negated: bool,
}

impl Literal {
    pub fn pos(variable: u32) -> Self {
        Literal { variable, negated: false }
    }

    pub fn neg(variable: u32) -> Self {
        Literal { variable, negated: true }
    }

    /// Builds a literal from its DIMACS encoding (`-3` is `¬x3`).
    pub fn from_dimacs(value: i64) -> Option<Self> {
        if value == 0 || value.unsigned_abs() > u32::MAX as u64 {
            return None;
        }
        Some(Literal { variable: value.unsigned_abs() as u32, negated: value < 0 })
    }

    pub fn to_dimacs(self) -> i64 {
        if self.negated {
            -(self.variable as i64)
        } else {
            self.variable as i64
        }
    }

    pub fn negate(self) -> Self {
        Literal { negated: !self.negated, ..self }
    }

    /// Value of the literal under the given variable value.
    pub fn eval(self, value: bool) -> bool {
        value != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬x{}", self.variable)
        } else {
            write!(f, "x{}", self.variable)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Self {
        Clause { literals }
    }

    pub fn from_dimacs(values: &[i64]) -> Self {
        Clause {
            literals: values
                .iter()
                .map(|&v| Literal::from_dimacs(v).expect("nonzero literal"))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Formula {
    pub num_vars: u32,
    pub clauses: Vec<Clause>,
}

/// Total truth assignment over variables `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    /// `values[i]` is the value of variable `i + 1`.
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn get(&self, variable: u32) -> Option<bool> {
        if variable == 0 {
            return None;
        }
        self.values.get(variable as usize - 1).copied()
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }
}

impl Formula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Self> {
        let formula = Formula { num_vars, clauses };
        for clause in &formula.clauses {
            for lit in &clause.literals {
                if lit.variable == 0 || lit.variable > num_vars {
                    return Err(Error::InvalidArgument(format!(
                        "literal {lit} out of range for {num_vars} variables"
                    )));
                }
            }
        }
        Ok(formula)
    }

    /// Convenience constructor from DIMACS-style integer clauses.
    pub fn from_dimacs_clauses(num_vars: u32, clauses: &[&[i64]]) -> Result<Self> {
        Formula::new(num_vars, clauses.iter().map(|c| Clause::from_dimacs(c)).collect())
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn max_width(&self) -> usize {
        self.clauses.iter().map(Clause::len).max().unwrap_or(0)
    }

    /// Parses DIMACS CNF. Comment lines start with `c`; clauses are
    /// zero-terminated and may span lines.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        parse_dimacs(text)
    }

    /// Writes the formula in DIMACS CNF, one clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in &clause.literals {
                out.push_str(&lit.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "⊤");
        }
        for (i, clause) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " ∧ ")?;
            }
            write!(f, "(")?;
            for (j, lit) in clause.literals.iter().enumerate() {
                if j > 0 {
                    write!(f, " ∨ ")?;
                }
                write!(f, "{lit}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn parse_dimacs(text: &str) -> Result<Formula> {
    let err = |line: usize, kind: ParseErrorKind| Error::Parse { line, kind };

    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err(line_no, ParseErrorKind::DuplicateHeader));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] => n.parse::<u32>().ok().zip(m.parse::<usize>().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| err(line_no, ParseErrorKind::MalformedHeader))?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(err(line_no, ParseErrorKind::DataBeforeHeader));
        };
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| err(line_no, ParseErrorKind::InvalidToken(token.to_string())))?;
            if value == 0 {
                if current.is_empty() {
                    return Err(err(line_no, ParseErrorKind::EmptyClause));
                }
                clauses.push(Clause::new(std::mem::take(&mut current)));
                continue;
            }
            if value.unsigned_abs() > num_vars as u64 {
                return Err(err(
                    line_no,
                    ParseErrorKind::LiteralOutOfRange { literal: value, num_vars },
                ));
            }
            current.push(Literal::from_dimacs(value).expect("nonzero"));
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(err(last_line.max(1), ParseErrorKind::MalformedHeader));
    };
    if !current.is_empty() {
        return Err(err(last_line, ParseErrorKind::MissingTerminator));
    }
    if clauses.len() != declared {
        return Err(err(
            last_line.max(1),
            ParseErrorKind::ClauseCountMismatch { declared, found: clauses.len() },
        ));
    }
    Ok(Formula { num_vars, clauses })
}

fn clause_is_nae(clause: &Clause, value: impl Fn(u32) -> bool) -> bool {
    let mut seen_true = false;
    let mut seen_false = false;
    for lit in &clause.literals {
        if lit.eval(value(lit.variable)) {
            seen_true = true;
        } else {
            seen_false = true;
        }
    }
    seen_true && seen_false
}

/// True iff every clause has at least one true and at least one false literal.
pub fn eval_nae(formula: &Formula, assignment: &Assignment) -> Result<bool> {
    for clause in &formula.clauses {
        for lit in &clause.literals {
            if assignment.get(lit.variable).is_none() {
                return Err(Error::MissingVariable(lit.variable));
            }
        }
    }
    Ok(formula
        .clauses
        .iter()
        .all(|c| clause_is_nae(c, |v| assignment.get(v).expect("checked above"))))
}

/// Exhaustive NAE-SAT search with the default variable cap.
pub fn brute_force_nae(formula: &Formula) -> Result<Option<Assignment>> {
    brute_force_nae_capped(formula, DEFAULT_NAE_CAP)
}

/// Returns the lexicographically first NAE model (false < true, `x1` most
/// significant), or `None`.
pub fn brute_force_nae_capped(formula: &Formula, cap: usize) -> Result<Option<Assignment>> {
    let n = formula.num_vars as usize;
    if n > cap || n > 62 {
        return Err(Error::CapExceeded { what: "variable count", size: n, cap });
    }
    // Variable i lives at bit n - i so integer order is lexicographic order.
    let bit = |var: u32| 1u64 << (n - var as usize);
    let masks: Vec<(u64, u64)> = formula
        .clauses
        .iter()
        .map(|c| {
            c.literals.iter().fold((0, 0), |(pos, neg), lit| {
                if lit.negated {
                    (pos, neg | bit(lit.variable))
                } else {
                    (pos | bit(lit.variable), neg)
                }
            })
        })
        .collect();
    // Empty clauses have neither a true nor a false literal.
    if formula.clauses.iter().any(Clause::is_empty) {
        return Ok(None);
    }
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let satisfied = |t: u64| {
        let f = !t & full;
        masks.iter().all(|&(pos, neg)| {
            let has_true = (t & pos) != 0 || (f & neg) != 0;
            let has_false = (f & pos) != 0 || (t & neg) != 0;
            has_true && has_false
        })
    };
    let found = (0..=full).into_par_iter().find_first(|&t| satisfied(t));
    Ok(found.map(|t| {
        Assignment::new((1..=n as u32).map(|v| t & bit(v) != 0).collect())
    }))
}

/// Pads every clause to exactly `k` literals by repeating its first literal.
///
/// Repeating a literal never changes whether a clause is not-all-equal, so
/// the set of NAE models is preserved. Single-literal clauses are rejected.
pub fn pad_to_width(formula: &Formula, k: usize) -> Result<Formula> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("width must be at least 3, got {k}")));
    }
    let mut clauses = Vec::with_capacity(formula.clauses.len());
    for (i, clause) in formula.clauses.iter().enumerate() {
        match clause.len() {
            0 | 1 => return Err(Error::UnitClause { clause: i }),
            w if w > k => {
                return Err(Error::WidthViolation { clause: i, width: w, expected: k })
            }
            w => {
                let first = clause.literals[0];
                let mut literals = Vec::with_capacity(k);
                literals.push(first);
                literals.extend(std::iter::repeat_n(first, k - w));
                literals.extend_from_slice(&clause.literals[1..]);
                clauses.push(Clause::new(literals));
            }
        }
    }
    Ok(Formula { num_vars: formula.num_vars, clauses })
}
