//! Domain types of the language: atoms, literals, clauses, necessity
//! degrees and validated programs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use thiserror::Error;

use crate::deduction;

/// A necessity degree in `[0, 1]`, stored as an exact rational.
///
/// Degrees are only ever combined with `min`, `max` and equality, so
/// every degree reachable from a program is one of its input weights
/// (or zero). Keeping them exact makes the proper/blocking split of
/// defeat unambiguous.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Ratio<u64>);

/// Largest number of fractional digits accepted when parsing a degree.
pub const MAX_DECIMAL_DIGITS: usize = 18;

impl Degree {
    pub const ZERO: Degree = Degree(Ratio::new_raw(0, 1));
    pub const ONE: Degree = Degree(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`; `None` when the value falls outside `[0, 1]`
    /// or the denominator is zero.
    pub fn new(numer: u64, denom: u64) -> Option<Degree> {
        if denom == 0 || numer > denom {
            return None;
        }
        Some(Degree(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn is_one(&self) -> bool {
        self.numer() == self.denom()
    }

    /// Lossy conversion, for display and statistics only.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// Shortest exact decimal rendering, `None` if the denominator has a
    /// prime factor other than 2 and 5.
    pub fn to_decimal(&self) -> Option<String> {
        let (mut d, mut twos, mut fives) = (self.denom(), 0u32, 0u32);
        while d % 2 == 0 {
            d /= 2;
            twos += 1;
        }
        while d % 5 == 0 {
            d /= 5;
            fives += 1;
        }
        if d != 1 {
            return None;
        }
        let digits = twos.max(fives);
        if digits == 0 {
            return Some(self.numer().to_string());
        }
        let scale = 10u128.pow(digits);
        let scaled = self.numer() as u128 * (scale / self.denom() as u128);
        let int = scaled / scale;
        let frac = scaled % scale;
        Some(format!("{int}.{frac:0width$}", width = digits as usize))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_decimal() {
            Some(s) => f.write_str(&s),
            None => write!(f, "{}/{}", self.numer(), self.denom()),
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("`{0}` is not a decimal number")]
    Malformed(String),
    #[error("`{0}` has more than {MAX_DECIMAL_DIGITS} fractional digits")]
    TooPrecise(String),
    #[error("degree {0} is outside [0, 1]")]
    OutOfRange(String),
}

impl FromStr for Degree {
    type Err = DegreeError;

    /// Parses a plain decimal such as `1`, `0.95` or `.5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || DegreeError::Malformed(s.to_owned());
        let (int, frac) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(malformed());
        }
        if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        if s.ends_with('.') {
            return Err(malformed());
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() > MAX_DECIMAL_DIGITS {
            return Err(DegreeError::TooPrecise(s.to_owned()));
        }
        let int = int.trim_start_matches('0');
        if int.len() > 1 || (int == "1" && !frac.is_empty()) || (!int.is_empty() && int != "1") {
            return Err(DegreeError::OutOfRange(s.to_owned()));
        }
        let denom = 10u64.pow(frac.len() as u32);
        let numer = if int == "1" {
            denom
        } else if frac.is_empty() {
            0
        } else {
            frac.parse::<u64>().map_err(|_| malformed())?
        };
        Ok(Degree(Ratio::new(numer, denom)))
    }
}

/// A propositional variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a valid atom name")]
pub struct AtomError(pub String);

impl Atom {
    /// Atom names start with a lowercase ASCII letter followed by letters,
    /// digits or underscores.
    pub fn new(name: &str) -> Result<Atom, AtomError> {
        if is_atom_name(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(AtomError(name.to_owned()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An atom or its strong negation `~atom`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Literal {
    pub fn positive(atom: Atom) -> Literal {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn negative(atom: Atom) -> Literal {
        Literal {
            atom,
            negated: true,
        }
    }

    /// `~q` for `q` and `q` for `~q`.
    pub fn complement(&self) -> Literal {
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }
}

/// Free-function form of [`Literal::complement`].
pub fn complement(literal: &Literal) -> Literal {
    literal.complement()
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("~")?;
        }
        f.write_str(self.atom.name())
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Literal {
    type Err = AtomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix('~').or_else(|| s.strip_prefix('\u{223c}')) {
            Some(rest) => Atom::new(rest).map(Literal::negative),
            None => Atom::new(s).map(Literal::positive),
        }
    }
}

/// `head <- body`; a fact when the body is empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    head: Literal,
    body: Vec<Literal>,
}

impl Clause {
    /// Repeated body literals are collapsed, keeping the first occurrence.
    pub fn new(head: Literal, body: Vec<Literal>) -> Clause {
        let mut seen = BTreeSet::new();
        let body = body
            .into_iter()
            .filter(|l| seen.insert(l.clone()))
            .collect();
        Clause { head, body }
    }

    pub fn fact(head: Literal) -> Clause {
        Clause {
            head,
            body: Vec::new(),
        }
    }

    pub fn head(&self) -> &Literal {
        &self.head
    }

    pub fn body(&self) -> &[Literal] {
        &self.body
    }

    pub fn is_fact(&self) -> bool {
        self.body.is_empty()
    }

    /// Every literal mentioned by the clause, head first.
    pub fn literals(&self) -> impl Iterator<Item = &Literal> {
        std::iter::once(&self.head).chain(self.body.iter())
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            f.write_str(" <- ")?;
            for (i, l) in self.body.iter().enumerate() {
                if i > 0 {
                    f.write_str(" & ")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A clause paired with a lower bound on its necessity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedClause {
    clause: Clause,
    weight: Degree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("clause `{clause}` has weight 0, which carries no information")]
pub struct ZeroWeight {
    pub clause: Clause,
}

impl WeightedClause {
    pub fn new(clause: Clause, weight: Degree) -> Result<WeightedClause, ZeroWeight> {
        if weight.is_zero() {
            return Err(ZeroWeight { clause });
        }
        Ok(WeightedClause { clause, weight })
    }

    /// `(literal, weight)`; used to inject argument conclusions into a
    /// clause set.
    pub fn fact(literal: Literal, weight: Degree) -> Result<WeightedClause, ZeroWeight> {
        WeightedClause::new(Clause::fact(literal), weight)
    }

    pub fn clause(&self) -> &Clause {
        &self.clause
    }

    pub fn head(&self) -> &Literal {
        self.clause.head()
    }

    pub fn body(&self) -> &[Literal] {
        self.clause.body()
    }

    pub fn weight(&self) -> Degree {
        self.weight
    }

    pub fn is_certain(&self) -> bool {
        self.weight.is_one()
    }
}

impl fmt::Display for WeightedClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.clause, self.weight)
    }
}

impl fmt::Debug for WeightedClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// 1-based position of a clause in its program's source order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct ClauseId(pub u32);

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

/// One problem found while validating a program.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("certain knowledge is contradictory on `{atom}` ({atom} at {degree_pos}, ~{atom} at {degree_neg})")]
    ContradictoryCertainKnowledge {
        atom: Atom,
        degree_pos: Degree,
        degree_neg: Degree,
    },
    #[error("body literal `{literal}` of {rule} has no clause concluding it")]
    ForwardConstraintViolation {
        literal: Literal,
        rule: WeightedClause,
    },
    #[error("{clause} is in the wrong partition (certain clauses need weight 1, uncertain ones weight below 1)")]
    MisplacedClause { clause: WeightedClause },
}

/// Every violation found by [`validate_program`]; never empty.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid program: {}", .violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

/// A validated program `(Π, Δ)`.
///
/// Clauses are kept in source order; Π holds the certain ones (weight 1)
/// and Δ the uncertain ones. Π is non-contradictory and every body
/// literal has at least one clause concluding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    clauses: Vec<WeightedClause>,
}

impl Program {
    /// Validates clauses in source order, splitting them into Π and Δ by
    /// weight.
    pub fn new(clauses: Vec<WeightedClause>) -> Result<Program, ValidationReport> {
        let mut violations = Vec::new();
        let pi: Vec<&WeightedClause> = clauses.iter().filter(|c| c.is_certain()).collect();
        if let Some(w) = deduction::is_contradictory(pi.iter().copied()) {
            violations.push(Violation::ContradictoryCertainKnowledge {
                atom: w.atom,
                degree_pos: w.degree_pos,
                degree_neg: w.degree_neg,
            });
        }
        let heads: BTreeSet<&Literal> = clauses.iter().map(|c| c.head()).collect();
        for rule in &clauses {
            for literal in rule.body() {
                if !heads.contains(literal) {
                    violations.push(Violation::ForwardConstraintViolation {
                        literal: literal.clone(),
                        rule: rule.clone(),
                    });
                }
            }
        }
        if violations.is_empty() {
            Ok(Program { clauses })
        } else {
            Err(ValidationReport { violations })
        }
    }

    pub fn empty() -> Program {
        Program {
            clauses: Vec::new(),
        }
    }

    /// All clauses with their identifiers, in source order.
    pub fn clauses(&self) -> impl Iterator<Item = (ClauseId, &WeightedClause)> {
        self.clauses
            .iter()
            .enumerate()
            .map(|(i, c)| (ClauseId(i as u32 + 1), c))
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// # Panics
    /// If `id` does not belong to this program.
    pub fn clause(&self, id: ClauseId) -> &WeightedClause {
        &self.clauses[id.0 as usize - 1]
    }

    pub fn get(&self, id: ClauseId) -> Option<&WeightedClause> {
        (id.0 as usize)
            .checked_sub(1)
            .and_then(|i| self.clauses.get(i))
    }

    /// Π: certain clauses.
    pub fn pi(&self) -> impl Iterator<Item = (ClauseId, &WeightedClause)> {
        self.clauses().filter(|(_, c)| c.is_certain())
    }

    /// Δ: uncertain clauses.
    pub fn delta(&self) -> impl Iterator<Item = (ClauseId, &WeightedClause)> {
        self.clauses().filter(|(_, c)| !c.is_certain())
    }

    pub fn pi_len(&self) -> usize {
        self.pi().count()
    }

    pub fn delta_len(&self) -> usize {
        self.delta().count()
    }

    pub fn into_clauses(self) -> Vec<WeightedClause> {
        self.clauses
    }

    /// Every literal occurring in the program, in sorted order.
    pub fn literals(&self) -> BTreeSet<Literal> {
        self.clauses
            .iter()
            .flat_map(|c| c.clause().literals().cloned())
            .collect()
    }

    /// Every atom occurring in the program, in sorted order.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.literals().into_iter().map(|l| l.atom).collect()
    }
}

/// Checks the `(Π, Δ)` partition and builds a [`Program`] with Π's clauses
/// numbered before Δ's.
pub fn validate_program(
    pi: Vec<WeightedClause>,
    delta: Vec<WeightedClause>,
) -> Result<Program, ValidationReport> {
    let misplaced: Vec<Violation> = pi
        .iter()
        .filter(|c| !c.is_certain())
        .chain(delta.iter().filter(|c| c.is_certain()))
        .map(|c| Violation::MisplacedClause { clause: c.clone() })
        .collect();
    let mut clauses = pi;
    clauses.extend(delta);
    match Program::new(clauses) {
        Ok(p) if misplaced.is_empty() => Ok(p),
        Ok(_) => Err(ValidationReport {
            violations: misplaced,
        }),
        Err(mut report) => {
            report.violations.extend(misplaced);
            Err(report)
        }
    }
}
