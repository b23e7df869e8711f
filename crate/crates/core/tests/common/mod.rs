#![allow(dead_code)]

use std::collections::BTreeSet;

use pdelp::{
    load_program, Argument, ArgumentBase, Atom, Clause, ClauseId, Degree, Literal, Program,
    Support, WeightedClause,
};
use rand::Rng;

pub const ENGINE: &str = include_str!("../../data/engine.pdelp");

pub fn engine() -> Program {
    load_program(ENGINE).unwrap()
}

pub fn lit(s: &str) -> Literal {
    s.parse().unwrap()
}

pub fn deg(s: &str) -> Degree {
    s.parse().unwrap()
}

pub fn sup(ids: &[u32]) -> Support {
    ids.iter().map(|&i| ClauseId(i)).collect()
}

/// The argument with the given support and conclusion.
pub fn arg(base: &ArgumentBase<'_>, ids: &[u32], goal: &str) -> Argument {
    base.argument(&sup(ids), &lit(goal))
        .unwrap_or_else(|| panic!("{:?} is not an argument for {goal}", sup(ids)))
}

/// Clauses of the engine program by their 1-based number.
pub fn clauses<'p>(program: &'p Program, ids: &[u32]) -> Vec<&'p WeightedClause> {
    ids.iter().map(|&i| program.clause(ClauseId(i))).collect()
}

/// Weights a program may use: 0.1, ..., 0.9 and 1.
pub fn weight(tenths: u32) -> Degree {
    Degree::new(tenths as u64, 10).unwrap()
}

/// A clause before program validation: head, body, weight in tenths.
#[derive(Debug, Clone)]
pub struct RawClause {
    pub head: (usize, bool),
    pub body: Vec<(usize, bool)>,
    pub tenths: u32,
}

fn literal(atom: usize, negated: bool) -> Literal {
    Literal {
        atom: Atom::new(&format!("a{atom}")).unwrap(),
        negated,
    }
}

/// Drops body literals no clause concludes (until none remain), then
/// validates. `None` when Π is contradictory.
pub fn build_program(raw: &[RawClause]) -> Option<Program> {
    let mut raw = raw.to_vec();
    loop {
        let heads: BTreeSet<(usize, bool)> = raw.iter().map(|c| c.head).collect();
        let mut changed = false;
        for c in &mut raw {
            let before = c.body.len();
            c.body.retain(|b| heads.contains(b));
            changed |= c.body.len() != before;
        }
        if !changed {
            break;
        }
    }
    let clauses = raw
        .iter()
        .map(|c| {
            WeightedClause::new(
                Clause::new(
                    literal(c.head.0, c.head.1),
                    c.body.iter().map(|&(a, n)| literal(a, n)).collect(),
                ),
                weight(c.tenths),
            )
            .unwrap()
        })
        .collect();
    Program::new(clauses).ok()
}

/// A random valid program with |Π| ≤ 6, |Δ| ≤ 8 and at most 8 atoms.
pub fn random_program(rng: &mut impl Rng) -> Program {
    loop {
        let atoms = rng.gen_range(1..=8);
        let n_pi = rng.gen_range(0..=6);
        let n_delta = rng.gen_range(0..=8);
        let lit = |rng: &mut dyn rand::RngCore| (rng.gen_range(0..atoms), rng.gen_bool(0.3));
        let mut raw = Vec::new();
        for i in 0..n_pi + n_delta {
            let body_len = rng.gen_range(0..=2);
            let head = lit(rng);
            let body = (0..body_len).map(|_| lit(rng)).collect();
            let tenths = if i < n_pi { 10 } else { rng.gen_range(1..=9) };
            raw.push(RawClause { head, body, tenths });
        }
        if let Some(p) = build_program(&raw) {
            return p;
        }
    }
}

/// Every literal over the atoms of `program`.
pub fn goals(program: &Program) -> Vec<Literal> {
    program
        .atoms()
        .into_iter()
        .flat_map(|a| [Literal::positive(a.clone()), Literal::negative(a)])
        .collect()
}
