//! Brute-force reference implementations for testing the engine on small
//! inputs.
//!
//! Nothing here shares an algorithm with [`crate::deduction`] or
//! [`crate::arguments`]: derivability is plain boolean forward chaining,
//! degrees come from cutting the clause set at each candidate weight, and
//! arguments come from sweeping the power set of Δ.

use std::collections::HashSet;

use thiserror::Error;

use crate::arguments::Support;
use crate::types::{Degree, Literal, Program, WeightedClause};

/// Largest clause set accepted by [`oracle_max_degree`].
pub const MAX_CLAUSES: usize = 16;
/// Largest Δ accepted by [`oracle_arguments`].
pub const MAX_DELTA: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle input too large: {size} > {limit}")]
pub struct TooLarge {
    pub size: usize,
    pub limit: usize,
}

/// Literals derivable from `clauses`, ignoring weights.
fn closure(clauses: &[&WeightedClause]) -> HashSet<Literal> {
    let mut known: HashSet<Literal> = HashSet::new();
    loop {
        let before = known.len();
        for c in clauses {
            if c.body().iter().all(|b| known.contains(b)) {
                known.insert(c.head().clone());
            }
        }
        if known.len() == before {
            return known;
        }
    }
}

fn contradictory(known: &HashSet<Literal>) -> bool {
    known
        .iter()
        .any(|l| !l.negated && known.contains(&l.complement()))
}

/// The greatest weight `t` such that `goal` is derivable using only
/// clauses of weight at least `t`; 0 when it is not derivable at all.
///
/// A derivation's degree is the smallest weight it uses, so this is the
/// maximum over all derivations.
pub fn oracle_max_degree(clauses: &[&WeightedClause], goal: &Literal) -> Result<Degree, TooLarge> {
    if clauses.len() > MAX_CLAUSES {
        return Err(TooLarge {
            size: clauses.len(),
            limit: MAX_CLAUSES,
        });
    }
    let mut weights: Vec<Degree> = clauses.iter().map(|c| c.weight()).collect();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    weights.dedup();
    for t in weights {
        let cut: Vec<&WeightedClause> = clauses
            .iter()
            .copied()
            .filter(|c| c.weight() >= t)
            .collect();
        if closure(&cut).contains(goal) {
            return Ok(t);
        }
    }
    Ok(Degree::ZERO)
}

/// Every `(support, degree)` with support ⊆ Δ that derives `goal` with
/// Π, is consistent with Π, and has no proper subset deriving `goal`.
/// Sorted by support.
pub fn oracle_arguments(
    program: &Program,
    goal: &Literal,
) -> Result<Vec<(Support, Degree)>, TooLarge> {
    let pi: Vec<&WeightedClause> = program.pi().map(|(_, c)| c).collect();
    let delta: Vec<_> = program.delta().collect();
    if delta.len() > MAX_DELTA {
        return Err(TooLarge {
            size: delta.len(),
            limit: MAX_DELTA,
        });
    }
    let n = delta.len();
    let subset = |mask: u32| -> Vec<&WeightedClause> {
        pi.iter()
            .copied()
            .chain((0..n).filter(|i| mask & (1 << i) != 0).map(|i| delta[i].1))
            .collect()
    };
    let mut derives = vec![false; 1 << n];
    let mut consistent = vec![false; 1 << n];
    for mask in 0..(1u32 << n) {
        let known = closure(&subset(mask));
        derives[mask as usize] = known.contains(goal);
        consistent[mask as usize] = !contradictory(&known);
    }
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) {
        let m = mask as usize;
        if !derives[m] || !consistent[m] {
            continue;
        }
        let minimal = (0..(1u32 << n))
            .filter(|&s| s & mask == s && s != mask)
            .all(|s| !(derives[s as usize] && consistent[s as usize]));
        if !minimal {
            continue;
        }
        let clauses = subset(mask);
        let degree = if clauses.len() <= MAX_CLAUSES {
            oracle_max_degree(&clauses, goal)?
        } else {
            return Err(TooLarge {
                size: clauses.len(),
                limit: MAX_CLAUSES,
            });
        };
        let support: Support = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| delta[i].0)
            .collect();
        out.push((support, degree));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{load_program, parse_program};

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    #[test]
    fn empty_set_gives_zero() {
        assert_eq!(oracle_max_degree(&[], &lit("q")).unwrap(), Degree::ZERO);
    }

    #[test]
    fn contradiction_example_degrees() {
        let g = parse_program("(p <- q, 0.5). (~p <- q & r, 0.3). (q, 0.2). (r, 1).").unwrap();
        let refs: Vec<&WeightedClause> = g.clauses.iter().collect();
        assert_eq!(
            oracle_max_degree(&refs, &lit("p")).unwrap(),
            "0.2".parse().unwrap()
        );
        assert_eq!(
            oracle_max_degree(&refs, &lit("~p")).unwrap(),
            "0.2".parse().unwrap()
        );
    }

    #[test]
    fn size_limits() {
        let text: String = (0..17).map(|i| format!("(a{i}, 0.5).")).collect();
        let g = parse_program(&text).unwrap();
        let refs: Vec<&WeightedClause> = g.clauses.iter().collect();
        assert!(oracle_max_degree(&refs, &lit("a0")).is_err());
        let p = load_program(&text).unwrap();
        assert!(oracle_arguments(&p, &lit("a0")).is_err());
    }
}
