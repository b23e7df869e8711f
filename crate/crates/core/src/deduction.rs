//! Generalized modus ponens over weighted clauses.
//!
//! A rule `(L0 <- L1 & ... & Lk, w)` yields `L0` with degree
//! `min(w, d1, ..., dk)` where `di` are the degrees of its body literals.
//! The maximum degree of every literal is the least fixpoint of that
//! max-min system, computed bottom-up so cyclic clause sets need no loop
//! checking.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::types::{Atom, Degree, Literal, WeightedClause};

/// Structured form of a derivation: the rule applied last and a proof for
/// each of its body literals, in body order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTree {
    pub conclusion: Literal,
    pub degree: Degree,
    pub rule: WeightedClause,
    /// Position of `rule` in the clause sequence the proof was built from.
    pub rule_index: usize,
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    /// Number of rule applications in the tree.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::size).sum::<usize>()
    }

    /// Input positions of every clause used, deduplicated.
    pub fn clause_indices(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_indices(&mut out);
        out
    }

    fn collect_indices(&self, out: &mut BTreeSet<usize>) {
        out.insert(self.rule_index);
        for p in &self.premises {
            p.collect_indices(out);
        }
    }

    /// Post-order traversal: premises before the step that uses them.
    pub fn steps(&self) -> Vec<&ProofTree> {
        let mut out = Vec::new();
        self.collect_steps(&mut out);
        out
    }

    fn collect_steps<'a>(&'a self, out: &mut Vec<&'a ProofTree>) {
        for p in &self.premises {
            p.collect_steps(out);
        }
        out.push(self);
    }
}

/// Both `q` and `~q` are derivable with positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContradictionWitness {
    pub atom: Atom,
    pub degree_pos: Degree,
    pub degree_neg: Degree,
}

/// Maximum degree of every literal derivable from a clause set. Literals
/// absent from the map have degree 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Degrees {
    map: HashMap<Literal, Degree>,
}

impl Degrees {
    pub fn get(&self, literal: &Literal) -> Degree {
        self.map.get(literal).copied().unwrap_or(Degree::ZERO)
    }

    /// Literals with positive degree.
    pub fn iter(&self) -> impl Iterator<Item = (&Literal, Degree)> {
        self.map.iter().map(|(l, d)| (l, *d))
    }

    /// The smallest atom (by name) derivable both ways, if any.
    pub fn contradiction(&self) -> Option<ContradictionWitness> {
        self.map
            .iter()
            .filter(|(l, _)| !l.negated)
            .filter_map(|(l, &pos)| {
                let neg = self.get(&l.complement());
                (!neg.is_zero()).then(|| ContradictionWitness {
                    atom: l.atom.clone(),
                    degree_pos: pos,
                    degree_neg: neg,
                })
            })
            .min_by(|a, b| a.atom.cmp(&b.atom))
    }
}

/// Runs the max-min fixpoint from all-zero degrees.
pub fn degrees<'a, I>(clauses: I) -> Degrees
where
    I: IntoIterator<Item = &'a WeightedClause>,
{
    let clauses: Vec<&WeightedClause> = clauses.into_iter().collect();
    let mut users: HashMap<&Literal, Vec<usize>> = HashMap::new();
    for (i, c) in clauses.iter().enumerate() {
        for b in c.body() {
            users.entry(b).or_default().push(i);
        }
    }
    let mut degree: HashMap<&Literal, Degree> = HashMap::new();
    let mut queued = vec![true; clauses.len()];
    let mut queue: VecDeque<usize> = (0..clauses.len()).collect();
    while let Some(i) = queue.pop_front() {
        queued[i] = false;
        let c = clauses[i];
        let d = c
            .body()
            .iter()
            .map(|b| degree.get(b).copied().unwrap_or(Degree::ZERO))
            .fold(c.weight(), Degree::min);
        if d.is_zero() {
            continue;
        }
        let slot = degree.entry(c.head()).or_insert(Degree::ZERO);
        if d > *slot {
            *slot = d;
            for &j in users.get(c.head()).into_iter().flatten() {
                if !queued[j] {
                    queued[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    Degrees {
        map: degree.into_iter().map(|(l, d)| (l.clone(), d)).collect(),
    }
}

/// The greatest degree with which `goal` follows from `clauses`; 0 when it
/// has no support.
pub fn max_degree<'a, I>(clauses: I, goal: &Literal) -> Degree
where
    I: IntoIterator<Item = &'a WeightedClause>,
{
    degrees(clauses).get(goal)
}

/// Some atom derivable both positively and negatively, if one exists.
pub fn is_contradictory<'a, I>(clauses: I) -> Option<ContradictionWitness>
where
    I: IntoIterator<Item = &'a WeightedClause>,
{
    degrees(clauses).contradiction()
}

/// Ranking of candidate proofs: higher degree, then fewer rule
/// applications, then the lexicographically smallest set of clause
/// positions.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Best {
    degree: Degree,
    size: usize,
    indices: Vec<usize>,
    rule: usize,
}

impl Best {
    fn better_than(&self, other: &Best) -> bool {
        let ord = other
            .degree
            .cmp(&self.degree)
            .then(self.size.cmp(&other.size))
            .then_with(|| self.indices.cmp(&other.indices));
        ord == Ordering::Less
    }
}

/// An optimal proof of `goal`, or `None` when its maximum degree is 0.
///
/// Among optimal proofs the one with the fewest rule applications wins,
/// then the one using the earliest clauses.
pub fn best_proof<'a, I>(clauses: I, goal: &Literal) -> Option<ProofTree>
where
    I: IntoIterator<Item = &'a WeightedClause>,
{
    let clauses: Vec<&WeightedClause> = clauses.into_iter().collect();
    let mut best: HashMap<&Literal, Best> = HashMap::new();
    loop {
        let mut changed = false;
        for (i, c) in clauses.iter().enumerate() {
            let mut cand = Best {
                degree: c.weight(),
                size: 1,
                indices: vec![i],
                rule: i,
            };
            let mut supported = true;
            for b in c.body() {
                match best.get(b) {
                    Some(sub) => {
                        cand.degree = cand.degree.min(sub.degree);
                        cand.size = cand.size.saturating_add(sub.size);
                        cand.indices.extend_from_slice(&sub.indices);
                    }
                    None => {
                        supported = false;
                        break;
                    }
                }
            }
            if !supported {
                continue;
            }
            cand.indices.sort_unstable();
            cand.indices.dedup();
            let replace = match best.get(c.head()) {
                Some(cur) => cand.better_than(cur),
                None => true,
            };
            if replace {
                best.insert(c.head(), cand);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    best.contains_key(goal)
        .then(|| assemble(&clauses, &best, goal))
}

fn assemble(
    clauses: &[&WeightedClause],
    best: &HashMap<&Literal, Best>,
    goal: &Literal,
) -> ProofTree {
    let entry = &best[goal];
    let rule = clauses[entry.rule];
    let premises: Vec<ProofTree> = rule
        .body()
        .iter()
        .map(|b| assemble(clauses, best, b))
        .collect();
    let degree = premises
        .iter()
        .map(|p| p.degree)
        .fold(rule.weight(), Degree::min);
    ProofTree {
        conclusion: goal.clone(),
        degree,
        rule: rule.clone(),
        rule_index: entry.rule,
        premises,
    }
}

/// True iff a chain of clauses leads from a body occurrence of `on` to a
/// clause concluding `goal`.
pub fn depends_on<'a, I>(goal: &Literal, on: &Literal, clauses: I) -> bool
where
    I: IntoIterator<Item = &'a WeightedClause>,
{
    let clauses: Vec<&WeightedClause> = clauses.into_iter().collect();
    let mut seen: HashSet<&Literal> = HashSet::new();
    let mut frontier = vec![on];
    while let Some(lit) = frontier.pop() {
        for c in clauses.iter().filter(|c| c.body().contains(lit)) {
            if c.head() == goal {
                return true;
            }
            if seen.insert(c.head()) {
                frontier.push(c.head());
            }
        }
    }
    false
}
