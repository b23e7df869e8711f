//! Arguments: minimal, non-contradictory sets of uncertain clauses that,
//! together with the certain clauses, support a conclusion.
//!
//! Supports are found bottom-up: for every literal we keep the antichain
//! of minimal Δ-subsets from which it is derivable together with Π. A set
//! of clauses that derives a goal always contains one of these, and a
//! superset of a contradictory set is contradictory, so the arguments for
//! a goal are exactly its minimal supports whose union with Π is
//! non-contradictory.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use crate::deduction::{self, ProofTree};
use crate::types::{ClauseId, Degree, Literal, Program, WeightedClause};

/// A set of clause identifiers, kept sorted and free of duplicates.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Support(Vec<ClauseId>);

impl Support {
    pub fn empty() -> Support {
        Support(Vec::new())
    }

    pub fn ids(&self) -> &[ClauseId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: ClauseId) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    pub fn is_subset(&self, other: &Support) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|a| it.by_ref().any(|b| b == a))
    }

    pub fn union(&self, other: &Support) -> Support {
        let mut v: Vec<ClauseId> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Support(v)
    }

    pub fn with(&self, id: ClauseId) -> Support {
        self.union(&Support(vec![id]))
    }

    pub fn without(&self, id: ClauseId) -> Support {
        Support(self.0.iter().copied().filter(|&c| c != id).collect())
    }
}

impl FromIterator<ClauseId> for Support {
    fn from_iter<T: IntoIterator<Item = ClauseId>>(iter: T) -> Self {
        let set: BTreeSet<ClauseId> = iter.into_iter().collect();
        Support(set.into_iter().collect())
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, id) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", id.0)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `<support, conclusion, degree>`.
///
/// Identity is the pair (support, conclusion); the degree and derivation
/// are functions of it.
#[derive(Clone)]
pub struct Argument {
    support: Support,
    conclusion: Literal,
    degree: Degree,
    derivation: ProofTree,
}

impl Argument {
    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn conclusion(&self) -> &Literal {
        &self.conclusion
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    /// Optimal proof of the conclusion over Π ∪ support.
    pub fn derivation(&self) -> &ProofTree {
        &self.derivation
    }

    /// True iff `self`'s support is contained in `other`'s.
    pub fn is_subargument_of(&self, other: &Argument) -> bool {
        self.support.is_subset(&other.support)
    }

    /// The uncertain clauses of the support.
    pub fn clauses<'p>(&self, program: &'p Program) -> Vec<&'p WeightedClause> {
        self.support
            .ids()
            .iter()
            .map(|&id| program.clause(id))
            .collect()
    }

    fn key(&self) -> (&Literal, &Support) {
        (&self.conclusion, &self.support)
    }
}

impl PartialEq for Argument {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Argument {}

impl std::hash::Hash for Argument {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for Argument {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Argument {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}, {}, {}>",
            self.support, self.conclusion, self.degree
        )
    }
}

impl fmt::Debug for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Π ∪ support, in source order.
pub(crate) fn with_pi<'p>(program: &'p Program, support: &Support) -> Vec<&'p WeightedClause> {
    program
        .clauses()
        .filter(|(id, c)| c.is_certain() || support.contains(*id))
        .map(|(_, c)| c)
        .collect()
}

/// Adds `s` to an antichain unless a subset is already present; drops
/// any supersets it replaces.
fn insert_minimal(antichain: &mut Vec<Support>, s: Support) -> bool {
    if antichain.iter().any(|t| t.is_subset(&s)) {
        return false;
    }
    antichain.retain(|t| !s.is_subset(t));
    antichain.push(s);
    true
}

/// Minimal supports of every head literal, using only the given clauses.
fn minimal_supports(
    program: &Program,
    clauses: &[ClauseId],
    cap: usize,
) -> HashMap<Literal, Vec<Support>> {
    let mut sets: HashMap<Literal, Vec<Support>> = HashMap::new();
    loop {
        let mut changed = false;
        for &id in clauses {
            let c = program.clause(id);
            let base = if c.is_certain() {
                Support::empty()
            } else {
                Support(vec![id])
            };
            let mut partial = vec![base];
            for b in c.body() {
                let Some(options) = sets.get(b) else {
                    partial.clear();
                    break;
                };
                let mut next = Vec::new();
                for p in &partial {
                    for o in options {
                        let u = p.union(o);
                        if u.len() <= cap {
                            insert_minimal(&mut next, u);
                        }
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            if partial.is_empty() {
                continue;
            }
            let slot = sets.entry(c.head().clone()).or_default();
            for s in partial {
                changed |= insert_minimal(slot, s);
            }
        }
        if !changed {
            break;
        }
    }
    sets
}

/// Clauses that can take part in a derivation of `goal`.
fn relevant_clauses(program: &Program, goal: &Literal) -> Vec<ClauseId> {
    let mut wanted: HashSet<&Literal> = HashSet::from([goal]);
    let mut frontier = vec![goal];
    while let Some(l) = frontier.pop() {
        for (_, c) in program.clauses().filter(|(_, c)| c.head() == l) {
            for b in c.body() {
                if wanted.insert(b) {
                    frontier.push(b);
                }
            }
        }
    }
    program
        .clauses()
        .filter(|(_, c)| wanted.contains(c.head()))
        .map(|(id, _)| id)
        .collect()
}

/// Argument construction for one program, memoized per literal.
///
/// The memo tables live as long as the value; create one per query
/// evaluation.
pub struct ArgumentBase<'p> {
    program: &'p Program,
    support_cap: usize,
    by_literal: RefCell<HashMap<Literal, Rc<[Argument]>>>,
    by_support: RefCell<HashMap<Support, Rc<[Argument]>>>,
    consistent: RefCell<HashMap<Support, bool>>,
}

impl<'p> ArgumentBase<'p> {
    pub fn new(program: &'p Program) -> Self {
        ArgumentBase {
            program,
            support_cap: program.delta_len(),
            by_literal: RefCell::default(),
            by_support: RefCell::default(),
            consistent: RefCell::default(),
        }
    }

    /// Ignores supports with more than `cap` clauses.
    pub fn with_support_cap(mut self, cap: usize) -> Self {
        self.support_cap = cap;
        self
    }

    pub fn program(&self) -> &'p Program {
        self.program
    }

    /// Whether Π ∪ support is non-contradictory.
    pub fn is_consistent(&self, support: &Support) -> bool {
        if let Some(&ok) = self.consistent.borrow().get(support) {
            return ok;
        }
        let ok = deduction::is_contradictory(with_pi(self.program, support)).is_none();
        self.consistent.borrow_mut().insert(support.clone(), ok);
        ok
    }

    fn make(&self, support: Support, conclusion: Literal) -> Argument {
        let clauses = with_pi(self.program, &support);
        let derivation = deduction::best_proof(clauses, &conclusion)
            .expect("minimal support derives its conclusion");
        Argument {
            degree: derivation.degree,
            support,
            conclusion,
            derivation,
        }
    }

    /// Every argument for `goal`, sorted by support.
    pub fn arguments_for(&self, goal: &Literal) -> Rc<[Argument]> {
        if let Some(found) = self.by_literal.borrow().get(goal) {
            return found.clone();
        }
        let relevant = relevant_clauses(self.program, goal);
        let sets = minimal_supports(self.program, &relevant, self.support_cap);
        let mut memo = self.by_literal.borrow_mut();
        let mut result = None;
        for (lit, supports) in sets {
            if memo.contains_key(&lit) && lit != *goal {
                continue;
            }
            let mut args: Vec<Argument> = supports
                .into_iter()
                .filter(|s| self.is_consistent(s))
                .map(|s| self.make(s, lit.clone()))
                .collect();
            args.sort();
            let args: Rc<[Argument]> = args.into();
            if lit == *goal {
                result = Some(args.clone());
            }
            memo.insert(lit, args);
        }
        let result = result.unwrap_or_else(|| Rc::from(Vec::new()));
        memo.insert(goal.clone(), result.clone());
        result
    }

    /// Every argument whose support is contained in `argument`'s, for any
    /// conclusion. Includes `argument` itself.
    pub fn subarguments(&self, argument: &Argument) -> Rc<[Argument]> {
        if let Some(found) = self.by_support.borrow().get(argument.support()) {
            return found.clone();
        }
        let clauses: Vec<ClauseId> = self
            .program
            .clauses()
            .filter(|(id, c)| c.is_certain() || argument.support().contains(*id))
            .map(|(id, _)| id)
            .collect();
        let sets = minimal_supports(self.program, &clauses, usize::MAX);
        let mut subs: Vec<Argument> = sets
            .into_iter()
            .flat_map(|(lit, supports)| supports.into_iter().map(move |s| (lit.clone(), s)))
            .map(|(lit, s)| self.make(s, lit))
            .collect();
        subs.sort();
        let subs: Rc<[Argument]> = subs.into();
        self.by_support
            .borrow_mut()
            .insert(argument.support().clone(), subs.clone());
        subs
    }

    /// The argument `<support, goal, α>` if it satisfies all three
    /// conditions: derivation, consistency and minimality.
    pub fn argument(&self, support: &Support, goal: &Literal) -> Option<Argument> {
        if !support
            .ids()
            .iter()
            .all(|&id| self.program.get(id).is_some_and(|c| !c.is_certain()))
        {
            return None;
        }
        let degree = deduction::max_degree(with_pi(self.program, support), goal);
        if degree.is_zero() || !self.is_consistent(support) {
            return None;
        }
        let minimal = support.ids().iter().all(|&id| {
            deduction::max_degree(with_pi(self.program, &support.without(id)), goal).is_zero()
        });
        minimal.then(|| self.make(support.clone(), goal.clone()))
    }
}

/// `Some(α)` iff `support` is an argument for `goal` with degree α.
pub fn is_argument(program: &Program, support: &Support, goal: &Literal) -> Option<Degree> {
    ArgumentBase::new(program)
        .argument(support, goal)
        .map(|a| a.degree())
}

/// All arguments for `goal`.
pub fn build_arguments(program: &Program, goal: &Literal) -> Vec<Argument> {
    ArgumentBase::new(program).arguments_for(goal).to_vec()
}

/// All subarguments of `argument`, including itself.
pub fn subarguments(argument: &Argument, program: &Program) -> Vec<Argument> {
    ArgumentBase::new(program).subarguments(argument).to_vec()
}
