//! Counterarguments, defeat, argumentation lines, dialectical trees and
//! warrant.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::Serialize;
use thiserror::Error;

use crate::arguments::{with_pi, Argument, ArgumentBase, Support};
use crate::deduction;
use crate::types::{Degree, Literal, Program, WeightedClause};

/// Default limit on the number of nodes of a single dialectical tree.
pub const DEFAULT_NODE_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DefeatKind {
    /// The attacker is strictly stronger than the disagreement subargument.
    Proper,
    /// Both have the same degree.
    Blocking,
}

impl fmt::Display for DefeatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DefeatKind::Proper => "proper",
            DefeatKind::Blocking => "blocking",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefeatRelation {
    pub attacker: Argument,
    pub target: Argument,
    /// The weakest qualifying disagreement subargument of `target`.
    pub disagreement: Argument,
    pub kind: DefeatKind,
    /// Every disagreement subargument the attacker is at least as strong
    /// as, weakest first.
    pub qualifying: Vec<Argument>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mark {
    /// Undefeated.
    U,
    /// Defeated.
    D,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mark::U => "U",
            Mark::D => "D",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("dialectical tree exceeds the node cap of {cap}")]
    NodeCapExceeded { cap: usize },
}

/// A sequence of arguments, each one a defeater of its predecessor.
/// Even positions belong to the proponent, odd ones to the opponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentationLine {
    pub entries: Vec<Argument>,
}

impl ArgumentationLine {
    pub fn new(entries: Vec<Argument>) -> Self {
        ArgumentationLine { entries }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// Consecutive entries are not linked by defeat.
    Defeat,
    NonContradiction,
    NoCircularity,
    Progressiveness,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::Defeat => "defeat",
            Constraint::NonContradiction => "non-contradiction",
            Constraint::NoCircularity => "no circular argumentation",
            Constraint::Progressiveness => "progressive argumentation",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("line violates {constraint} at index {index}")]
pub struct LineViolation {
    pub constraint: Constraint,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub argument: Argument,
    pub parent: Option<usize>,
    /// Defeat linking this node to its parent.
    pub edge: Option<DefeatKind>,
    pub disagreement: Option<Argument>,
    pub children: Vec<usize>,
    pub mark: Option<Mark>,
}

/// Nodes are stored in pre-order, so a child always has a larger index
/// than its parent. Node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DialecticalTree {
    pub nodes: Vec<TreeNode>,
}

impl DialecticalTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root_mark(&self) -> Option<Mark> {
        self.root().mark
    }

    /// The line from the root to `node`.
    pub fn line(&self, node: usize) -> ArgumentationLine {
        let mut entries = Vec::new();
        let mut cur = Some(node);
        while let Some(i) = cur {
            entries.push(self.nodes[i].argument.clone());
            cur = self.nodes[i].parent;
        }
        entries.reverse();
        ArgumentationLine { entries }
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].children.is_empty())
    }

    /// Every root-to-leaf line.
    pub fn lines(&self) -> Vec<ArgumentationLine> {
        self.leaves().map(|i| self.line(i)).collect()
    }

    /// AND-OR marking: a node is D iff some child is U; leaves are U.
    pub fn mark(&mut self) {
        for i in (0..self.nodes.len()).rev() {
            let defeated = self.nodes[i]
                .children
                .iter()
                .any(|&c| self.nodes[c].mark == Some(Mark::U));
            self.nodes[i].mark = Some(if defeated { Mark::D } else { Mark::U });
        }
    }

    /// Hierarchical export record.
    pub fn export(&self) -> ExportNode {
        self.export_node(0)
    }

    fn export_node(&self, i: usize) -> ExportNode {
        let n = &self.nodes[i];
        ExportNode {
            conclusion: n.argument.conclusion().to_string(),
            degree: n.argument.degree().to_string(),
            support: n.argument.support().ids().iter().map(|id| id.0).collect(),
            defeat: n.edge,
            mark: n.mark,
            children: n.children.iter().map(|&c| self.export_node(c)).collect(),
        }
    }

    /// Graphviz rendering; edges run from parent to child.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n", name.replace('"', "\\\""));
        for (i, n) in self.nodes.iter().enumerate() {
            let mark = n.mark.map(|m| m.to_string()).unwrap_or_else(|| "?".into());
            out.push_str(&format!(
                "  n{i} [label=\"{} [{}] {}\"];\n",
                n.argument.conclusion(),
                n.argument.degree(),
                mark
            ));
        }
        for (i, n) in self.nodes.iter().enumerate() {
            if let (Some(p), Some(kind)) = (n.parent, n.edge) {
                out.push_str(&format!("  n{p} -> n{i} [label=\"{kind}\"];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Applies [`DialecticalTree::mark`] and returns the tree.
pub fn mark_tree(mut tree: DialecticalTree) -> DialecticalTree {
    tree.mark();
    tree
}

/// One node of the exported tree document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExportNode {
    pub conclusion: String,
    pub degree: String,
    pub support: Vec<u32>,
    pub defeat: Option<DefeatKind>,
    pub mark: Option<Mark>,
    pub children: Vec<ExportNode>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub verdict: Verdict,
    /// Absent for [`Verdict::Undecided`].
    pub degree: Option<Degree>,
    /// The strongest warranted argument for the goal (YES) or for its
    /// complement (NO).
    pub witness: Option<Argument>,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(d) => write!(f, "{} {}", self.verdict, d),
            None => write!(f, "{}", self.verdict),
        }
    }
}

/// Π ∪ supports ∪ {(conclusion, degree)} for a set of arguments.
fn side_clauses<'a>(
    program: &'a Program,
    args: impl IntoIterator<Item = &'a Argument>,
) -> (Vec<&'a WeightedClause>, Vec<WeightedClause>) {
    let mut support = Support::empty();
    let mut facts = Vec::new();
    for a in args {
        support = support.union(a.support());
        facts.push(
            WeightedClause::fact(a.conclusion().clone(), a.degree())
                .expect("argument degrees are positive"),
        );
    }
    (with_pi(program, &support), facts)
}

fn pi_with_facts(program: &Program, facts: &[(Literal, Degree)]) -> bool {
    let extra: Vec<WeightedClause> = facts
        .iter()
        .map(|(l, d)| WeightedClause::fact(l.clone(), *d).expect("positive degree"))
        .collect();
    let clauses = program.pi().map(|(_, c)| c).chain(extra.iter());
    deduction::is_contradictory(clauses).is_some()
}

/// Dialectical analysis over one program, with memoized arguments and
/// defeaters. Create one per query evaluation.
pub struct Dialectics<'p> {
    base: ArgumentBase<'p>,
    node_cap: usize,
    defeaters: RefCell<HashMap<Argument, Rc<[DefeatRelation]>>>,
}

impl<'p> Dialectics<'p> {
    pub fn new(program: &'p Program) -> Self {
        Dialectics {
            base: ArgumentBase::new(program),
            node_cap: DEFAULT_NODE_CAP,
            defeaters: RefCell::default(),
        }
    }

    pub fn with_node_cap(mut self, cap: usize) -> Self {
        self.node_cap = cap;
        self
    }

    pub fn arguments(&self) -> &ArgumentBase<'p> {
        &self.base
    }

    pub fn program(&self) -> &'p Program {
        self.base.program()
    }

    /// Disagreement subarguments of `target` with respect to `attacker`.
    pub fn counterargues(&self, attacker: &Argument, target: &Argument) -> Vec<Argument> {
        let q1 = (attacker.conclusion().clone(), attacker.degree());
        self.base
            .subarguments(target)
            .iter()
            .filter(|s| {
                pi_with_facts(
                    self.program(),
                    &[q1.clone(), (s.conclusion().clone(), s.degree())],
                )
            })
            .cloned()
            .collect()
    }

    pub fn defeat(&self, attacker: &Argument, target: &Argument) -> Option<DefeatRelation> {
        let mut qualifying: Vec<Argument> = self
            .counterargues(attacker, target)
            .into_iter()
            .filter(|d| attacker.degree() >= d.degree())
            .collect();
        qualifying.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        let disagreement = qualifying.first()?.clone();
        let kind = if attacker.degree() > disagreement.degree() {
            DefeatKind::Proper
        } else {
            DefeatKind::Blocking
        };
        Some(DefeatRelation {
            attacker: attacker.clone(),
            target: target.clone(),
            disagreement,
            kind,
            qualifying,
        })
    }

    /// Every defeater of `target`, in child order: proper before blocking,
    /// stronger before weaker, then by argument identity.
    pub fn find_defeaters(&self, target: &Argument) -> Rc<[DefeatRelation]> {
        if let Some(found) = self.defeaters.borrow().get(target) {
            return found.clone();
        }
        let goals: BTreeSet<Literal> = self
            .base
            .subarguments(target)
            .iter()
            .map(|s| s.conclusion().complement())
            .collect();
        let mut candidates: BTreeSet<Argument> = BTreeSet::new();
        for g in &goals {
            candidates.extend(self.base.arguments_for(g).iter().cloned());
        }
        let mut found: Vec<DefeatRelation> = candidates
            .iter()
            .filter_map(|c| self.defeat(c, target))
            .collect();
        found.sort_by(|a, b| {
            a.kind
                .cmp(&b.kind)
                .then(b.attacker.degree().cmp(&a.attacker.degree()))
                .then_with(|| a.attacker.cmp(&b.attacker))
        });
        let found: Rc<[DefeatRelation]> = found.into();
        self.defeaters
            .borrow_mut()
            .insert(target.clone(), found.clone());
        found
    }

    /// Checks the constraints that involve the last entry of `entries`,
    /// assuming the prefix is acceptable. `kinds[i]` is the defeat kind
    /// linking `entries[i + 1]` to `entries[i]`.
    fn check_last(&self, entries: &[Argument], kinds: &[DefeatKind]) -> Result<(), Constraint> {
        let j = entries.len() - 1;
        let side = entries.iter().skip(j % 2).step_by(2);
        let (clauses, facts) = side_clauses(self.program(), side);
        if deduction::is_contradictory(clauses.into_iter().chain(facts.iter())).is_some() {
            return Err(Constraint::NonContradiction);
        }
        let last = &entries[j];
        if entries[..j].iter().any(|e| last.is_subargument_of(e)) {
            return Err(Constraint::NoCircularity);
        }
        if j >= 2 && kinds[j - 2] == DefeatKind::Blocking && kinds[j - 1] != DefeatKind::Proper {
            return Err(Constraint::Progressiveness);
        }
        Ok(())
    }

    /// Checks non-contradiction, non-circularity and progressiveness, and
    /// reports the first violation by position.
    pub fn is_acceptable_line(&self, line: &ArgumentationLine) -> Result<(), LineViolation> {
        let mut entries: Vec<Argument> = Vec::new();
        let mut kinds = Vec::new();
        for (index, arg) in line.entries.iter().enumerate() {
            if let Some(prev) = entries.last() {
                match self.defeat(arg, prev) {
                    Some(rel) => kinds.push(rel.kind),
                    None => {
                        return Err(LineViolation {
                            constraint: Constraint::Defeat,
                            index,
                        });
                    }
                }
            }
            entries.push(arg.clone());
            self.check_last(&entries, &kinds)
                .map_err(|constraint| LineViolation { constraint, index })?;
        }
        Ok(())
    }

    /// Builds and marks the dialectical tree rooted at `root`.
    ///
    /// With `pruning`, a node stops expanding children once one of them is
    /// marked U; the root's mark is the same either way.
    pub fn build_tree(&self, root: &Argument, pruning: bool) -> Result<DialecticalTree, TreeError> {
        let mut tree = DialecticalTree {
            nodes: vec![TreeNode {
                argument: root.clone(),
                parent: None,
                edge: None,
                disagreement: None,
                children: Vec::new(),
                mark: None,
            }],
        };
        let mut entries = vec![root.clone()];
        let mut kinds = Vec::new();
        self.expand(&mut tree, 0, &mut entries, &mut kinds, pruning)?;
        Ok(tree)
    }

    fn expand(
        &self,
        tree: &mut DialecticalTree,
        node: usize,
        entries: &mut Vec<Argument>,
        kinds: &mut Vec<DefeatKind>,
        pruning: bool,
    ) -> Result<Mark, TreeError> {
        let target = entries.last().expect("non-empty line");
        let defeaters = self.find_defeaters(target);
        let mut mark = Mark::U;
        for rel in defeaters.iter() {
            entries.push(rel.attacker.clone());
            kinds.push(rel.kind);
            if self.check_last(entries, kinds).is_ok() {
                if tree.nodes.len() >= self.node_cap {
                    return Err(TreeError::NodeCapExceeded { cap: self.node_cap });
                }
                let child = tree.nodes.len();
                tree.nodes.push(TreeNode {
                    argument: rel.attacker.clone(),
                    parent: Some(node),
                    edge: Some(rel.kind),
                    disagreement: Some(rel.disagreement.clone()),
                    children: Vec::new(),
                    mark: None,
                });
                tree.nodes[node].children.push(child);
                let child_mark = self.expand(tree, child, entries, kinds, pruning)?;
                if child_mark == Mark::U {
                    mark = Mark::D;
                }
            }
            entries.pop();
            kinds.pop();
            if pruning && mark == Mark::D {
                break;
            }
        }
        tree.nodes[node].mark = Some(mark);
        Ok(mark)
    }

    pub fn is_warranted(&self, argument: &Argument, pruning: bool) -> Result<bool, TreeError> {
        Ok(self.build_tree(argument, pruning)?.root_mark() == Some(Mark::U))
    }

    /// The strongest warranted argument for `goal`, if any.
    pub fn strongest_warranted(
        &self,
        goal: &Literal,
        pruning: bool,
    ) -> Result<Option<Argument>, TreeError> {
        let mut args: Vec<Argument> = self.base.arguments_for(goal).to_vec();
        args.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        for a in args {
            if self.is_warranted(&a, pruning)? {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    /// YES if the goal is warranted, NO if its complement is, UNDECIDED
    /// otherwise.
    pub fn answer(&self, goal: &Literal, pruning: bool) -> Result<Answer, TreeError> {
        if let Some(w) = self.strongest_warranted(goal, pruning)? {
            return Ok(Answer {
                verdict: Verdict::Yes,
                degree: Some(w.degree()),
                witness: Some(w),
            });
        }
        if let Some(w) = self.strongest_warranted(&goal.complement(), pruning)? {
            return Ok(Answer {
                verdict: Verdict::No,
                degree: Some(w.degree()),
                witness: Some(w),
            });
        }
        Ok(Answer {
            verdict: Verdict::Undecided,
            degree: None,
            witness: None,
        })
    }
}

pub fn counterargues(a1: &Argument, a2: &Argument, program: &Program) -> Vec<Argument> {
    Dialectics::new(program).counterargues(a1, a2)
}

pub fn defeat(a1: &Argument, a2: &Argument, program: &Program) -> Option<DefeatRelation> {
    Dialectics::new(program).defeat(a1, a2)
}

pub fn find_defeaters(program: &Program, target: &Argument) -> Vec<DefeatRelation> {
    Dialectics::new(program).find_defeaters(target).to_vec()
}

pub fn is_acceptable_line(
    program: &Program,
    line: &ArgumentationLine,
) -> Result<(), LineViolation> {
    Dialectics::new(program).is_acceptable_line(line)
}

pub fn build_tree(
    program: &Program,
    root: &Argument,
    pruning: bool,
) -> Result<DialecticalTree, TreeError> {
    Dialectics::new(program).build_tree(root, pruning)
}

pub fn is_warranted(program: &Program, argument: &Argument) -> Result<bool, TreeError> {
    Dialectics::new(program).is_warranted(argument, true)
}

pub fn answer(program: &Program, goal: &Literal) -> Result<Answer, TreeError> {
    Dialectics::new(program).answer(goal, true)
}
