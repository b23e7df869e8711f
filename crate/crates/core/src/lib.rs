//! An interpreter for possibilistic defeasible logic programs.
//!
//! A program is a set of clauses `(head <- body, α)` where `α ∈ (0, 1]`
//! is a lower bound on the clause's necessity. Clauses with `α = 1` are
//! certain (Π), the rest uncertain (Δ). Queries are answered in three
//! layers:
//!
//! 1. [`deduction`] computes the maximum degree with which a literal
//!    follows from a clause set (generalized modus ponens, max-min
//!    fixpoint).
//! 2. [`arguments`] builds arguments: minimal subsets of Δ that together
//!    with Π derive a conclusion without contradiction.
//! 3. [`dialectics`] relates arguments by defeat, builds dialectical
//!    trees of acceptable argumentation lines, marks them U/D and answers
//!    `YES α`, `NO α` or `UNDECIDED`.
//!
//! ```
//! use pdelp::{answer, load_program, parse_query, Verdict};
//!
//! let program = load_program("(heat, 1). (~engine_ok <- heat, 0.95). (engine_ok, 0.3).").unwrap();
//! let a = answer(&program, &parse_query("engine_ok").unwrap()).unwrap();
//! assert_eq!(a.verdict, Verdict::No);
//! assert_eq!(a.degree.unwrap().to_string(), "0.95");
//! ```

pub mod arguments;
pub mod cli;
pub mod deduction;
pub mod dialectics;
pub mod oracle;
pub mod parser;
pub mod types;

pub use arguments::{build_arguments, is_argument, subarguments, Argument, ArgumentBase, Support};
pub use deduction::{
    best_proof, depends_on, is_contradictory, max_degree, ContradictionWitness, ProofTree,
};
pub use dialectics::{
    answer, build_tree, counterargues, defeat, find_defeaters, is_acceptable_line, is_warranted,
    mark_tree, Answer, ArgumentationLine, DefeatKind, DefeatRelation, DialecticalTree, Dialectics,
    Mark, Verdict,
};
pub use parser::{
    load_program, parse_program, parse_query, serialize_program, serialize_program_with, Glyphs,
    LoadError, ParseError, ParseErrorList, ParsedProgram, SourceSpan,
};
pub use types::{
    complement, validate_program, Atom, Clause, ClauseId, Degree, Literal, Program,
    ValidationReport, Violation, WeightedClause,
};
