//! Command implementations behind the `pdelp` binary.
//!
//! Each command returns an [`Output`] instead of printing, so the binary
//! stays a thin wrapper and the commands can be tested in-process.

use std::path::Path;

use serde::Serialize;

use crate::dialectics::{Dialectics, ExportNode, TreeError, Verdict, DEFAULT_NODE_CAP};
use crate::parser::{parse_program, parse_query, ParsedProgram};
use crate::types::{Literal, Program};

/// Schema tag carried by JSON tree documents.
pub const TREE_SCHEMA: &str = "pdelp-tree/1";

/// Environment variable overriding the tree node cap.
pub const NODE_CAP_VAR: &str = "PDELP_NODE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// Success, or a YES answer.
    Success = 0,
    No = 1,
    Undecided = 2,
    Invalid = 3,
    ParseError = 4,
    ResourceCap = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

impl From<Verdict> for ExitStatus {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Yes => ExitStatus::Success,
            Verdict::No => ExitStatus::No,
            Verdict::Undecided => ExitStatus::Undecided,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: ExitStatus,
}

impl Output {
    fn ok(stdout: String, status: ExitStatus) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            status,
        }
    }

    fn fail(stderr: String, status: ExitStatus) -> Self {
        Output {
            stdout: String::new(),
            stderr,
            status,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TreeFormat {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub prune: bool,
    pub node_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            prune: true,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

/// Node cap from [`NODE_CAP_VAR`], if set to a positive integer.
pub fn node_cap_from_env() -> Result<Option<usize>, String> {
    match std::env::var(NODE_CAP_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!(
                "{NODE_CAP_VAR} must be a positive integer, got `{v}`"
            )),
        },
        Err(_) => Ok(None),
    }
}

fn read(path: &Path) -> Result<String, Output> {
    std::fs::read_to_string(path)
        .map_err(|e| Output::fail(format!("{}: {e}\n", path.display()), ExitStatus::ParseError))
}

fn parse(path: &Path, text: &str) -> Result<ParsedProgram, Output> {
    parse_program(text).map_err(|errs| {
        let msg: String = errs
            .0
            .iter()
            .map(|e| format!("{}:{e}\n", path.display()))
            .collect();
        Output::fail(msg, ExitStatus::ParseError)
    })
}

fn load(path: &Path) -> Result<Program, Output> {
    let text = read(path)?;
    parse(path, &text)?.validate().map_err(|report| {
        let msg: String = report
            .violations
            .iter()
            .map(|v| format!("{}: {v}\n", path.display()))
            .collect();
        Output::fail(msg, ExitStatus::Invalid)
    })
}

fn goal(text: &str) -> Result<Literal, Output> {
    parse_query(text).map_err(|e| Output::fail(format!("query:{e}\n"), ExitStatus::ParseError))
}

fn cap_error(e: TreeError) -> Output {
    Output::fail(format!("{e}\n"), ExitStatus::ResourceCap)
}

/// `pdelp check <file>`
pub fn cmd_check(path: &Path) -> Output {
    let text = match read(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let parsed = match parse(path, &text) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let (pi, delta) = (parsed.pi().len(), parsed.delta().len());
    match parsed.validate() {
        Ok(_) => Output::ok(
            format!("valid: |\u{3a0}|={pi} |\u{394}|={delta}\n"),
            ExitStatus::Success,
        ),
        Err(report) => {
            let mut out = format!("invalid: |\u{3a0}|={pi} |\u{394}|={delta}\n");
            for v in &report.violations {
                out.push_str(&format!("  {v}\n"));
            }
            Output::ok(out, ExitStatus::Invalid)
        }
    }
}

#[derive(Serialize)]
struct QueryRecord {
    goal: String,
    verdict: Verdict,
    degree: Option<String>,
    witness: Option<Vec<u32>>,
}

/// `pdelp query <file> <goal> [--json] [--no-prune]`
pub fn cmd_query(path: &Path, goal_text: &str, json: bool, options: Options) -> Output {
    let program = match load(path) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let goal = match goal(goal_text) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let engine = Dialectics::new(&program).with_node_cap(options.node_cap);
    let answer = match engine.answer(&goal, options.prune) {
        Ok(a) => a,
        Err(e) => return cap_error(e),
    };
    let stdout = if json {
        let record = QueryRecord {
            goal: goal.to_string(),
            verdict: answer.verdict,
            degree: answer.degree.map(|d| d.to_string()),
            witness: answer
                .witness
                .as_ref()
                .map(|w| w.support().ids().iter().map(|id| id.0).collect()),
        };
        serde_json::to_string(&record).expect("serializable record") + "\n"
    } else {
        format!("{answer}\n")
    };
    Output::ok(stdout, answer.verdict.into())
}

#[derive(Serialize)]
struct TreeDocument {
    schema: &'static str,
    goal: String,
    trees: Vec<ExportNode>,
}

/// `pdelp tree <file> <goal> [--format dot|json] [--no-prune]`
///
/// One tree per argument for the goal.
pub fn cmd_tree(path: &Path, goal_text: &str, format: TreeFormat, options: Options) -> Output {
    let program = match load(path) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let goal = match goal(goal_text) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let engine = Dialectics::new(&program).with_node_cap(options.node_cap);
    let arguments = engine.arguments().arguments_for(&goal);
    if arguments.is_empty() {
        return Output::fail(format!("no argument for {goal}\n"), ExitStatus::Undecided);
    }
    let mut trees = Vec::new();
    for a in arguments.iter() {
        match engine.build_tree(a, options.prune) {
            Ok(t) => trees.push(t),
            Err(e) => return cap_error(e),
        }
    }
    let stdout = match format {
        TreeFormat::Json => {
            let doc = TreeDocument {
                schema: TREE_SCHEMA,
                goal: goal.to_string(),
                trees: trees.iter().map(|t| t.export()).collect(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable tree") + "\n"
        }
        TreeFormat::Dot => trees
            .iter()
            .enumerate()
            .map(|(i, t)| t.to_dot(&format!("tree{}", i + 1)))
            .collect(),
    };
    Output::ok(stdout, ExitStatus::Success)
}
