//! Builds, marks and prints the dialectical tree of every argument for a
//! goal.
//!
//!     cargo run --example dialectical_tree -- [goal] [--no-prune]

use pdelp::{load_program, parse_query, DialecticalTree, Dialectics};

const ENGINE: &str = include_str!("../data/engine.pdelp");

fn print(tree: &DialecticalTree, node: usize, depth: usize) {
    let n = &tree.nodes[node];
    let edge = n.edge.map(|k| format!("{k} ")).unwrap_or_default();
    let mark = n.mark.map(|m| m.to_string()).unwrap_or_default();
    println!(
        "{:indent$}{edge}{} [{mark}]",
        "",
        n.argument,
        indent = depth * 4
    );
    for &c in &n.children {
        print(tree, c, depth + 1);
    }
}

fn main() {
    let mut args = std::env::args().skip(1);
    let goal = args.next().unwrap_or_else(|| "engine_ok".into());
    let pruning = !args.any(|a| a == "--no-prune");

    let program = load_program(ENGINE).expect("engine program is valid");
    let goal = parse_query(&goal).expect("goal is a literal");
    let engine = Dialectics::new(&program);

    for argument in engine.arguments().arguments_for(&goal).iter() {
        let tree = engine
            .build_tree(argument, pruning)
            .expect("tree within node cap");
        println!(
            "tree for {argument}: {} nodes, {} lines",
            tree.len(),
            tree.lines().len()
        );
        print(&tree, 0, 1);
    }
    println!(
        "answer: {}",
        engine.answer(&goal, pruning).expect("within node cap")
    );
}
