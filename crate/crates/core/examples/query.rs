//! Answers a query for every literal of a program.
//!
//!     cargo run --example query -- [file]

use pdelp::{load_program, Dialectics, Literal};

const ENGINE: &str = include_str!("../data/engine.pdelp");

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => ENGINE.to_string(),
    };
    let program = load_program(&text).unwrap_or_else(|e| panic!("{e}"));
    let engine = Dialectics::new(&program);

    for atom in program.atoms() {
        for goal in [Literal::positive(atom.clone()), Literal::negative(atom)] {
            let answer = engine.answer(&goal, true).expect("within node cap");
            let witness = answer
                .witness
                .as_ref()
                .map(|w| w.support().to_string())
                .unwrap_or_default();
            println!(
                "{:<12} {:<10} {witness}",
                goal.to_string(),
                answer.to_string()
            );
        }
    }
}
