//! Counterarguments, defeaters and argumentation lines.
//!
//!     cargo run --example defeat

use pdelp::{load_program, ArgumentationLine, Dialectics};

const ENGINE: &str = include_str!("../data/engine.pdelp");

fn main() {
    let program = load_program(ENGINE).expect("engine program is valid");
    let engine = Dialectics::new(&program);
    let base = engine.arguments();

    for goal in ["engine_ok", "~fuel_ok", "oil_ok"] {
        for target in base.arguments_for(&goal.parse().unwrap()).iter() {
            println!("{target}");
            for rel in engine.find_defeaters(target).iter() {
                println!(
                    "    {} defeater {} at {}",
                    rel.kind, rel.attacker, rel.disagreement
                );
            }
        }
    }

    // A line that repeats part of an earlier argument is rejected.
    let arg = |ids: &[u32], goal: &str| {
        let support = ids.iter().map(|&i| pdelp::ClauseId(i)).collect();
        base.argument(&support, &goal.parse().unwrap())
            .expect("an argument")
    };
    let line = ArgumentationLine::new(vec![
        arg(&[6, 7, 8, 9, 10], "engine_ok"),
        arg(&[6, 13, 14], "~fuel_ok"),
        arg(&[15], "~low_speed"),
        arg(&[14], "low_speed"),
    ]);
    match engine.is_acceptable_line(&line) {
        Ok(()) => println!("\nline accepted"),
        Err(v) => println!("\nline rejected: {} at entry {}", v.constraint, v.index),
    }
}
