//! Parses program text, reports syntax and validation problems, and
//! prints the canonical form of a valid program.
//!
//!     cargo run --example parse_and_check -- [file]

use pdelp::{load_program, serialize_program_with, Glyphs, LoadError};

const ENGINE: &str = include_str!("../data/engine.pdelp");

fn show(name: &str, text: &str) {
    match load_program(text) {
        Ok(program) => {
            println!(
                "{name}: valid, {} certain and {} uncertain clauses",
                program.pi_len(),
                program.delta_len()
            );
            print!("{}", serialize_program_with(&program, Glyphs::Unicode));
        }
        Err(LoadError::Parse(errors)) => {
            for e in errors.0 {
                println!("{name}:{e}");
            }
        }
        Err(LoadError::Invalid(report)) => {
            for v in report.violations {
                println!("{name}: {v}");
            }
        }
    }
    println!();
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        show(&path, &text);
        return;
    }
    show("engine", ENGINE);
    show("missing support", "(t <- p, 1).");
    show("certain conflict", "(q, 1). (~q, 1).");
    show("bad syntax", "(a, 0.5).\n(b <- , 0.5).\n(c, 0).");
}
