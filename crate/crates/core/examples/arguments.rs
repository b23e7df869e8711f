//! Lists every argument for every literal of the engine program, with
//! its subarguments.
//!
//!     cargo run --example arguments

use pdelp::{load_program, ArgumentBase, Literal};

const ENGINE: &str = include_str!("../data/engine.pdelp");

fn main() {
    let program = load_program(ENGINE).expect("engine program is valid");
    let base = ArgumentBase::new(&program);

    for atom in program.atoms() {
        for goal in [Literal::positive(atom.clone()), Literal::negative(atom)] {
            for argument in base.arguments_for(&goal).iter() {
                println!("{argument}");
                for sub in base
                    .subarguments(argument)
                    .iter()
                    .filter(|s| *s != argument)
                {
                    println!("    sub {sub}");
                }
            }
        }
    }
}
