//! Maximum degrees of deduction, best proofs and contradiction witnesses.
//!
//!     cargo run --example degrees

use pdelp::{best_proof, is_contradictory, load_program, max_degree, parse_program, ProofTree};

const ENGINE: &str = include_str!("../data/engine.pdelp");

fn print_proof(proof: &ProofTree, depth: usize) {
    println!(
        "{:indent$}{} via {}",
        "",
        proof.conclusion,
        proof.rule,
        indent = depth * 2
    );
    for p in &proof.premises {
        print_proof(p, depth + 1);
    }
}

fn main() {
    let program = load_program(ENGINE).expect("engine program is valid");
    let all: Vec<_> = program.clauses().map(|(_, c)| c).collect();

    for goal in ["fuel_ok", "~fuel_ok", "oil_ok", "engine_ok", "~engine_ok"] {
        let goal = goal.parse().unwrap();
        println!("|{goal}| = {}", max_degree(all.iter().copied(), &goal));
    }

    let goal = "engine_ok".parse().unwrap();
    let proof = best_proof(all.iter().copied(), &goal).expect("engine_ok is derivable");
    println!("\nbest proof of {goal} at {}:", proof.degree);
    print_proof(&proof, 1);

    // The whole program is contradictory even though Π alone is not.
    match is_contradictory(all.iter().copied()) {
        Some(w) => println!(
            "\nprogram: {} at {} and ~{} at {}",
            w.atom, w.degree_pos, w.atom, w.degree_neg
        ),
        None => println!("\nprogram: consistent"),
    }

    let gamma = parse_program("(p <- q, 0.5). (~p <- q & r, 0.3). (q, 0.2). (r, 1).")
        .unwrap()
        .clauses;
    println!(
        "gamma contradictory: {:?}",
        is_contradictory(&gamma).map(|w| w.atom)
    );
    println!(
        "gamma without (r, 1): {:?}",
        is_contradictory(&gamma[..3]).map(|w| w.atom)
    );
}
