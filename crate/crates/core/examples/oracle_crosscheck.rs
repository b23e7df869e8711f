//! Compares the engine with the brute-force oracle on random programs.
//!
//!     cargo run --example oracle_crosscheck -- [count] [seed]

use pdelp::{
    build_arguments, max_degree, oracle, Atom, Clause, Degree, Literal, Program, WeightedClause,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_program(rng: &mut impl Rng) -> Option<Program> {
    let atoms = rng.gen_range(1..=5);
    let n = rng.gen_range(1..=10);
    let heads: Vec<Literal> = (0..n)
        .map(|_| Literal {
            atom: Atom::new(&format!("p{}", rng.gen_range(0..atoms))).unwrap(),
            negated: rng.gen_bool(0.3),
        })
        .collect();
    let clauses = heads
        .iter()
        .map(|h| {
            let body = heads
                .iter()
                .filter(|b| *b != h && rng.gen_bool(0.2))
                .take(2)
                .cloned()
                .collect();
            let tenths = rng.gen_range(1..=10);
            WeightedClause::new(
                Clause::new(h.clone(), body),
                Degree::new(tenths, 10).unwrap(),
            )
            .unwrap()
        })
        .collect();
    Program::new(clauses).ok()
}

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map_or(200, |a| a.parse().expect("count"));
    let seed: u64 = args.next().map_or(7, |a| a.parse().expect("seed"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let (mut programs, mut goals) = (0, 0);
    while programs < count {
        let Some(program) = random_program(&mut rng) else {
            continue;
        };
        let all: Vec<_> = program.clauses().map(|(_, c)| c).collect();
        for atom in program.atoms() {
            for goal in [Literal::positive(atom.clone()), Literal::negative(atom)] {
                assert_eq!(
                    max_degree(all.iter().copied(), &goal),
                    oracle::oracle_max_degree(&all, &goal).unwrap()
                );
                let ours: Vec<_> = build_arguments(&program, &goal)
                    .into_iter()
                    .map(|a| (a.support().clone(), a.degree()))
                    .collect();
                assert_eq!(
                    ours,
                    oracle::oracle_arguments(&program, &goal).unwrap(),
                    "{goal} in\n{}",
                    pdelp::serialize_program(&program)
                );
                goals += 1;
            }
        }
        programs += 1;
    }
    println!("{programs} programs, {goals} goals: engine and oracle agree");
}
