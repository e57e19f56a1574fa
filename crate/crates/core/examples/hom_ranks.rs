//! Graded ranks of Hom spaces between singular Soergel bimodules,
//! computed from characters.

use soergel::coxeter::CoxeterSystem;
use soergel::hecke::Hecke;
use soergel::parabolic::ParabolicModule;
use soergel::soergel::{graded_hom_rank, Character};

fn main() -> soergel::error::Result<()> {
    let w = CoxeterSystem::named("A3")?;
    let hk = Hecke::new(&w);
    let m = ParabolicModule::new(&hk, w.parse_subset("s1,s3")?);
    let reps = m.reps();
    println!("graded rank of Hom(B_x, B_y) in A3 over I = {}", m.subset());
    for &x in reps {
        for &y in reps {
            let rank = graded_hom_rank(
                &m,
                &Character::delta(m.subset(), x),
                &Character::delta(m.subset(), y),
            )?;
            println!("  {:<12} {:<12} {rank}", w.word_string(x), w.word_string(y));
        }
    }
    Ok(())
}
