//! The restricted Bott-Samelson bimodule for the word (s1, s2, s3) over
//! I = {s1, s2} in type A3. Its character has a coefficient v + v^-1, so
//! the bimodule is not perverse.

use soergel::coxeter::CoxeterSystem;
use soergel::hecke::Hecke;
use soergel::parabolic::ParabolicModule;
use soergel::soergel::{bott_samelson_char, support_graded_ranks};

fn main() -> soergel::error::Result<()> {
    let w = CoxeterSystem::named("A3")?;
    let hk = Hecke::new(&w);
    let m = ParabolicModule::new(&hk, w.parse_subset("s1,s2")?);
    let ch = bott_samelson_char(&m, &[0, 1, 2]);
    print!("{}", ch.to_text(&w));
    println!("perverse: {}", ch.is_perverse());

    let standard = ch.to_parabolic(&m);
    println!("\nin the standard basis: {}", standard.to_text(&w));
    for (x, rank) in support_graded_ranks(&m, &standard) {
        println!("  subquotient at {}: graded rank {rank}", w.word_string(x));
    }
    Ok(())
}
