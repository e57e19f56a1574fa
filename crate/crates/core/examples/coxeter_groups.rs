//! Builds a few finite Coxeter groups and shows reduced words, Bruhat order
//! and minimal coset representatives.

use soergel::coxeter::{CoxeterSystem, Side};

fn main() -> soergel::error::Result<()> {
    for name in ["A3", "B3", "I2(5)", "D4", "A1xA2"] {
        let w = CoxeterSystem::named(name)?;
        println!(
            "{name}: order {}, longest element {}",
            w.order(),
            w.word_string(w.longest())
        );
    }

    let w = CoxeterSystem::named("A3")?;
    let x = w.parse_element("s2.s1.s3.s2")?;
    println!(
        "\nin A3, x = {} has length {}",
        w.word_string(x),
        w.length(x)
    );
    println!("right descents of x: {}", w.descents(x, Side::Right));
    let below: Vec<String> = w
        .elements()
        .filter(|&y| w.bruhat_lt(y, x) && w.length(y) + 1 == w.length(x))
        .map(|y| w.word_string(y))
        .collect();
    println!("elements covered by x: {}", below.join(", "));

    let subset = w.parse_subset("s1,s2")?;
    let reps: Vec<String> = w
        .min_reps(subset)
        .into_iter()
        .map(|r| w.word_string(r))
        .collect();
    println!("W^I for I = {subset}: {}", reps.join(", "));
    let (rep, rest) = w.coset_decompose(x, subset);
    println!("x = {} * {}", w.word_string(rep), w.word_string(rest));
    Ok(())
}
