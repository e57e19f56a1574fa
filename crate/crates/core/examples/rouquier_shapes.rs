//! Shapes of the Rouquier complexes F_x^I and E_x^I, and the characters
//! they categorify.

use soergel::coxeter::CoxeterSystem;
use soergel::hecke::Hecke;
use soergel::parabolic::ParabolicModule;
use soergel::rouquier::{euler_hom, ComplexShape};

fn main() -> soergel::error::Result<()> {
    let w = CoxeterSystem::named("A3")?;
    let hk = Hecke::new(&w);
    let m = ParabolicModule::new(&hk, w.parse_subset("s1,s3")?);
    let x = w.parse_element("s2.s1.s3.s2")?;

    let f = ComplexShape::f_shape(&m, x);
    let e = ComplexShape::e_shape(&m, x);
    println!(
        "F_x for x = {} over I = {}:\n{}",
        w.word_string(x),
        m.subset(),
        f.to_text(&w)
    );
    println!("E_x:\n{}", e.to_text(&w));
    println!("ch(F_x) = {}", f.character(&m).to_text(&w));
    println!("ch(E_x) = {}", e.character(&m).to_text(&w));

    let y = w.parse_element("s1.s3.s2")?;
    let e_y = ComplexShape::e_shape(&m, y);
    println!(
        "\nEuler characteristic of Hom(F_x, E_x) = {}",
        euler_hom(&m, &f, &e)?
    );
    println!(
        "Euler characteristic of Hom(F_x, E_y) = {}",
        euler_hom(&m, &f, &e_y)?
    );
    Ok(())
}
