//! Kazhdan-Lusztig basis elements and polynomials, including the first
//! nontrivial polynomial in type A3.

use soergel::coxeter::CoxeterSystem;
use soergel::hecke::{Hecke, HeckeElt};

fn main() -> soergel::error::Result<()> {
    let w = CoxeterSystem::named("A2")?;
    let hk = Hecke::new(&w);
    let st = w.parse_element("s1.s2")?;
    println!("A2: H̲_st = {}", hk.kl_basis(st).to_text(&w));

    // H̲_s H̲_s = (v + v^-1) H̲_s
    let s = HeckeElt::basis(w.generator(0));
    let kl_s = hk.kl_basis(w.generator(0));
    println!("A2: H̲_s H̲_s = {}", hk.mult(kl_s, kl_s).to_text(&w));
    println!("A2: bar(H_s) = {}", hk.bar(&s).to_text(&w));

    let w = CoxeterSystem::named("A3")?;
    let hk = Hecke::new(&w);
    hk.fill_kl_table();
    println!("\nA3: KL polynomials with more than one term");
    for x in w.elements() {
        for y in w.elements() {
            let h = hk.kl_poly(y, x);
            if h.num_terms() > 1 {
                println!(
                    "  h_({}, {}) = {h}   mu = {}",
                    w.word_string(y),
                    w.word_string(x),
                    hk.mu(y, x)
                );
            }
        }
    }
    Ok(())
}
