//! Parabolic KL polynomials and their inverses for one parabolic subset,
//! with the inversion formula checked on the spot.

use soergel::coxeter::CoxeterSystem;
use soergel::hecke::Hecke;
use soergel::parabolic::ParabolicModule;
use soergel::verify::check_inversion;

fn main() -> soergel::error::Result<()> {
    let w = CoxeterSystem::named("B3")?;
    let hk = Hecke::new(&w);
    let m = ParabolicModule::new(&hk, w.parse_subset("s1")?);
    println!(
        "B3, I = {}: |W^I| = {}, w_I = {}",
        m.subset(),
        m.reps().len(),
        w.word_string(m.w_i())
    );

    let top = *m.reps().last().unwrap();
    println!(
        "\nH̲^I_{} = {}",
        w.word_string(top),
        m.parabolic_kl_basis(top).to_text(&w)
    );

    println!("\ng^I_(x,z) of degree at least 3:");
    for &x in m.reps() {
        for &z in m.reps() {
            let g = m.inverse_parabolic_kl(x, z);
            if g.max_degree() >= Some(3) {
                println!("  g_({}, {}) = {g}", w.word_string(x), w.word_string(z));
            }
        }
    }

    let report = check_inversion(&m);
    println!(
        "\ninversion formula: {} identities checked, {} failed",
        report.checked, report.failed
    );
    Ok(())
}
