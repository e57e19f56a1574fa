//! Runs every invariant suite over all parabolic subsets of a type given on
//! the command line (B3 by default).

use soergel::coxeter::CoxeterSystem;
use soergel::hecke::Hecke;
use soergel::verify::{all_subsets, run, BsSampling, Suite};

fn main() -> soergel::error::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let w = CoxeterSystem::named(&name)?;
    let hk = Hecke::new(&w);
    let report = run(&hk, &all_subsets(&w), &Suite::ALL, BsSampling::default());
    print!("{}", report.to_text());
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
