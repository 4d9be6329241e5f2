//! The maximal Casimir eigenvalue m_i on each exterior power, its
//! eigenspace M_i and which strategies confirmed it.
//!
//!     cargo run --release --example spectrum_table -- B3

use casimir_spectrum::cache::CharacterCache;
use casimir_spectrum::spectrum::{spectrum_table, SpectrumConfig};
use casimir_spectrum::RootSystem;

fn main() -> casimir_spectrum::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let rs = RootSystem::new(t.parse()?);
    let rows = spectrum_table(&rs, &SpectrumConfig::default(), &CharacterCache::in_memory())?;

    println!(
        "{}: n = {}, r = {}, l = {}",
        rs.cartan_type(),
        rs.dimension(),
        rs.num_positive_roots(),
        rs.rank()
    );
    for row in &rows {
        let comps: Vec<String> = row
            .highest_weights
            .iter()
            .map(|(w, m)| if *m == 1 { w.to_string() } else { format!("{m}x{w}") })
            .collect();
        let strategies: Vec<String> = row.strategies.iter().map(|s| s.to_string()).collect();
        println!(
            "{:>3}  {:>6}  {:>10}  {:<40} {}",
            row.i,
            row.m.to_string(),
            row.eigenspace_dim.to_string(),
            comps.join(" + "),
            strategies.join(",")
        );
    }
    Ok(())
}
