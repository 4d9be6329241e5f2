//! Run every check on a list of types and print the report.
//!
//!     cargo run --release --example verify_theorems -- A3 C3 D4

use casimir_spectrum::cache::CharacterCache;
use casimir_spectrum::spectrum::{verify_theorems, SpectrumConfig};
use casimir_spectrum::RootSystem;

fn main() -> casimir_spectrum::Result<()> {
    let mut types: Vec<String> = std::env::args().skip(1).collect();
    if types.is_empty() {
        types = vec!["A2".into(), "B2".into(), "G2".into()];
    }
    let cache = CharacterCache::in_memory();
    for t in types {
        let rs = RootSystem::new(t.parse()?);
        let report = verify_theorems(&rs, &SpectrumConfig::default(), &cache)?;
        println!(
            "{} (observed p = {:?}): {}",
            report.cartan_type,
            report.observed_p,
            if report.passed() { "all pass" } else { "FAILED" }
        );
        for c in &report.checks {
            println!("  {:<26} {:<8} {}", c.id, format!("{:?}", c.status), c.detail);
        }
    }
    Ok(())
}
