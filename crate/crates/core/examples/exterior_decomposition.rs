//! Decompose every exterior power of the adjoint module into irreducibles
//! and mark the components with the largest Casimir value.
//!
//!     cargo run --example exterior_decomposition -- A2

use casimir_spectrum::character::{decompose_character, exterior_power_characters};
use casimir_spectrum::RootSystem;

fn main() -> casimir_spectrum::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "A2".into());
    let rs = RootSystem::new(t.parse()?);
    let n = rs.dimension();

    for (i, ch) in exterior_power_characters(&rs, n).iter().enumerate() {
        let dec = decompose_character(&rs, ch)?;
        let top = dec
            .components()
            .keys()
            .map(|w| rs.casimir_eigenvalue(w))
            .max()
            .expect("nonzero");
        let parts: Vec<String> = dec
            .components()
            .iter()
            .map(|(w, m)| {
                let star = if rs.casimir_eigenvalue(w) == top { "*" } else { "" };
                if *m == 1 { format!("{w}{star}") } else { format!("{m}{w}{star}") }
            })
            .collect();
        println!("∧^{i:<2} dim {:<6} m = {:<5} {}", ch.total_mass(), top.to_string(), parts.join(" + "));
    }
    Ok(())
}
