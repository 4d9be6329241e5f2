//! Ad-nilpotent ideals of a Borel subalgebra, as upper sets of the
//! positive-root poset. Their number is the Catalan number of the Weyl group.
//!
//!     cargo run --example ideal_enumeration

use casimir_spectrum::ideals::{
    enumerate_ideals, ideal_counts_by_size, ideal_weight_sum, verify_weight_sum_injectivity,
};
use casimir_spectrum::{CartanType, RootSystem};

fn main() -> casimir_spectrum::Result<()> {
    for t in ["A2", "A3", "A4", "B3", "C3", "D4", "G2", "F4", "E6"] {
        let rs = RootSystem::new(t.parse::<CartanType>()?);
        let counts = ideal_counts_by_size(&rs);
        let total: usize = counts.iter().sum();
        println!(
            "{t}: {total:>4} ideals, injective sums: {}, by size {counts:?}",
            verify_weight_sum_injectivity(&rs)
        );
    }

    let b2 = RootSystem::new("B2".parse()?);
    println!("\nideals of B2 with their weight sums and Casimir values:");
    for ideal in enumerate_ideals(&b2, None)? {
        let sum = ideal_weight_sum(&b2, &ideal);
        println!("  {:<22} {:<8} Cas = {}", ideal.to_json(&b2).to_string(), sum, b2.casimir_eigenvalue(&sum));
    }
    Ok(())
}
