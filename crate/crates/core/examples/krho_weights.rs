//! The weights of V_{k rho} are exactly the sums k rho - sum c_a a over
//! positive roots with 0 <= c_a <= k. Compare that box product with
//! Freudenthal's recursion.
//!
//!     cargo run --example krho_weights -- B3 2

use casimir_spectrum::character::{irreducible_character, krho_box_character};
use casimir_spectrum::RootSystem;

fn main() -> casimir_spectrum::Result<()> {
    let mut args = std::env::args().skip(1);
    let t = args.next().unwrap_or_else(|| "B3".into());
    let k: u32 = args.next().map_or(2, |s| s.parse().expect("k must be a nonnegative integer"));
    let rs = RootSystem::new(t.parse()?);

    let lambda = rs.rho().scale(k as i32);
    let boxed = krho_box_character(&rs, k);
    let exact = irreducible_character(&rs, &lambda)?;

    println!("V_{lambda} of {}", rs.cartan_type());
    println!("  box product: {} distinct weights, total mass {}", boxed.len(), boxed.total_mass());
    println!("  Freudenthal: {} distinct weights, total mass {}", exact.len(), exact.total_mass());
    println!("  (k+1)^r = {}", (k as u128 + 1).pow(rs.num_positive_roots() as u32));
    println!("  equal: {}", boxed == exact);

    println!("dominant weights with multiplicities:");
    let mut dominant: Vec<_> = exact.iter().filter(|(w, _)| w.is_dominant()).collect();
    dominant.sort();
    for (w, m) in dominant {
        println!("  {w:<12} {m}");
    }
    Ok(())
}
