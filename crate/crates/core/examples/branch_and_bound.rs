//! Maximize Cas over i-element subsets of the weight basis of g, with and
//! without pruning, and list the maximizing subsets.
//!
//!     cargo run --release --example branch_and_bound -- C3 6

use std::time::Instant;

use casimir_spectrum::spectrum::mi_bruteforce_with;
use casimir_spectrum::RootSystem;

fn main() -> casimir_spectrum::Result<()> {
    let mut args = std::env::args().skip(1);
    let t = args.next().unwrap_or_else(|| "C3".into());
    let i: usize = args.next().map_or(6, |s| s.parse().expect("degree must be an integer"));
    let rs = RootSystem::new(t.parse()?);

    for prune in [true, false] {
        let start = Instant::now();
        let res = mi_bruteforce_with(&rs, i, 100_000_000, prune)?;
        println!(
            "prune = {prune:<5}  m_{i} = {}  ({} maximizers, {:?})",
            res.m,
            res.argmax.len(),
            start.elapsed()
        );
    }

    let res = mi_bruteforce_with(&rs, i, 100_000_000, true)?;
    for subset in res.argmax.iter().take(10) {
        let labels: Vec<String> = subset.iter().map(|l| l.to_string()).collect();
        println!("  {{{}}}", labels.join(", "));
    }
    for (w, count) in res.weight_sums(&rs) {
        println!("  sum {w} reached by {count} subsets");
    }
    Ok(())
}
