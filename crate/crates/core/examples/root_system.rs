//! Root data of a simple Lie algebra: Cartan matrix, positive roots, rho,
//! the Killing-normalized form and a few Casimir values.
//!
//!     cargo run --example root_system -- G2

use casimir_spectrum::{Rational, RootSystem};

fn main() -> casimir_spectrum::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::new(t.parse()?);

    println!("{}: rank {}, dim {}", rs.cartan_type(), rs.rank(), rs.dimension());
    println!("Cartan matrix:");
    for row in rs.cartan_matrix() {
        println!("  {row:?}");
    }

    println!("{} positive roots (fundamental / simple coordinates):", rs.num_positive_roots());
    for (root, simple) in rs.positive_roots().iter().zip(rs.positive_root_coords()) {
        println!("  {root:<14} {simple:?}");
    }
    println!("highest root {}", rs.highest_root());

    let n = rs.dimension() as i64;
    println!("rho = {}, (rho, rho) = {} = n/24 = {}", rs.rho(), rs.norm_sq(rs.rho()), Rational::new(n, 24));

    for w in rs.simple_roots().iter().chain([rs.highest_root(), &rs.rho().scale(2)]) {
        println!("Cas({w}) = {}   dim V = {}", rs.casimir_eigenvalue(w), rs.weyl_dim(&rs.dominant_representative(w))?);
    }
    Ok(())
}
