//! Almost positive roots, the tau maps and cluster enumeration.
//!
//! ```text
//! cargo run --example root_systems -- B3
//! ```

use cluster_core::roots::{RootSystem, Sign};
use cluster_core::Error;

fn main() -> Result<(), Error> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let rs = RootSystem::from_label(&label)?;
    println!("{label}: h = {}, exponents {:?}", rs.coxeter_number(), rs.exponents());
    for (i, r) in rs.almost_positive_roots().iter().enumerate() {
        let (p, m) = (rs.root(rs.tau(Sign::Plus, i)), rs.root(rs.tau(Sign::Minus, i)));
        println!("  {:<14} tau+ -> {:<14} tau- -> {m}", r.to_string(), p.to_string());
    }
    println!("order of tau- tau+: {}", rs.tau_orbit_order());
    let clusters = rs.enumerate_clusters(1);
    println!("{} clusters (product formula: {})", clusters.len(), rs.count_clusters()?);
    for c in clusters.iter().take(5) {
        let names: Vec<String> = c.iter().map(|&i| rs.root(i).to_string()).collect();
        println!("  {{{}}}", names.join(", "));
    }
    Ok(())
}
