//! Generalized associahedra from a support function.
//!
//! ```text
//! cargo run --example associahedron -- C3
//! ```

use cluster_core::assoc::{self, SupportFunction};
use cluster_core::graph::{self, Bounds};
use cluster_core::roots::RootSystem;
use cluster_core::Error;

fn main() -> Result<(), Error> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let rs = RootSystem::from_label(&label)?;
    let f = SupportFunction::half_sum_of_coroots(&rs)?;
    let p = assoc::build_polytope(&rs, &f, 1)?;
    let (v, e, facets) = (p.vertices.len(), p.edges.len(), p.facets().len());
    println!("{label}: {v} vertices, {e} edges, {facets} facets");
    print!("{}", p.h_text());
    let g = graph::explore(&rs.distinguished_seed(), Bounds::default())?;
    println!("1-skeleton matches exchange graph: {}", assoc::skeleton_matches_exchange_graph(&rs, &p, &g)?);
    Ok(())
}
