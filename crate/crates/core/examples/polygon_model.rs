//! Triangulations of a polygon as seeds of type A.
//!
//! ```text
//! cargo run --example polygon_model
//! ```

use cluster_core::polygon::{self, Triangulation};
use cluster_core::Error;

fn main() -> Result<(), Error> {
    let t: Triangulation = "3; d1=[1,3]; d2=[3,6]; d3=[4,6]".parse()?;
    let b = polygon::b_from_triangulation(&t)?;
    println!("{t}");
    for row in b.entries() {
        println!("  {row:?}");
    }
    for k in 0..t.rank() {
        let flipped = t.flip(k)?;
        println!("flip d{}: {flipped}  commutes with mutation: {}", k + 1, polygon::flip_mutation_commutes(&t, k)?);
    }
    for n in 1..=5 {
        let g = polygon::flip_graph(n)?;
        println!("{}-gon: {} triangulations, {} flips", n + 3, g.triangulations.len(), g.edges.len());
    }
    let r = polygon::plucker_verify(5, 10, 0)?;
    println!("Ptolemy relations: {} checked over {} random 2x8 matrices", r.quadruples_checked, r.trials);
    Ok(())
}
