//! Bounded exploration of exchange graphs, with a DOT export.
//!
//! ```text
//! cargo run --example exchange_graph -- 1 3
//! ```

use cluster_core::graph::{self, Bounds};
use cluster_core::{Error, Seed};

fn main() -> Result<(), Error> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (b, c) = match args[..] {
        [b, c] => (b, c),
        _ => (1, 2),
    };
    let g = graph::explore(&Seed::rank2(b, c)?, Bounds::seeds(200))?;
    println!("A({b},{c}): {} seeds, {} edges, complete: {}", g.len(), g.edges().len(), g.is_complete());
    if g.is_complete() {
        for (v, d) in graph::denominator_table(&g)? {
            println!("  {:<40} {:?}", v.to_string(), d.entries());
        }
        print!("{}", g.to_dot());
    }
    Ok(())
}
