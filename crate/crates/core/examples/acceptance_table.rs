//! Runs the built-in checks and prints a pass/fail table.
//!
//! ```text
//! cargo run --release --example acceptance_table -- 1 2 8
//! ```

use cluster_core::verify::{self, Options};

fn main() {
    let ids: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { (1..=verify::criterion_count()).collect() } else { ids };
    let opts = Options::default();
    for id in ids {
        match verify::run_criterion(id, &opts) {
            Ok(r) => println!("{r}"),
            Err(e) => println!("criterion {id}: {e}"),
        }
    }
}
