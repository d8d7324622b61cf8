//! Deciding finite type from an exchange matrix.
//!
//! ```text
//! cargo run --example classify
//! ```

use cluster_core::graph::{self, Bounds};
use cluster_core::Error;

fn main() -> Result<(), Error> {
    let cases: [(&str, Vec<Vec<i64>>); 4] = [
        ("oriented 3-cycle", vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]),
        ("Kronecker", vec![vec![0, 2], vec![-2, 0]]),
        ("B2 orientation", vec![vec![0, 1], vec![-2, 0]]),
        ("Markov", vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]]),
    ];
    for (name, b) in cases {
        let r = graph::classify_finite_type(&b, Bounds::default())?;
        println!("{name:<18} {}  (explored {}, path {:?})", r.verdict, r.explored, r.path);
    }
    Ok(())
}
