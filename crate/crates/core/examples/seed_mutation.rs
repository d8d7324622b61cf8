//! Mutating a seed with frozen rows and reading off denominator vectors.
//!
//! ```text
//! cargo run --example seed_mutation
//! ```

use cluster_core::{Error, ExtendedExchangeMatrix, Seed};

fn main() -> Result<(), Error> {
    // Two exchangeable variables and one frozen coefficient.
    let b = ExtendedExchangeMatrix::validate(vec![vec![0, 1], vec![-1, 0], vec![1, -1]], vec![0, 1])?;
    let mut seed = Seed::initial(b);
    for k in [0, 1, 0, 1, 0] {
        seed = seed.mutate(k)?;
        let cluster: Vec<String> = seed.cluster().iter().map(|v| v.to_string()).collect();
        let dens: Vec<Vec<i64>> = seed
            .cluster()
            .iter()
            .map(|v| v.denominator_vector(&[0, 1]).map(|d| d.0))
            .collect::<Result<_, _>>()?;
        println!("mu_{}: {:?}  denominators {:?}", k + 1, cluster, dens);
    }
    println!("{}", serde_json::to_string_pretty(&seed.to_json()).unwrap());
    Ok(())
}
