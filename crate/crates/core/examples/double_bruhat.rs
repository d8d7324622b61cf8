//! Seeds from reduced words on double Bruhat cells of SL3.
//!
//! ```text
//! cargo run --example double_bruhat -- 1,2,1,2,1,-1,-2,-1
//! ```

use cluster_core::dbc::{self, ReducedWord};
use cluster_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Error> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "1,2,1,2,1,-1,-2,-1".into());
    let w = ReducedWord::parse(&word)?;
    println!("word {w}, ex = {:?}", w.ex());
    for (k, m) in w.minors().iter().enumerate() {
        println!("  f{} = {m}", k + 1);
    }
    for row in w.b_matrix() {
        println!("  {row:?}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = dbc::tp_sample(w.r() + 1, &mut rng);
    println!("totally positive sample passes the word test: {}", w.tp_test(&x)?);

    if w == dbc::sl3_w0w0_word() {
        let r = dbc::explore_sl3_double_cell(3, 1, 0)?;
        println!("{} seeds, {} cluster variables, principal part {}", r.seeds, r.cluster_variables, r.principal.verdict);
        for id in r.identified.iter().flatten() {
            println!("  {id}");
        }
    }
    Ok(())
}
