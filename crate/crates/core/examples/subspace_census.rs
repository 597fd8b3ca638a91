//! Counts the subspaces of F_p^n by dimension and compares with the Gaussian
//! binomials.
//!
//!     cargo run --example subspace_census -- 4 3

use qmob::exactmath::{enumerate_subspaces, gaussian_binomial};

fn main() -> qmob::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, p) = match args[..] {
        [n, p] => (n as usize, p),
        _ => (4, 3),
    };
    let mut by_dim = vec![0u64; n + 1];
    for s in enumerate_subspaces(n, p, 1_000_000)? {
        by_dim[s?.dim()] += 1;
    }
    println!("subspaces of F_{p}^{n}");
    for (l, count) in by_dim.iter().enumerate() {
        let expected = gaussian_binomial(n as u32, l as u32, p)?;
        println!("  dim {l}: {count:>6}   [{n} {l}]_{p} = {expected}");
    }
    Ok(())
}
