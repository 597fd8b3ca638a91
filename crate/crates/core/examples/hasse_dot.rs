//! Writes the Hasse diagram of L(S^2) over F_3 in Graphviz syntax.
//!
//!     cargo run --example hasse_dot | dot -Tsvg > hasse.svg

use qmob::cli::qrep::parse;
use qmob::lattice::{enumerate_subreps, DEFAULT_CAP};

fn main() -> qmob::Result<()> {
    let m = parse(include_str!("../corpus/s1_pow2_f3.qrep"))?.rep;
    print!("{}", enumerate_subreps(&m, DEFAULT_CAP)?.to_dot());
    Ok(())
}
