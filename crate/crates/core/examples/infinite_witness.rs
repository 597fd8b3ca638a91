//! The diamond example over the rationals: socle, socle series and the
//! quotient that exhibits infinitely many submodules. Over F_2 the same data
//! has a finite lattice.

use qmob::cli::qrep::parse;
use qmob::finiteness::{decide_finiteness, socle_series_counterexample_check};
use qmob::lattice::{enumerate_subreps, DEFAULT_CAP};

fn main() -> qmob::Result<()> {
    let m = parse(include_str!("../corpus/a3_example.qrep"))?.rep;
    println!("dims {:?}, socle {:?}", m.dimension_vector(), m.socle().dims());
    let (q, _) = m.quotient(&m.socle())?;
    println!("M/Soc M has dims {:?}", q.dimension_vector());

    let report = socle_series_counterexample_check(&m)?;
    for (layer, thin) in report.layers.iter().zip(&report.thin_layers) {
        println!("  socle layer {layer:?} thin={thin}");
    }
    let v = decide_finiteness(&m);
    println!("verdict {} ({})", v.verdict, v.reason);
    if let Some(w) = &v.witness {
        println!(
            "  vertex {}, sinking set {:?}, quotient {:?}, socle dimension there {}",
            w.vertex,
            w.sinking_set,
            w.quotient.dimension_vector(),
            w.socle_dim()
        );
    }

    let f2 = parse(include_str!("../corpus/a3_example_f2.qrep"))?.rep;
    let l = enumerate_subreps(&f2, DEFAULT_CAP)?;
    println!("over F_2: {} submodules, mu = {}", l.len(), l.mobius());
    Ok(())
}
