//! A non-thin representation of the 2-cycle whose submodules form a chain.

use qmob::cli::qrep::parse;
use qmob::finiteness::decide_finiteness;
use qmob::lattice::{enumerate_subreps, DEFAULT_CAP};

fn main() -> qmob::Result<()> {
    for text in [
        include_str!("../corpus/counterex_f2.qrep"),
        include_str!("../corpus/counterex_f3.qrep"),
    ] {
        let m = parse(text)?.rep;
        let l = enumerate_subreps(&m, DEFAULT_CAP)?;
        let chain: Vec<String> = l.elements().iter().map(|u| format!("{:?}", u.dims())).collect();
        println!("F_{}: {} (mu = {})", m.field(), chain.join(" < "), l.mobius());
    }
    let inf = parse(include_str!("../corpus/counterex_infinite.qrep"))?.rep;
    let v = decide_finiteness(&inf);
    println!("over the rationals: {} ({})", v.verdict, v.reason);
    Ok(())
}
