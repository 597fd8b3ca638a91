//! Parses a `.qrep` file, prints a summary and the canonical text.
//!
//!     cargo run --example qrep_round_trip -- corpus/counterex_f2.qrep

use qmob::cli::qrep::{parse, print};

fn main() -> qmob::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/a3_example.qrep").to_string());
    let text = std::fs::read_to_string(&path).map_err(|e| qmob::Error::Io(e.to_string()))?;
    let doc = parse(&text)?;
    let rep = &doc.rep;
    eprintln!(
        "{}: field {}, dims {:?}, thin {}, semisimple {}, socle {:?}, radical {:?}",
        doc.name.as_deref().unwrap_or("?"),
        rep.field(),
        rep.dimension_vector(),
        rep.is_thin(),
        rep.is_semisimple(),
        rep.socle().dims(),
        rep.radical().dims()
    );
    let canon = print(&doc);
    print!("{canon}");
    assert_eq!(parse(&canon)?, doc);
    Ok(())
}
