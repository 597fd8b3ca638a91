//! Möbius machinery on a plain finite poset: the seven-element lattice
//! shipped in the corpus, its dual, and a product with a chain.

use qmob::cli::qrep::parse_poset;
use qmob::poset::FinitePoset;

fn main() -> qmob::Result<()> {
    let text = include_str!("../corpus/lattice_7.poset");
    let (p, _) = parse_poset(text)?;
    let (bot, top) = (p.bottom().unwrap(), p.top().unwrap());
    for x in p.above(bot) {
        println!("mu(0, {:>2}) = {}", p.label(x), p.mobius_pair(bot, x)?);
    }
    // the coatom form of Weisner's identity needs modularity, which fails here
    for a in p.atoms()? {
        println!("Weisner at atom {}: {}", p.label(a), p.weisner_check(a)?);
    }
    println!("dual mu(1, 0) = {}", p.dual().mobius_pair(top, bot)?);

    let prod = p.product(&FinitePoset::chain(2));
    let (pb, pt) = (prod.bottom().unwrap(), prod.top().unwrap());
    println!("|P x C2| = {}, mu = {} (= 0 * -1)", prod.size(), prod.mobius_pair(pb, pt)?);
    Ok(())
}
