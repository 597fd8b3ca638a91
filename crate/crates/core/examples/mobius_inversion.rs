//! Module-level Möbius inversion: g is the downward sum of some f, and
//! f(M) comes back from the sum over [rad M, M].

use num_bigint::BigInt;
use num_rational::BigRational;
use qmob::cli::qrep::parse;
use qmob::lattice::{enumerate_subreps, DEFAULT_CAP};
use qmob::mobius::{mobius_inversion_full, mobius_inversion_module};
use qmob::rep::Subrep;

fn main() -> qmob::Result<()> {
    let m = parse(include_str!("../corpus/a3_example_f2.qrep"))?.rep;
    let l = enumerate_subreps(&m, DEFAULT_CAP)?;
    // f(U) = (index of U)^2 - 3, an arbitrary integer function on L(M)
    let f: Vec<BigRational> = (0..l.len())
        .map(|i| BigRational::from_integer(BigInt::from(i * i) - 3))
        .collect();
    let g_table = l.poset().downward_sum(&f);
    let g = |u: &Subrep| g_table[l.index_of(u).expect("element")].clone();

    let interval = mobius_inversion_module(&m, g, DEFAULT_CAP)?;
    let full = mobius_inversion_full(&m, g, DEFAULT_CAP)?;
    println!("f(M) = {}, over [rad M, M]: {interval}, over L(M): {full}", f[l.top()]);
    println!("rad M = {:?}", m.radical().dims());
    Ok(())
}
