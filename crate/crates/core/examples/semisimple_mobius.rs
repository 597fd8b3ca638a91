//! Brute-force Möbius values of S^t against (-1)^t q^(t(t-1)/2).

use qmob::exactmath::FieldSpec;
use qmob::lattice::{enumerate_subreps, DEFAULT_CAP};
use qmob::mobius::{count_simple_submodules, mobius_power};
use qmob::quiver::Quiver;
use qmob::rep::Representation;

fn main() -> qmob::Result<()> {
    let point = Quiver::new(1, vec![])?;
    println!("{:>2} {:>2} {:>6} {:>6} {:>10} {:>10}", "q", "t", "|L|", "atoms", "brute", "closed");
    for q in [2u64, 3, 5] {
        for t in 1..=4u32 {
            let m = Representation::semisimple(FieldSpec::prime(q)?, point.clone(), &[t as usize]);
            let l = enumerate_subreps(&m, DEFAULT_CAP)?;
            assert_eq!(l.mobius(), mobius_power(q, t));
            assert_eq!(num_bigint::BigInt::from(l.atoms().len()), count_simple_submodules(q, t)?);
            println!(
                "{q:>2} {t:>2} {:>6} {:>6} {:>10} {:>10}",
                l.len(),
                l.atoms().len(),
                l.mobius(),
                mobius_power(q, t)
            );
        }
    }
    Ok(())
}
