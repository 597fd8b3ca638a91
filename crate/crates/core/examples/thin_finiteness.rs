//! Random thin representations over the rationals have finite lattices;
//! adding a second dimension somewhere makes them infinite.

use qmob::exactmath::{FieldSpec, Mat};
use qmob::finiteness::decide_finiteness;
use qmob::quiver::{Arrow, Quiver};
use qmob::rep::Representation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rep(rng: &mut ChaCha8Rng, thin: bool) -> qmob::Result<Representation> {
    let n = rng.gen_range(2..=5);
    let mut arrows = Vec::new();
    for s in 1..=n {
        for t in s + 1..=n {
            if rng.gen_bool(0.4) {
                arrows.push(Arrow { name: format!("a{s}{t}"), source: s, target: t });
            }
        }
    }
    let q = Quiver::new(n, arrows)?;
    let mut dims: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
    if !thin {
        dims[rng.gen_range(0..n)] = 2;
    }
    let f = FieldSpec::rationals();
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target - 1], dims[a.source - 1]);
            let e: Vec<i64> = (0..r * c).map(|_| rng.gen_range(-2..=2)).collect();
            Mat::from_ints(f, r, c, &e)
        })
        .collect::<qmob::Result<Vec<_>>>()?;
    Representation::new(f, q, dims, maps, vec![])
}

fn main() -> qmob::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for thin in [true, false] {
        for _ in 0..4 {
            let m = random_rep(&mut rng, thin)?;
            let v = decide_finiteness(&m);
            let detail = match (&v.lattice, &v.witness) {
                (Some(l), _) => format!("{} submodules", l.len()),
                (_, Some(w)) => format!("S({})^{} in the socle of M/R_M({:?})", w.vertex, w.socle_dim(), w.sinking_set),
                _ => String::new(),
            };
            println!("{:?} -> {} {detail}", m.dimension_vector(), v.verdict);
        }
    }
    Ok(())
}
