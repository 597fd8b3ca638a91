//! Poset-orthogonality and orthocyclicity on the quiver 1 <- 2 -> 3.

use qmob::cli::qrep::parse;
use qmob::lattice::{enumerate_subreps, is_orthocyclic, is_poset_orthogonal, DEFAULT_CAP};
use qmob::rep::hom_dim;

fn main() -> qmob::Result<()> {
    let l = parse(include_str!("../corpus/ortho_l_f2.qrep"))?.rep;
    let m = parse(include_str!("../corpus/ortho_m_f2.qrep"))?.rep;
    let n = parse(include_str!("../corpus/ortho_n_f2.qrep"))?.rep;
    let mp = parse(include_str!("../corpus/ortho_m_prime_f2.qrep"))?.rep;

    println!("Hom(N,M) = {}, Hom(M,N) = {}, Hom(M',N) = {}", hom_dim(&n, &m)?, hom_dim(&m, &n)?, hom_dim(&mp, &n)?);

    for (name, a, b) in [("L,M", &l, &m), ("M,N", &m, &n)] {
        let o = is_poset_orthogonal(a, b, DEFAULT_CAP)?;
        let la = enumerate_subreps(a, DEFAULT_CAP)?.len();
        let lb = enumerate_subreps(b, DEFAULT_CAP)?.len();
        println!(
            "{name}: poset-orthogonal {}, orthocyclic {}, |L(sum)| = {} vs {la}*{lb}",
            o.orthogonal,
            is_orthocyclic(a, b, DEFAULT_CAP)?,
            o.sum_size
        );
        if let Some(w) = o.witness {
            let bases: Vec<String> = w.spaces().iter().map(|s| s.basis().to_string()).collect();
            println!("  non-split submodule: dims {:?}, bases {}", w.dims(), bases.join(" "));
        }
    }
    Ok(())
}
