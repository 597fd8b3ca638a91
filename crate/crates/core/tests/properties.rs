mod common;

use num_traits::Zero;
use proptest::prelude::*;
use qmob::exactmath::FieldSpec;
use qmob::lattice::{enumerate_subreps, is_orthocyclic, is_poset_orthogonal, DEFAULT_CAP};
use qmob::mobius::{mobius_rep, mobius_semisimple};
use qmob::quiver::Quiver;
use qmob::rep::{direct_sum, hom_dim, Representation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_rep(seed: u64, p: u64) -> Representation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::random_rep(&mut rng, FieldSpec::prime(p).unwrap(), 3, 2, 0.4)
}

/// Two random representations on one shared quiver.
fn small_pair(seed: u64, p: u64) -> (Representation, Representation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = FieldSpec::prime(p).unwrap();
    let q = common::random_acyclic_quiver(&mut rng, 3, 0.5);
    let mut one = || {
        use rand::Rng;
        let dims: Vec<usize> = (0..q.n_vertices()).map(|_| rng.gen_range(0..=1)).collect();
        let maps = common::random_maps(&mut rng, f, &q, &dims, 0.3);
        Representation::new(f, q.clone(), dims, maps, vec![]).unwrap()
    };
    (one(), one())
}

fn prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3u64)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sums_and_intersections_stay_in_the_lattice(seed in any::<u64>(), p in prime(), i in any::<usize>(), j in any::<usize>()) {
        let m = small_rep(seed, p);
        let l = enumerate_subreps(&m, DEFAULT_CAP).unwrap();
        let (a, b) = (l.element(i % l.len()), l.element(j % l.len()));
        let s = a.sum(b).unwrap();
        let t = a.intersect(b).unwrap();
        prop_assert!(s.is_closed_in(&m) && t.is_closed_in(&m));
        prop_assert_eq!(l.poset().join(l.index_of(a).unwrap(), l.index_of(b).unwrap()), l.index_of(&s));
        prop_assert_eq!(l.poset().meet(l.index_of(a).unwrap(), l.index_of(b).unwrap()), l.index_of(&t));
    }

    #[test]
    fn mobius_vanishes_exactly_off_semisimple(seed in any::<u64>(), p in prime()) {
        let m = small_rep(seed, p);
        let mu = enumerate_subreps(&m, DEFAULT_CAP).unwrap().mobius();
        prop_assert_eq!(mu.is_zero(), !m.is_semisimple());
        prop_assert_eq!(mu, mobius_rep(&m).unwrap().value);
    }

    #[test]
    fn upper_intervals_are_quotient_lattices(seed in any::<u64>(), p in prime(), i in any::<usize>()) {
        let m = small_rep(seed, p);
        let l = enumerate_subreps(&m, DEFAULT_CAP).unwrap();
        let u = l.element(i % l.len());
        let ui = l.index_of(u).unwrap();
        let (quot, pi) = m.quotient(u).unwrap();
        prop_assert!(pi.is_morphism(&m, &quot));
        let (interval, _) = l.poset().interval(ui, l.top()).unwrap();
        prop_assert_eq!(interval.size(), enumerate_subreps(&quot, DEFAULT_CAP).unwrap().len());
        prop_assert_eq!(l.poset().mobius_pair(ui, l.top()).unwrap(), mobius_rep(&quot).unwrap().value);
    }

    #[test]
    fn orthogonal_pairs_multiply(seed in any::<u64>(), p in prime()) {
        let (m, n) = small_pair(seed, p);
        let o = is_poset_orthogonal(&m, &n, DEFAULT_CAP).unwrap();
        let lm = enumerate_subreps(&m, DEFAULT_CAP).unwrap();
        let ln = enumerate_subreps(&n, DEFAULT_CAP).unwrap();
        if o.orthogonal {
            prop_assert_eq!(o.sum_size, lm.len() * ln.len());
            let sum = enumerate_subreps(&direct_sum(&m, &n).unwrap(), DEFAULT_CAP).unwrap();
            prop_assert_eq!(sum.mobius(), lm.mobius() * ln.mobius());
            prop_assert!(is_orthocyclic(&m, &n, DEFAULT_CAP).unwrap());
        } else {
            prop_assert!(o.sum_size > lm.len() * ln.len());
            prop_assert!(o.witness.is_some());
        }
    }

    #[test]
    fn semisimple_orthogonal_iff_disjoint_support(a in proptest::collection::vec(0usize..3, 3), b in proptest::collection::vec(0usize..2, 3), p in prime()) {
        let q = Quiver::from_triples(3, &[("x", 1, 2), ("y", 2, 3)]).unwrap();
        let f = FieldSpec::prime(p).unwrap();
        let m = Representation::semisimple(f, q.clone(), &a);
        let n = Representation::semisimple(f, q, &b);
        let disjoint = a.iter().zip(&b).all(|(x, y)| *x == 0 || *y == 0);
        prop_assert_eq!(is_poset_orthogonal(&m, &n, DEFAULT_CAP).unwrap().orthogonal, disjoint);
    }

    #[test]
    fn hom_dim_is_additive(seed in any::<u64>(), p in prime()) {
        let (m, n) = small_pair(seed, p);
        let (x, _) = small_pair(seed.wrapping_add(1), p);
        if x.quiver() == m.quiver() {
            let s = direct_sum(&m, &n).unwrap();
            prop_assert_eq!(hom_dim(&s, &x).unwrap(), hom_dim(&m, &x).unwrap() + hom_dim(&n, &x).unwrap());
            prop_assert_eq!(hom_dim(&x, &s).unwrap(), hom_dim(&x, &m).unwrap() + hom_dim(&x, &n).unwrap());
        }
        let s = direct_sum(&m, &n).unwrap();
        prop_assert_eq!(hom_dim(&s, &s).unwrap(),
            hom_dim(&m, &m).unwrap() + hom_dim(&m, &n).unwrap() + hom_dim(&n, &m).unwrap() + hom_dim(&n, &n).unwrap());
    }

    #[test]
    fn thread_count_does_not_change_the_lattice(seed in any::<u64>(), p in prime()) {
        let m = small_rep(seed, p);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| enumerate_subreps(&m, DEFAULT_CAP).unwrap());
        let b = four.install(|| enumerate_subreps(&m, DEFAULT_CAP).unwrap());
        prop_assert_eq!(a.elements(), b.elements());
        prop_assert_eq!(a.covers(), b.covers());
    }

    #[test]
    fn semisimple_formula_ignores_vertex_order(mut dims in proptest::collection::vec(0usize..5, 0..6), q in 2u64..8, k in any::<usize>()) {
        let before = mobius_semisimple(&dims, q).unwrap();
        if !dims.is_empty() {
            let len = dims.len();
            dims.rotate_left(k % len);
            dims.reverse();
        }
        prop_assert_eq!(mobius_semisimple(&dims, q).unwrap(), before);
    }
}
