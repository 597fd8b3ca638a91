#![allow(dead_code)]

use std::path::PathBuf;

use qmob::cli::qrep::{parse, QrepDocument};
use qmob::exactmath::{FieldSpec, Mat};
use qmob::quiver::{Arrow, Quiver};
use qmob::rep::Representation;
use rand::Rng;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Every `.qrep` document in the corpus, sorted by file name.
pub fn corpus() -> Vec<(String, QrepDocument)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "qrep"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let doc = parse(&std::fs::read_to_string(&p).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, doc)
        })
        .collect()
}

pub fn load(name: &str) -> Representation {
    parse(&std::fs::read_to_string(corpus_dir().join(name)).unwrap())
        .unwrap()
        .rep
}

/// A random acyclic quiver on `2..=max_vertices` vertices, arrows pointing
/// from smaller to larger index (possibly parallel).
pub fn random_acyclic_quiver<R: Rng>(rng: &mut R, max_vertices: usize, density: f64) -> Quiver {
    let n = rng.gen_range(1..=max_vertices);
    let mut arrows = Vec::new();
    for s in 1..=n {
        for t in s + 1..=n {
            let copies = if rng.gen_bool(density) { rng.gen_range(1..=2) } else { 0 };
            for k in 0..copies {
                arrows.push(Arrow {
                    name: format!("a{s}_{t}_{k}"),
                    source: s,
                    target: t,
                });
            }
        }
    }
    Quiver::new(n, arrows).unwrap()
}

pub fn random_maps<R: Rng>(rng: &mut R, field: FieldSpec, q: &Quiver, dims: &[usize], zero_prob: f64) -> Vec<Mat> {
    q.arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target - 1], dims[a.source - 1]);
            if rng.gen_bool(zero_prob) {
                return Mat::zeros(field, r, c);
            }
            let e: Vec<i64> = (0..r * c).map(|_| rng.gen_range(-2..=2)).collect();
            Mat::from_ints(field, r, c, &e).unwrap()
        })
        .collect()
}

/// A random relation-free representation with the given dimension range.
pub fn random_rep<R: Rng>(
    rng: &mut R,
    field: FieldSpec,
    max_vertices: usize,
    max_dim: usize,
    zero_prob: f64,
) -> Representation {
    let q = random_acyclic_quiver(rng, max_vertices, 0.5);
    let dims: Vec<usize> = (0..q.n_vertices()).map(|_| rng.gen_range(0..=max_dim)).collect();
    let maps = random_maps(rng, field, &q, &dims, zero_prob);
    Representation::new(field, q, dims, maps, vec![]).unwrap()
}
