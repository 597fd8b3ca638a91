use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::FieldSpec;
use super::mat::Mat;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// `s_j = 1 + q + ⋯ + q^(j-1)`, with `s_0 = 0`.
pub fn s_number(j: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    let mut pow = BigInt::one();
    for _ in 0..j {
        acc += &pow;
        pow *= &q;
    }
    acc
}

/// Gaussian binomial `[t choose l]_q = (s_t ⋯ s_(t-l+1)) / (s_l ⋯ s_1)`.
///
/// At `q = 1` this is the ordinary binomial coefficient.
///
/// The sum form `(s_(t-l+1) + ⋯ + s_t) / (s_1 + ⋯ + s_l)` is not an integer in
/// general (`t=4, l=2, q=2` gives 22/4) and does not count subspaces; the
/// product form does.
pub fn gaussian_binomial(t: u32, l: u32, q: u64) -> Result<BigInt> {
    if l > t {
        return Err(Error::Domain(format!("length {l} exceeds {t}")));
    }
    if q == 0 {
        return Err(Error::Domain("q must be at least 1".into()));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..l {
        num *= s_number(t - i, q);
        den *= s_number(i + 1, q);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// All pivot sets of size `k` in `0..n`, lexicographically.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Every pivot pattern of a subspace of `F^n`, grouped by dimension.
pub fn pivot_patterns(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(|k| combinations(n, k)).collect()
}

/// All subspaces of `F_p^n` whose RREF basis has exactly these pivot columns,
/// in lexicographic RREF order. Disjoint for distinct patterns, so parallel
/// consumers can split the census by pattern.
pub fn subspaces_with_pivots(field: FieldSpec, n: usize, pivots: &[usize]) -> Result<Vec<Subspace>> {
    let elems = field
        .elements()
        .ok_or_else(|| Error::Domain("subspace enumeration needs a finite field".into()))?;
    let k = pivots.len();
    // free positions: (row i, column j) with j > pivot_i and j not a pivot
    let free: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| {
            ((pivots[i] + 1)..n)
                .filter(|j| !pivots.contains(j))
                .map(move |j| (i, j))
        })
        .collect();
    let mut template = Mat::zeros(field, k, n);
    for (i, &p) in pivots.iter().enumerate() {
        template.set(i, p, field.one());
    }
    let q = elems.len();
    let total = q
        .checked_pow(free.len() as u32)
        .ok_or(Error::CapExceeded(usize::MAX))?;
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0usize; free.len()];
    for _ in 0..total {
        let mut m = template.clone();
        for (d, &(i, j)) in digits.iter().zip(&free) {
            m.set(i, j, elems[*d].clone());
        }
        out.push(Subspace::from_rref_unchecked(m));
        // odometer, least significant digit last
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    out.sort();
    Ok(out)
}

/// Lazily enumerates every subspace of `F_p^n` exactly once, by dimension and
/// then lexicographic RREF.
///
/// Yields `Err(CapExceeded(count))` instead of an element past `cap` and then
/// stops.
pub struct SubspaceIter {
    field: FieldSpec,
    n: usize,
    cap: usize,
    next_dim: usize,
    buffer: std::vec::IntoIter<Subspace>,
    yielded: usize,
    done: bool,
}

impl Iterator for SubspaceIter {
    type Item = Result<Subspace>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            if let Some(s) = self.buffer.next() {
                if self.yielded == self.cap {
                    self.done = true;
                    return Some(Err(Error::CapExceeded(self.yielded)));
                }
                self.yielded += 1;
                return Some(Ok(s));
            }
            if self.next_dim > self.n {
                self.done = true;
                return None;
            }
            let mut layer = Vec::new();
            for piv in combinations(self.n, self.next_dim) {
                match subspaces_with_pivots(self.field, self.n, &piv) {
                    Ok(v) => layer.extend(v),
                    Err(e) => {
                        self.done = true;
                        return Some(Err(e));
                    }
                }
            }
            layer.sort();
            self.buffer = layer.into_iter();
            self.next_dim += 1;
        }
    }
}

pub fn enumerate_subspaces(n: usize, p: u64, cap: usize) -> Result<SubspaceIter> {
    let field = FieldSpec::prime(p)?;
    Ok(enumerate_subspaces_in(field, n, cap))
}

pub(crate) fn enumerate_subspaces_in(field: FieldSpec, n: usize, cap: usize) -> SubspaceIter {
    SubspaceIter {
        field,
        n,
        cap,
        next_dim: 0,
        buffer: Vec::new().into_iter(),
        yielded: 0,
        done: false,
    }
}

/// Collected form of [`enumerate_subspaces`].
pub(crate) fn all_subspaces(field: FieldSpec, n: usize, cap: usize) -> Result<Vec<Subspace>> {
    enumerate_subspaces_in(field, n, cap).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent census: spans as explicit vector sets, no row reduction.
    fn brute_count(n: usize, p: u64) -> Vec<usize> {
        let vectors: Vec<Vec<u64>> = (0..p.pow(n as u32))
            .map(|mut x| {
                (0..n)
                    .map(|_| {
                        let d = x % p;
                        x /= p;
                        d
                    })
                    .collect()
            })
            .collect();
        let span = |gens: &[&Vec<u64>]| -> Vec<Vec<u64>> {
            let mut set: HashSet<Vec<u64>> = HashSet::new();
            set.insert(vec![0; n]);
            loop {
                let cur: Vec<Vec<u64>> = set.iter().cloned().collect();
                let before = set.len();
                for v in &cur {
                    for g in gens {
                        for c in 1..p {
                            set.insert((0..n).map(|i| (v[i] + c * g[i]) % p).collect());
                        }
                    }
                }
                if set.len() == before {
                    break;
                }
            }
            let mut s: Vec<_> = set.into_iter().collect();
            s.sort();
            s
        };
        let mut found: HashSet<Vec<Vec<u64>>> = HashSet::new();
        found.insert(span(&[]));
        let mut frontier: Vec<Vec<Vec<u64>>> = vec![span(&[])];
        while let Some(s) = frontier.pop() {
            for v in &vectors {
                if s.contains(v) {
                    continue;
                }
                let mut gens: Vec<&Vec<u64>> = s.iter().collect();
                gens.push(v);
                let t = span(&gens);
                if found.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        let mut by_dim = vec![0usize; n + 1];
        for s in found {
            let mut size = s.len();
            let mut d = 0;
            while size > 1 {
                size /= p as usize;
                d += 1;
            }
            by_dim[d] += 1;
        }
        by_dim
    }

    #[test]
    fn oracle_values() {
        // F_2^2: 1 + 3 + 1
        assert_eq!(brute_count(2, 2), vec![1, 3, 1]);
        // F_3^2: 1 + 4 + 1
        assert_eq!(brute_count(2, 3), vec![1, 4, 1]);
        let f34 = brute_count(4, 3);
        // 2-dim subspaces and lines of F_3^4
        assert_eq!(f34[2], 130);
        assert_eq!(f34[1], 40);
    }

    #[test]
    fn census_matches_oracle() {
        for (n, p) in [(0, 2), (1, 3), (2, 2), (2, 3), (3, 2), (4, 2), (3, 3), (4, 3)] {
            let subs: Vec<Subspace> = enumerate_subspaces(n, p, usize::MAX)
                .unwrap()
                .collect::<Result<_>>()
                .unwrap();
            let mut by_dim = vec![0usize; n + 1];
            for s in &subs {
                by_dim[s.dim()] += 1;
            }
            assert_eq!(by_dim, brute_count(n, p), "n={n} p={p}");
            let distinct: HashSet<_> = subs.iter().collect();
            assert_eq!(distinct.len(), subs.len());
            let mut sorted = subs.clone();
            sorted.sort();
            assert_eq!(sorted, subs, "canonical order");
            let total: BigInt = (0..=n as u32)
                .map(|l| gaussian_binomial(n as u32, l, p).unwrap())
                .sum();
            assert_eq!(total, BigInt::from(subs.len()));
        }
    }

    #[test]
    fn zero_dimensional_space() {
        let subs: Vec<_> = enumerate_subspaces(0, 5, 10).unwrap().collect();
        assert_eq!(subs.len(), 1);
        assert!(subs[0].as_ref().unwrap().is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        let items: Vec<_> = enumerate_subspaces(2, 2, 3).unwrap().collect();
        assert_eq!(items.len(), 4);
        assert_eq!(items[3], Err(Error::CapExceeded(3)));
        assert!(enumerate_subspaces(2, 4, 10).is_err());
    }

    #[test]
    fn pivot_split_covers_census() {
        let f = FieldSpec::prime(3).unwrap();
        let mut split: Vec<Subspace> = pivot_patterns(3)
            .iter()
            .flat_map(|p| subspaces_with_pivots(f, 3, p).unwrap())
            .collect();
        split.sort();
        assert_eq!(split, all_subspaces(f, 3, usize::MAX).unwrap());
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(2, 1, 2).unwrap(), BigInt::from(3));
        assert_eq!(gaussian_binomial(7, 0, 9).unwrap(), BigInt::from(1));
        assert_eq!(gaussian_binomial(4, 2, 3).unwrap(), BigInt::from(130));
        assert_eq!(gaussian_binomial(4, 2, 2).unwrap(), BigInt::from(35));
        assert_eq!(gaussian_binomial(5, 2, 1).unwrap(), BigInt::from(10));
        assert!(matches!(gaussian_binomial(2, 3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn s_number_examples() {
        assert_eq!(s_number(3, 2), BigInt::from(7));
        assert_eq!(s_number(1, 17), BigInt::from(1));
        assert_eq!(s_number(4, 3), BigInt::from(40));
        assert_eq!(s_number(0, 3), BigInt::from(0));
    }
}
