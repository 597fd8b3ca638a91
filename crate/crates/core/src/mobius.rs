//! Closed-form Möbius values, submodule counts and Möbius inversion over
//! submodule lattices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{gaussian_binomial, s_number};
use crate::lattice::enumerate_subreps;
use crate::rep::{Representation, Subrep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    BruteForce,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "ClosedForm",
            Method::BruteForce => "BruteForce",
        })
    }
}

/// `μ(0, M)` together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusReport {
    pub value: BigInt,
    pub method: Method,
    pub semisimple: bool,
    /// `|K|`, or 1 for an infinite field.
    pub q_used: u64,
}

/// `(−1)^t · q^(t(t−1)/2)`, the Möbius value of `S^t` when `|End S| = q`.
pub fn mobius_power(q: u64, t: u32) -> BigInt {
    let exp = u64::from(t) * u64::from(t.saturating_sub(1)) / 2;
    let mag = num_traits::pow(BigInt::from(q), exp as usize);
    if t.is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

/// `∏ mobius_power(q, a_i)` for a semisimple module with multiplicities `a`.
///
/// `q = 1` stands for an infinite field, where `S^2` already has infinitely
/// many submodules.
pub fn mobius_semisimple(dims: &[usize], q: u64) -> Result<BigInt> {
    if q == 0 {
        return Err(Error::Domain("q must be at least 1".into()));
    }
    if q == 1 && dims.iter().any(|&a| a >= 2) {
        return Err(Error::InfiniteLattice);
    }
    Ok(dims
        .iter()
        .map(|&a| mobius_power(q, a as u32))
        .product())
}

/// Closed form: zero as soon as some structural map is nonzero.
pub fn mobius_rep(m: &Representation) -> Result<MobiusReport> {
    let q = m.field().q_for_formulas();
    let semisimple = m.is_semisimple();
    let value = if semisimple {
        mobius_semisimple(&m.dimension_vector(), q)?
    } else {
        BigInt::zero()
    };
    Ok(MobiusReport {
        value,
        method: Method::ClosedForm,
        semisimple,
        q_used: q,
    })
}

/// Brute force on the enumerated lattice.
pub fn mobius_rep_brute(m: &Representation, cap: usize) -> Result<MobiusReport> {
    let lattice = enumerate_subreps(m, cap)?;
    Ok(MobiusReport {
        value: lattice.mobius(),
        method: Method::BruteForce,
        semisimple: m.is_semisimple(),
        q_used: m.field().q_for_formulas(),
    })
}

fn check_counting(q: u64, t: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::Domain(format!("q = {q}: an endomorphism ring has at least 2 elements")));
    }
    if t < 1 {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    Ok(())
}

/// Simple submodules of `S^t`: `1 + q + ⋯ + q^(t−1)`.
pub fn count_simple_submodules(q: u64, t: u32) -> Result<BigInt> {
    check_counting(q, t)?;
    Ok(s_number(t, q))
}

/// Maximal submodules of `S^t`; equinumerous with the simple ones.
pub fn count_maximal(q: u64, t: u32) -> Result<BigInt> {
    count_simple_submodules(q, t)
}

/// Submodules of `S^t` of length `l`.
pub fn count_length_l(q: u64, t: u32, l: u32) -> Result<BigInt> {
    if q < 2 {
        return Err(Error::Domain(format!("q = {q}: an endomorphism ring has at least 2 elements")));
    }
    gaussian_binomial(t, l, q)
}

/// `f(M) = Σ g(N)·μ(M/N)` over `rad M ≤ N ≤ M`.
///
/// The interval is materialized as the lattice of the semisimple quotient
/// `M / rad M` and lifted back, so over an infinite field it suffices that
/// this quotient is thin.
pub fn mobius_inversion_module(
    m: &Representation,
    g: impl Fn(&Subrep) -> BigRational,
    cap: usize,
) -> Result<BigRational> {
    let rad = m.radical();
    let (top, _) = m.quotient(&rad)?;
    let interval = enumerate_subreps(&top, cap)?;
    let mut acc = BigRational::zero();
    for x in interval.elements() {
        let n = m.lift_from_quotient(&rad, x)?;
        let (mn, _) = m.quotient(&n)?;
        let mu = mobius_rep(&mn)?.value;
        if !mu.is_zero() {
            acc += g(&n) * BigRational::from_integer(mu);
        }
    }
    Ok(acc)
}

/// The same sum over all of `L(M)`, with `μ(M/N)` read off the lattice as
/// `μ(N, M)`.
pub fn mobius_inversion_full(
    m: &Representation,
    g: impl Fn(&Subrep) -> BigRational,
    cap: usize,
) -> Result<BigRational> {
    let lattice = enumerate_subreps(m, cap)?;
    let column = lattice.poset().mobius_to(lattice.top());
    Ok(column.into_iter().fold(BigRational::zero(), |acc, (i, mu)| {
        acc + g(lattice.element(i)) * BigRational::from_integer(mu)
    }))
}

/// `g ≡ 1`.
pub fn constant_one(_: &Subrep) -> BigRational {
    BigRational::one()
}
