//! Independent oracles shared by the integration tests. Nothing here calls
//! into the formulas under test.
#![allow(dead_code)]

use cmline::exactalg::{q, Rational};

/// Exponent vectors of degree `k` in `rank` variables.
pub fn monomials(rank: usize, k: usize) -> Vec<Vec<usize>> {
    if rank == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in monomials(rank - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `deg S^k(E*)` for `E = ⊕ O(d_i)` by summing the degree of every monomial
/// line subbundle.
pub fn sym_power_dual_degree(degrees: &[i64], k: usize) -> i64 {
    monomials(degrees.len(), k)
        .iter()
        .map(|m| -m.iter().zip(degrees).map(|(a, d)| *a as i64 * d).sum::<i64>())
        .sum()
}

/// `h^0(P^{rank−1}, O(k))` by counting monomials.
pub fn sections_count(rank: usize, k: usize) -> i64 {
    monomials(rank, k).len() as i64
}

/// Forward differences `Δ^i f(0)` of integer samples `f(0), f(1), …`.
pub fn forward_differences(values: &[i64]) -> Vec<i64> {
    let mut row = values.to_vec();
    let mut out = Vec::new();
    while !row.is_empty() {
        out.push(row[0]);
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    out
}

/// Degree of the Hilbert line `p(r)·λ(kr) − k·p(kr)·λ(r)` of a split
/// projective bundle, from enumerated section counts and degrees.
pub fn hilb_line_value(degrees: &[i64], k: usize, r: usize) -> i64 {
    let rank = degrees.len();
    let p = |m| sections_count(rank, m);
    let lam = |m| sym_power_dual_degree(degrees, m);
    p(r) * lam(k * r) - k as i64 * p(k * r) * lam(r)
}

/// CM degree of the blowup of `P(O(2) ⊕ O(−1) ⊕ O(−1))` along `P(O(2))`,
/// expanded by hand from the blowup intersection numbers.
pub fn cm_blowup_o2_by_hand(eps: &Rational) -> Rational {
    let e = eps.clone();
    let twelve = Rational::from(12);
    &twelve * &e * &e * (Rational::from(3) - &e) / (Rational::one() + &e) - &twelve * &e
}

/// Same for the section `P(O(−1))`.
pub fn cm_blowup_o_minus1_by_hand(eps: &Rational) -> Rational {
    let e = eps.clone();
    let one_minus = Rational::one() - &e;
    Rational::from(6) * &e * &one_minus * &one_minus / (Rational::one() + &e)
}

/// `F1 = 2(n+1)!/a0 · (b1·a0 − b0·a1)` written out for small `n`.
pub fn futaki_by_hand(n: u32, a0: &Rational, a1: &Rational, b0: &Rational, b1: &Rational) -> Rational {
    let fact: i64 = (1..=(n as i64 + 1)).product();
    Rational::from(2 * fact) / a0 * (b1 * a0 - b0 * a1)
}

pub fn eps_grid() -> Vec<Rational> {
    vec![q(1, 100), q(1, 20), q(1, 10)]
}
