//! Exponent bookkeeping for the unramified computation: the Borel ledger, the
//! `delta` ledger on `diag(a, g', a^{-1}) x diag(b, h', b^{-1})`, and the
//! exponent equation whose only solution is `l = r - 1`.

use crate::error::{Error, Result};
use crate::groups::{borel_modulus_exponent, parabolic_half_modulus_exponent, ParabolicGroup};
use crate::scalars::{rat, Rational};

fn check_odd(r: usize) -> Result<usize> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::Precondition(format!("r must be odd and at least 3, got {r}")));
    }
    Ok((r - 1) / 2)
}

/// The term-by-term exponent sum
/// `k + (r1-1)(2k-2) + sum_j jk + r1(r1 k + 2n - 2) + sum_j j(k-4) - (r1-1)(k-2)`,
/// with `j` running over `1..r1`.
pub fn ledger_sum(r: usize, k: usize, n: usize) -> Result<i64> {
    let r1 = check_odd(r)? as i64;
    let (k, n) = (k as i64, n as i64);
    let tri: i64 = (1..r1).sum();
    Ok(k + (r1 - 1) * (2 * k - 2) + tri * k + r1 * (r1 * k + 2 * n - 2) + tri * (k - 4)
        - (r1 - 1) * (k - 2))
}

/// `r1 (2n + (k-1)(r-1))`.
pub fn ledger_target(r: usize, k: usize, n: usize) -> Result<i64> {
    let r1 = check_odd(r)? as i64;
    Ok(r1 * (2 * n as i64 + (k as i64 - 1) * (r as i64 - 1)))
}

/// `delta_B^{(r-1)/(2r)}` on `diag(a^{-1} I_r, I, a I_r)` in `Sp_{2N}`, `N = n + k r1`,
/// as an exponent of `|a|`.
pub fn borel_ledger(r: usize, k: usize, n: usize) -> Result<Rational> {
    let r1 = check_odd(r)?;
    let big_n = n + k * r1;
    if big_n < r {
        return Err(Error::Precondition(format!("rank {big_n} is smaller than r = {r}")));
    }
    let pattern: Vec<i64> = (0..big_n).map(|i| if i < r { -1 } else { 0 }).collect();
    let e = borel_modulus_exponent(&pattern, big_n)?;
    Ok(rat(e, 1) * rat(r as i64 - 1, 2 * r as i64))
}

/// A pair of exponents `(e_a, e_b)` standing for `|a|^{e_a} |b|^{e_b}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbExponent {
    pub a: Rational,
    pub b: Rational,
}

impl AbExponent {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.a + &o.a, &self.b + &o.b)
    }
}

/// Exponents of the characters on `A = diag(a, g', a^{-1}) in Sp_{2n}` and
/// `B = diag(b, h', b^{-1}) in SO_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaLedger {
    pub half_modulus: AbExponent,
    pub weil: AbExponent,
    pub quotient: AbExponent,
    pub delta: AbExponent,
    pub total: AbExponent,
}

/// Modulus of the quotient `U / U^flat`, counted entry by entry: the removed
/// coordinates of `Y in Mat_{k,2n}` are `y_{j,1}` for `j >= 2` and `y_{k,i}`,
/// and `y_{j,i}` is scaled by `h_j g_i^{-1}`.
pub fn quotient_modulus(k: usize, n: usize) -> Result<AbExponent> {
    if k < 2 || n < 1 {
        return Err(Error::Precondition(format!("need k >= 2 and n >= 1, got k = {k}, n = {n}")));
    }
    let two_n = 2 * n;
    let weight = |idx: usize, size: usize| -> i64 {
        if idx == 0 {
            1
        } else if idx == size - 1 {
            -1
        } else {
            0
        }
    };
    let mut entries = Vec::new();
    for j in 1..k {
        entries.push((j, 0));
    }
    for i in 1..two_n {
        entries.push((k - 1, i));
    }
    let (mut ea, mut eb) = (0i64, 0i64);
    for (j, i) in entries {
        eb += weight(j, k);
        ea -= weight(i, two_n);
    }
    Ok(AbExponent::new(rat(ea, 1), rat(eb, 1)))
}

pub fn delta_ledger(k: usize, n: usize) -> Result<DeltaLedger> {
    let half_modulus = AbExponent::new(
        parabolic_half_modulus_exponent(ParabolicGroup::Sp { n }),
        parabolic_half_modulus_exponent(ParabolicGroup::So { k }),
    );
    let weil = AbExponent::new(rat(k as i64 - 2, 2), rat(n as i64, 1));
    let quotient = quotient_modulus(k, n)?;
    let delta = weil.add(&quotient);
    let total = half_modulus.add(&delta);
    Ok(DeltaLedger { half_modulus, weil, quotient, delta, total })
}

/// `1 - k/2 + n`.
pub fn delta_target(k: usize, n: usize) -> Rational {
    rat(2 - k as i64 + 2 * n as i64, 2)
}

/// All `l` in `1..=max_l` with `l(l+1)(r-1)/(2r) = l^2/2`.
pub fn exponent_equation_solutions(r: usize, max_l: usize) -> Result<Vec<usize>> {
    check_odd(r)?;
    let r = r as i64;
    Ok((1..=max_l)
        .filter(|&l| {
            let l = l as i64;
            rat(l * (l + 1) * (r - 1), 2 * r) == rat(l * l, 2)
        })
        .collect())
}
