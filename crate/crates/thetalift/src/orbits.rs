//! Symplectic partitions, dominance, the orbit `O_c(r, 2l)`, nilpotent orbit
//! dimensions in `sp_{2n}`, the dimension equation and the dual-group table.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalars::{rat, Rational, Scalar};

/// GK-dimension conventions used by [`dimension_equation`].
pub const GK_CONVENTIONS: &str =
    "dim pi = n^2, dim sigma = dim of a maximal unipotent of SO_k, dim Theta^(2)_{2nk} = nk, dim Theta^(r) = gk_dim(O_c)";

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SymplecticPartition {
    parts: Vec<usize>,
    total: usize,
}

impl SymplecticPartition {
    /// Sorts the parts into weakly decreasing order and validates them.
    pub fn new(mut parts: Vec<usize>, total: usize) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition("partitions have positive parts".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if !is_symplectic_partition(&parts, total) {
            return Err(Error::Precondition(format!(
                "{parts:?} is not a symplectic partition of {total}"
            )));
        }
        Ok(Self { parts, total })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn transpose(&self) -> Vec<usize> {
        transpose(&self.parts)
    }
}

impl fmt::Display for SymplecticPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn transpose(parts: &[usize]) -> Vec<usize> {
    let largest = parts.iter().copied().max().unwrap_or(0);
    (1..=largest)
        .map(|i| parts.iter().filter(|&&p| p >= i).count())
        .collect()
}

/// Sum is `total` and every odd part has even multiplicity.
pub fn is_symplectic_partition(parts: &[usize], total: usize) -> bool {
    if parts.iter().sum::<usize>() != total || !total.is_multiple_of(2) {
        return false;
    }
    parts
        .iter()
        .filter(|&&p| p % 2 == 1)
        .all(|&p| parts.iter().filter(|&&q| q == p).count() % 2 == 0)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum OrbitComparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Dominance order by partial sums.
pub fn dominance(lambda: &[usize], mu: &[usize]) -> Result<OrbitComparison> {
    let (sl, sm): (usize, usize) = (lambda.iter().sum(), mu.iter().sum());
    if sl != sm {
        return Err(Error::Precondition(format!("totals {sl} and {sm} differ")));
    }
    let sorted = |p: &[usize]| {
        let mut v = p.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let (l, m) = (sorted(lambda), sorted(mu));
    let (mut ge, mut le) = (true, true);
    let (mut pl, mut pm) = (0, 0);
    for i in 0..l.len().max(m.len()) {
        pl += l.get(i).copied().unwrap_or(0);
        pm += m.get(i).copied().unwrap_or(0);
        match pl.cmp(&pm) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => OrbitComparison::Equal,
        (true, false) => OrbitComparison::Greater,
        (false, true) => OrbitComparison::Less,
        (false, false) => OrbitComparison::Incomparable,
    })
}

/// Writing `2l = alpha r + beta` with `0 <= beta < r`: `(r^alpha beta)` for even
/// `alpha` and `(r^{alpha-1} (r-1) (beta+1))` for odd `alpha`.
pub fn o_c(r: usize, two_l: usize) -> Result<SymplecticPartition> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::Precondition(format!("r must be odd and > 1, got {r}")));
    }
    if !two_l.is_multiple_of(2) {
        return Err(Error::Precondition(format!("{two_l} is odd")));
    }
    let (alpha, beta) = (two_l / r, two_l % r);
    let mut parts = vec![r; alpha.saturating_sub(alpha % 2)];
    if alpha % 2 == 0 {
        parts.push(beta);
    } else {
        parts.push(r - 1);
        parts.push(beta + 1);
    }
    parts.retain(|&p| p > 0);
    SymplecticPartition::new(parts, two_l)
}

/// `2n^2 + n - (1/2) sum (lambda^t_i)^2 - (1/2) #{odd parts}`.
pub fn orbit_dim(lambda: &SymplecticPartition) -> usize {
    let n = lambda.total / 2;
    let sq: usize = lambda.transpose().iter().map(|c| c * c).sum();
    let odd = lambda.parts.iter().filter(|&&p| p % 2 == 1).count();
    2 * n * n + n - (sq + odd) / 2
}

pub fn gk_dim(lambda: &SymplecticPartition) -> Rational {
    rat(orbit_dim(lambda) as i64, 2)
}

/// A nilpotent `X` of Jordan type `lambda` together with a form `Omega` it preserves.
///
/// An even part `2m` is one Jordan chain `e_1 -> ... -> e_{2m}` with
/// `Omega(e_i, e_j) = (-1)^i [i + j = 2m + 1]`; a pair of equal odd parts `q`
/// is two chains `e, f` with `Omega(e_i, f_j) = (-1)^i [i + j = q + 1]`.
pub fn standard_nilpotent(lambda: &SymplecticPartition) -> (Matrix<Rational>, Matrix<Rational>) {
    let n = lambda.total;
    let mut x = Matrix::zeros(n, n, &());
    let mut omega = Matrix::zeros(n, n, &());
    let one = Rational::one(&());
    let sign = |i: usize| if i.is_multiple_of(2) { one.clone() } else { -one.clone() };
    let chain = |x: &mut Matrix<Rational>, start: usize, len: usize| {
        for i in 0..len - 1 {
            x[(start + i + 1, start + i)] = one.clone();
        }
    };
    let mut at = 0;
    let mut i = 0;
    let parts = &lambda.parts;
    while i < parts.len() {
        let q = parts[i];
        if q.is_multiple_of(2) {
            chain(&mut x, at, q);
            for a in 1..=q {
                let b = q + 1 - a;
                omega[(at + a - 1, at + b - 1)] = sign(a);
            }
            at += q;
            i += 1;
        } else {
            let (e, f) = (at, at + q);
            chain(&mut x, e, q);
            chain(&mut x, f, q);
            for a in 1..=q {
                let b = q + 1 - a;
                omega[(e + a - 1, f + b - 1)] = sign(a);
                omega[(f + b - 1, e + a - 1)] = -sign(a);
            }
            at += 2 * q;
            i += 2;
        }
    }
    (x, omega)
}

/// Dimension of the centraliser of `X_lambda` in `sp(Omega)`, by exact row
/// reduction of the linear system `tY Omega + Omega Y = 0`, `XY = YX`.
pub fn centralizer_dim_oracle(lambda: &SymplecticPartition) -> usize {
    let (x, omega) = standard_nilpotent(lambda);
    let n = lambda.total;
    let var = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let zero = Rational::zero(&());
    for a in 0..n {
        for b in 0..n {
            // (tY Omega + Omega Y)_{ab} = sum_k Y_{ka} Omega_{kb} + Omega_{ak} Y_{kb}
            let mut form = vec![zero.clone(); n * n];
            // (XY - YX)_{ab} = sum_k X_{ak} Y_{kb} - Y_{ak} X_{kb}
            let mut comm = vec![zero.clone(); n * n];
            for k in 0..n {
                form[var(k, a)] = form[var(k, a)].clone() + omega[(k, b)].clone();
                form[var(k, b)] = form[var(k, b)].clone() + omega[(a, k)].clone();
                comm[var(k, b)] = comm[var(k, b)].clone() + x[(a, k)].clone();
                comm[var(a, k)] = comm[var(a, k)].clone() - x[(k, b)].clone();
            }
            rows.push(form);
            rows.push(comm);
        }
    }
    rows.retain(|r| r.iter().any(|v| !Scalar::is_zero(v)));
    let system = Matrix::from_rows(rows, &()).expect("rectangular system");
    system.nullity()
}

/// Every symplectic partition of `total`, parts weakly decreasing.
pub fn symplectic_partitions(total: usize) -> Vec<SymplecticPartition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    rec(total, total, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|p| is_symplectic_partition(p, total))
        .map(|parts| SymplecticPartition { parts, total })
        .collect()
}

/// Both sides of the dimension equation
/// `dim Sp_2n + dim U_{k,r1,n} + dim sigma = dim pi + dim Theta^(2)_{2nk} + dim Theta^(r)`.
pub fn dimension_equation(r: usize, k: usize, n: usize) -> Result<(Rational, Rational)> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::Precondition(format!("r must be odd and > 1, got {r}")));
    }
    let r1 = (r - 1) / 2;
    let dim_sp = |m: usize| m * (2 * m + 1);
    let big = k * r1 + n;
    let dim_u = (dim_sp(big) - r1 * k * k - dim_sp(n)) / 2;
    let a = k / 2;
    let dim_sigma = if k % 2 == 1 { a * a } else { a * a - a };
    let lhs = rat((dim_sp(n) + dim_u + dim_sigma) as i64, 1);
    let theta = gk_dim(&o_c(r, 2 * n + k * (r - 1))?);
    let rhs = rat((n * n + n * k) as i64, 1) + theta;
    Ok((lhs, rhs))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum GroupFamily {
    /// `Sp_{2l}`, given by its matrix size.
    Sp(usize),
    /// `SO_k`, given by its matrix size.
    So(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DualFamily {
    So,
    Sp,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct DualGroupDescriptor {
    pub family: DualFamily,
    pub size: usize,
}

impl fmt::Display for DualGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            DualFamily::So => "SO",
            DualFamily::Sp => "Sp",
        };
        write!(f, "{name}_{}(C)", self.size)
    }
}

/// Dual group of the r-fold cover.
pub fn dual_group(family: GroupFamily, r: u64) -> Result<DualGroupDescriptor> {
    let d = |family, size| Ok(DualGroupDescriptor { family, size });
    match family {
        GroupFamily::Sp(size) if size % 2 == 0 && size > 0 => {
            if r % 2 == 1 {
                d(DualFamily::So, size + 1)
            } else {
                d(DualFamily::Sp, size)
            }
        }
        GroupFamily::So(size) if size % 2 == 1 => {
            if r % 2 == 1 {
                d(DualFamily::Sp, size - 1)
            } else {
                d(DualFamily::So, size)
            }
        }
        GroupFamily::So(size) if size > 0 => d(DualFamily::So, size),
        _ => Err(Error::Precondition(format!("invalid group {family:?}"))),
    }
}

/// A pair of partitions standing for a composite orbit; valid when each
/// piece is symplectic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompositePartition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl CompositePartition {
    pub fn is_valid(&self) -> bool {
        let t1: usize = self.first.iter().sum();
        let t2: usize = self.second.iter().sum();
        is_symplectic_partition(&self.first, t1) && is_symplectic_partition(&self.second, t2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[usize]) -> SymplecticPartition {
        SymplecticPartition::new(parts.to_vec(), parts.iter().sum()).unwrap()
    }

    #[test]
    fn validity() {
        assert!(is_symplectic_partition(&[2, 1, 1], 4));
        assert!(!is_symplectic_partition(&[3, 1], 4));
        assert!(is_symplectic_partition(&[4, 4, 4, 1, 1], 14));
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance(&[4], &[2, 2]).unwrap(), OrbitComparison::Greater);
        assert_eq!(dominance(&[2, 2], &[2, 2]).unwrap(), OrbitComparison::Equal);
        assert!(dominance(&[4], &[2]).is_err());
    }

    #[test]
    fn oc_examples() {
        assert_eq!(o_c(3, 4).unwrap().parts(), &[2, 2]);
        assert_eq!(o_c(5, 4).unwrap().parts(), &[4]);
        assert_eq!(o_c(3, 8).unwrap().parts(), &[3, 3, 2]);
        assert_eq!(o_c(3, 6).unwrap().parts(), &[3, 3]);
    }

    #[test]
    fn dims() {
        assert_eq!(orbit_dim(&sp(&[1, 1, 1, 1])), 0);
        assert_eq!(orbit_dim(&sp(&[2])), 2);
        assert_eq!(orbit_dim(&sp(&[3, 3, 2])), 24);
        assert_eq!(centralizer_dim_oracle(&sp(&[1, 1, 1, 1])), 10);
    }

    #[test]
    fn duals() {
        assert_eq!(dual_group(GroupFamily::Sp(6), 3).unwrap().to_string(), "SO_7(C)");
        assert_eq!(dual_group(GroupFamily::So(7), 3).unwrap().to_string(), "Sp_6(C)");
        assert_eq!(dual_group(GroupFamily::So(6), 5).unwrap().to_string(), "SO_6(C)");
    }
}
