//! Symplectic and split orthogonal groups in anti-diagonal form, the
//! Heisenberg group, Weyl elements and modulus exponents.
//!
//! `Sp_{2m}` preserves `J' = [[0, J_m], [-J_m, 0]]` where `J_m` is the
//! `m x m` anti-identity; `SO_k` preserves `J_k` and has determinant one.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{kronecker, Matrix};
use crate::scalars::{rat, Rational, Scalar};

/// The anti-identity `J_m`.
pub fn anti_identity<F: Scalar>(m: usize, ctx: &F::Ctx) -> Matrix<F> {
    Matrix::from_fn(m, m, ctx, |i, j| {
        if i + j + 1 == m {
            F::one(ctx)
        } else {
            F::zero(ctx)
        }
    })
}

/// The alternating form `J'` on `F^{2m}`.
pub fn symplectic_form<F: Scalar>(two_m: usize, ctx: &F::Ctx) -> Matrix<F> {
    let m = two_m / 2;
    Matrix::from_fn(two_m, two_m, ctx, |i, j| {
        if i + j + 1 != two_m {
            F::zero(ctx)
        } else if i < m {
            F::one(ctx)
        } else {
            -F::one(ctx)
        }
    })
}

/// Sign of the entry `J'_{i, 2m+1-i}` (0-based `i`).
pub fn form_sign(i: usize, two_m: usize) -> i64 {
    if i < two_m / 2 {
        1
    } else {
        -1
    }
}

/// The alternating form `J_k (x) J'_{2n}` preserved by Kronecker products `h (x) g`.
pub fn tensor_form<F: Scalar>(k: usize, two_n: usize, ctx: &F::Ctx) -> Matrix<F> {
    kronecker(&anti_identity(k, ctx), &symplectic_form(two_n, ctx))
}

fn preserves<F: Scalar>(m: &Matrix<F>, form: &Matrix<F>) -> bool {
    &(&m.transpose() * form) * m == *form
}

fn check_square<F: Scalar>(m: &Matrix<F>, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::Shape(format!(
            "expected {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

pub fn is_symplectic<F: Scalar>(m: &Matrix<F>, two_m: usize) -> Result<bool> {
    check_square(m, two_m)?;
    if !two_m.is_multiple_of(2) {
        return Err(Error::Shape(format!("symplectic size {two_m} is odd")));
    }
    Ok(preserves(m, &symplectic_form(two_m, m.ctx())))
}

pub fn is_special_orthogonal<F: Scalar>(m: &Matrix<F>, k: usize) -> Result<bool> {
    check_square(m, k)?;
    Ok(preserves(m, &anti_identity(k, m.ctx())) && m.det().is_one())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum GroupTag {
    Gl(usize),
    /// `Sp_{2m}`, carrying the matrix size `2m`.
    Sp(usize),
    So(usize),
    /// Symplectic group of `J_k (x) J'_{2n}`, size `2nk`.
    SpTensor { k: usize, two_n: usize },
}

impl GroupTag {
    pub fn size(&self) -> usize {
        match *self {
            GroupTag::Gl(n) | GroupTag::Sp(n) | GroupTag::So(n) => n,
            GroupTag::SpTensor { k, two_n } => k * two_n,
        }
    }

    pub fn contains<F: Scalar>(&self, m: &Matrix<F>) -> Result<bool> {
        match *self {
            GroupTag::Gl(n) => {
                check_square(m, n)?;
                Ok(!m.det().is_zero())
            }
            GroupTag::Sp(n) => is_symplectic(m, n),
            GroupTag::So(n) => is_special_orthogonal(m, n),
            GroupTag::SpTensor { k, two_n } => {
                check_square(m, k * two_n)?;
                Ok(preserves(m, &tensor_form(k, two_n, m.ctx())))
            }
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Gl(n) => write!(f, "GL_{n}"),
            GroupTag::Sp(n) => write!(f, "Sp_{n}"),
            GroupTag::So(n) => write!(f, "SO_{n}"),
            GroupTag::SpTensor { k, two_n } => write!(f, "Sp(J_{k} x J'_{two_n})"),
        }
    }
}

/// A matrix validated as a member of its tagged group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement<F: Scalar> {
    matrix: Matrix<F>,
    tag: GroupTag,
}

impl<F: Scalar> GroupElement<F> {
    pub fn new(matrix: Matrix<F>, tag: GroupTag) -> Result<Self> {
        if !tag.contains(&matrix)? {
            return Err(Error::NotInGroup {
                group: tag.to_string(),
                reason: "form or determinant check failed".into(),
            });
        }
        Ok(Self { matrix, tag })
    }

    /// Skips the membership test; for intermediate products known to lie in the group.
    pub fn from_raw(matrix: Matrix<F>, tag: GroupTag) -> Self {
        Self { matrix, tag }
    }

    pub fn identity(tag: GroupTag, ctx: &F::Ctx) -> Self {
        Self {
            matrix: Matrix::identity(tag.size(), ctx),
            tag,
        }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.matrix
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn is_valid(&self) -> bool {
        self.tag.contains(&self.matrix).unwrap_or(false)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.tag != other.tag {
            return Err(Error::Shape(format!("{} times {}", self.tag, other.tag)));
        }
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
            tag: self.tag,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: self.matrix.inverse().expect("group elements are invertible"),
            tag: self.tag,
        }
    }

    pub fn conjugate(&self, by: &Self) -> Result<Self> {
        by.mul(self)?.mul(&by.inverse())
    }
}

/// Element `(X, Y, z)` of the Heisenberg group in `2l + 1` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeisenbergElement<F: Scalar> {
    pub x: Vec<F>,
    pub y: Vec<F>,
    pub z: F,
}

impl<F: Scalar> HeisenbergElement<F> {
    pub fn new(x: Vec<F>, y: Vec<F>, z: F) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::Shape(format!(
                "X has length {}, Y has length {}",
                x.len(),
                y.len()
            )));
        }
        Ok(Self { x, y, z })
    }

    pub fn identity(l: usize, ctx: &F::Ctx) -> Self {
        Self {
            x: vec![F::zero(ctx); l],
            y: vec![F::zero(ctx); l],
            z: F::zero(ctx),
        }
    }

    pub fn l(&self) -> usize {
        self.x.len()
    }

    pub fn inverse(&self) -> Self {
        Self {
            x: self.x.iter().map(|v| -v.clone()).collect(),
            y: self.y.iter().map(|v| -v.clone()).collect(),
            z: -self.z.clone(),
        }
    }

    pub fn is_central(&self) -> bool {
        self.x.iter().chain(&self.y).all(Scalar::is_zero)
    }
}

/// `u J_l tv` for row vectors of length l.
fn anti_pairing<F: Scalar>(u: &[F], v: &[F], ctx: &F::Ctx) -> F {
    let l = u.len();
    (0..l).fold(F::zero(ctx), |acc, i| {
        acc + u[i].clone() * v[l - 1 - i].clone()
    })
}

pub fn heisenberg_mul<F: Scalar>(
    u: &HeisenbergElement<F>,
    v: &HeisenbergElement<F>,
) -> Result<HeisenbergElement<F>> {
    if u.l() != v.l() || u.y.len() != v.y.len() {
        return Err(Error::Shape(format!("H_{} vs H_{}", 2 * u.l() + 1, 2 * v.l() + 1)));
    }
    let ctx = u.z.ctx();
    let add = |a: &[F], b: &[F]| -> Vec<F> {
        a.iter().zip(b).map(|(s, t)| s.clone() + t.clone()).collect()
    };
    let twist = anti_pairing(&u.x, &v.y, &ctx) - anti_pairing(&u.y, &v.x, &ctx);
    Ok(HeisenbergElement {
        x: add(&u.x, &v.x),
        y: add(&u.y, &v.y),
        z: u.z.clone() + v.z.clone() + F::half(&ctx) * twist,
    })
}

pub fn heisenberg_commutator<F: Scalar>(
    u: &HeisenbergElement<F>,
    v: &HeisenbergElement<F>,
) -> Result<HeisenbergElement<F>> {
    let uv = heisenberg_mul(u, v)?;
    let uvu = heisenberg_mul(&uv, &u.inverse())?;
    heisenberg_mul(&uvu, &v.inverse())
}

/// The embedding of `H_{2l+1}` into `Sp_{2l+2}`:
///
/// ```text
/// [ 1  X  Y/2  z  ]
/// [    I   0   Y* ]
/// [        I   X* ]
/// [            1  ]
/// ```
/// with `X* = -J_l tX` and `Y* = J_l tY / 2`.
pub fn tau_embed<F: Scalar>(u: &HeisenbergElement<F>) -> Result<GroupElement<F>> {
    let l = u.l();
    let ctx = u.z.ctx();
    let n = 2 * l + 2;
    let half = F::half(&ctx);
    let mut m = Matrix::identity(n, &ctx);
    for i in 0..l {
        m[(0, 1 + i)] = u.x[i].clone();
        m[(0, 1 + l + i)] = half.clone() * u.y[i].clone();
        // column entries: (J_l tX)_i = X_{l-1-i}
        m[(1 + i, n - 1)] = half.clone() * u.y[l - 1 - i].clone();
        m[(1 + l + i, n - 1)] = -u.x[l - 1 - i].clone();
    }
    m[(0, n - 1)] = u.z.clone();
    GroupElement::new(m, GroupTag::Sp(n))
}

/// `t(a) = diag(a, a^{-1}, ..., a, a^{-1})` in `Sp_{2l}`.
pub fn t_element<F: Scalar>(a: &F, two_l: usize) -> Result<GroupElement<F>> {
    let inv = a
        .inv()
        .ok_or_else(|| Error::Precondition("t(a) needs a != 0".into()))?;
    if !two_l.is_multiple_of(2) {
        return Err(Error::Shape(format!("t(a) needs even size, got {two_l}")));
    }
    let entries: Vec<F> = (0..two_l)
        .map(|i| if i % 2 == 0 { a.clone() } else { inv.clone() })
        .collect();
    GroupElement::new(Matrix::diag(&entries, &a.ctx()), GroupTag::Sp(two_l))
}

/// Monomial matrix with entries `+-1` lying in `Sp_{2m}`; row `i` has
/// `signs[i]` in column `perm[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n || !n.is_multiple_of(2) {
            return Err(Error::Shape(format!(
                "{} columns and {} signs for a Weyl element",
                n,
                signs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &c in &perm {
            if c >= n || seen[c] {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
            }
            seen[c] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition("Weyl signs must be +-1".into()));
        }
        let w = Self { perm, signs };
        if !is_symplectic(&w.matrix::<Rational>(&()), n)? {
            return Err(Error::NotInGroup {
                group: format!("Sp_{n}"),
                reason: "monomial matrix does not preserve the form".into(),
            });
        }
        Ok(w)
    }

    pub fn identity(two_m: usize) -> Self {
        Self {
            perm: (0..two_m).collect(),
            signs: vec![1; two_m],
        }
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if self.perm[i] == j {
            self.signs[i] as i64
        } else {
            0
        }
    }

    pub fn matrix<F: Scalar>(&self, ctx: &F::Ctx) -> Matrix<F> {
        let n = self.size();
        let mut m = Matrix::zeros(n, n, ctx);
        for (i, (&c, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            m[(i, c)] = F::from_i64(s as i64, ctx);
        }
        m
    }

    pub fn element<F: Scalar>(&self, ctx: &F::Ctx) -> GroupElement<F> {
        GroupElement::from_raw(self.matrix(ctx), GroupTag::Sp(self.size()))
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for (i, (&c, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            perm[c] = i;
            signs[c] = s;
        }
        Self { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        self.transpose()
    }

    /// `self * other` as matrices.
    pub fn compose(&self, other: &Self) -> Self {
        let perm = self.perm.iter().map(|&c| other.perm[c]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&c, &s)| s * other.signs[c])
            .collect();
        Self { perm, signs }
    }

    /// Number of inversions of the underlying permutation.
    pub fn inversions(&self) -> usize {
        inversion_count(&self.perm)
    }
}

pub fn inversion_count(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// Exponent `e` with `delta_B(t) = |a|^e`, where `t` in the diagonal torus of
/// `Sp_{2N}` has `|a|^{pattern[i]}` in coordinate `i`; coordinate `i` (1-based)
/// carries weight `2(N - i) + 2`.
pub fn borel_modulus_exponent(pattern: &[i64], n: usize) -> Result<i64> {
    if pattern.len() != n {
        return Err(Error::Shape(format!(
            "pattern of length {} for rank {n}",
            pattern.len()
        )));
    }
    Ok(pattern
        .iter()
        .enumerate()
        .map(|(i, &e)| e * (2 * (n - i) as i64))
        .sum())
}

/// Maximal parabolic with Levi `GL_1 x (rest)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParabolicGroup {
    Sp { n: usize },
    So { k: usize },
}

/// Exponent of `|a|` in `delta_P^{1/2}` evaluated on the `GL_1` factor.
pub fn parabolic_half_modulus_exponent(group: ParabolicGroup) -> Rational {
    match group {
        ParabolicGroup::Sp { n } => rat(n as i64, 1),
        ParabolicGroup::So { k } => rat(k as i64 - 2, 2),
    }
}
