//! Unipotent radicals `U_{a,b,c}` of the parabolics of `Sp_{2(ab+c)}` with
//! Levi `GL_a^b x Sp_{2c}`, their coordinates and characters, and root
//! subgroups.
//!
//! Block indices below are 1-based: the diagonal blocks have sizes
//! `a` (b times), `2c`, `a` (b times), so block `b + 1` is the `Sp_{2c}` block
//! and block `2b + 2 - i` mirrors block `i`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{anti_identity, is_symplectic, symplectic_form, GroupElement, GroupTag};
use crate::matrix::Matrix;
use crate::scalars::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct UabcShape {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl UabcShape {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        if b == 0 || a == 0 {
            return Err(Error::Precondition(format!(
                "U_{{a,b,c}} needs a, b >= 1, got ({a},{b},{c})"
            )));
        }
        Ok(Self { a, b, c })
    }

    /// Size `2(ab + c)` of the ambient symplectic group.
    pub fn size(&self) -> usize {
        2 * (self.a * self.b + self.c)
    }

    pub fn tag(&self) -> GroupTag {
        GroupTag::Sp(self.size())
    }

    pub fn block_count(&self) -> usize {
        2 * self.b + 1
    }

    pub fn block_size(&self, block: usize) -> usize {
        if block == self.b + 1 {
            2 * self.c
        } else {
            self.a
        }
    }

    /// 0-based first index of a 1-based block.
    pub fn offset(&self, block: usize) -> usize {
        if block <= self.b + 1 {
            (block - 1) * self.a
        } else {
            self.b * self.a + 2 * self.c + (block - self.b - 2) * self.a
        }
    }

    /// 1-based block containing a 0-based coordinate.
    pub fn block_of(&self, idx: usize) -> usize {
        (1..=self.block_count())
            .find(|&blk| idx < self.offset(blk) + self.block_size(blk))
            .expect("index inside the ambient size")
    }

    pub fn get_block<F: Scalar>(&self, m: &Matrix<F>, bi: usize, bj: usize) -> Matrix<F> {
        m.block(
            self.offset(bi),
            self.offset(bj),
            self.block_size(bi),
            self.block_size(bj),
        )
    }

    fn embed_block<F: Scalar>(&self, bi: usize, bj: usize, x: &Matrix<F>) -> Result<Matrix<F>> {
        if x.rows() != self.block_size(bi) || x.cols() != self.block_size(bj) {
            return Err(Error::Shape(format!(
                "block ({bi},{bj}) is {}x{}, got {}x{}",
                self.block_size(bi),
                self.block_size(bj),
                x.rows(),
                x.cols()
            )));
        }
        let mut m = Matrix::zeros(self.size(), self.size(), x.ctx());
        m.set_block(self.offset(bi), self.offset(bj), x);
        Ok(m)
    }

    /// 0-based positions `(i, j)` of one root per positive root pair inside `U_{a,b,c}`.
    pub fn root_positions(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..self.a * self.b {
            for j in i + 1..n {
                if self.block_of(i) < self.block_of(j) && i + j < n {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// `J' tN J'`, the mirror image that completes `N` to an element of `sp`.
pub fn sharp<F: Scalar>(n: &Matrix<F>) -> Matrix<F> {
    let j = symplectic_form(n.rows(), n.ctx());
    &(&j * &n.transpose()) * &j
}

/// Whether `tZ J_a = J_a Z`.
pub fn is_in_mat0<F: Scalar>(z: &Matrix<F>) -> bool {
    if !z.is_square() {
        return false;
    }
    let j = anti_identity(z.rows(), z.ctx());
    &z.transpose() * &j == &j * z
}

/// `u^i(X)`: `X` in block `(i, i+1)` with its mirror.
pub fn u_coordinate<F: Scalar>(shape: &UabcShape, i: usize, x: &Matrix<F>) -> Result<GroupElement<F>> {
    if i == 0 || i >= shape.b {
        return Err(Error::Precondition(format!(
            "coordinate index {i} outside [1, {}]",
            shape.b.saturating_sub(1)
        )));
    }
    let n0 = shape.embed_block(i, i + 1, x)?;
    let m = &(&Matrix::identity(shape.size(), x.ctx()) + &n0) + &sharp(&n0);
    GroupElement::new(m, shape.tag())
}

/// The quadratic correction `Y Y* / 2` that sits in block `(b, b+2)` of `u'(Y, 0)`.
pub fn half_y_ystar<F: Scalar>(shape: &UabcShape, y: &Matrix<F>) -> Result<Matrix<F>> {
    let b = shape.b;
    let n0 = shape.embed_block(b, b + 1, y)?;
    let sq = &n0 * &sharp(&n0);
    Ok(shape.get_block(&sq, b, b + 2).scale(&F::half(y.ctx())))
}

/// `u'(Y, Z)`: `Y` in block `(b, b+1)`, its mirror in `(b+1, b+2)`, and
/// `Z + Y Y*/2` in block `(b, b+2)`. With this normalisation
/// `u'(Y, Z) u'(0, Z') = u'(Y, Z + Z')` and `u'(Y, Z)^{-1} = u'(-Y, -Z)`.
pub fn u_prime<F: Scalar>(shape: &UabcShape, y: &Matrix<F>, z: &Matrix<F>) -> Result<GroupElement<F>> {
    if !is_in_mat0(z) {
        return Err(Error::Precondition("Z must satisfy tZ J = J Z".into()));
    }
    let b = shape.b;
    let ctx = z.ctx();
    let n0 = shape.embed_block(b, b + 1, y)?;
    let top = &shape.embed_block(b, b + 2, z)?
        + &shape.embed_block(b, b + 2, &half_y_ystar(shape, y)?)?;
    let m = &(&(&Matrix::identity(shape.size(), ctx) + &n0) + &sharp(&n0)) + &top;
    GroupElement::new(m, shape.tag())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UabcFactorization<F: Scalar> {
    pub y: Matrix<F>,
    pub z: Matrix<F>,
    pub xs: Vec<Matrix<F>>,
    pub u1: GroupElement<F>,
}

impl<F: Scalar> UabcFactorization<F> {
    /// `u'(Y, Z) * u^1(X_1) * ... * u^{b-1}(X_{b-1}) * u1`.
    pub fn reassemble(&self, shape: &UabcShape) -> Result<GroupElement<F>> {
        let mut acc = u_prime(shape, &self.y, &self.z)?;
        for (i, x) in self.xs.iter().enumerate() {
            acc = acc.mul(&u_coordinate(shape, i + 1, x)?)?;
        }
        acc.mul(&self.u1)
    }
}

/// Whether `m` is block upper unitriangular for the shape and symplectic.
pub fn is_in_uabc<F: Scalar>(m: &Matrix<F>, shape: &UabcShape) -> bool {
    let n = shape.size();
    if m.rows() != n || m.cols() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let (bi, bj) = (shape.block_of(i), shape.block_of(j));
            let ok = if bi > bj || (bi == bj && i != j) {
                m[(i, j)].is_zero()
            } else if i == j {
                m[(i, j)].is_one()
            } else {
                true
            };
            if !ok {
                return false;
            }
        }
    }
    is_symplectic(m, n).unwrap_or(false)
}

pub fn factorize<F: Scalar>(u: &GroupElement<F>, shape: &UabcShape) -> Result<UabcFactorization<F>> {
    let m = u.matrix();
    if !is_in_uabc(m, shape) {
        return Err(Error::NotInGroup {
            group: format!("U_{{{},{},{}}}", shape.a, shape.b, shape.c),
            reason: "not block upper unipotent and symplectic".into(),
        });
    }
    let b = shape.b;
    let y = shape.get_block(m, b, b + 1);
    let z = &shape.get_block(m, b, b + 2) - &half_y_ystar(shape, &y)?;
    let xs: Vec<_> = (1..b).map(|i| shape.get_block(m, i, i + 1)).collect();
    let mut head = u_prime(shape, &y, &z)?;
    for (i, x) in xs.iter().enumerate() {
        head = head.mul(&u_coordinate(shape, i + 1, x)?)?;
    }
    let u1 = head.inverse().mul(u)?;
    let residual_clean = (1..=b).all(|i| shape.get_block(u1.matrix(), i, i + 1).is_zero())
        && shape.get_block(u1.matrix(), b, b + 2).is_zero();
    if !residual_clean {
        return Err(Error::Precondition(
            "residual factor is not supported off the coordinate blocks".into(),
        ));
    }
    Ok(UabcFactorization { y, z, xs, u1 })
}

/// Argument of the character `psi(tr(X_1 + ... + X_{b-1}))` on `U_{a,b,c}`.
pub fn psi_u<F: Scalar>(u: &GroupElement<F>, shape: &UabcShape) -> Result<F> {
    let f = factorize(u, shape)?;
    let ctx = u.matrix().ctx().clone();
    Ok(f.xs.iter().fold(F::zero(&ctx), |acc, x| acc + x.trace()))
}

/// Trace of the top-left `alpha x alpha` block of `Z`.
pub fn psi_alpha<F: Scalar>(z: &Matrix<F>, alpha: usize) -> Result<F> {
    if !is_in_mat0(z) {
        return Err(Error::Precondition("Z must satisfy tZ J = J Z".into()));
    }
    if 2 * alpha > z.rows() {
        return Err(Error::Shape(format!(
            "alpha = {alpha} exceeds half of {}",
            z.rows()
        )));
    }
    Ok(z.block(0, 0, alpha, alpha).trace())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RootKind {
    Long,
    Short,
}

/// Sign `s` with `e'_{i,j} = e_{i,j} + s e_{j*,i*}` symplectic (1-based indices).
pub fn short_root_sign(i: usize, j: usize, two_l: usize) -> Result<i64> {
    use crate::scalars::Rational;
    check_short(i, j, two_l)?;
    let (i0, j0) = (i - 1, j - 1);
    let passes = |s: i64| -> Result<bool> {
        let mut m = Matrix::<Rational>::identity(two_l, &());
        m[(i0, j0)] = Rational::from_i64(1, &());
        m[(two_l - 1 - j0, two_l - 1 - i0)] = Rational::from_i64(s, &());
        is_symplectic(&m, two_l)
    };
    match (passes(1)?, passes(-1)?) {
        (true, false) => Ok(1),
        (false, true) => Ok(-1),
        (true, true) => Err(Error::AmbiguousSign(i, j)),
        (false, false) => Err(Error::Precondition(format!(
            "no sign makes I + e'_({i},{j}) symplectic"
        ))),
    }
}

fn check_short(i: usize, j: usize, two_l: usize) -> Result<()> {
    if i == 0 || j == 0 || i > two_l || j > two_l || i == j || i + j == two_l + 1 {
        return Err(Error::Precondition(format!(
            "({i},{j}) is not a short root position in Sp_{two_l}"
        )));
    }
    Ok(())
}

/// `I + t e_{i, 2l+1-i}` (long) or `I + t e'_{i,j}` (short); 1-based indices.
pub fn root_subgroup<F: Scalar>(
    kind: RootKind,
    i: usize,
    j: usize,
    t: &F,
    two_l: usize,
) -> Result<GroupElement<F>> {
    let ctx = t.ctx();
    let mut n = Matrix::zeros(two_l, two_l, &ctx);
    match kind {
        RootKind::Long => {
            if i == 0 || i > two_l || j != two_l + 1 - i {
                return Err(Error::Precondition(format!(
                    "({i},{j}) is not a long root position in Sp_{two_l}"
                )));
            }
            n[(i - 1, j - 1)] = t.clone();
        }
        RootKind::Short => {
            let s = short_root_sign(i, j, two_l)?;
            n[(i - 1, j - 1)] = t.clone();
            n[(two_l - j, two_l - i)] = F::from_i64(s, &ctx) * t.clone();
        }
    }
    GroupElement::new(&Matrix::identity(two_l, &ctx) + &n, GroupTag::Sp(two_l))
}

/// Root subgroup element for a 0-based position above the anti-diagonal.
pub fn root_element_at<F: Scalar>(i: usize, j: usize, t: &F, two_l: usize) -> Result<GroupElement<F>> {
    if i + j + 1 == two_l {
        root_subgroup(RootKind::Long, i + 1, j + 1, t, two_l)
    } else {
        root_subgroup(RootKind::Short, i + 1, j + 1, t, two_l)
    }
}

/// `u v u^{-1} v^{-1}`.
pub fn commutator<F: Scalar>(u: &GroupElement<F>, v: &GroupElement<F>) -> Result<GroupElement<F>> {
    u.mul(v)?.mul(&u.inverse())?.mul(&v.inverse())
}
