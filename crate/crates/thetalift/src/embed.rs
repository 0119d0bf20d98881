//! The embeddings `iota1: SO_k x Sp_{2n} -> Sp_{2nk}` and
//! `iota2: SO_k x Sp_{2n} -> Sp_{2n+k(r-1)}`, their cover-level extension,
//! the map `l` from `U_{a,b,c}` onto a Heisenberg group, and the check that
//! the image of `iota2` fixes `psi_U`.

use crate::error::{Error, Result};
use crate::groups::{
    anti_identity, form_sign, GroupElement, GroupTag, HeisenbergElement,
};
use crate::matrix::{block_diag, kronecker, Matrix};
use crate::scalars::{mu_r_mul, MuR, Scalar};
use crate::unipotent::{factorize, is_in_uabc, psi_u, root_element_at, UabcShape};

/// Group element of an r-fold cover: `(g, epsilon)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverElement<F: Scalar> {
    pub base: GroupElement<F>,
    pub epsilon: MuR,
}

impl<F: Scalar> CoverElement<F> {
    pub fn new(base: GroupElement<F>, epsilon: MuR) -> Self {
        Self { base, epsilon }
    }

    pub fn degree(&self) -> u64 {
        self.epsilon.order()
    }
}

fn expect_tag<F: Scalar>(x: &GroupElement<F>, want: GroupTag, what: &str) -> Result<()> {
    if x.tag() != want {
        return Err(Error::Shape(format!("{what} must lie in {want}, got {}", x.tag())));
    }
    Ok(())
}

fn so_size<F: Scalar>(h: &GroupElement<F>) -> Result<usize> {
    match h.tag() {
        GroupTag::So(k) => Ok(k),
        t => Err(Error::Shape(format!("expected an SO_k element, got {t}"))),
    }
}

fn sp_size<F: Scalar>(g: &GroupElement<F>) -> Result<usize> {
    match g.tag() {
        GroupTag::Sp(n) => Ok(n),
        t => Err(Error::Shape(format!("expected an Sp_2n element, got {t}"))),
    }
}

/// The Kronecker product `h (x) g`: block `(i, j)` is `h_ij g`. It preserves
/// the tensor form `J_k (x) J'_{2n}` and is tagged accordingly; see
/// [`iota1_standard`] for the conjugate preserving `J'_{2nk}`.
pub fn iota1<F: Scalar>(h: &GroupElement<F>, g: &GroupElement<F>) -> Result<GroupElement<F>> {
    let k = so_size(h)?;
    let two_n = sp_size(g)?;
    GroupElement::new(
        kronecker(h.matrix(), g.matrix()),
        GroupTag::SpTensor { k, two_n },
    )
}

/// Diagonal `+-1` matrix `D` with `D (J_k (x) J'_{2n}) D = J'_{2nk}`.
///
/// Both forms pair coordinate `q` with `2nk + 1 - q`; `D` is `+1` on the
/// first half and fixes the sign on the mirrored coordinate.
pub fn tensor_intertwiner<F: Scalar>(k: usize, two_n: usize, ctx: &F::Ctx) -> Matrix<F> {
    let size = k * two_n;
    let signs: Vec<F> = (0..size)
        .map(|q| {
            if q < size / 2 {
                F::one(ctx)
            } else {
                let mirror = size - 1 - q;
                F::from_i64(form_sign(mirror % two_n, two_n), ctx)
            }
        })
        .collect();
    Matrix::diag(&signs, ctx)
}

/// `iota1` realised inside the standard `Sp_{2nk}`: `D (h (x) g) D`.
pub fn iota1_standard<F: Scalar>(
    h: &GroupElement<F>,
    g: &GroupElement<F>,
) -> Result<GroupElement<F>> {
    let raw = iota1(h, g)?;
    let (k, two_n) = (so_size(h)?, sp_size(g)?);
    let d = tensor_intertwiner(k, two_n, raw.matrix().ctx());
    GroupElement::new(&(&d * raw.matrix()) * &d, GroupTag::Sp(k * two_n))
}

/// `h* = J_k th^{-1} J_k`, the block mirroring `h` under `J'`.
pub fn star<F: Scalar>(h: &Matrix<F>) -> Matrix<F> {
    let j = anti_identity(h.rows(), h.ctx());
    let inv_t = h.inverse().expect("invertible block").transpose();
    &(&j * &inv_t) * &j
}

fn half_rank(r: u64) -> Result<usize> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::Precondition(format!("r must be odd and at least 3, got {r}")));
    }
    Ok(((r - 1) / 2) as usize)
}

/// `diag(h, ..., h, g, h*, ..., h*)` with `(r-1)/2` copies of `h` and of `h*`.
pub fn iota2<F: Scalar>(
    h: &GroupElement<F>,
    g: &GroupElement<F>,
    r: u64,
) -> Result<GroupElement<F>> {
    let r1 = half_rank(r)?;
    let k = so_size(h)?;
    let two_n = sp_size(g)?;
    let hs = star(h.matrix());
    let mut blocks = vec![h.matrix().clone(); r1];
    blocks.push(g.matrix().clone());
    blocks.extend(std::iter::repeat_n(hs, r1));
    let m = block_diag(&blocks, h.matrix().ctx());
    GroupElement::new(m, GroupTag::Sp(two_n + k * 2 * r1))
}

/// `((h, e1), (g, e2)) -> (iota2(h, g), e1 e2)`.
pub fn iota2_cover<F: Scalar>(
    hc: &CoverElement<F>,
    gc: &CoverElement<F>,
    r: u64,
) -> Result<CoverElement<F>> {
    if hc.degree() != r || gc.degree() != r {
        return Err(Error::OrderMismatch(hc.degree(), gc.degree()));
    }
    Ok(CoverElement {
        base: iota2(&hc.base, &gc.base, r)?,
        epsilon: mu_r_mul(hc.epsilon, gc.epsilon)?,
    })
}

/// Recovers `(h, g)` from an element of the image of `iota2`, or fails if the
/// element is not of that block form.
pub fn iota2_components<F: Scalar>(
    m: &GroupElement<F>,
    k: usize,
    two_n: usize,
    r: u64,
) -> Result<(GroupElement<F>, GroupElement<F>)> {
    let r1 = half_rank(r)?;
    let size = two_n + 2 * k * r1;
    expect_tag(m, GroupTag::Sp(size), "iota2 image")?;
    let mat = m.matrix();
    let h = mat.block(0, 0, k, k);
    let g = mat.block(k * r1, k * r1, two_n, two_n);
    let hg = || -> Result<_> {
        Ok((
            GroupElement::new(h.clone(), GroupTag::So(k))?,
            GroupElement::new(g.clone(), GroupTag::Sp(two_n))?,
        ))
    };
    let not_levi = || Error::Precondition("element is not in the image of iota2".into());
    let (he, ge) = hg().map_err(|_| not_levi())?;
    let rebuilt = iota2(&he, &ge, r)?;
    if rebuilt.matrix() != mat {
        return Err(not_levi());
    }
    Ok((he, ge))
}

/// `T_k`: the identity for even `k`, `diag(I, 2, I)` for odd `k`.
pub fn t_weight<F: Scalar>(k: usize, ctx: &F::Ctx) -> Matrix<F> {
    let mut t = Matrix::identity(k, ctx);
    if k % 2 == 1 {
        t[(k / 2, k / 2)] = F::from_i64(2, ctx);
    }
    t
}

/// `l(u) = (y_a, ..., y_1, tr(T Z)/2)` read off the factorisation of `u`.
///
/// The rows `y_a, ..., y_1` of `Y` form a vector of length `2ac`; the first
/// `c` entries of each row go to the `X` part and the last `c` to the `Y` part
/// of `H_{2ac+1}`.
pub fn l_map_weighted<F: Scalar>(
    u: &GroupElement<F>,
    shape: &UabcShape,
    weight: &Matrix<F>,
) -> Result<HeisenbergElement<F>> {
    let f = factorize(u, shape)?;
    let c = shape.c;
    let mut x = Vec::with_capacity(shape.a * c);
    let mut y = Vec::with_capacity(shape.a * c);
    for row in (0..shape.a).rev() {
        let entries = f.y.row(row);
        x.extend_from_slice(&entries[..c]);
        y.extend_from_slice(&entries[c..]);
    }
    let ctx = u.matrix().ctx();
    let z = F::half(ctx) * (weight * &f.z).trace();
    HeisenbergElement::new(x, y, z)
}

pub fn l_map<F: Scalar>(u: &GroupElement<F>, shape: &UabcShape) -> Result<HeisenbergElement<F>> {
    l_map_weighted(u, shape, &t_weight(shape.a, u.matrix().ctx()))
}

/// Whether `psi_U` on `U_{k,(r-1)/2,n}` is fixed by conjugation by `iota2(h, g)`,
/// tested on every root subgroup generator of `U`.
pub fn stabilizes_psi<F: Scalar>(
    h: &GroupElement<F>,
    g: &GroupElement<F>,
    r: u64,
) -> Result<bool> {
    let m = iota2(h, g, r)?;
    let shape = UabcShape::new(so_size(h)?, half_rank(r)?, sp_size(g)? / 2)?;
    psi_fixed_by(&m, &shape)
}

/// Same as [`stabilizes_psi`] for an arbitrary `Sp` element, which must lie in
/// the image of `iota2`.
pub fn stabilizes_psi_element<F: Scalar>(
    m: &GroupElement<F>,
    k: usize,
    two_n: usize,
    r: u64,
) -> Result<bool> {
    let (h, g) = iota2_components(m, k, two_n, r)?;
    stabilizes_psi(&h, &g, r)
}

fn psi_fixed_by<F: Scalar>(m: &GroupElement<F>, shape: &UabcShape) -> Result<bool> {
    let ctx = m.matrix().ctx().clone();
    let one = F::one(&ctx);
    let m_inv = m.inverse();
    for (i, j) in shape.root_positions() {
        let x = root_element_at(i, j, &one, shape.size())?;
        let conj = m.mul(&x)?.mul(&m_inv)?;
        if !is_in_uabc(conj.matrix(), shape) {
            return Err(Error::Precondition(format!(
                "conjugate of the root element at ({i},{j}) leaves U"
            )));
        }
        if psi_u(&conj, shape)? != psi_u(&x, shape)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::is_symplectic;
    use crate::scalars::{rat, Rational};

    fn q(x: i64) -> Rational {
        rat(x, 1)
    }

    fn so3_torus(a: i64) -> GroupElement<Rational> {
        GroupElement::new(Matrix::diag(&[q(a), q(1), rat(1, a)], &()), GroupTag::So(3)).unwrap()
    }

    fn sp2(m: [[i64; 2]; 2]) -> GroupElement<Rational> {
        let rows: Vec<&[i64]> = m.iter().map(|r| &r[..]).collect();
        GroupElement::new(Matrix::from_i64(&rows, &()).unwrap(), GroupTag::Sp(2)).unwrap()
    }

    #[test]
    fn kronecker_is_not_standard_symplectic() {
        let g = sp2([[1, 1], [0, 1]]);
        let one = GroupElement::identity(GroupTag::So(2), &());
        let raw = iota1(&one, &g).unwrap();
        assert!(!is_symplectic(raw.matrix(), 4).unwrap());
        assert!(iota1_standard(&one, &g).is_ok());
    }

    #[test]
    fn iota2_r3() {
        let h = so3_torus(2);
        let g = sp2([[1, 3], [0, 1]]);
        let m = iota2(&h, &g, 3).unwrap();
        assert_eq!(m.matrix().block(0, 0, 3, 3), *h.matrix());
        assert_eq!(m.matrix().block(5, 5, 3, 3), *h.matrix());
        assert!(iota2(&h, &g, 4).is_err());
    }

    #[test]
    fn components_reject_non_levi() {
        let d: Vec<Rational> = vec![q(2), q(3), q(1), q(1), q(1), q(1), rat(1, 3), rat(1, 2)];
        let m = GroupElement::new(Matrix::diag(&d, &()), GroupTag::Sp(8)).unwrap();
        assert!(stabilizes_psi_element(&m, 3, 2, 3).is_err());
    }
}
