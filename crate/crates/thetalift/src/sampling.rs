//! Seeded random elements for property sweeps.

use rand::Rng;

use crate::cocycle::{TorusAmbient, TorusElement};
use crate::error::Result;
use crate::groups::{GroupElement, GroupTag, HeisenbergElement};
use crate::matrix::Matrix;
use crate::scalars::{rat, Fp, PAdicScalar, Rational, Scalar};
use crate::unipotent::{root_element_at, UabcShape};

pub trait RandomScalar: Scalar {
    fn random<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self;

    fn random_nonzero<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self {
        loop {
            let x = Self::random(ctx, rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl RandomScalar for Fp {
    fn random<R: Rng + ?Sized>(p: &u64, rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..*p) as i64, *p)
    }
}

impl RandomScalar for Rational {
    fn random<R: Rng + ?Sized>(_: &(), rng: &mut R) -> Self {
        rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
    }
}

pub fn random_matrix<F: RandomScalar, R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    ctx: &F::Ctx,
    rng: &mut R,
) -> Matrix<F> {
    Matrix::from_fn(rows, cols, ctx, |_, _| F::random(ctx, rng))
}

/// Random `Z` with `tZ J = J Z`.
pub fn random_mat0<F: RandomScalar, R: Rng + ?Sized>(a: usize, ctx: &F::Ctx, rng: &mut R) -> Matrix<F> {
    let mut z = Matrix::zeros(a, a, ctx);
    for s in 0..a {
        for t in 0..a {
            if s + t < a {
                let v = F::random(ctx, rng);
                z[(s, t)] = v.clone();
                z[(a - 1 - t, a - 1 - s)] = v;
            }
        }
    }
    z
}

pub fn random_heisenberg<F: RandomScalar, R: Rng + ?Sized>(
    l: usize,
    ctx: &F::Ctx,
    rng: &mut R,
) -> HeisenbergElement<F> {
    HeisenbergElement {
        x: (0..l).map(|_| F::random(ctx, rng)).collect(),
        y: (0..l).map(|_| F::random(ctx, rng)).collect(),
        z: F::random(ctx, rng),
    }
}

/// Product of random root elements over every positive root of `U_{a,b,c}`.
pub fn random_uabc<F: RandomScalar, R: Rng + ?Sized>(
    shape: &UabcShape,
    ctx: &F::Ctx,
    rng: &mut R,
) -> Result<GroupElement<F>> {
    let n = shape.size();
    let mut acc = Matrix::<F>::identity(n, ctx);
    for (i, j) in shape.root_positions() {
        let t = F::random(ctx, rng);
        let step = root_element_at(i, j, &t, n)?.into_matrix();
        // right multiplication by I + N touches only the columns where N is nonzero
        let nonzero: Vec<_> = (0..n)
            .flat_map(|s| (0..n).map(move |c| (s, c)))
            .filter(|&(s, c)| s != c && !step[(s, c)].is_zero())
            .collect();
        let before = acc.clone();
        for (s, c) in nonzero {
            for row in 0..n {
                let add = before[(row, s)].clone() * step[(s, c)].clone();
                acc[(row, c)] = acc[(row, c)].clone() + add;
            }
        }
    }
    GroupElement::new(acc, shape.tag())
}

/// Random element of `Sp_{2m}`: a torus element times a word in root elements
/// of both signs.
pub fn random_sp<F: RandomScalar, R: Rng + ?Sized>(
    two_m: usize,
    ctx: &F::Ctx,
    rng: &mut R,
) -> Result<GroupElement<F>> {
    let m = two_m / 2;
    let mut diag = vec![F::one(ctx); two_m];
    for i in 0..m {
        let x = F::random_nonzero(ctx, rng);
        diag[two_m - 1 - i] = x.inv().expect("nonzero");
        diag[i] = x;
    }
    let mut acc = GroupElement::new(Matrix::diag(&diag, ctx), GroupTag::Sp(two_m))?;
    for _ in 0..2 * two_m {
        let i = rng.gen_range(0..two_m);
        let j = rng.gen_range(0..two_m);
        if i == j {
            continue;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let (lo, hi) = if lo + hi < two_m { (lo, hi) } else { (two_m - 1 - hi, two_m - 1 - lo) };
        let up = root_element_at(lo, hi, &F::random(ctx, rng), two_m)?.into_matrix();
        // transposes of symplectic matrices are symplectic
        let g = if i > j { up.transpose() } else { up };
        acc = acc.mul(&GroupElement::from_raw(g, GroupTag::Sp(two_m)))?;
    }
    Ok(acc)
}

/// `exp(t (e_ij - e_{j*,i*}))` in `SO_k`.
fn so_root<F: Scalar>(k: usize, i: usize, j: usize, t: &F) -> Matrix<F> {
    let ctx = t.ctx();
    let mut n = Matrix::zeros(k, k, &ctx);
    n[(i, j)] = t.clone();
    n[(k - 1 - j, k - 1 - i)] = n[(k - 1 - j, k - 1 - i)].clone() - t.clone();
    let n2 = &n * &n;
    &(&Matrix::identity(k, &ctx) + &n) + &n2.scale(&F::half(&ctx))
}

/// Random element of `SO_k`.
pub fn random_so<F: RandomScalar, R: Rng + ?Sized>(
    k: usize,
    ctx: &F::Ctx,
    rng: &mut R,
) -> Result<GroupElement<F>> {
    let mut diag = vec![F::one(ctx); k];
    for i in 0..k / 2 {
        let x = F::random_nonzero(ctx, rng);
        diag[k - 1 - i] = x.inv().expect("nonzero");
        diag[i] = x;
    }
    let mut acc = Matrix::diag(&diag, ctx);
    if k >= 2 {
        for _ in 0..2 * k {
            let i = rng.gen_range(0..k);
            let j = rng.gen_range(0..k);
            if i == j || i + j + 1 == k {
                continue;
            }
            acc = &acc * &so_root(k, i, j, &F::random(ctx, rng));
        }
    }
    GroupElement::new(acc, GroupTag::So(k))
}

/// Random nonzero p-adic number `p^v u` with `|v| <= 2` and a small unit.
pub fn random_padic<R: Rng + ?Sized>(p: u64, rng: &mut R) -> PAdicScalar {
    let unit_int = |rng: &mut R| loop {
        let x: i64 = rng.gen_range(-40..=40);
        if x != 0 && x.rem_euclid(p as i64) != 0 {
            return x;
        }
    };
    let num = unit_int(rng);
    let den = unit_int(rng).abs();
    PAdicScalar::new(rng.gen_range(-2..=2), rat(num, den), p).expect("unit by construction")
}

/// Random `diag(x_1, ..., x_m, [1], x_m^{-1}, ..., x_1^{-1})`.
pub fn random_torus<R: Rng + ?Sized>(ambient: TorusAmbient, p: u64, rng: &mut R) -> Result<TorusElement> {
    let size = match ambient {
        TorusAmbient::Sp(m) | TorusAmbient::So(m) | TorusAmbient::Gl(m) => m,
    };
    match ambient {
        TorusAmbient::Gl(_) => {
            TorusElement::new((0..size).map(|_| random_padic(p, rng)).collect(), ambient)
        }
        _ => {
            let half: Vec<_> = (0..size / 2).map(|_| random_padic(p, rng)).collect();
            TorusElement::from_half(&half, ambient)
        }
    }
}
