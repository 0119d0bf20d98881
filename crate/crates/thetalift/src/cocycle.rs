//! Tame Hilbert symbols over Q_p and the diagonal 2-cocycle of the r-fold
//! cover, with the block-compatibility check for `iota2`.
//!
//! Only the tame case `r | p - 1` is supported. The group `mu_r` inside
//! `F_p^x` is identified with `Z/rZ` through `zeta = g^{(p-1)/r}` where `g`
//! is the smallest primitive root mod p.

use crate::error::{Error, Result};
use crate::scalars::{
    check_odd_prime, legendre, mu_r_mul, pow_mod, smallest_primitive_root, MuR, PAdicScalar,
    PrimeFieldElement, Rational,
};

/// Convention string recorded in reports.
pub const COCYCLE_CONVENTION: &str = "sigma(s,t) = prod_{i<j} (s_i, t_j)_r^{-1} over the full diagonal";

fn check_tame(p: u64, r: u64) -> Result<()> {
    check_odd_prime(p)?;
    if r == 0 || !(p - 1).is_multiple_of(r) {
        return Err(Error::NoRootsOfUnity { p, r });
    }
    Ok(())
}

fn check_prime_of(x: &PAdicScalar, p: u64) -> Result<()> {
    if x.prime() != p {
        return Err(Error::Precondition(format!(
            "{x} is a {}-adic number, expected p = {p}",
            x.prime()
        )));
    }
    Ok(())
}

/// The tame unit `(-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}` reduced mod p.
pub fn tame_unit(a: &PAdicScalar, b: &PAdicScalar) -> PrimeFieldElement {
    let p = a.prime();
    let (va, vb) = (a.valuation(), b.valuation());
    let sign = if (va * vb).rem_euclid(2) == 1 { -1 } else { 1 };
    let pow = |x: PrimeFieldElement, e: i64| {
        if e >= 0 {
            x.pow(e as u64)
        } else {
            x.pow(e.unsigned_abs() * (p - 2))
        }
    };
    PrimeFieldElement::new(sign, p) * pow(a.unit_residue(), vb) * pow(b.unit_residue(), -va)
}

/// Discrete log base `zeta = g^{(p-1)/r}` of an r-th root of unity in F_p.
fn mu_r_log(w: u64, p: u64, r: u64) -> Result<MuR> {
    let g = smallest_primitive_root(p)?;
    let zeta = pow_mod(g, (p - 1) / r, p);
    let mut acc = 1;
    for e in 0..r {
        if acc == w {
            return Ok(MuR::new(e as i64, r));
        }
        acc = acc * zeta % p;
    }
    Err(Error::Precondition(format!("{w} is not an {r}-th root of unity mod {p}")))
}

/// `(a, b)_r` as an element of `mu_r`.
pub fn hilbert_tame(a: &PAdicScalar, b: &PAdicScalar, p: u64, r: u64) -> Result<MuR> {
    check_tame(p, r)?;
    check_prime_of(a, p)?;
    check_prime_of(b, p)?;
    let u = tame_unit(a, b);
    mu_r_log(pow_mod(u.residue(), (p - 1) / r, p), p, r)
}

/// `(a, b)_2 = (-1)^{v(a)v(b)(p-1)/2} Leg(u_b)^{v(a)} Leg(u_a)^{v(b)}`.
pub fn hilbert_quadratic(a: &PAdicScalar, b: &PAdicScalar, p: u64) -> Result<MuR> {
    if p == 2 {
        return Err(Error::Unsupported("quadratic symbol at p = 2".into()));
    }
    check_odd_prime(p)?;
    check_prime_of(a, p)?;
    check_prime_of(b, p)?;
    let (va, vb) = (a.valuation(), b.valuation());
    let mut sign = 1i64;
    if (va * vb * ((p as i64 - 1) / 2)).rem_euclid(2) == 1 {
        sign = -sign;
    }
    if va.rem_euclid(2) == 1 {
        sign *= legendre(b.unit_residue());
    }
    if vb.rem_euclid(2) == 1 {
        sign *= legendre(a.unit_residue());
    }
    Ok(MuR::new(if sign == 1 { 0 } else { 1 }, 2))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TorusAmbient {
    Gl(usize),
    /// `Sp_{2m}`, carrying the matrix size.
    Sp(usize),
    So(usize),
}

/// Diagonal torus element with p-adic entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusElement {
    diagonal: Vec<PAdicScalar>,
    ambient: TorusAmbient,
}

impl TorusElement {
    pub fn new(diagonal: Vec<PAdicScalar>, ambient: TorusAmbient) -> Result<Self> {
        let n = diagonal.len();
        let size = match ambient {
            TorusAmbient::Gl(m) | TorusAmbient::Sp(m) | TorusAmbient::So(m) => m,
        };
        if size != n {
            return Err(Error::Shape(format!("{n} diagonal entries for size {size}")));
        }
        if let Some(p) = diagonal.first().map(PAdicScalar::prime) {
            if diagonal.iter().any(|d| d.prime() != p) {
                return Err(Error::Precondition("entries over different primes".into()));
            }
        }
        if matches!(ambient, TorusAmbient::Sp(_) | TorusAmbient::So(_)) {
            if matches!(ambient, TorusAmbient::Sp(_)) && !n.is_multiple_of(2) {
                return Err(Error::Shape(format!("symplectic torus of odd size {n}")));
            }
            for i in 0..n.div_ceil(2) {
                let prod = diagonal[i].mul(&diagonal[n - 1 - i]);
                if prod.to_rational() != Rational::from_integer(1.into()) {
                    return Err(Error::NotInGroup {
                        group: format!("{ambient:?}"),
                        reason: format!("entries {i} and {} are not mutually inverse", n - 1 - i),
                    });
                }
            }
        }
        Ok(Self { diagonal, ambient })
    }

    pub fn from_rationals(entries: &[Rational], p: u64, ambient: TorusAmbient) -> Result<Self> {
        let diagonal = entries
            .iter()
            .map(|x| PAdicScalar::from_rational(x, p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(diagonal, ambient)
    }

    /// `diag(x_1, ..., x_m, [1], x_m^{-1}, ..., x_1^{-1})` for `Sp` or `SO`.
    pub fn from_half(half: &[PAdicScalar], ambient: TorusAmbient) -> Result<Self> {
        let p = half.first().map_or(0, PAdicScalar::prime);
        let size = match ambient {
            TorusAmbient::Sp(m) | TorusAmbient::So(m) => m,
            TorusAmbient::Gl(_) => {
                return Err(Error::Precondition("from_half needs Sp or SO".into()))
            }
        };
        if half.len() != size / 2 {
            return Err(Error::Shape(format!("{} entries for half of {size}", half.len())));
        }
        let mut diagonal = half.to_vec();
        if size % 2 == 1 {
            diagonal.push(PAdicScalar::one(p));
        }
        diagonal.extend(half.iter().rev().map(PAdicScalar::inv));
        Self::new(diagonal, ambient)
    }

    /// `t(a) = diag(a, a^{-1}, ..., a, a^{-1})` in `Sp_{2l}`.
    pub fn t(a: &PAdicScalar, two_l: usize) -> Result<Self> {
        let diagonal = (0..two_l)
            .map(|i| if i % 2 == 0 { a.clone() } else { a.inv() })
            .collect();
        Self::new(diagonal, TorusAmbient::Sp(two_l))
    }

    pub fn diagonal(&self) -> &[PAdicScalar] {
        &self.diagonal
    }

    pub fn ambient(&self) -> TorusAmbient {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.diagonal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonal.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::Shape(format!("{:?} vs {:?}", self.ambient, other.ambient)));
        }
        Ok(Self {
            diagonal: self
                .diagonal
                .iter()
                .zip(&other.diagonal)
                .map(|(a, b)| a.mul(b))
                .collect(),
            ambient: self.ambient,
        })
    }

    pub fn determinant(&self) -> Rational {
        self.diagonal
            .iter()
            .fold(Rational::from_integer(1.into()), |acc, d| acc * d.to_rational())
    }

    /// The mirrored block `J h^{-1} J` of a torus element: reversed inverses.
    pub fn star(&self) -> Self {
        Self {
            diagonal: self.diagonal.iter().rev().map(PAdicScalar::inv).collect(),
            ambient: self.ambient,
        }
    }
}

/// `sigma(s, t) = prod_{i<j} (s_i, t_j)_r^{-1}`.
pub fn torus_cocycle(s: &TorusElement, t: &TorusElement, r: u64, p: u64) -> Result<MuR> {
    if s.len() != t.len() {
        return Err(Error::Shape(format!("tori of sizes {} and {}", s.len(), t.len())));
    }
    check_tame(p, r)?;
    let mut acc = MuR::identity(r);
    for i in 0..s.len() {
        for j in i + 1..t.len() {
            let sym = hilbert_tame(&s.diagonal[i], &t.diagonal[j], p, r)?;
            acc = mu_r_mul(acc, sym.inv())?;
        }
    }
    Ok(acc)
}

/// Diagonal of `iota2(h, g)` for torus elements.
pub fn iota2_torus(h: &TorusElement, g: &TorusElement, r: u64) -> Result<TorusElement> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::Precondition(format!("r must be odd and at least 3, got {r}")));
    }
    let r1 = ((r - 1) / 2) as usize;
    let mut diagonal = Vec::new();
    for _ in 0..r1 {
        diagonal.extend_from_slice(&h.diagonal);
    }
    diagonal.extend_from_slice(&g.diagonal);
    let hs = h.star();
    for _ in 0..r1 {
        diagonal.extend_from_slice(&hs.diagonal);
    }
    let size = diagonal.len();
    TorusElement::new(diagonal, TorusAmbient::Sp(size))
}

fn check_block(x: &TorusElement, want: fn(usize) -> TorusAmbient, what: &str) -> Result<()> {
    if x.ambient != want(x.len()) {
        return Err(Error::Precondition(format!("{what} has ambient {:?}", x.ambient)));
    }
    if x.determinant() != Rational::from_integer(1.into()) {
        return Err(Error::Precondition(format!("{what} has determinant != 1")));
    }
    Ok(())
}

/// Whether `sigma(iota2(h1, g1), iota2(h2, g2)) = sigma_k(h1, h2)^{r-1} sigma_{2n}(g1, g2)`.
pub fn block_compat_check(
    h1: &TorusElement,
    h2: &TorusElement,
    g1: &TorusElement,
    g2: &TorusElement,
    r: u64,
    p: u64,
) -> Result<bool> {
    for (x, what) in [(h1, "h1"), (h2, "h2")] {
        check_block(x, TorusAmbient::So, what)?;
    }
    for (x, what) in [(g1, "g1"), (g2, "g2")] {
        check_block(x, TorusAmbient::Sp, what)?;
    }
    let big = torus_cocycle(&iota2_torus(h1, g1, r)?, &iota2_torus(h2, g2, r)?, r, p)?;
    let small = mu_r_mul(
        torus_cocycle(h1, h2, r, p)?.pow(r as i64 - 1),
        torus_cocycle(g1, g2, r, p)?,
    )?;
    Ok(big == small)
}
