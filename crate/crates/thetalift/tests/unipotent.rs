use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thetalift::groups::{
    form_sign, heisenberg_commutator, is_symplectic, tau_embed, t_element, GroupElement,
    HeisenbergElement,
};
use thetalift::sampling::{random_mat0, random_matrix, random_uabc};
use thetalift::scalars::{rat, Fp, Rational, Scalar};
use thetalift::unipotent::{
    commutator, factorize, is_in_mat0, psi_alpha, psi_u, root_subgroup, short_root_sign,
    u_coordinate, u_prime, RootKind, UabcShape,
};
use thetalift::Matrix;

fn q(n: i64) -> Rational {
    rat(n, 1)
}

fn shape(a: usize, b: usize, c: usize) -> UabcShape {
    UabcShape::new(a, b, c).unwrap()
}

#[test]
fn coordinate_examples() {
    let s = shape(1, 2, 1);
    assert!(u_coordinate(&s, 1, &Matrix::<Rational>::zeros(1, 1, &())).unwrap().matrix().is_identity());
    let u = u_coordinate(&s, 1, &Matrix::diag(&[q(4)], &())).unwrap();
    let m = u.matrix();
    assert_eq!(m.rows(), 6);
    assert!(is_symplectic(m, 6).unwrap());
    assert_eq!(m[(0, 1)], q(4));
    assert!(!m[(4, 5)].is_zero());
    let off: usize = (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).filter(|&(i, j)| i != j && !m[(i, j)].is_zero()).count();
    assert_eq!(off, 2);
}

#[test]
fn u_prime_examples() {
    let s = shape(1, 1, 1);
    let zero_y = Matrix::<Rational>::zeros(1, 2, &());
    let zero_z = Matrix::<Rational>::zeros(1, 1, &());
    assert!(u_prime(&s, &zero_y, &zero_z).unwrap().matrix().is_identity());
    let y = Matrix::<Rational>::from_i64(&[&[2, -3]], &()).unwrap();
    let z = Matrix::<Rational>::from_i64(&[&[5]], &()).unwrap();
    let u = u_prime(&s, &y, &z).unwrap();
    assert_eq!(u.matrix().rows(), 4);
    assert!(is_symplectic(u.matrix(), 4).unwrap());
    let z2 = Matrix::<Rational>::from_i64(&[&[-7]], &()).unwrap();
    let lhs = u.mul(&u_prime(&s, &zero_y, &z2).unwrap()).unwrap();
    assert_eq!(lhs, u_prime(&s, &y, &(&z + &z2)).unwrap());
    assert!(u_prime(&shape(2, 1, 1), &Matrix::<Rational>::zeros(2, 2, &()), &Matrix::<Rational>::from_i64(&[&[1, 2], &[3, 4]], &()).unwrap()).is_err());
}

#[test]
fn factorize_examples() {
    let s = shape(2, 2, 1);
    let id = GroupElement::<Rational>::identity(s.tag(), &());
    let f = factorize(&id, &s).unwrap();
    assert!(f.y.is_zero() && f.z.is_zero() && f.xs.iter().all(Matrix::is_zero));
    assert!(f.u1.matrix().is_identity());

    let y = Matrix::<Rational>::from_i64(&[&[1, 2], &[0, -1]], &()).unwrap();
    let z = Matrix::<Rational>::from_i64(&[&[3, 1], &[4, 3]], &()).unwrap();
    assert!(is_in_mat0(&z));
    let x = Matrix::<Rational>::from_i64(&[&[1, -2], &[5, 7]], &()).unwrap();
    let u = u_prime(&s, &y, &z).unwrap().mul(&u_coordinate(&s, 1, &x).unwrap()).unwrap();
    let f = factorize(&u, &s).unwrap();
    assert_eq!(f.xs, vec![x.clone()]);
    assert_eq!(f.y, y);
    assert_eq!(f.z, z);
    assert_eq!(f.reassemble(&s).unwrap(), u);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let u = random_uabc::<Fp, _>(&s, &7, &mut rng).unwrap();
    assert_eq!(factorize(&u, &s).unwrap().reassemble(&s).unwrap(), u);
}

#[test]
fn factorize_rejects_non_members() {
    let s = shape(1, 1, 1);
    let t = t_element(&q(2), 4).unwrap();
    assert!(factorize(&t, &s).is_err());
}

#[test]
fn psi_examples() {
    let s = shape(2, 3, 1);
    assert_eq!(psi_u(&GroupElement::<Rational>::identity(s.tag(), &()), &s).unwrap(), q(0));
    let x = Matrix::<Rational>::from_i64(&[&[3, 9], &[-1, 4]], &()).unwrap();
    assert_eq!(psi_u(&u_coordinate(&s, 2, &x).unwrap(), &s).unwrap(), q(7));
    let y = Matrix::<Rational>::from_i64(&[&[1, 1], &[2, 0]], &()).unwrap();
    let z = Matrix::<Rational>::from_i64(&[&[1, 0], &[0, 1]], &()).unwrap();
    assert_eq!(psi_u(&u_prime(&s, &y, &z).unwrap(), &s).unwrap(), q(0));
}

#[test]
fn psi_alpha_examples() {
    assert_eq!(psi_alpha(&Matrix::<Rational>::zeros(4, 4, &()), 1).unwrap(), q(0));
    let mut z = Matrix::<Rational>::zeros(4, 4, &());
    z[(0, 0)] = q(5);
    z[(3, 3)] = q(5);
    assert_eq!(psi_alpha(&z, 1).unwrap(), q(5));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let z = random_mat0::<Fp, _>(6, &7, &mut rng);
        let mut w = random_mat0::<Fp, _>(6, &7, &mut rng);
        w.set_block(0, 0, &z.block(0, 0, 2, 2));
        w.set_block(4, 4, &z.block(4, 4, 2, 2));
        assert!(is_in_mat0(&w));
        assert_eq!(psi_alpha(&w, 2).unwrap(), psi_alpha(&z, 2).unwrap());
    }
}

#[test]
fn root_subgroup_examples() {
    assert!(root_subgroup(RootKind::Long, 1, 4, &q(0), 4).unwrap().matrix().is_identity());
    let long = root_subgroup(RootKind::Long, 1, 4, &q(7), 4).unwrap();
    assert!(is_symplectic(long.matrix(), 4).unwrap());
    assert_eq!(long.matrix()[(0, 3)], q(7));
    assert_eq!(short_root_sign(1, 2, 4).unwrap(), -1);
    let short = root_subgroup(RootKind::Short, 1, 2, &q(2), 4).unwrap();
    assert_eq!(short.matrix()[(2, 3)], q(-2));
    assert!(root_subgroup(RootKind::Short, 1, 4, &q(1), 4).is_err());
    assert!(root_subgroup(RootKind::Long, 1, 3, &q(1), 4).is_err());
}

#[test]
fn short_root_sign_matches_form_signs() {
    for two_l in (2..=10).step_by(2) {
        for i in 1..=two_l {
            for j in 1..=two_l {
                if i == j || i + j == two_l + 1 {
                    continue;
                }
                let want = -form_sign(i - 1, two_l) * form_sign(j - 1, two_l);
                assert_eq!(short_root_sign(i, j, two_l).unwrap(), want, "({i},{j}) in Sp_{two_l}");
            }
        }
    }
}

#[test]
fn commutator_examples() {
    let d1 = t_element(&q(3), 4).unwrap();
    let d2 = t_element(&rat(-1, 2), 4).unwrap();
    assert!(commutator(&d1, &d2).unwrap().matrix().is_identity());

    let u = HeisenbergElement::new(vec![q(1), q(2)], vec![q(0), q(-1)], q(3)).unwrap();
    let v = HeisenbergElement::new(vec![q(-2), q(1)], vec![q(4), q(1)], q(0)).unwrap();
    let lhs = commutator(&tau_embed(&u).unwrap(), &tau_embed(&v).unwrap()).unwrap();
    assert_eq!(lhs, tau_embed(&heisenberg_commutator(&u, &v).unwrap()).unwrap());

    let a = root_subgroup(RootKind::Short, 1, 2, &q(5), 8).unwrap();
    let b = root_subgroup(RootKind::Short, 3, 4, &q(-2), 8).unwrap();
    assert!(commutator(&a, &b).unwrap().matrix().is_identity());
}

fn grid_shape() -> impl Strategy<Value = UabcShape> {
    (1usize..=3, 1usize..=3, 1usize..=2).prop_map(|(a, b, c)| shape(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorize_then_reassemble(s in grid_shape(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_uabc::<Fp, _>(&s, &7, &mut rng).unwrap();
        prop_assert!(is_symplectic(u.matrix(), s.size()).unwrap());
        let f = factorize(&u, &s).unwrap();
        prop_assert_eq!(f.reassemble(&s).unwrap(), u);
    }

    #[test]
    fn psi_is_a_character(s in grid_shape(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_uabc::<Fp, _>(&s, &11, &mut rng).unwrap();
        let v = random_uabc::<Fp, _>(&s, &11, &mut rng).unwrap();
        let uv = u.mul(&v).unwrap();
        prop_assert_eq!(psi_u(&uv, &s).unwrap(), psi_u(&u, &s).unwrap() + psi_u(&v, &s).unwrap());
    }

    #[test]
    fn coordinate_blocks_are_abelian(a in 1usize..=3, b in 2usize..=3, c in 1usize..=2, seed in any::<u64>()) {
        let s = shape(a, b, c);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 1..b {
            let x = random_matrix::<Fp, _>(a, a, &7, &mut rng);
            let y = random_matrix::<Fp, _>(a, a, &7, &mut rng);
            let ux = u_coordinate(&s, i, &x).unwrap();
            let uy = u_coordinate(&s, i, &y).unwrap();
            let sum = u_coordinate(&s, i, &(&x + &y)).unwrap();
            prop_assert_eq!(ux.mul(&uy).unwrap(), sum.clone());
            prop_assert_eq!(uy.mul(&ux).unwrap(), sum);
        }
    }

    #[test]
    fn u_prime_central_direction(a in 1usize..=3, c in 1usize..=2, seed in any::<u64>()) {
        let s = shape(a, 2, c);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_matrix::<Fp, _>(a, 2 * c, &7, &mut rng);
        let z = random_mat0::<Fp, _>(a, &7, &mut rng);
        let z2 = random_mat0::<Fp, _>(a, &7, &mut rng);
        let lhs = u_prime(&s, &y, &z).unwrap().mul(&u_prime(&s, &Matrix::zeros(a, 2 * c, &7), &z2).unwrap()).unwrap();
        prop_assert_eq!(lhs, u_prime(&s, &y, &(&z + &z2)).unwrap());
    }
}
