//! Randomised and exhaustive verification suites, one per area, each
//! returning a list of named check records.
//!
//! Every sampled check draws from its own ChaCha stream derived from the seed
//! and the check name, so results do not depend on which checks run.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cocycle::{
    block_compat_check, hilbert_quadratic, hilbert_tame, torus_cocycle, TorusAmbient, TorusElement,
};
use crate::embed::{iota1_standard, iota2, l_map, l_map_weighted, stabilizes_psi};
use crate::error::{Error, Result};
use crate::exponents::{
    borel_ledger, delta_ledger, delta_target, ledger_sum, ledger_target, exponent_equation_solutions,
};
use crate::groups::{
    heisenberg_mul, is_symplectic, symplectic_form, tau_embed, GroupElement, GroupTag,
    HeisenbergElement, WeylElement,
};
use crate::matrix::{block_diag, Matrix};
use crate::orbits::{
    centralizer_dim_oracle, dimension_equation, dominance, o_c, orbit_dim, symplectic_partitions,
    OrbitComparison,
};
use crate::report::CheckRecord;
use crate::sampling::{
    random_heisenberg, random_mat0, random_matrix, random_padic, random_so, random_sp,
    random_torus, random_uabc, RandomScalar,
};
use crate::scalars::{
    check_odd_prime, mu_r_mul, rat, unit_part, val_p, Fp, MuR, PAdicScalar, Rational, Scalar,
};
use crate::unipotent::{factorize, psi_u, u_coordinate, u_prime, UabcShape};
use crate::weyl::{
    shortest_conjugator, weyl_cusp, weyl_cusp_blocks, weyl_theta02, weyl_theta03, BlockPattern,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Embed,
    Heisenberg,
    Characters,
    Weyl,
    Cocycle,
    Orbits,
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["all", "embed", "heisenberg", "characters", "weyl", "cocycle", "orbits"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "embed" => Suite::Embed,
            "heisenberg" => Suite::Heisenberg,
            "characters" => Suite::Characters,
            "weyl" => Suite::Weyl,
            "cocycle" => Suite::Cocycle,
            "orbits" => Suite::Orbits,
            other => return Err(Error::Unsupported(format!("unknown suite {other}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::All,
            Suite::Embed,
            Suite::Heisenberg,
            Suite::Characters,
            Suite::Weyl,
            Suite::Cocycle,
            Suite::Orbits,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Suite::NAMES[i])
    }
}

/// Shared parameters. `iters` overrides every per-check sample count.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub p: u64,
    pub seed: u64,
    pub iters: Option<usize>,
}

impl SuiteConfig {
    pub fn new(p: u64, seed: u64, iters: Option<usize>) -> Self {
        Self { p, seed, iters }
    }

    fn n(&self, default: usize) -> usize {
        self.iters.unwrap_or(default)
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    check_odd_prime(cfg.p)?;
    Ok(match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Embed,
                Suite::Heisenberg,
                Suite::Characters,
                Suite::Weyl,
                Suite::Cocycle,
                Suite::Orbits,
            ] {
                all.extend(run_suite(s, cfg)?);
            }
            all
        }
        Suite::Embed => embed_suite(cfg),
        Suite::Heisenberg => heisenberg_suite(cfg),
        Suite::Characters => characters_suite(cfg),
        Suite::Weyl => weyl_suite(cfg),
        Suite::Cocycle => {
            if 6 % cfg.p == 0 {
                return Err(Error::Precondition(format!("p = {} divides 2r = 6", cfg.p)));
            }
            cocycle_suite(cfg)
        }
        Suite::Orbits => orbits_suite(),
    })
}

fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// One sample: the echoed inputs and the outcome of the check on them.
type Sample = (Value, Result<bool>);

fn sweep(
    name: &str,
    seed: u64,
    iters: usize,
    mut body: impl FnMut(&mut ChaCha8Rng) -> Sample,
) -> CheckRecord {
    let mut rng = rng_for(seed, name);
    for it in 0..iters {
        let (inputs, outcome) = body(&mut rng);
        let witness = |extra: Value| json!({ "seed": seed, "iteration": it, "inputs": inputs, "detail": extra });
        match outcome {
            Ok(true) => {}
            Ok(false) => return CheckRecord::fail(name, witness(Value::Null)),
            Err(e) => return CheckRecord::fail(name, witness(json!(e.to_string()))),
        }
    }
    CheckRecord::pass_with(name, json!({ "samples": iters }))
}

fn show<T: fmt::Display>(x: &T) -> Value {
    json!(x.to_string())
}

fn show_h<F: Scalar + fmt::Display>(u: &HeisenbergElement<F>) -> Value {
    let v = |xs: &[F]| xs.iter().map(ToString::to_string).collect::<Vec<_>>();
    json!({ "x": v(&u.x), "y": v(&u.y), "z": u.z.to_string() })
}

fn exhaustive(name: &str, found: Option<Value>, count: usize) -> CheckRecord {
    match found {
        None => CheckRecord::pass_with(name, json!({ "cases": count })),
        Some(w) => CheckRecord::fail(name, w),
    }
}

fn try_check(f: impl FnOnce() -> Result<bool>) -> Result<bool> {
    f()
}

/// Parameter triples `(k, n, r)` for the embedding checks.
pub const EMBED_PARAMS: [(usize, usize, u64); 3] = [(3, 1, 3), (4, 2, 3), (3, 1, 5)];

pub fn embed_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let p = cfg.p;
    let mut out = Vec::new();
    for &(k, n, r) in &EMBED_PARAMS {
        let tag = format!("k{k}_n{n}_r{r}");
        let pair = |rng: &mut ChaCha8Rng| -> Result<(GroupElement<Fp>, GroupElement<Fp>)> {
            Ok((random_so::<Fp, _>(k, &p, rng)?, random_sp::<Fp, _>(2 * n, &p, rng)?))
        };
        for (which, embed) in [
            ("iota1", &(|h: &GroupElement<Fp>, g: &GroupElement<Fp>| iota1_standard(h, g))
                as &dyn Fn(&GroupElement<Fp>, &GroupElement<Fp>) -> Result<GroupElement<Fp>>),
            ("iota2", &|h: &GroupElement<Fp>, g: &GroupElement<Fp>| iota2(h, g, r)),
        ] {
            out.push(sweep(&format!("embed_{which}_homomorphism_{tag}"), cfg.seed, cfg.n(200), |rng| {
                let sample = pair(rng).and_then(|a| Ok((a, pair(rng)?)));
                let ((h1, g1), (h2, g2)) = match sample {
                    Ok(s) => s,
                    Err(e) => return (Value::Null, Err(e)),
                };
                let inputs = json!([show(h1.matrix()), show(g1.matrix()), show(h2.matrix()), show(g2.matrix())]);
                let ok = try_check(|| {
                    let lhs = embed(&h1.mul(&h2)?, &g1.mul(&g2)?)?;
                    let rhs = embed(&h1, &g1)?.mul(&embed(&h2, &g2)?)?;
                    Ok(lhs == rhs)
                });
                (inputs, ok)
            }));
            out.push(sweep(&format!("embed_{which}_symplectic_{tag}"), cfg.seed, cfg.n(200), |rng| {
                let (h, g) = match pair(rng) {
                    Ok(s) => s,
                    Err(e) => return (Value::Null, Err(e)),
                };
                let inputs = json!([show(h.matrix()), show(g.matrix())]);
                let ok = try_check(|| {
                    let m = embed(&h, &g)?;
                    is_symplectic(m.matrix(), m.matrix().rows())
                });
                (inputs, ok)
            }));
            out.push(sweep(&format!("embed_{which}_commute_{tag}"), cfg.seed, cfg.n(200), |rng| {
                let (h, g) = match pair(rng) {
                    Ok(s) => s,
                    Err(e) => return (Value::Null, Err(e)),
                };
                let inputs = json!([show(h.matrix()), show(g.matrix())]);
                let ok = try_check(|| {
                    let a = embed(&h, &GroupElement::identity(GroupTag::Sp(2 * n), &p))?;
                    let b = embed(&GroupElement::identity(GroupTag::So(k), &p), &g)?;
                    Ok(a.mul(&b)? == b.mul(&a)?)
                });
                (inputs, ok)
            }));
        }
        out.push(sweep(&format!("embed_psi_stabilized_{tag}"), cfg.seed, cfg.n(100), |rng| {
            let (h, g) = match pair(rng) {
                Ok(s) => s,
                Err(e) => return (Value::Null, Err(e)),
            };
            let inputs = json!([show(h.matrix()), show(g.matrix())]);
            (inputs, stabilizes_psi(&h, &g, r))
        }));
    }
    for two_m in (2..=12).step_by(2) {
        out.push(sweep(&format!("embed_sp_closure_{two_m}"), cfg.seed, cfg.n(200), |rng| {
            let ab = random_sp::<Fp, _>(two_m, &p, rng).and_then(|a| Ok((a, random_sp::<Fp, _>(two_m, &p, rng)?)));
            let (a, b) = match ab {
                Ok(s) => s,
                Err(e) => return (Value::Null, Err(e)),
            };
            let inputs = json!([show(a.matrix()), show(b.matrix())]);
            (inputs, is_symplectic(&(a.matrix() * b.matrix()), two_m))
        }));
    }
    out
}

/// `U'_{a,c}` shapes used for the `l` checks, split by parity of `a`.
pub const L_EVEN_SHAPES: [(usize, usize); 4] = [(2, 1), (2, 2), (4, 1), (4, 2)];
pub const L_ODD_SHAPES: [(usize, usize); 4] = [(3, 1), (3, 2), (5, 1), (5, 2)];

fn random_u_prime<R: Rng>(shape: &UabcShape, p: u64, rng: &mut R) -> Result<(GroupElement<Fp>, Value)> {
    let y = random_matrix::<Fp, _>(shape.a, 2 * shape.c, &p, rng);
    let z = random_mat0::<Fp, _>(shape.a, &p, rng);
    let inputs = json!({ "Y": show(&y), "Z": show(&z) });
    Ok((u_prime(shape, &y, &z)?, inputs))
}

fn l_hom_check(
    name: &str,
    shapes: &[(usize, usize)],
    identity_weight: bool,
    cfg: &SuiteConfig,
) -> CheckRecord {
    let p = cfg.p;
    let mut i = 0;
    sweep(name, cfg.seed, cfg.n(500), |rng| {
        let (a, c) = shapes[i % shapes.len()];
        i += 1;
        let shape = UabcShape::new(a, 1, c).expect("valid shape");
        let l = |u: &GroupElement<Fp>| {
            if identity_weight {
                l_map_weighted(u, &shape, &Matrix::identity(a, &p))
            } else {
                l_map(u, &shape)
            }
        };
        let (u, iu) = match random_u_prime(&shape, p, rng) {
            Ok(s) => s,
            Err(e) => return (Value::Null, Err(e)),
        };
        let (v, iv) = match random_u_prime(&shape, p, rng) {
            Ok(s) => s,
            Err(e) => return (Value::Null, Err(e)),
        };
        let inputs = json!({ "a": a, "c": c, "u": iu, "v": iv });
        let ok = try_check(|| Ok(l(&u.mul(&v)?)? == heisenberg_mul(&l(&u)?, &l(&v)?)?));
        (inputs, ok)
    })
}

pub fn heisenberg_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let p = cfg.p;
    let mut out = Vec::new();
    let mut i = 0;
    out.push(sweep("heisenberg_associativity", cfg.seed, cfg.n(500), |rng| {
        let l = 1 + i % 3;
        i += 1;
        let (u, v, w) = (
            random_heisenberg::<Fp, _>(l, &p, rng),
            random_heisenberg::<Fp, _>(l, &p, rng),
            random_heisenberg::<Fp, _>(l, &p, rng),
        );
        let inputs = json!([show_h(&u), show_h(&v), show_h(&w)]);
        let ok = try_check(|| {
            Ok(heisenberg_mul(&heisenberg_mul(&u, &v)?, &w)?
                == heisenberg_mul(&u, &heisenberg_mul(&v, &w)?)?)
        });
        (inputs, ok)
    }));
    let mut i = 0;
    out.push(sweep("heisenberg_tau_homomorphism", cfg.seed, cfg.n(200), |rng| {
        let l = 1 + i % 3;
        i += 1;
        let (u, v) = (random_heisenberg::<Fp, _>(l, &p, rng), random_heisenberg::<Fp, _>(l, &p, rng));
        let inputs = json!([show_h(&u), show_h(&v)]);
        let ok = try_check(|| Ok(tau_embed(&heisenberg_mul(&u, &v)?)? == tau_embed(&u)?.mul(&tau_embed(&v)?)?));
        (inputs, ok)
    }));
    let mut i = 0;
    out.push(sweep("heisenberg_tau_injective", cfg.seed, cfg.n(200), |rng| {
        let l = 1 + i % 3;
        i += 1;
        let (u, v) = (random_heisenberg::<Fp, _>(l, &p, rng), random_heisenberg::<Fp, _>(l, &p, rng));
        let inputs = json!([show_h(&u), show_h(&v)]);
        let ok = try_check(|| Ok((tau_embed(&u)? == tau_embed(&v)?) == (u == v)));
        (inputs, ok)
    }));
    out.push(l_hom_check("heisenberg_l_map_homomorphism_even", &L_EVEN_SHAPES, false, cfg));
    out.push(l_hom_check("heisenberg_l_map_homomorphism_odd", &L_ODD_SHAPES, false, cfg));
    out.push(l_hom_check("heisenberg_l_map_homomorphism_odd_unweighted", &L_ODD_SHAPES, true, cfg));
    let mut i = 0;
    out.push(sweep("heisenberg_l_map_center", cfg.seed, cfg.n(200), |rng| {
        let all: Vec<_> = L_EVEN_SHAPES.iter().chain(&L_ODD_SHAPES).copied().collect();
        let (a, c) = all[i % all.len()];
        i += 1;
        let shape = UabcShape::new(a, 1, c).expect("valid shape");
        let z = random_mat0::<Fp, _>(a, &p, rng);
        let inputs = json!({ "a": a, "c": c, "Z": show(&z) });
        let ok = try_check(|| {
            let u = u_prime(&shape, &Matrix::zeros(a, 2 * c, &p), &z)?;
            Ok(l_map(&u, &shape)?.is_central())
        });
        (inputs, ok)
    }));
    out
}

/// `U_{a,b,c}` shapes with `a, b <= 3`, `c <= 2`.
pub fn uabc_grid() -> Vec<UabcShape> {
    let mut v = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=2 {
                v.push(UabcShape::new(a, b, c).expect("valid shape"));
            }
        }
    }
    v
}

fn ledger_grid() -> impl Iterator<Item = (usize, usize, usize)> {
    (3..=13).step_by(2).flat_map(|r| (2..=10).flat_map(move |k| (1..=10).map(move |n| (r, k, n))))
}

pub fn characters_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let p = cfg.p;
    let mut out = Vec::new();
    for shape in uabc_grid() {
        let tag = format!("a{}_b{}_c{}", shape.a, shape.b, shape.c);
        out.push(sweep(&format!("characters_factorize_roundtrip_{tag}"), cfg.seed, cfg.n(500), |rng| {
            let u = match random_uabc::<Fp, _>(&shape, &p, rng) {
                Ok(u) => u,
                Err(e) => return (Value::Null, Err(e)),
            };
            let inputs = json!(show(u.matrix()));
            let ok = try_check(|| {
                let f = factorize(&u, &shape)?;
                Ok(f.reassemble(&shape)? == u && u.is_valid())
            });
            (inputs, ok)
        }));
        out.push(sweep(&format!("characters_psi_additive_{tag}"), cfg.seed, cfg.n(100), |rng| {
            let uv = random_uabc::<Fp, _>(&shape, &p, rng)
                .and_then(|u| Ok((u, random_uabc::<Fp, _>(&shape, &p, rng)?)));
            let (u, v) = match uv {
                Ok(s) => s,
                Err(e) => return (Value::Null, Err(e)),
            };
            let inputs = json!([show(u.matrix()), show(v.matrix())]);
            let ok = try_check(|| Ok(psi_u(&u.mul(&v)?, &shape)? == psi_u(&u, &shape)? + psi_u(&v, &shape)?));
            (inputs, ok)
        }));
        if shape.b >= 2 {
            out.push(sweep(&format!("characters_coordinate_abelian_{tag}"), cfg.seed, cfg.n(100), |rng| {
                let i = rng.gen_range(1..shape.b);
                let x = random_matrix::<Fp, _>(shape.a, shape.a, &p, rng);
                let y = random_matrix::<Fp, _>(shape.a, shape.a, &p, rng);
                let inputs = json!({ "i": i, "X": show(&x), "Y": show(&y) });
                let ok = try_check(|| {
                    let (ux, uy) = (u_coordinate(&shape, i, &x)?, u_coordinate(&shape, i, &y)?);
                    let sum = u_coordinate(&shape, i, &(&x + &y))?;
                    Ok(ux.mul(&uy)? == sum && uy.mul(&ux)? == sum)
                });
                (inputs, ok)
            }));
        }
    }

    let mut bad = None;
    let mut count = 0;
    for (r, k, n) in ledger_grid() {
        count += 1;
        let (s, t) = (ledger_sum(r, k, n), ledger_target(r, k, n));
        if bad.is_none() && !matches!((&s, &t), (Ok(a), Ok(b)) if a == b) {
            bad = Some(json!({ "r": r, "k": k, "n": n, "sum": format!("{s:?}"), "target": format!("{t:?}") }));
        }
    }
    out.push(exhaustive("characters_ledger_identity", bad, count));

    let mut bad = None;
    for (r, k, n) in ledger_grid() {
        let want = -ledger_target(r, k, n).expect("odd r");
        let got = borel_ledger(r, k, n);
        if bad.is_none() && !matches!(&got, Ok(e) if *e == rat(want, 1)) {
            bad = Some(json!({ "r": r, "k": k, "n": n, "borel": format!("{got:?}"), "expected": want }));
        }
    }
    out.push(exhaustive("characters_borel_exponent", bad, count));

    let mut bad = None;
    let mut cases = 0;
    for k in 2..=10 {
        for n in 1..=10 {
            cases += 1;
            let d = delta_ledger(k, n);
            let want = delta_target(k, n);
            let ok = matches!(&d, Ok(d) if d.total.a == want && d.total.b == -want.clone());
            if bad.is_none() && !ok {
                bad = Some(json!({ "k": k, "n": n, "ledger": format!("{d:?}"), "expected": want.to_string() }));
            }
        }
    }
    out.push(exhaustive("characters_delta_exponent", bad, cases));

    let mut bad = None;
    for r in (3..=13).step_by(2) {
        let sols = exponent_equation_solutions(r, 200).expect("odd r");
        if bad.is_none() && sols != vec![r - 1] {
            bad = Some(json!({ "r": r, "solutions": sols }));
        }
    }
    out.push(exhaustive("characters_exponent_equation_solutions", bad, 6));
    out
}

fn weyl_grid() -> Vec<(String, Result<WeylElement>)> {
    let mut v = Vec::new();
    for l in 1..=6 {
        v.push((format!("theta03 l={l}"), weyl_theta03(l)));
    }
    for r in [3, 5, 7] {
        for l in 0..=3 {
            v.push((format!("theta02 r={r} l={l}"), weyl_theta02(r, l)));
        }
        for alpha in 1..=3 {
            for beta in 0..=3 {
                for n in 1..=3 {
                    v.push((format!("cusp alpha={alpha} beta={beta} r={r} n={n}"), weyl_cusp(alpha, beta, r, n)));
                }
            }
        }
    }
    v
}

/// Expected `(w1, w2)` at `r = 7`, assembled from the displayed block table:
/// block rows `alpha x 6, beta x 3`, block columns `(alpha, beta, alpha) x 3`.
pub fn cusp_r7_expected(alpha: usize, beta: usize) -> (Matrix<Rational>, Matrix<Rational>) {
    let k = 2 * alpha + beta;
    let size = 3 * k;
    let row_sizes: Vec<usize> = [alpha; 6].into_iter().chain([beta; 3]).collect();
    let col_sizes: Vec<usize> = (0..3).flat_map(|_| [alpha, beta, alpha]).collect();
    let start = |sizes: &[usize], b: usize| sizes[..b - 1].iter().sum::<usize>();
    let place = |m: &mut Matrix<Rational>, br: usize, bc: usize| {
        let (r0, c0) = (start(&row_sizes, br), start(&col_sizes, bc));
        assert_eq!(row_sizes[br - 1], col_sizes[bc - 1]);
        for t in 0..row_sizes[br - 1] {
            m[(r0 + t, c0 + t)] = rat(1, 1);
        }
    };
    let mut w1 = Matrix::zeros(size, size, &());
    let mut w2 = Matrix::zeros(size, size, &());
    for (br, bc) in [(1, 1), (2, 4), (3, 7), (7, 2), (8, 5), (9, 8)] {
        place(&mut w1, br, bc);
    }
    for (br, bc) in [(4, 1), (5, 4), (6, 7)] {
        place(&mut w2, br, bc);
    }
    (w1, w2)
}

/// `diag(B, ..., B, A, B*, ..., B*)` and its rearrangement
/// `diag(b, ..., b, a, h', ..., h', g', h'*, ..., h'*, a^-1, b^-1, ..., b^-1)`
/// for `B = diag(b, h', b^-1)` in `SO_k` and `A = diag(a, g', a^-1)` in `Sp_2n`.
pub fn levi_rearrangement_patterns(r: usize, k: usize, n: usize) -> (BlockPattern, BlockPattern) {
    let r1 = (r - 1) / 2;
    let mut src = Vec::new();
    let mut dst = Vec::new();
    let b = |h: &'static str| [("b", 1), (h, k - 2), ("b^-1", 1)];
    for _ in 0..r1 {
        src.extend(b("h'"));
    }
    src.extend([("a", 1), ("g'", 2 * n - 2), ("a^-1", 1)]);
    for _ in 0..r1 {
        src.extend(b("h'*"));
    }
    dst.extend(std::iter::repeat_n(("b", 1), r - 1));
    dst.push(("a", 1));
    dst.extend(std::iter::repeat_n(("h'", k - 2), r1));
    dst.push(("g'", 2 * n - 2));
    dst.extend(std::iter::repeat_n(("h'*", k - 2), r1));
    dst.push(("a^-1", 1));
    dst.extend(std::iter::repeat_n(("b^-1", 1), r - 1));
    let keep = |v: Vec<(&str, usize)>| {
        BlockPattern::from_pairs(&v.into_iter().filter(|b| b.1 > 0).collect::<Vec<_>>())
    };
    (keep(src), keep(dst))
}

/// Patterns `(src, dst)` for the conjugator sweep.
pub fn conjugator_patterns() -> Vec<(BlockPattern, BlockPattern)> {
    let bp = BlockPattern::from_pairs;
    vec![
        levi_rearrangement_patterns(3, 4, 2),
        levi_rearrangement_patterns(3, 3, 1),
        levi_rearrangement_patterns(5, 3, 1),
        levi_rearrangement_patterns(5, 4, 2),
        (bp(&[("x", 1), ("y", 2), ("y*", 2), ("x*", 1)]), bp(&[("y", 2), ("x", 1), ("x*", 1), ("y*", 2)])),
        (
            bp(&[("a", 1), ("b", 2), ("g", 2), ("b*", 2), ("a*", 1)]),
            bp(&[("b", 2), ("a", 1), ("g", 2), ("a*", 1), ("b*", 2)]),
        ),
        (
            bp(&[("x", 1), ("y", 2), ("z", 1), ("z*", 1), ("y*", 2), ("x*", 1)]),
            bp(&[("z", 1), ("x", 1), ("y", 2), ("y*", 2), ("x*", 1), ("z*", 1)]),
        ),
        (
            bp(&[("h1", 3), ("h2", 3), ("g", 2), ("h2*", 3), ("h1*", 3)]),
            bp(&[("h2", 3), ("h1", 3), ("g", 2), ("h1*", 3), ("h2*", 3)]),
        ),
    ]
}

pub fn weyl_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let p = cfg.p;
    let mut out = Vec::new();
    let grid = weyl_grid();
    let mut bad = None;
    for (what, w) in &grid {
        let ok = matches!(w, Ok(w) if is_symplectic(&w.matrix::<Rational>(&()), w.size()).unwrap_or(false));
        if bad.is_none() && !ok {
            bad = Some(json!({ "element": what, "result": format!("{w:?}") }));
        }
    }
    out.push(exhaustive("weyl_elements_symplectic", bad, grid.len()));

    let mut bad = None;
    for (what, w) in &grid {
        if let Ok(w) = w {
            let m = w.matrix::<Rational>(&());
            let j = symplectic_form::<Rational>(w.size(), &());
            let j_inv = j.inverse().expect("form is invertible");
            let via_form = &(&j_inv * &m.transpose()) * &j;
            if bad.is_none() && (w.inverse().matrix::<Rational>(&()) != via_form || !(&m * &via_form).is_identity()) {
                bad = Some(json!({ "element": what }));
            }
        }
    }
    out.push(exhaustive("weyl_inverse_is_form_transpose", bad, grid.len()));

    let mut bad = None;
    let mut cases = 0;
    for r in [3, 5, 7] {
        for alpha in 1..=3 {
            for beta in 0..=3 {
                cases += 1;
                let blocks = weyl_cusp_blocks(alpha, beta, r);
                let mut rows = std::collections::HashSet::new();
                let mut cols = std::collections::HashSet::new();
                let mut clash = false;
                for b in &blocks {
                    for t in 0..b.size {
                        clash |= !rows.insert(b.row + t);
                        clash |= !cols.insert((b.in_w2, b.col + t));
                    }
                }
                if bad.is_none() && clash {
                    bad = Some(json!({ "alpha": alpha, "beta": beta, "r": r }));
                }
            }
        }
    }
    out.push(exhaustive("weyl_cusp_no_overlap", bad, cases));

    let mut bad = None;
    let mut cases = 0;
    for alpha in 1..=3 {
        for beta in 0..=3 {
            for n in 1..=2 {
                cases += 1;
                let k = 2 * alpha + beta;
                let kr1 = 3 * k;
                let (e1, e2) = cusp_r7_expected(alpha, beta);
                let ok = weyl_cusp(alpha, beta, 7, n).is_ok_and(|w| {
                    let m = w.matrix::<Rational>(&());
                    m.block(0, 0, kr1, kr1) == e1 && m.block(0, kr1 + 2 * n, kr1, kr1) == e2
                });
                if bad.is_none() && !ok {
                    bad = Some(json!({ "alpha": alpha, "beta": beta, "n": n }));
                }
            }
        }
    }
    out.push(exhaustive("weyl_cusp_r7_layout", bad, cases));

    for (idx, (src, dst)) in conjugator_patterns().into_iter().enumerate() {
        let w = shortest_conjugator(&src, &dst);
        out.push(sweep(&format!("weyl_conjugator_pattern{idx}"), cfg.seed, cfg.n(50), |rng| {
            let w = match &w {
                Ok(w) => w.clone(),
                Err(e) => return (Value::Null, Err(e.clone())),
            };
            let fills: std::collections::BTreeMap<String, Matrix<Fp>> = src
                .blocks
                .iter()
                .map(|(label, size)| (label.clone(), random_matrix::<Fp, _>(*size, *size, &p, rng)))
                .collect();
            let diag_of = |pat: &BlockPattern| {
                let blocks: Vec<_> = pat.blocks.iter().map(|(l, _)| fills[l].clone()).collect();
                block_diag(&blocks, &p)
            };
            let inputs = json!(fills.iter().map(|(l, m)| (l.clone(), show(m))).collect::<serde_json::Map<_, _>>());
            let lhs = &(&w.matrix::<Fp>(&p) * &diag_of(&src)) * &w.inverse().matrix::<Fp>(&p);
            (inputs, Ok(lhs == diag_of(&dst)))
        }));
    }
    out
}

fn sp_torus_size(i: usize) -> usize {
    2 + 2 * (i % 3)
}

pub fn cocycle_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let p = cfg.p;
    let r: u64 = 3;
    let mut out = Vec::new();
    let pa = |x: &PAdicScalar| show(x);

    out.push(sweep("cocycle_hilbert_bimultiplicative", cfg.seed, cfg.n(500), |rng| {
        let (a, a2, b) = (random_padic(p, rng), random_padic(p, rng), random_padic(p, rng));
        let inputs = json!([pa(&a), pa(&a2), pa(&b)]);
        let ok = try_check(|| {
            let left = hilbert_tame(&a.mul(&a2), &b, p, r)?
                == mu_r_mul(hilbert_tame(&a, &b, p, r)?, hilbert_tame(&a2, &b, p, r)?)?;
            let right = hilbert_tame(&b, &a.mul(&a2), p, r)?
                == mu_r_mul(hilbert_tame(&b, &a, p, r)?, hilbert_tame(&b, &a2, p, r)?)?;
            Ok(left && right)
        });
        (inputs, ok)
    }));
    out.push(sweep("cocycle_hilbert_antisymmetric", cfg.seed, cfg.n(500), |rng| {
        let (a, b) = (random_padic(p, rng), random_padic(p, rng));
        let inputs = json!([pa(&a), pa(&b)]);
        let ok = try_check(|| Ok(mu_r_mul(hilbert_tame(&a, &b, p, r)?, hilbert_tame(&b, &a, p, r)?)?.is_identity()));
        (inputs, ok)
    }));
    out.push(sweep("cocycle_hilbert_steinberg", cfg.seed, cfg.n(500), |rng| {
        let mut x = random_padic(p, rng).to_rational();
        if x == rat(1, 1) {
            x = rat(2, 1);
        }
        let one_minus = rat(1, 1) - x.clone();
        let inputs = json!([x.to_string(), one_minus.to_string()]);
        let ok = try_check(|| {
            let a = PAdicScalar::from_rational(&x, p)?;
            let b = PAdicScalar::from_rational(&one_minus, p)?;
            Ok(hilbert_tame(&a, &b, p, r)?.is_identity() && hilbert_quadratic(&a, &b, p)?.is_identity())
        });
        (inputs, ok)
    }));
    out.push(sweep("cocycle_quadratic_bimultiplicative", cfg.seed, cfg.n(500), |rng| {
        let (a, a2, b) = (random_padic(p, rng), random_padic(p, rng), random_padic(p, rng));
        let inputs = json!([pa(&a), pa(&a2), pa(&b)]);
        let ok = try_check(|| {
            Ok(hilbert_quadratic(&a.mul(&a2), &b, p)?
                == mu_r_mul(hilbert_quadratic(&a, &b, p)?, hilbert_quadratic(&a2, &b, p)?)?)
        });
        (inputs, ok)
    }));

    let torus_json = |t: &TorusElement| json!(t.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>());
    let mut i = 0;
    out.push(sweep("cocycle_two_cocycle_identity", cfg.seed, cfg.n(1000), |rng| {
        let amb = TorusAmbient::Sp(sp_torus_size(i));
        i += 1;
        let tri = (|| Ok::<_, Error>((random_torus(amb, p, rng)?, random_torus(amb, p, rng)?, random_torus(amb, p, rng)?)))();
        let (s, t, u) = match tri {
            Ok(x) => x,
            Err(e) => return (Value::Null, Err(e)),
        };
        let inputs = json!([torus_json(&s), torus_json(&t), torus_json(&u)]);
        let ok = try_check(|| {
            let lhs = mu_r_mul(torus_cocycle(&s, &t, r, p)?, torus_cocycle(&s.mul(&t)?, &u, r, p)?)?;
            let rhs = mu_r_mul(torus_cocycle(&s, &t.mul(&u)?, r, p)?, torus_cocycle(&t, &u, r, p)?)?;
            Ok(lhs == rhs)
        });
        (inputs, ok)
    }));
    let mut i = 0;
    out.push(sweep("cocycle_block_compatibility", cfg.seed, cfg.n(200), |rng| {
        let (k, two_n) = ([(3, 2), (4, 2), (3, 4), (4, 4)])[i % 4];
        i += 1;
        let quad = (|| {
            Ok::<_, Error>((
                random_torus(TorusAmbient::So(k), p, rng)?,
                random_torus(TorusAmbient::So(k), p, rng)?,
                random_torus(TorusAmbient::Sp(two_n), p, rng)?,
                random_torus(TorusAmbient::Sp(two_n), p, rng)?,
            ))
        })();
        let (h1, h2, g1, g2) = match quad {
            Ok(x) => x,
            Err(e) => return (Value::Null, Err(e)),
        };
        let inputs = json!([torus_json(&h1), torus_json(&h2), torus_json(&g1), torus_json(&g2)]);
        (inputs, block_compat_check(&h1, &h2, &g1, &g2, r, p))
    }));
    let mut primes = vec![p, 13];
    primes.dedup();
    for q in primes {
        let mut i = 0;
        out.push(sweep(&format!("cocycle_rth_power_trivial_p{q}"), cfg.seed, cfg.n(100), |rng| {
            let two_l = sp_torus_size(i);
            i += 1;
            let (a1, a2) = (random_padic(q, rng).pow(r as i64), random_padic(q, rng).pow(r as i64));
            let inputs = json!({ "2l": two_l, "a1": pa(&a1), "a2": pa(&a2) });
            let ok = try_check(|| {
                Ok(torus_cocycle(&TorusElement::t(&a1, two_l)?, &TorusElement::t(&a2, two_l)?, r, q)?.is_identity())
            });
            (inputs, ok)
        }));
    }

    out.push(sweep("scalars_field_axioms_fp", cfg.seed, cfg.n(1000), |rng| {
        let (a, b, c) = (Fp::random(&p, rng), Fp::random(&p, rng), Fp::random(&p, rng));
        let inputs = json!([a.residue(), b.residue(), c.residue()]);
        (inputs, Ok(field_axioms(&a, &b, &c)))
    }));
    out.push(sweep("scalars_field_axioms_rational", cfg.seed, cfg.n(1000), |rng| {
        let (a, b, c) = (Rational::random(&(), rng), Rational::random(&(), rng), Rational::random(&(), rng));
        let inputs = json!([a.to_string(), b.to_string(), c.to_string()]);
        (inputs, Ok(field_axioms(&a, &b, &c)))
    }));
    out.push(sweep("scalars_valuation_multiplicative", cfg.seed, cfg.n(500), |rng| {
        let (x, y) = (random_padic(p, rng).to_rational(), random_padic(p, rng).to_rational());
        let inputs = json!([x.to_string(), y.to_string()]);
        let ok = try_check(|| {
            let xy = &x * &y;
            Ok(val_p(&xy, p)? == val_p(&x, p)? + val_p(&y, p)?
                && unit_part(&xy, p)? == unit_part(&x, p)? * unit_part(&y, p)?)
        });
        (inputs, ok)
    }));
    let mut bad = None;
    for order in 1..=12u64 {
        let z = MuR::new(1, order);
        let mut acc = MuR::identity(order);
        let mut ok = true;
        for step in 1..=order {
            acc = mu_r_mul(acc, z).expect("same order");
            ok &= acc.is_identity() == (step == order);
        }
        if bad.is_none() && !ok {
            bad = Some(json!({ "order": order }));
        }
    }
    out.push(exhaustive("scalars_mu_r_cyclic", bad, 12));
    out
}

fn field_axioms<F: Scalar>(a: &F, b: &F, c: &F) -> bool {
    let ctx = a.ctx();
    let assoc = (a.clone() * b.clone()) * c.clone() == a.clone() * (b.clone() * c.clone())
        && (a.clone() + b.clone()) + c.clone() == a.clone() + (b.clone() + c.clone());
    let distrib = a.clone() * (b.clone() + c.clone()) == a.clone() * b.clone() + a.clone() * c.clone();
    let inverse = a.is_zero() || (a.clone() * a.inv().expect("nonzero")).is_one();
    let neg = (a.clone() - a.clone()).is_zero() && (a.clone() + F::zero(&ctx)) == *a;
    assoc && distrib && inverse && neg
}

/// Grid `(r, m, 2l)` with odd `r`, `m >= r` and `2m + 2 < 2l`.
pub fn hook_grid() -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for r in [3, 5, 7] {
        for m in r..=r + 3 {
            for two_l in (2 * m + 4..=2 * m + 14).step_by(2) {
                v.push((r, m, two_l));
            }
        }
    }
    v
}

pub fn hook_partition(m: usize, two_l: usize) -> Vec<usize> {
    let mut lam = vec![2 * m + 2];
    lam.extend(std::iter::repeat_n(1, two_l - 2 * m - 2));
    lam
}

pub fn orbits_suite() -> Vec<CheckRecord> {
    let mut out = Vec::new();

    let mut bad = None;
    let mut cases = 0;
    for r in (3..=13).step_by(2) {
        for two_l in (2..=60).step_by(2) {
            cases += 1;
            if bad.is_none() && o_c(r, two_l).is_err() {
                bad = Some(json!({ "r": r, "2l": two_l, "error": o_c(r, two_l).unwrap_err().to_string() }));
            }
        }
    }
    out.push(exhaustive("orbits_o_c_valid", bad, cases));

    let anchors = [(3, 4, vec![2, 2]), (5, 4, vec![4]), (3, 8, vec![3, 3, 2])];
    let mut bad = None;
    for (r, two_l, want) in &anchors {
        let got = o_c(*r, *two_l).map(|x| x.parts().to_vec());
        if bad.is_none() && got.as_ref().ok() != Some(want) {
            bad = Some(json!({ "r": r, "2l": two_l, "got": format!("{got:?}"), "expected": want }));
        }
    }
    out.push(exhaustive("orbits_o_c_anchors", bad, anchors.len()));

    let mut bad = None;
    let mut cases = 0;
    for total in (2..=12).step_by(2) {
        let parts: Vec<Vec<usize>> = symplectic_partitions(total).iter().map(|x| x.parts().to_vec()).collect();
        let cmp = |a: &[usize], b: &[usize]| dominance(a, b).expect("same total");
        let le = |a: &[usize], b: &[usize]| matches!(cmp(a, b), OrbitComparison::Less | OrbitComparison::Equal);
        for a in &parts {
            if cmp(a, a) != OrbitComparison::Equal {
                bad = bad.or(Some(json!({ "reflexive": a })));
            }
            for b in &parts {
                if le(a, b) && le(b, a) && a != b {
                    bad = bad.or(Some(json!({ "antisymmetric": [a, b] })));
                }
                if !le(a, b) {
                    continue;
                }
                for c in &parts {
                    cases += 1;
                    if le(b, c) && !le(a, c) {
                        bad = bad.or(Some(json!({ "transitive": [a, b, c] })));
                    }
                }
            }
        }
    }
    out.push(exhaustive("orbits_dominance_partial_order", bad, cases));

    let mut bad = None;
    let mut cases = 0;
    for total in (2..=12).step_by(2) {
        let n = total / 2;
        for lam in symplectic_partitions(total) {
            cases += 1;
            let closed = orbit_dim(&lam);
            let oracle = 2 * n * n + n - centralizer_dim_oracle(&lam);
            if bad.is_none() && closed != oracle {
                bad = Some(json!({ "partition": lam.parts(), "formula": closed, "oracle": oracle }));
            }
        }
    }
    out.push(exhaustive("orbits_dim_oracle_agreement", bad, cases));

    let mut bad = None;
    let mut cases = 0;
    for r in [3, 5, 7, 9] {
        for k in 2..=12 {
            cases += 1;
            let res = dimension_equation(r, k, k / 2);
            if bad.is_none() && !matches!(&res, Ok((l, rr)) if l == rr) {
                bad = Some(json!({ "r": r, "k": k, "n": k / 2, "sides": format!("{res:?}") }));
            }
        }
    }
    out.push(exhaustive("orbits_dimension_equation", bad, cases));

    let instance = dominance(&[8, 1, 1, 1, 1], &[3, 3, 3, 3]);
    out.push(CheckRecord::from_outcome(
        "orbits_hook_instance",
        matches!(instance, Ok(OrbitComparison::Incomparable)),
        json!({ "lambda": [8, 1, 1, 1, 1], "mu": [3, 3, 3, 3], "comparison": format!("{instance:?}") }),
    ));

    let grid = hook_grid();
    let mut incomparable = None;
    let mut not_dominated = None;
    for &(r, m, two_l) in &grid {
        let lam = hook_partition(m, two_l);
        let oc = o_c(r, two_l).expect("valid parameters");
        let cmp = dominance(&lam, oc.parts()).expect("same total");
        let w = || json!({ "r": r, "m": m, "2l": two_l, "lambda": lam, "o_c": oc.parts(), "comparison": format!("{cmp:?}") });
        if incomparable.is_none() && cmp != OrbitComparison::Incomparable {
            incomparable = Some(w());
        }
        if not_dominated.is_none() && matches!(cmp, OrbitComparison::Less | OrbitComparison::Equal) {
            not_dominated = Some(w());
        }
    }
    out.push(exhaustive("orbits_hook_grid_incomparable", incomparable, grid.len()));
    out.push(exhaustive("orbits_hook_grid_not_dominated", not_dominated, grid.len()));
    out
}
