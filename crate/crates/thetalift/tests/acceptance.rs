//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use thetalift::exponents::{borel_ledger, delta_ledger, ledger_sum, exponent_equation_solutions};
use thetalift::orbits::{
    centralizer_dim_oracle, dimension_equation, dominance, o_c, orbit_dim, symplectic_partitions,
    OrbitComparison,
};
use thetalift::report::{CheckRecord, Status};
use thetalift::scalars::{rat, Rational};
use thetalift::suites::{run_suite, Suite, SuiteConfig};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn odd_r(max: usize) -> impl Iterator<Item = usize> {
    (3..=max).step_by(2)
}

fn transpose(parts: &[usize]) -> Vec<usize> {
    let top = parts.iter().copied().max().unwrap_or(0);
    (1..=top).map(|i| parts.iter().filter(|&&p| p >= i).count()).collect()
}

/// Closed-form orbit dimension, recomputed here from the partition.
fn orbit_dim_closed(parts: &[usize]) -> i64 {
    let n = parts.iter().sum::<usize>() as i64 / 2;
    let sq: i64 = transpose(parts).iter().map(|&c| (c * c) as i64).sum();
    let odd = parts.iter().filter(|&&p| p % 2 == 1).count() as i64;
    2 * n * n + n - (sq + odd) / 2
}

fn is_symplectic(parts: &[usize], total: usize) -> bool {
    parts.iter().sum::<usize>() == total
        && parts.iter().all(|&p| p > 0)
        && parts
            .iter()
            .filter(|&&p| p % 2 == 1)
            .all(|&p| parts.iter().filter(|&&q| q == p).count() % 2 == 0)
}

fn partial_sums(parts: &[usize], len: usize) -> Vec<usize> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = 0;
    (0..len)
        .map(|i| {
            acc += sorted.get(i).copied().unwrap_or(0);
            acc
        })
        .collect()
}

fn incomparable(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (pa, pb) = (partial_sums(a, len), partial_sums(b, len));
    pa.iter().zip(&pb).any(|(x, y)| x > y) && pa.iter().zip(&pb).any(|(x, y)| x < y)
}

fn dimension_equation_criterion() -> Outcome {
    let start = Instant::now();
    let anchors = [((3, 3, 1), 16), ((3, 4, 2), 38), ((5, 3, 1), 46)];
    for ((r, k, n), want) in anchors {
        let (lhs, rhs) = dimension_equation(r, k, n).unwrap();
        if lhs != rat(want, 1) || rhs != rat(want, 1) {
            return Outcome::new(false, format!("anchor ({r},{k},{n}): {lhs} vs {rhs}, expected {want}"));
        }
    }
    let mut cases = 0;
    for r in [3, 5, 7, 9] {
        for k in 2..=12usize {
            let n = k / 2;
            let r1 = (r - 1) / 2;
            let big = (k * r1 + n) as i64;
            let (ki, ni) = (k as i64, n as i64);
            let dim_u = big * big - r1 as i64 * ki * (ki - 1) / 2 - ni * ni;
            let a = ki / 2;
            let sigma = if k % 2 == 1 { a * a } else { a * a - a };
            let lhs = rat(ni * (2 * ni + 1) + dim_u + sigma, 1);
            let alpha = (2 * n + k * (r - 1)) / r;
            let beta = (2 * n + k * (r - 1)) % r;
            let mut parts = vec![r; if alpha % 2 == 0 { alpha } else { alpha - 1 }];
            if alpha % 2 == 0 {
                parts.push(beta);
            } else {
                parts.extend([r - 1, beta + 1]);
            }
            parts.retain(|&p| p > 0);
            let rhs = rat(ni * ni + ni * ki, 1) + rat(orbit_dim_closed(&parts), 2);
            let (got_l, got_r) = dimension_equation(r, k, n).unwrap();
            if got_l != lhs || got_r != rhs || lhs != rhs {
                return Outcome::new(false, format!("(r,k,n)=({r},{k},{n}): lib {got_l}={got_r}, oracle {lhs}={rhs}"));
            }
            cases += 1;
        }
    }
    let el = start.elapsed();
    Outcome::new(el < Duration::from_secs(1), format!("{cases} cases + 3 anchors in {el:.2?}"))
}

fn ledger_grid() -> impl Iterator<Item = (usize, usize, usize)> {
    odd_r(13).flat_map(|r| (2..=10).flat_map(move |k| (1..=10).map(move |n| (r, k, n))))
}

fn target(r: usize, k: usize, n: usize) -> i64 {
    ((r - 1) / 2 * (2 * n + (k - 1) * (r - 1))) as i64
}

fn ledger_criterion() -> Outcome {
    let mut cases = 0;
    for (r, k, n) in ledger_grid() {
        let got = ledger_sum(r, k, n).unwrap();
        if got != target(r, k, n) {
            return Outcome::new(false, format!("(r,k,n)=({r},{k},{n}): {got} vs {}", target(r, k, n)));
        }
        cases += 1;
    }
    Outcome::new(true, format!("{cases} cases"))
}

/// `sum` over positive roots `e_i - e_j`, `e_i + e_j`, `2 e_i` of `Sp_{2N}`,
/// times `(r-1)/(2r)`, on the torus `diag(a^{-1} I_r, I, a I_r)`.
fn borel_oracle(r: usize, k: usize, n: usize) -> Rational {
    let big = n + k * (r - 1) / 2;
    let w: Vec<i64> = (0..big).map(|i| if i < r { -1 } else { 0 }).collect();
    let mut e = 0;
    for i in 0..big {
        e += 2 * w[i];
        for j in i + 1..big {
            e += (w[i] - w[j]) + (w[i] + w[j]);
        }
    }
    rat(e, 1) * rat(r as i64 - 1, 2 * r as i64)
}

fn borel_criterion() -> Outcome {
    let mut cases = 0;
    for (r, k, n) in ledger_grid() {
        let want = rat(-target(r, k, n), 1);
        let got = borel_ledger(r, k, n).unwrap();
        let oracle = borel_oracle(r, k, n);
        if got != want || oracle != want {
            return Outcome::new(false, format!("(r,k,n)=({r},{k},{n}): lib {got}, roots {oracle}, expected {want}"));
        }
        cases += 1;
    }
    Outcome::new(true, format!("{cases} cases"))
}

fn delta_criterion() -> Outcome {
    let mut cases = 0;
    for k in 2..=10usize {
        for n in 1..=10usize {
            let want = rat(1, 1) - rat(k as i64, 2) + rat(n as i64, 1);
            let d = delta_ledger(k, n).unwrap();
            if d.total.a != want || d.total.b != -want.clone() {
                return Outcome::new(false, format!("(k,n)=({k},{n}): |a|^{} |b|^{}, expected {want}", d.total.a, d.total.b));
            }
            cases += 1;
        }
    }
    Outcome::new(true, format!("{cases} (k,n) pairs"))
}

fn exponent_equation_criterion() -> Outcome {
    for r in odd_r(13) {
        let brute: Vec<usize> = (1..=200usize)
            .filter(|&l| l * (l + 1) * (r - 1) == l * l * r)
            .collect();
        let got = exponent_equation_solutions(r, 200).unwrap();
        if got != vec![r - 1] || brute != vec![r - 1] {
            return Outcome::new(false, format!("r={r}: lib {got:?}, brute {brute:?}"));
        }
    }
    Outcome::new(true, "r = 3..13 odd, solution set {r-1}")
}

fn o_c_criterion() -> Outcome {
    let mut cases = 0;
    for r in odd_r(13) {
        for two_l in (2..=60).step_by(2) {
            let oc = o_c(r, two_l).unwrap();
            if !is_symplectic(oc.parts(), two_l) {
                return Outcome::new(false, format!("o_c({r},{two_l}) = {oc} is not symplectic"));
            }
            cases += 1;
        }
    }
    let a = o_c(3, 4).unwrap();
    let b = o_c(5, 4).unwrap();
    let ok = a.parts() == [2, 2] && b.parts() == [4];
    Outcome::new(ok, format!("{cases} cases; o_c(3,4) = {a}, o_c(5,4) = {b}"))
}

fn oracle_criterion() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for total in (2..=12).step_by(2) {
        let n = total / 2;
        for lambda in symplectic_partitions(total) {
            let closed = orbit_dim(&lambda);
            let oracle = 2 * n * n + n - centralizer_dim_oracle(&lambda);
            if closed != oracle || closed as i64 != orbit_dim_closed(lambda.parts()) {
                return Outcome::new(false, format!("{lambda}: closed {closed}, nullspace {oracle}"));
            }
            count += 1;
        }
    }
    let el = start.elapsed();
    Outcome::new(el < Duration::from_secs(30), format!("{count} partitions in {el:.2?}"))
}

fn hook_criterion() -> Outcome {
    let instance = dominance(&[8, 1, 1, 1, 1], &[3, 3, 3, 3]).unwrap();
    let mut failures = Vec::new();
    let mut cases = 0;
    for r in [3, 5, 7] {
        for m in r..=r + 3 {
            for two_l in (2 * m + 4..=2 * m + 14).step_by(2) {
                let mut hook = vec![2 * m + 2];
                hook.extend(std::iter::repeat_n(1, two_l - 2 * m - 2));
                let oc = o_c(r, two_l).unwrap();
                let lib = dominance(&hook, oc.parts()).unwrap();
                let ours = incomparable(&hook, oc.parts());
                if (lib == OrbitComparison::Incomparable) != ours {
                    return Outcome::new(false, format!("dominance disagrees with partial sums at r={r} m={m} 2l={two_l}"));
                }
                if !ours {
                    failures.push(format!("r={r} m={m} 2l={two_l}: {lib:?} vs {oc}"));
                }
                cases += 1;
            }
        }
    }
    let pass = instance == OrbitComparison::Incomparable && failures.is_empty();
    let mut detail = format!("instance {instance:?}; grid {}/{cases} incomparable", cases - failures.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first exception {first}"));
    }
    Outcome::new(pass, detail)
}

fn suite_outcome(records: &[CheckRecord]) -> Outcome {
    let failed: Vec<&CheckRecord> = records.iter().filter(|c| c.status == Status::Fail).collect();
    let mut detail = format!("{}/{} checks pass", records.len() - failed.len(), records.len());
    for c in &failed {
        let witness = c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
        let witness: String = witness.chars().take(160).collect();
        detail.push_str(&format!("; FAILED {} {}", c.name, witness));
    }
    Outcome::new(failed.is_empty() && !records.is_empty(), detail)
}

fn suite_criterion(suite: Suite, prefixes: &[&str]) -> Outcome {
    let records = run_suite(suite, &SuiteConfig::new(7, 0, None)).unwrap();
    let picked: Vec<CheckRecord> = records
        .into_iter()
        .filter(|c| prefixes.iter().any(|p| c.name.starts_with(p)))
        .collect();
    suite_outcome(&picked)
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("dimension equation", Box::new(dimension_equation_criterion)),
        ("ledger identity", Box::new(ledger_criterion)),
        ("Borel modulus exponent", Box::new(borel_criterion)),
        ("delta-product exponent", Box::new(delta_criterion)),
        ("exponent equation l = r - 1", Box::new(exponent_equation_criterion)),
        ("O_c bookkeeping", Box::new(o_c_criterion)),
        ("orbit-dimension oracle agreement", Box::new(oracle_criterion)),
        ("hook incomparability", Box::new(hook_criterion)),
        ("cocycle suite", Box::new(|| suite_criterion(Suite::Cocycle, &["cocycle_"]))),
        ("embedding suite", Box::new(|| suite_criterion(Suite::Embed, &["embed_"]))),
        ("Heisenberg suite", Box::new(|| suite_criterion(Suite::Heisenberg, &["heisenberg_"]))),
        ("Weyl suite", Box::new(|| suite_criterion(Suite::Weyl, &["weyl_"]))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        let status = if out.pass { "PASS" } else { "FAIL" };
        if !out.pass {
            failed += 1;
        }
        println!("criterion {:>2} {status} {name}: {}", i + 1, out.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
