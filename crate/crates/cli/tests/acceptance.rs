//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run
//! with `cargo test -p ivpoly --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::process::Command;
use std::time::{Duration, Instant};

use ivpoly_core::binomial_poly::{BinomialPoly, MonomialPoly};
use ivpoly_core::exact_arith::{lcm_range, rat, rat_int, Integer, Rational};
use ivpoly_core::verify::{
    check_corollary1, check_lemma1, check_lemma3, check_proposition2, check_theorem1, check_theorem2, check_theorem3,
    check_theorem4, cross_check_f, minimal_multiplier_oracle, CheckReport, EnumCaps,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_1: [&[u64]; 11] = [
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 6, 1, 1],
    &[1, 12, 12, 2, 1],
    &[1, 60, 12, 4, 1, 1],
    &[1, 60, 180, 8, 6, 2, 1],
    &[1, 420, 180, 120, 6, 6, 1, 1],
    &[1, 840, 5040, 240, 240, 6, 4, 2, 1],
    &[1, 2520, 5040, 15120, 240, 144, 4, 12, 1, 1],
    &[1, 2520, 25200, 30240, 15120, 288, 240, 24, 3, 2, 1],
];

const TABLE_2: [&[u64]; 11] = [
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 6, 2, 1],
    &[1, 12, 12, 2, 1],
    &[1, 60, 12, 12, 2, 1],
    &[1, 60, 360, 24, 12, 2, 1],
    &[1, 420, 360, 360, 24, 12, 2, 1],
    &[1, 840, 5040, 720, 720, 24, 12, 2, 1],
    &[1, 2520, 5040, 15120, 720, 720, 24, 12, 2, 1],
    &[1, 2520, 25200, 30240, 30240, 1440, 720, 24, 12, 2, 1],
];

const LAMBDA: [u64; 11] = [1, 1, 2, 6, 12, 60, 360, 2520, 5040, 15120, 151200];

/// Runs `body`, prints one status line, and fails on error or overtime.
fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let verdict = match &result {
        Ok(()) if elapsed <= limit => Ok(()),
        Ok(()) => Err(format!("took {elapsed:.2?}, limit {limit:.2?}")),
        Err(e) => Err(e.clone()),
    };
    let tag = if verdict.is_ok() { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id:>2}: {title} ({elapsed:.2?})");
    if let Err(e) = verdict {
        panic!("criterion {id} failed: {e}");
    }
}

fn require(report: CheckReport) -> Result<(), String> {
    if report.passed() {
        Ok(())
    } else {
        Err(report.to_string())
    }
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ivpoly"))
        .args(args)
        .env_remove("IVPOLY_ENUM_CAP")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("ivpoly {args:?} exited with {:?}", out.status.code()));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn golden_triangle(kind: &str, expected: &[&[u64]; 11]) -> Result<(), String> {
    let csv = run_cli(&["table", kind, "--max-n", "10", "--format", "csv"])?;
    let mut lines = csv.lines();
    lines.next().ok_or("missing header")?;
    let mut entries = 0;
    for (n, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        let row: Vec<&str> = cells[1..].iter().copied().filter(|c| !c.is_empty()).collect();
        let want: Vec<String> = expected
            .get(n)
            .ok_or("too many rows")?
            .iter()
            .map(u64::to_string)
            .collect();
        if row != want {
            return Err(format!("row {n}: got {row:?}, expected {want:?}"));
        }
        entries += row.len();
    }
    if entries != 66 {
        return Err(format!("expected 66 entries for 0 <= k <= n <= 10, found {entries}"));
    }
    // the default markdown rendering carries the same rows
    let md = run_cli(&["table", kind, "--max-n", "10"])?;
    for (n, line) in md.lines().skip(2).enumerate() {
        let cells: Vec<&str> = line
            .split('|')
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .skip(1)
            .collect();
        let want: Vec<String> = expected[n].iter().map(u64::to_string).collect();
        if cells != want {
            return Err(format!("markdown row {n}: got {cells:?}"));
        }
    }
    Ok(())
}

#[test]
fn criterion_01_golden_table_1() {
    criterion(
        1,
        "table c --max-n 10 equals the c(n,k) triangle",
        Duration::from_secs(1),
        || golden_triangle("c", &TABLE_1),
    );
}

#[test]
fn criterion_02_golden_table_2() {
    criterion(
        2,
        "table q --max-n 10 equals the q(n,k) triangle",
        Duration::from_secs(1),
        || golden_triangle("q", &TABLE_2),
    );
}

#[test]
fn criterion_03_lambda_sequence() {
    criterion(3, "seq lambda --max-n 10", Duration::from_secs(1), || {
        let out = run_cli(&["seq", "lambda", "--max-n", "10"])?;
        let want: Vec<String> = LAMBDA.iter().map(u64::to_string).collect();
        let got: Vec<&str> = out.lines().collect();
        if got != want {
            return Err(format!("got {got:?}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_04_theorem1_oracle() {
    criterion(
        4,
        "oracle(n,1) = lcm(1..n) for 1 <= n <= 12",
        Duration::from_secs(5),
        || {
            for n in 1..=12 {
                let oracle = minimal_multiplier_oracle(n, 1, 14).map_err(|e| e.to_string())?;
                if oracle != lcm_range(n) {
                    return Err(format!("n = {n}: oracle {oracle}, lcm {}", lcm_range(n)));
                }
            }
            require(check_theorem1(12, &EnumCaps::default()).map_err(|e| e.to_string())?)
        },
    );
}

#[test]
fn criterion_05_theorem2_oracle_equivalence() {
    criterion(
        5,
        "c table = oracle n <= 12; c | q n <= 20",
        Duration::from_secs(30),
        || require(check_theorem2(12, 20, &EnumCaps::default()).map_err(|e| e.to_string())?),
    );
}

#[test]
fn criterion_06_theorem3() {
    criterion(
        6,
        "q | k! c n <= 20; witnesses n <= 10",
        Duration::from_secs(10),
        || require(check_theorem3(20, 10).map_err(|e| e.to_string())?),
    );
}

#[test]
fn criterion_07_theorem4() {
    criterion(
        7,
        "three lambda routes n <= 30; oracle lcm n <= 12",
        Duration::from_secs(30),
        || require(check_theorem4(30, 12, &EnumCaps::default()).map_err(|e| e.to_string())?),
    );
}

#[test]
fn criterion_08_lemma1_corollary1() {
    criterion(
        8,
        "lemma 1 identity n <= 16; lcm(1..n) >= 2^(n-1) n <= 64",
        Duration::from_secs(2),
        || {
            require(check_lemma1(16).map_err(|e| e.to_string())?)?;
            require(check_corollary1(64))
        },
    );
}

#[test]
fn criterion_09_lemma3() {
    criterion(
        9,
        "v_p(F(kp,k)) = -k, p in {2,3,5}, kp <= 30",
        Duration::from_secs(2),
        || require(check_lemma3(30, &[2, 3, 5]).map_err(|e| e.to_string())?),
    );
}

#[test]
fn criterion_10_proposition1() {
    criterion(
        10,
        "five F routes and |B_n^(k)(0)| agree for k <= n <= 14",
        Duration::from_secs(20),
        || {
            let report = cross_check_f(14, &EnumCaps::default()).map_err(|e| e.to_string())?;
            if report.range.contains("enumerations") {
                return Err("an enumeration route was skipped".into());
            }
            require(report)
        },
    );
}

#[test]
fn criterion_11_proposition2() {
    criterion(
        11,
        "q recurrence = direct enumeration for n <= 14",
        Duration::from_secs(20),
        || require(check_proposition2(14, &EnumCaps::default()).map_err(|e| e.to_string())?),
    );
}

fn random_poly(rng: &mut ChaCha8Rng, integral: bool) -> BinomialPoly {
    let len = rng.gen_range(0..=9);
    let coeffs = (0..len)
        .map(|_| {
            let num = rng.gen_range(-30i64..=30);
            if integral {
                rat_int(num)
            } else {
                rat(num, rng.gen_range(1i64..=12))
            }
        })
        .collect();
    BinomialPoly::new(coeffs)
}

#[test]
fn criterion_12_property_suite() {
    criterion(
        12,
        "basis identities on 600 seeded random polynomials",
        Duration::from_secs(10),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x1e_2024);
            let (mut iv_true, mut iv_false) = (0, 0);
            for case in 0..600 {
                let p = random_poly(&mut rng, case % 2 == 0);

                for x in -10i64..=10 {
                    let x = Integer::from(x);
                    let lhs = p.forward_difference(1).eval_int(&x);
                    let rhs = p.eval_int(&(&x + 1)) - p.eval_int(&x);
                    if lhs != rhs {
                        return Err(format!("case {case}: Δ mismatch at x = {x}"));
                    }
                }

                if BinomialPoly::from_monomial(&p.to_monomial()) != p {
                    return Err(format!("case {case}: binomial round trip"));
                }
                let q = p.to_monomial();
                if BinomialPoly::from_monomial(&q).to_monomial() != q {
                    return Err(format!("case {case}: monomial round trip"));
                }

                let deg = p.degree().unwrap_or(0);
                let newton = (0..=deg).all(|x| p.eval_int(&Integer::from(x)).is_integer());
                if p.is_integer_valued() != newton {
                    return Err(format!(
                        "case {case}: integer-valued test disagrees with values at 0..={deg}"
                    ));
                }
                if newton {
                    iv_true += 1;
                } else {
                    iv_false += 1;
                }
            }
            if iv_true < 100 || iv_false < 100 {
                return Err(format!("unbalanced sample: {iv_true} integer-valued, {iv_false} not"));
            }

            for i in 0..=12 {
                for j in 0..=12 {
                    let v = BinomialPoly::basis(j).forward_difference(i).eval_int(&Integer::zero());
                    let want = if i == j { rat_int(1) } else { Rational::zero() };
                    if v != want {
                        return Err(format!("(Δ^{i} B_{j})(0) = {v}"));
                    }
                }
            }
            if BinomialPoly::from_monomial(&MonomialPoly::new(vec![rat(0, 1), rat(1, 1)])) != BinomialPoly::basis(1) {
                return Err("X is not B_1".into());
            }
            Ok(())
        },
    );
}
