//! Brute-force oracles and one check per identity.
//!
//! Every check returns a [`CheckReport`]. A mathematical mismatch is a
//! failed report carrying the first counterexample found; an `Err` means
//! the check could not run at all (an enumeration cap was exceeded or an
//! argument was out of domain).
//!
//! The multiplier oracle quantifies over the basis `B_0..B_n` only. That is
//! enough: integer-valued polynomials of degree `<= n` are exactly the
//! integer combinations of `B_0..B_n`, and `P -> a P^(k)` is linear, so
//! integrality on the basis gives it everywhere.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::binomial_poly::BinomialPoly;
use crate::constants::{c_table, lambda_lcm_c, lambda_product, q_direct, q_table, q_total, DEFAULT_Q_ENUM_CAP};
use crate::error::{Error, Result};
use crate::exact_arith::{denominator_of, factorial, lcm_range, vp_int, vp_rat, Integer, Rational};
use crate::stirling_fnk::{
    d_table, f_direct, f_from_remark, f_from_stirling, f_from_subsets, f_table, for_each_composition, stirling_first,
    DEFAULT_COMPOSITION_CAP,
};
use crate::triangle::{IntegerTriangle, RationalTriangle};

/// Default largest `n` for [`minimal_multiplier_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// Caps on the brute-force enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    pub compositions: usize,
    pub q_direct: usize,
    pub oracle: usize,
}

impl EnumCaps {
    pub fn uniform(cap: usize) -> Self {
        Self {
            compositions: cap,
            q_direct: cap,
            oracle: cap,
        }
    }
}

impl Default for EnumCaps {
    fn default() -> Self {
        Self {
            compositions: DEFAULT_COMPOSITION_CAP,
            q_direct: DEFAULT_Q_ENUM_CAP,
            oracle: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Ranges for every check. The defaults are the acceptance ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub theorem1_max_n: usize,
    pub theorem2_oracle_max_n: usize,
    pub theorem2_divisibility_max_n: usize,
    pub theorem3_max_n: usize,
    pub theorem3_witness_max_n: usize,
    pub theorem4_max_n: usize,
    pub theorem4_oracle_max_n: usize,
    pub lemma1_max_n: usize,
    pub corollary1_max_n: usize,
    pub lemma2_max_a: u64,
    pub lemma2_primes: Vec<u64>,
    pub lemma3_max_n: usize,
    pub lemma3_primes: Vec<u64>,
    pub proposition1_max_n: usize,
    pub proposition2_max_n: usize,
    pub caps: EnumCaps,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            theorem1_max_n: 12,
            theorem2_oracle_max_n: 12,
            theorem2_divisibility_max_n: 20,
            theorem3_max_n: 20,
            theorem3_witness_max_n: 10,
            theorem4_max_n: 30,
            theorem4_oracle_max_n: 12,
            lemma1_max_n: 16,
            corollary1_max_n: 64,
            lemma2_max_a: 10_000,
            lemma2_primes: vec![2, 3, 5, 7],
            lemma3_max_n: 30,
            lemma3_primes: vec![2, 3, 5],
            proposition1_max_n: 14,
            proposition2_max_n: 14,
            caps: EnumCaps::default(),
        }
    }
}

impl VerifyConfig {
    /// Overrides the ranges of `check` with `max_n` (the bound on `a` for
    /// lemma 2).
    pub fn set_max_n(&mut self, check: CheckName, max_n: usize) {
        match check {
            CheckName::Theorem1 => self.theorem1_max_n = max_n,
            CheckName::Theorem2 => {
                self.theorem2_oracle_max_n = max_n;
                self.theorem2_divisibility_max_n = max_n;
            }
            CheckName::Theorem3 => {
                self.theorem3_max_n = max_n;
                self.theorem3_witness_max_n = max_n;
            }
            CheckName::Theorem4 => {
                self.theorem4_max_n = max_n;
                self.theorem4_oracle_max_n = max_n;
            }
            CheckName::Lemma1 => self.lemma1_max_n = max_n,
            CheckName::Corollary1 => self.corollary1_max_n = max_n,
            CheckName::Lemma2 => self.lemma2_max_a = max_n as u64,
            CheckName::Lemma3 => self.lemma3_max_n = max_n,
            CheckName::Proposition1 => self.proposition1_max_n = max_n,
            CheckName::Proposition2 => self.proposition2_max_n = max_n,
        }
    }

    pub fn with_max_n(max_n: usize) -> Self {
        let mut config = Self::default();
        for check in CheckName::ALL {
            config.set_max_n(check, max_n);
        }
        config
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    Corollary1,
    Lemma1,
    Lemma2,
    Lemma3,
    Proposition1,
    Proposition2,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
}

impl CheckName {
    /// Sorted by name.
    pub const ALL: [CheckName; 10] = [
        CheckName::Corollary1,
        CheckName::Lemma1,
        CheckName::Lemma2,
        CheckName::Lemma3,
        CheckName::Proposition1,
        CheckName::Proposition2,
        CheckName::Theorem1,
        CheckName::Theorem2,
        CheckName::Theorem3,
        CheckName::Theorem4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Corollary1 => "corollary1",
            CheckName::Lemma1 => "lemma1",
            CheckName::Lemma2 => "lemma2",
            CheckName::Lemma3 => "lemma3",
            CheckName::Proposition1 => "proposition1",
            CheckName::Proposition2 => "proposition2",
            CheckName::Theorem1 => "theorem1",
            CheckName::Theorem2 => "theorem2",
            CheckName::Theorem3 => "theorem3",
            CheckName::Theorem4 => "theorem4",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: CheckName,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{:<13} {:<40} {status}", self.name.as_str(), self.range)?;
        if let Some(cx) = &self.counterexample {
            write!(f, "  at {}: expected {}, got {}", cx.params, cx.expected, cx.actual)?;
        }
        Ok(())
    }
}

/// Keeps the first counterexample seen.
struct Tally {
    first_failure: Option<Counterexample>,
}

impl Tally {
    fn new() -> Self {
        Self { first_failure: None }
    }

    fn failed(&self) -> bool {
        self.first_failure.is_some()
    }

    fn expect(
        &mut self,
        ok: bool,
        params: impl FnOnce() -> String,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(Counterexample {
                params: params(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, params: impl FnOnce() -> String, expected: &T, actual: &T) {
        self.expect(expected == actual, params, expected, actual);
    }

    fn report(self, name: CheckName, range: String) -> CheckReport {
        let status = if self.first_failure.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        CheckReport {
            name,
            range,
            status,
            counterexample: self.first_failure,
        }
    }
}

/// The least positive `a` with `a B_m^(k)` integer-valued for every
/// `m <= n`: the lcm of all binomial-basis denominators of those
/// derivatives. Derivatives are taken by the power rule in the monomial
/// basis, so this never uses the `F` triangle. Returns 1 when `k > n`.
pub fn minimal_multiplier_oracle(n: usize, k: usize, cap: usize) -> Result<Integer> {
    if n > cap {
        return Err(Error::Resource {
            what: "multiplier oracle",
            requested: n,
            cap,
        });
    }
    let mut acc = Integer::one();
    for m in k..=n {
        let derived = BinomialPoly::from_monomial(&BinomialPoly::basis(m).to_monomial().derivative(k));
        for coeff in derived.coeffs() {
            acc = acc.lcm(&denominator_of(coeff));
        }
    }
    Ok(acc)
}

fn fixed_tables(max_n: usize) -> (RationalTriangle, IntegerTriangle, IntegerTriangle) {
    let f = f_table(max_n);
    let c = c_table(&d_table(&f));
    let q = q_table(max_n);
    (f, c, q)
}

/// `c(n,1) = lcm(1..n)` against the multiplier oracle.
pub fn check_theorem1(max_n: usize, caps: &EnumCaps) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for n in 1..=max_n {
        let oracle = minimal_multiplier_oracle(n, 1, caps.oracle)?;
        tally.expect_eq(|| format!("n={n}"), &lcm_range(n), &oracle);
    }
    Ok(tally.report(CheckName::Theorem1, format!("oracle(n,1) = lcm(1..n), 1<=n<={max_n}")))
}

/// The column-lcm c table equals the oracle, and `c | q`.
pub fn check_theorem2(oracle_max_n: usize, divisibility_max_n: usize, caps: &EnumCaps) -> Result<CheckReport> {
    let (_, c, q) = fixed_tables(oracle_max_n.max(divisibility_max_n));
    check_theorem2_on(&c, &q, oracle_max_n, divisibility_max_n, caps)
}

pub fn check_theorem2_on(
    c: &IntegerTriangle,
    q: &IntegerTriangle,
    oracle_max_n: usize,
    divisibility_max_n: usize,
    caps: &EnumCaps,
) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for n in 0..=oracle_max_n {
        for k in 0..=n {
            let oracle = minimal_multiplier_oracle(n, k, caps.oracle)?;
            tally.expect_eq(|| format!("c({n},{k}) vs oracle"), &oracle, entry(c, n, k)?);
        }
    }
    for n in 0..=divisibility_max_n {
        for k in 0..=n {
            let (cv, qv) = (entry(c, n, k)?, entry(q, n, k)?);
            tally.expect(
                qv.is_multiple_of(cv),
                || format!("c({n},{k}) | q({n},{k})"),
                format!("a divisor of {qv}"),
                cv,
            );
        }
    }
    Ok(tally.report(
        CheckName::Theorem2,
        format!("c = oracle n<={oracle_max_n}; c | q n<={divisibility_max_n}"),
    ))
}

fn entry(t: &IntegerTriangle, n: usize, k: usize) -> Result<&Integer> {
    t.get(n, k)
        .ok_or_else(|| Error::Domain(format!("{} table has no entry ({n},{k})", t.label)))
}

/// `q(n,k) | k! c(n,k)`, plus the product-of-basis witnesses: for every
/// composition `(i_1..i_k)` with sum `s <= witness_max_n`, the polynomial
/// `P = B_{i_1}...B_{i_k}` satisfies `P^(k)(0) = ±k!/(i_1...i_k)` and
/// `c(s,k) P^(k)` is integer-valued.
pub fn check_theorem3(max_n: usize, witness_max_n: usize) -> Result<CheckReport> {
    let (f, c, q) = fixed_tables(max_n.max(witness_max_n));
    let mut tally = Tally::new();
    for n in 0..=max_n {
        for k in 0..=n {
            let (cv, qv) = (entry(&c, n, k)?, entry(&q, n, k)?);
            let scaled = factorial(k) * cv;
            tally.expect(
                scaled.is_multiple_of(qv),
                || format!("q({n},{k}) | {k}! c({n},{k})"),
                format!("a multiple of {qv}"),
                &scaled,
            );
        }
    }
    for s in 1..=witness_max_n {
        for k in 1..=s {
            let cv = entry(&c, s, k)?.clone();
            let mut failure: Option<Error> = None;
            for_each_composition(s, k, &mut |parts| {
                if failure.is_some() || tally.failed() {
                    return;
                }
                match witness(parts, &f) {
                    Ok((value, derived)) => {
                        let product: Integer = parts.iter().map(|&i| Integer::from(i)).product();
                        let sign = if (s - k) % 2 == 0 {
                            Integer::one()
                        } else {
                            -Integer::one()
                        };
                        let expected = Rational::new(sign * factorial(k), product.clone());
                        tally.expect_eq(|| format!("P^({k})(0) for parts {parts:?}"), &expected, &value);
                        let scaled = derived.scale(&Rational::from_integer(cv.clone()));
                        tally.expect(
                            scaled.is_integer_valued(),
                            || format!("c({s},{k}) P^({k}) for parts {parts:?}"),
                            "integer-valued",
                            "not integer-valued",
                        );
                        let bound = factorial(k) * &cv;
                        tally.expect(
                            bound.is_multiple_of(&product),
                            || format!("product of parts {parts:?} | {k}! c({s},{k})"),
                            format!("a multiple of {product}"),
                            &bound,
                        );
                    }
                    Err(e) => failure = Some(e),
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
        }
    }
    Ok(tally.report(
        CheckName::Theorem3,
        format!("q | k! c n<={max_n}; witnesses sum<={witness_max_n}"),
    ))
}

/// `P = Π B_{parts[r]}` built by interpolating its values at `0..=deg`;
/// returns `P^(k)(0)` and `P^(k)` with `k = parts.len()`.
fn witness(parts: &[usize], f: &RationalTriangle) -> Result<(Rational, BinomialPoly)> {
    let degree: usize = parts.iter().sum();
    let factors: Vec<BinomialPoly> = parts.iter().map(|&i| BinomialPoly::basis(i)).collect();
    let values: Vec<Rational> = (0..=degree)
        .map(|x| {
            let x = Integer::from(x);
            factors.iter().map(|b| b.eval_int(&x)).product()
        })
        .collect();
    let product = BinomialPoly::interpolate(&values);
    let derived = product.derivative(parts.len(), f)?;
    Ok((derived.eval_int(&Integer::zero()), derived))
}

/// `(1/n) Σ_{x=0}^{n-1} 1/|B_n'(x)| = 2^(n-1)`.
pub fn check_lemma1(max_n: usize) -> Result<CheckReport> {
    let f = f_table(max_n);
    check_lemma1_on(&f, max_n)
}

pub fn check_lemma1_on(f: &RationalTriangle, max_n: usize) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for n in 1..=max_n {
        let derived = BinomialPoly::basis(n).derivative(1, f)?;
        let mut sum = Rational::zero();
        for x in 0..n {
            let v = derived.eval_int(&Integer::from(x));
            if v.is_zero() {
                tally.expect(false, || format!("B_{n}'({x})"), "nonzero", "0");
                break;
            }
            sum += v.abs().recip();
        }
        let lhs = sum / Rational::from_integer(Integer::from(n));
        let rhs = Rational::from_integer(Integer::one() << (n - 1));
        tally.expect_eq(|| format!("n={n}"), &rhs, &lhs);
    }
    Ok(tally.report(CheckName::Lemma1, format!("1<=n<={max_n}")))
}

/// `lcm(1..n) >= 2^(n-1)`.
pub fn check_corollary1(max_n: usize) -> CheckReport {
    let mut tally = Tally::new();
    for n in 1..=max_n {
        let l = lcm_range(n);
        let bound = Integer::one() << (n - 1);
        tally.expect(l >= bound, || format!("n={n}"), format!(">= {bound}"), &l);
    }
    tally.report(CheckName::Corollary1, format!("1<=n<={max_n}"))
}

/// `v_p(a) <= a/p`.
pub fn check_lemma2(max_a: u64, primes: &[u64]) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for &p in primes {
        let pi = Integer::from(p);
        for a in 1..=max_a {
            let v = vp_int(&Integer::from(a), &pi)?;
            tally.expect(v * p <= a, || format!("a={a}, p={p}"), format!("<= {a}/{p}"), v);
        }
    }
    Ok(tally.report(CheckName::Lemma2, format!("1<=a<={max_a}, p in {primes:?}")))
}

/// `v_p(F(kp,k)) = -k`.
pub fn check_lemma3(max_n: usize, primes: &[u64]) -> Result<CheckReport> {
    check_lemma3_on(&f_table(max_n), max_n, primes)
}

pub fn check_lemma3_on(f: &RationalTriangle, max_n: usize, primes: &[u64]) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for &p in primes {
        let pi = Integer::from(p);
        let p = p as usize;
        for k in 1..=max_n / p.max(1) {
            let value = f
                .get(k * p, k)
                .ok_or_else(|| Error::Domain(format!("F table has no entry ({},{k})", k * p)))?;
            let v = if value.is_zero() {
                None
            } else {
                Some(vp_rat(value, &pi)?)
            };
            let shown = v.map_or_else(|| "+inf".to_string(), |v| v.to_string());
            tally.expect(
                v == Some(-(k as i64)),
                || format!("v_{p}(F({},{k}))", k * p),
                -(k as i64),
                shown,
            );
        }
    }
    Ok(tally.report(CheckName::Lemma3, format!("kp<={max_n}, p in {primes:?}")))
}

/// `λ_n` by the c-row lcm, the q-row lcm and the prime-power product, plus
/// the lcm over k of the oracle for small n.
pub fn check_theorem4(max_n: usize, oracle_max_n: usize, caps: &EnumCaps) -> Result<CheckReport> {
    let (_, c, q) = fixed_tables(max_n.max(oracle_max_n));
    check_theorem4_on(&c, &q, max_n, oracle_max_n, caps)
}

pub fn check_theorem4_on(
    c: &IntegerTriangle,
    q: &IntegerTriangle,
    max_n: usize,
    oracle_max_n: usize,
    caps: &EnumCaps,
) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for n in 0..=max_n {
        let via_c = lambda_lcm_c(n, c)?;
        let via_q = q_total(n, q)?;
        let via_primes = lambda_product(n).value();
        tally.expect_eq(|| format!("n={n}: lcm of c row vs q_n"), &via_q, &via_c);
        tally.expect_eq(|| format!("n={n}: lcm of c row vs prime product"), &via_primes, &via_c);
    }
    for n in 0..=oracle_max_n {
        let mut oracle = Integer::one();
        for k in 0..=n {
            oracle = oracle.lcm(&minimal_multiplier_oracle(n, k, caps.oracle)?);
        }
        tally.expect_eq(|| format!("n={n}: oracle lcm"), &oracle, &lambda_lcm_c(n, c)?);
    }
    Ok(tally.report(
        CheckName::Theorem4,
        format!("three routes n<={max_n}; oracle n<={oracle_max_n}"),
    ))
}

/// Every route to `F(n,k)` agrees with the table: the composition sum, the
/// Stirling formula, the subset formula (k >= 2), the partial-sum
/// recurrence, and `|B_n^(k)(0)|` taken both through forward differences
/// and by the power rule. Enumerating routes are skipped past their cap.
pub fn cross_check_f(max_n: usize, caps: &EnumCaps) -> Result<CheckReport> {
    check_proposition1_on(&f_table(max_n), max_n, caps)
}

pub fn check_proposition1_on(f: &RationalTriangle, max_n: usize, caps: &EnumCaps) -> Result<CheckReport> {
    let s = stirling_first(max_n);
    let mut tally = Tally::new();
    for n in 0..=max_n {
        let basis = BinomialPoly::basis(n);
        let monomial = basis.to_monomial();
        for k in 0..=n {
            let table = f
                .get(n, k)
                .ok_or_else(|| Error::Domain(format!("F table has no entry ({n},{k})")))?;
            let at = |route: &'static str| move || format!("F({n},{k}) {route}");
            if n <= caps.compositions {
                tally.expect_eq(at("composition sum"), &f_direct(n, k, caps.compositions)?, table);
                if k >= 2 {
                    tally.expect_eq(at("subset sum"), &f_from_subsets(n, k, caps.compositions)?, table);
                }
            }
            tally.expect_eq(at("stirling"), &f_from_stirling(n, k, &s)?, table);
            if k >= 1 {
                tally.expect_eq(at("partial-sum recurrence"), &f_from_remark(n, k, f)?, table);
            }
            let via_differences = basis.derivative(k, f)?.eval_int(&Integer::zero()).abs();
            tally.expect_eq(at("|B_n^(k)(0)| by differences"), &via_differences, table);
            let via_power_rule = monomial.derivative(k).eval(&Rational::zero()).abs();
            tally.expect_eq(at("|B_n^(k)(0)| by power rule"), &via_power_rule, table);
        }
    }
    let range = if max_n > caps.compositions {
        format!("0<=k<=n<={max_n} (enumerations n<={})", caps.compositions)
    } else {
        format!("0<=k<=n<={max_n}")
    };
    Ok(tally.report(CheckName::Proposition1, range))
}

/// The q recurrence against direct enumeration.
pub fn check_proposition2(max_n: usize, caps: &EnumCaps) -> Result<CheckReport> {
    check_proposition2_on(&q_table(max_n), max_n, caps)
}

pub fn check_proposition2_on(q: &IntegerTriangle, max_n: usize, caps: &EnumCaps) -> Result<CheckReport> {
    let mut tally = Tally::new();
    for n in 0..=max_n {
        for k in 0..=n {
            let direct = q_direct(n, k, caps.q_direct)?;
            tally.expect_eq(|| format!("q({n},{k})"), &direct, entry(q, n, k)?);
        }
    }
    Ok(tally.report(CheckName::Proposition2, format!("0<=k<=n<={max_n}")))
}

pub fn run_check(name: CheckName, config: &VerifyConfig) -> Result<CheckReport> {
    let caps = &config.caps;
    match name {
        CheckName::Theorem1 => check_theorem1(config.theorem1_max_n, caps),
        CheckName::Theorem2 => check_theorem2(config.theorem2_oracle_max_n, config.theorem2_divisibility_max_n, caps),
        CheckName::Theorem3 => check_theorem3(config.theorem3_max_n, config.theorem3_witness_max_n),
        CheckName::Theorem4 => check_theorem4(config.theorem4_max_n, config.theorem4_oracle_max_n, caps),
        CheckName::Lemma1 => check_lemma1(config.lemma1_max_n),
        CheckName::Corollary1 => Ok(check_corollary1(config.corollary1_max_n)),
        CheckName::Lemma2 => check_lemma2(config.lemma2_max_a, &config.lemma2_primes),
        CheckName::Lemma3 => check_lemma3(config.lemma3_max_n, &config.lemma3_primes),
        CheckName::Proposition1 => cross_check_f(config.proposition1_max_n, caps),
        CheckName::Proposition2 => check_proposition2(config.proposition2_max_n, caps),
    }
}

/// Runs every check; reports come back sorted by check name.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    CheckName::ALL.into_iter().map(|name| run_check(name, config)).collect()
}
