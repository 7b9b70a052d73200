//! Stirling numbers of the first kind and the rationals
//!
//! ```text
//! F(n,k) = Σ 1 / (i_1 i_2 ... i_k)   over i_1 + ... + i_k = n, i_r >= 1
//! ```
//!
//! [`f_table`] is the production route (a two-term row recurrence). The
//! other `f_*` functions compute the same numbers by independent routes and
//! exist for cross-checking; the enumerating ones are capped.

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::exact_arith::{denominator_of, factorial, Integer, Rational};
use crate::triangle::{IntegerTriangle, RationalTriangle, StirlingTable, Triangle, TriangleLabel};

/// Default largest `n` for the composition and subset enumerations.
pub const DEFAULT_COMPOSITION_CAP: usize = 22;

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Signed `s(n,k)` for `0 <= k <= n <= max_n`, from
/// `s(n+1,k) = s(n,k-1) - n s(n,k)` with `s(0,0) = 1`.
pub fn stirling_first(max_n: usize) -> StirlingTable {
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let nn = Integer::from(n);
        let next = (0..=n + 1)
            .map(|k| {
                let left = if k >= 1 { prev[k - 1].clone() } else { Integer::zero() };
                let right = prev.get(k).map_or_else(Integer::zero, |s| &nn * s);
                left - right
            })
            .collect();
        rows.push(next);
    }
    Triangle::from_rows_unchecked(rows)
}

/// `F(n,k)` for `0 <= k <= n <= max_n` via
/// `F(n+1,k) = k/(n+1) F(n,k-1) + n/(n+1) F(n,k)`, with `F(0,0) = 1` and
/// `F(n,0) = 0` for `n >= 1`. Entries outside the triangle count as zero.
pub fn f_table(max_n: usize) -> RationalTriangle {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let mut next = Vec::with_capacity(n + 2);
        next.push(Rational::zero());
        for k in 1..=n + 1 {
            let mut v = ratio(k, n + 1) * &prev[k - 1];
            if let Some(same) = prev.get(k) {
                v += ratio(n, n + 1) * same;
            }
            next.push(v);
        }
        rows.push(next);
    }
    Triangle::from_rows_unchecked(rows)
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(domain(format!("F(n,k) needs k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Resource {
            what,
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// Sums `1/(i_1...i_k)` over every composition of `n` into `k` parts.
pub fn f_direct(n: usize, k: usize, cap: usize) -> Result<Rational> {
    check_range(n, k)?;
    check_cap("composition enumeration", n, cap)?;
    let mut total = Rational::zero();
    for_each_composition(n, k, &mut |parts| {
        let product = parts.iter().fold(Integer::one(), |acc, &p| acc * Integer::from(p));
        total += Rational::new(Integer::one(), product);
    });
    Ok(total)
}

/// Calls `visit` with every ordered tuple of `k` positive integers summing
/// to `n`. The empty tuple is the single composition of 0.
pub fn for_each_composition(n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(rest: usize, slots: usize, parts: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if slots == 0 {
            if rest == 0 {
                visit(parts);
            }
            return;
        }
        if rest < slots {
            return;
        }
        // leave at least one for each remaining slot
        for first in 1..=rest - (slots - 1) {
            parts.push(first);
            go(rest - first, slots - 1, parts, visit);
            parts.pop();
        }
    }
    go(n, k, &mut Vec::with_capacity(k), visit);
}

/// `(k!/n!) |s(n,k)|`.
pub fn f_from_stirling(n: usize, k: usize, s: &StirlingTable) -> Result<Rational> {
    check_range(n, k)?;
    let entry = s
        .get(n, k)
        .ok_or_else(|| domain(format!("Stirling table stops at row {}, asked for {n}", s.max_n())))?;
    let magnitude = if entry < &Integer::zero() {
        -entry.clone()
    } else {
        entry.clone()
    };
    Ok(Rational::new(factorial(k) * magnitude, factorial(n)))
}

/// `(k!/n) Σ 1/(i_1...i_{k-1})` over strictly increasing
/// `1 <= i_1 < ... < i_{k-1} <= n-1`. Only defined for `k >= 2`.
pub fn f_from_subsets(n: usize, k: usize, cap: usize) -> Result<Rational> {
    check_range(n, k)?;
    if k < 2 {
        return Err(domain(format!("the subset formula needs k >= 2, got k = {k}")));
    }
    check_cap("subset enumeration", n, cap)?;
    let mut total = Rational::zero();
    let mut chosen = Vec::with_capacity(k - 1);
    increasing_subsets(1, n - 1, k - 1, &mut chosen, &mut |subset| {
        let product = subset.iter().fold(Integer::one(), |acc, &i| acc * Integer::from(i));
        total += Rational::new(Integer::one(), product);
    });
    Ok(Rational::from_integer(factorial(k)) / Rational::from_integer(Integer::from(n)) * total)
}

fn increasing_subsets(from: usize, to: usize, size: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if size == 0 {
        visit(chosen);
        return;
    }
    if from > to || to + 1 - from < size {
        return;
    }
    for i in from..=to + 1 - size {
        chosen.push(i);
        increasing_subsets(i + 1, to, size - 1, chosen, visit);
        chosen.pop();
    }
}

/// `(k/n) Σ_{m=k-1}^{n-1} F(m,k-1)`, reading earlier rows from `f`.
pub fn f_from_remark(n: usize, k: usize, f: &RationalTriangle) -> Result<Rational> {
    check_range(n, k)?;
    if k == 0 {
        return Err(domain("the partial-sum recurrence needs k >= 1"));
    }
    if f.max_n() + 1 < n {
        return Err(domain(format!(
            "F table stops at row {}, rows below {n} are needed",
            f.max_n()
        )));
    }
    let sum = (k - 1..n).fold(Rational::zero(), |acc, m| acc + f.get(m, k - 1).expect("k-1 <= m"));
    Ok(ratio(k, n) * sum)
}

/// Elementwise reduced denominators of `F`; `den(0) = 1`.
pub fn d_table(f: &RationalTriangle) -> IntegerTriangle {
    IntegerTriangle {
        label: TriangleLabel::D,
        entries: f.map(|_, _, v| denominator_of(v)),
    }
}
