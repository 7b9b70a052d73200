//! The derivative-stability constants.
//!
//! * `c(n,k)`: least positive `a` with `a P^(k)` integer-valued for every
//!   integer-valued `P` of degree `<= n`; the column lcm of the `d` table.
//! * `q(n,k)`: lcm of the products `i_1...i_k` over compositions of length
//!   `k` with sum `<= n`.
//! * `λ_n`: least positive `a` that works for every derivative order at
//!   once; equal to `lcm_k c(n,k)`, to `lcm_k q(n,k)`, and to
//!   `Π_p p^floor(n/p)`.

use num_integer::Integer as _;
use num_traits::One;

use crate::error::{domain, Error, Result};
use crate::exact_arith::{lcm_list, lcm_range, primes_up_to, Integer, PrimeFactorization};
use crate::stirling_fnk::for_each_composition;
use crate::triangle::{IntegerTriangle, Triangle, TriangleLabel};

/// Default largest `n` for [`q_direct`].
pub const DEFAULT_Q_ENUM_CAP: usize = 18;

/// `c(n,k) = lcm { d(m,k) : k <= m <= n }`, accumulated down each column.
pub fn c_table(d: &IntegerTriangle) -> IntegerTriangle {
    let max_n = d.max_n();
    let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let row = (0..=n)
            .map(|k| {
                let here = d.get(n, k).expect("d covers the triangle");
                match n.checked_sub(1).and_then(|p| rows[p].get(k)) {
                    Some(above) => above.lcm(here),
                    None => here.clone(),
                }
            })
            .collect();
        rows.push(row);
    }
    IntegerTriangle {
        label: TriangleLabel::C,
        entries: Triangle::from_rows_unchecked(rows),
    }
}

/// `c_n = lcm(1, ..., n)`.
pub fn c_first(n: usize) -> Integer {
    lcm_range(n)
}

/// `q(n,k) = lcm { (n-m+1) q(m-1,k-1) : k <= m <= n }` with `q(n,0) = 1`.
pub fn q_table(max_n: usize) -> IntegerTriangle {
    let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut row = vec![Integer::one()];
        for k in 1..=n {
            let v = (k..=n).fold(Integer::one(), |acc, m| {
                let term = Integer::from(n - m + 1) * &rows[m - 1][k - 1];
                acc.lcm(&term)
            });
            row.push(v);
        }
        rows.push(row);
    }
    IntegerTriangle {
        label: TriangleLabel::Q,
        entries: Triangle::from_rows_unchecked(rows),
    }
}

/// `q(n,k)` straight from its definition, enumerating every composition of
/// length `k` with sum `m` for `m = k..=n`.
pub fn q_direct(n: usize, k: usize, cap: usize) -> Result<Integer> {
    if k > n {
        return Err(domain(format!("q(n,k) needs k <= n, got n = {n}, k = {k}")));
    }
    if n > cap {
        return Err(Error::Resource {
            what: "q enumeration",
            requested: n,
            cap,
        });
    }
    let mut acc = Integer::one();
    for m in k..=n {
        for_each_composition(m, k, &mut |parts| {
            let product = parts.iter().product::<usize>();
            acc = acc.lcm(&Integer::from(product));
        });
    }
    Ok(acc)
}

fn row_lcm(t: &IntegerTriangle, n: usize) -> Result<Integer> {
    let row = t
        .row(n)
        .ok_or_else(|| domain(format!("{} table stops at row {}, asked for {n}", t.label, t.max_n())))?;
    lcm_list(row)
}

/// `q_n`: lcm of row `n` of the q table.
pub fn q_total(n: usize, q: &IntegerTriangle) -> Result<Integer> {
    row_lcm(q, n)
}

/// `λ_n` as the lcm of row `n` of the c table.
pub fn lambda_lcm_c(n: usize, c: &IntegerTriangle) -> Result<Integer> {
    row_lcm(c, n)
}

/// `λ_n = Π_{p <= n} p^floor(n/p)`.
pub fn lambda_product(n: usize) -> PrimeFactorization {
    PrimeFactorization::new(primes_up_to(n).into_iter().map(|p| (p, (n as u64 / p) as u32)))
        .expect("sieve yields increasing primes")
}
