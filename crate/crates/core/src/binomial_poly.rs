//! Polynomials over the binomial basis `B_j(X) = C(X, j)`.
//!
//! A polynomial is integer-valued exactly when every coefficient in this
//! basis is an integer, and the forward difference `Δ` just shifts the
//! coefficients down. Derivatives are expressed through forward differences
//! as `P^(k) = Σ_{m >= k} (-1)^(m-k) F(m,k) Δ^m P`, which needs the `F`
//! triangle as input.

use std::ops::{Add, Sub};

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exact_arith::{Integer, Rational};
use crate::triangle::RationalTriangle;

fn trim(coeffs: &mut Vec<Rational>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// `C(x, j)` for any integer `x`, including negative ones.
pub fn binomial(x: &Integer, j: usize) -> Integer {
    let mut acc = Integer::one();
    for i in 0..j {
        // product of i+1 consecutive integers is divisible by (i+1)!
        acc = acc * (x - Integer::from(i)) / Integer::from(i + 1);
    }
    acc
}

/// A polynomial `Σ coeffs[j] B_j(X)` with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinomialPoly {
    coeffs: Vec<Rational>,
}

impl BinomialPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `B_n`.
    pub fn basis(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// Newton forward-difference interpolation: the unique polynomial of
    /// degree `< values.len()` taking `values[x]` at `x = 0, 1, ...`.
    pub fn interpolate(values: &[Rational]) -> Self {
        let mut diffs = values.to_vec();
        let mut coeffs = Vec::with_capacity(values.len());
        while !diffs.is_empty() {
            coeffs.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `Δ^i P`, using `Δ B_j = B_{j-1}` and `Δ B_0 = 0`.
    pub fn forward_difference(&self, i: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().skip(i).cloned().collect(),
        }
    }

    /// The exact `k`-th derivative, computed from forward differences and
    /// the `F` triangle. `f` must cover rows up to `deg(P)`.
    pub fn derivative(&self, k: usize, f: &RationalTriangle) -> Result<Self> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if k > deg {
            return Ok(Self::zero());
        }
        if f.max_n() < deg {
            return Err(domain(format!(
                "F table covers rows up to {} but the polynomial has degree {deg}",
                f.max_n()
            )));
        }
        let mut out = vec![Rational::zero(); deg - k + 1];
        for m in k..=deg {
            let mut weight = f.get(m, k).expect("row m covers column k").clone();
            if (m - k) % 2 == 1 {
                weight = -weight;
            }
            if weight.is_zero() {
                continue;
            }
            // Δ^m P contributes a_{j+m} to the coefficient of B_j
            for (j, slot) in out.iter_mut().enumerate().take(deg - m + 1) {
                *slot += &weight * &self.coeffs[j + m];
            }
        }
        Ok(Self::new(out))
    }

    pub fn eval_int(&self, x: &Integer) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| a * Rational::from_integer(binomial(x, j)))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// True iff `P(Z) ⊂ Z`, read off the binomial-basis coefficients.
    pub fn is_integer_valued(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn to_monomial(&self) -> MonomialPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        // running falling factorial X(X-1)...(X-j+1) / j!
        let mut basis = vec![Rational::one()];
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                let shift = Rational::from_integer(Integer::from(j - 1));
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (i, b) in basis.iter().enumerate() {
                    next[i + 1] += b;
                    next[i] -= b * &shift;
                }
                let jr = Rational::from_integer(Integer::from(j));
                basis = next.into_iter().map(|b| b / &jr).collect();
            }
            if a.is_zero() {
                continue;
            }
            for (i, b) in basis.iter().enumerate() {
                out[i] += a * b;
            }
        }
        MonomialPoly::new(out)
    }

    pub fn from_monomial(q: &MonomialPoly) -> Self {
        let n = q.coeffs().len();
        let values: Vec<Rational> = (0..n)
            .map(|x| q.eval(&Rational::from_integer(Integer::from(x))))
            .collect();
        Self::interpolate(&values)
    }
}

impl Add for &BinomialPoly {
    type Output = BinomialPoly;
    fn add(self, rhs: &BinomialPoly) -> BinomialPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BinomialPoly::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &BinomialPoly {
    type Output = BinomialPoly;
    fn sub(self, rhs: &BinomialPoly) -> BinomialPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BinomialPoly::new((0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

/// A polynomial `Σ coeffs[i] X^i` with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialPoly {
    coeffs: Vec<Rational>,
}

impl MonomialPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `k`-th derivative by the power rule. This route never touches the
    /// `F` triangle, so it serves as an independent check of
    /// [`BinomialPoly::derivative`].
    pub fn derivative(&self, k: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, c)| {
                let falling = ((i - k + 1)..=i).fold(Integer::one(), |acc, t| acc * Integer::from(t));
                c * Rational::from_integer(falling)
            })
            .collect();
        Self::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat, rat_int};
    use crate::stirling_fnk::f_table;
    use proptest::prelude::*;

    fn poly(coeffs: &[(i64, i64)]) -> BinomialPoly {
        BinomialPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn mono(coeffs: &[(i64, i64)]) -> MonomialPoly {
        MonomialPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn basis_polynomials() {
        assert_eq!(BinomialPoly::basis(0).to_monomial(), mono(&[(1, 1)]));
        assert_eq!(BinomialPoly::basis(1).to_monomial(), mono(&[(0, 1), (1, 1)]));
        // X(X-1)/2
        assert_eq!(BinomialPoly::basis(2).to_monomial(), mono(&[(0, 1), (-1, 2), (1, 2)]));
        assert_eq!(BinomialPoly::basis(4).degree(), Some(4));
        assert_eq!(BinomialPoly::zero().degree(), None);
        assert_eq!(poly(&[(1, 1), (0, 1), (0, 1)]).degree(), Some(0));
    }

    #[test]
    fn forward_difference_shifts() {
        assert_eq!(BinomialPoly::basis(3).forward_difference(1), BinomialPoly::basis(2));
        assert!(BinomialPoly::basis(2).forward_difference(3).is_zero());
        assert!(BinomialPoly::constant(rat_int(5)).forward_difference(1).is_zero());
        assert_eq!(BinomialPoly::basis(5).forward_difference(0), BinomialPoly::basis(5));
    }

    #[test]
    fn derivative_examples() {
        let f = f_table(12);
        let d = BinomialPoly::basis(2).derivative(1, &f).unwrap();
        assert_eq!(d.to_monomial(), mono(&[(-1, 2), (1, 1)]));

        let d3 = BinomialPoly::basis(3).derivative(1, &f).unwrap();
        assert_eq!(d3.eval_int(&int(0)), rat(1, 3));

        let p = poly(&[(3, 1), (-1, 2), (7, 5)]);
        assert_eq!(p.derivative(0, &f).unwrap(), p);
        assert!(p.derivative(3, &f).unwrap().is_zero());
        assert!(BinomialPoly::zero().derivative(2, &f).unwrap().is_zero());
    }

    #[test]
    fn derivative_rejects_short_table() {
        let f = f_table(3);
        assert!(BinomialPoly::basis(5).derivative(1, &f).is_err());
        // k above the degree never consults the table
        assert!(BinomialPoly::basis(5).derivative(6, &f).unwrap().is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(BinomialPoly::basis(3).eval_int(&int(5)), rat_int(10));
        assert_eq!(BinomialPoly::basis(3).eval_int(&int(3)), rat_int(1));
        assert_eq!(BinomialPoly::basis(2).eval_int(&int(-1)), rat_int(1));
        assert_eq!(BinomialPoly::basis(3).eval_int(&int(-2)), rat_int(-4));
        assert_eq!(BinomialPoly::basis(4).eval_int(&int(2)), rat_int(0));
    }

    #[test]
    fn integer_valuedness() {
        for n in 0..10 {
            assert!(BinomialPoly::basis(n).is_integer_valued());
        }
        let f = f_table(4);
        assert!(!BinomialPoly::basis(2).derivative(1, &f).unwrap().is_integer_valued());
        // X(X+1)/2 = B_1 + B_2
        let tri = BinomialPoly::from_monomial(&mono(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(tri, poly(&[(0, 1), (1, 1), (1, 1)]));
        assert!(tri.is_integer_valued());
    }

    #[test]
    fn basis_change() {
        assert_eq!(
            BinomialPoly::basis(2).to_monomial().coeffs(),
            &[rat(0, 1), rat(-1, 2), rat(1, 2)][..]
        );
        assert_eq!(
            BinomialPoly::from_monomial(&mono(&[(0, 1), (1, 1)])),
            BinomialPoly::basis(1)
        );
        assert_eq!(
            BinomialPoly::from_monomial(&MonomialPoly::default()),
            BinomialPoly::zero()
        );
    }

    #[test]
    fn difference_at_zero_is_kronecker_delta() {
        for i in 0..=12 {
            for j in 0..=12 {
                let v = BinomialPoly::basis(j).forward_difference(i).eval_int(&int(0));
                let expected = if i == j { rat_int(1) } else { rat_int(0) };
                assert_eq!(v, expected, "i = {i}, j = {j}");
            }
        }
    }

    #[test]
    fn derivative_matches_power_rule_on_basis() {
        let f = f_table(12);
        for m in 0..=12 {
            let b = BinomialPoly::basis(m);
            for k in 0..=m {
                let via_differences = b.derivative(k, &f).unwrap().to_monomial();
                let via_power_rule = b.to_monomial().derivative(k);
                assert_eq!(via_differences, via_power_rule, "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn monomial_power_rule() {
        // d^2/dX^2 (X^3 + 2X) = 6X
        let q = mono(&[(0, 1), (2, 1), (0, 1), (1, 1)]);
        assert_eq!(q.derivative(2), mono(&[(0, 1), (6, 1)]));
        assert_eq!(q.derivative(4), MonomialPoly::default());
        assert_eq!(q.eval(&rat(1, 2)), rat(9, 8));
    }

    fn rational() -> impl Strategy<Value = Rational> {
        prop_oneof![
            (-40i64..40).prop_map(rat_int),
            (-40i64..40, 1i64..13).prop_map(|(n, d)| rat(n, d)),
        ]
    }

    fn binomial_poly(max_deg: usize) -> impl Strategy<Value = BinomialPoly> {
        prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(BinomialPoly::new)
    }

    proptest! {
        #[test]
        fn difference_is_shift_of_values(p in binomial_poly(12), x in -10i64..=10) {
            let x = int(x);
            let lhs = p.forward_difference(1).eval_int(&x);
            let rhs = p.eval_int(&(&x + 1)) - p.eval_int(&x);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn second_derivative_composes(p in binomial_poly(10)) {
            let f = f_table(10);
            let twice = p.derivative(1, &f).unwrap().derivative(1, &f).unwrap();
            prop_assert_eq!(twice, p.derivative(2, &f).unwrap());
        }

        #[test]
        fn derivative_lowers_degree(p in binomial_poly(10), k in 0usize..=10) {
            let f = f_table(10);
            let d = p.derivative(k, &f).unwrap();
            match p.degree() {
                Some(deg) if k <= deg => prop_assert_eq!(d.degree(), Some(deg - k)),
                _ => prop_assert!(d.is_zero()),
            }
        }

        #[test]
        fn monomial_round_trip(p in binomial_poly(10)) {
            prop_assert_eq!(BinomialPoly::from_monomial(&p.to_monomial()), p);
        }

        #[test]
        fn integer_valued_iff_newton_criterion(p in binomial_poly(8)) {
            let deg = p.degree().unwrap_or(0);
            let newton = (0..=deg).all(|x| p.eval_int(&int(x as i64)).is_integer());
            prop_assert_eq!(p.is_integer_valued(), newton);
        }
    }
}
