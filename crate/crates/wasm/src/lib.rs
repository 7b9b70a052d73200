//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; the page does its own rendering.
//! The plain-Rust functions in [`demo`] carry the logic so they can be
//! tested natively.

use wasm_bindgen::prelude::*;

pub mod demo {
    use ivpoly_core::constants::{c_table, lambda_lcm_c, lambda_product, q_table};
    use ivpoly_core::exact_arith::{denominator_of, lcm_list};
    use ivpoly_core::stirling_fnk::{d_table, f_table, stirling_first};
    use ivpoly_core::{BinomialPoly, Integer, Rational};
    use serde_json::{json, Value};

    /// Keeps the page responsive; the tables grow quadratically.
    pub const MAX_DEMO_N: usize = 60;

    fn check_n(n: usize) -> Result<(), String> {
        if n > MAX_DEMO_N {
            return Err(format!("n = {n} is above the demo limit {MAX_DEMO_N}"));
        }
        Ok(())
    }

    fn frac(r: &Rational) -> String {
        if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    fn ints<'a>(rows: impl Iterator<Item = &'a [Integer]>) -> Vec<Vec<String>> {
        rows.map(|r| r.iter().map(Integer::to_string).collect()).collect()
    }

    /// `{"kind", "max_n", "rows"}` for one of `c`, `q`, `d`, `F`, `stirling`.
    pub fn triangle(kind: &str, max_n: usize) -> Result<String, String> {
        check_n(max_n)?;
        let rows = match kind {
            "c" => ints(c_table(&d_table(&f_table(max_n))).entries.rows()),
            "q" => ints(q_table(max_n).entries.rows()),
            "d" => ints(d_table(&f_table(max_n)).entries.rows()),
            "F" => f_table(max_n).rows().map(|r| r.iter().map(frac).collect()).collect(),
            "stirling" => ints(stirling_first(max_n).rows()),
            other => return Err(format!("unknown table {other:?}")),
        };
        Ok(json!({ "kind": kind, "max_n": max_n, "rows": rows }).to_string())
    }

    /// `[{"n", "value", "factored"}]` for `λ_0..λ_max_n`.
    pub fn lambda_sequence(max_n: usize) -> Result<String, String> {
        check_n(max_n)?;
        let c = c_table(&d_table(&f_table(max_n)));
        let terms: Vec<Value> = (0..=max_n)
            .map(|n| {
                json!({
                    "n": n,
                    "value": lambda_lcm_c(n, &c).expect("row in table").to_string(),
                    "factored": lambda_product(n).to_string(),
                })
            })
            .collect();
        Ok(Value::Array(terms).to_string())
    }

    /// The `k`-th derivative of `B_m` in both bases, its value at 0, and
    /// the least integer that clears its binomial-basis denominators.
    pub fn basis_derivative(m: usize, k: usize) -> Result<String, String> {
        check_n(m)?;
        let f = f_table(m);
        let derived = BinomialPoly::basis(m).derivative(k, &f).map_err(|e| e.to_string())?;
        let binomial: Vec<String> = derived.coeffs().iter().map(frac).collect();
        let monomial: Vec<String> = derived.to_monomial().coeffs().iter().map(frac).collect();
        let at_zero = derived.eval_int(&Integer::from(0));
        let dens: Vec<Integer> = derived.coeffs().iter().map(denominator_of).collect();
        let multiplier = lcm_list(&dens).map_err(|e| e.to_string())?;
        let c = c_table(&d_table(&f));
        let c_mk = c.get(m, k).cloned().unwrap_or_else(|| Integer::from(1));
        Ok(json!({
            "m": m,
            "k": k,
            "binomial": binomial,
            "monomial": monomial,
            "value_at_zero": frac(&at_zero),
            "multiplier": multiplier.to_string(),
            "c_mk": c_mk.to_string(),
        })
        .to_string())
    }
}

#[wasm_bindgen]
pub fn triangle(kind: &str, max_n: usize) -> Result<String, JsError> {
    demo::triangle(kind, max_n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn lambda_sequence(max_n: usize) -> Result<String, JsError> {
    demo::lambda_sequence(max_n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn basis_derivative(m: usize, k: usize) -> Result<String, JsError> {
    demo::basis_derivative(m, k).map_err(|e| JsError::new(&e))
}
