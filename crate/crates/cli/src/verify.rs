//! The `verify` subcommand: cross-validates every independent computation
//! path up to a given N and prints one line per check.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use qwave_core::degnum::{w1_coeffs, w1_recurrence_check, w2_coeffs, w2_recurrence_check};
use qwave_core::grsum::{ramanujan_sum, sigma_bounds_check, sigma_sieved, sigma_table};
use qwave_core::oracle::{p_dp, verify_reconstruction};
use qwave_core::poly::Poly;
use qwave_core::qpartial::{decompose, decompose_variant_k2, gamma_table};
use qwave_core::rational::{factorial, Rational};
use qwave_core::waves::partition_via_waves_with;

use crate::output::OutputDocument;

struct Check {
    name: &'static str,
    passed: bool,
    witness: Option<String>,
}

fn check<F: FnOnce() -> Result<(), String>>(name: &'static str, f: F) -> Check {
    match f() {
        Ok(()) => Check {
            name,
            passed: true,
            witness: None,
        },
        Err(witness) => Check {
            name,
            passed: false,
            witness: Some(witness),
        },
    }
}

/// Runs the suite; returns the process exit code (0 pass, 1 any failure).
pub fn run_suite(n_max: u32, json_mode: bool) -> i32 {
    let mut checks = Vec::new();

    let decompositions: Vec<_> = match (1..=n_max).map(decompose).collect::<Result<Vec<_>, _>>() {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let tables: Vec<_> = decompositions.iter().map(gamma_table).collect();

    checks.push(check("reconstruction identity", || {
        for d in &decompositions {
            let r = verify_reconstruction(d);
            if !r.passed {
                return Err(format!("N={}: {:?}", d.n_parts(), r.first_mismatch));
            }
        }
        Ok(())
    }));

    checks.push(check("wave sum equals DP partition count", || {
        for table in &tables {
            let dp = p_dp(table.n_parts(), 200);
            for n in 0..=200u64 {
                let ours = partition_via_waves_with(table, n).map_err(|e| e.to_string())?;
                if ours != *dp.get(n as usize) {
                    return Err(format!("N={}, n={n}", table.n_parts()));
                }
            }
        }
        Ok(())
    }));

    let k_max = n_max.max(8);
    checks.push(check("sigma recurrence equals sieved oracle", || {
        for k in 1..=k_max {
            let table = sigma_table(k);
            for t in 0..k as i64 {
                for j in 0..k {
                    if sigma_sieved(k, t, j).map_err(|e| e.to_string())? != *table.get(t, j) {
                        return Err(format!("k={k}, t={t}, j={j}"));
                    }
                }
                if *table.get(t, k - 1) != BigInt::from(k) * ramanujan_sum(k, t) {
                    return Err(format!("last column at k={k}, t={t}"));
                }
            }
            if !sigma_bounds_check(&table).all_pass() {
                return Err(format!("bounds at k={k}"));
            }
        }
        Ok(())
    }));

    checks.push(check("closed forms equal decomposition tables", || {
        for table in &tables {
            let n = table.n_parts();
            let w1 = w1_coeffs(n).map_err(|e| e.to_string())?;
            for l in 1..=n {
                if w1[l as usize - 1] != table.get(0, 1, l) {
                    return Err(format!("w1 at N={n}, l={l}"));
                }
            }
            if n >= 2 {
                let variant = decompose_variant_k2(n).map_err(|e| e.to_string())?;
                if w2_coeffs(n).map_err(|e| e.to_string())? != variant.entries().to_vec() {
                    return Err(format!("w2 at N={n}"));
                }
            }
        }
        Ok(())
    }));

    checks.push(check("wave coefficient recurrences", || {
        for n in 1..=n_max.saturating_sub(1).max(1) {
            if !w1_recurrence_check(n).map_err(|e| e.to_string())? {
                return Err(format!("w1 recurrence at N={n}"));
            }
            if n >= 2 && !w2_recurrence_check(n).map_err(|e| e.to_string())? {
                return Err(format!("w2 recurrence at N={n}"));
            }
        }
        Ok(())
    }));

    checks.push(check("k=2,3 top-level case tables", || {
        for d in &decompositions {
            let n = d.n_parts();
            if n < 2 {
                continue;
            }
            let level = n / 2;
            let exponent = if n % 2 == 0 { level + 1 } else { level + 2 };
            let scale = Rational::new(
                BigInt::one(),
                BigInt::from(2).pow(exponent) * factorial(level as u64),
            );
            if d.term(2, level) != Some(&Poly::from_ints(&[1, -1]).scale(&scale)) {
                return Err(format!("k=2 at N={n}"));
            }
            if n >= 3 {
                let level = n / 3;
                let (shape, exponent) = match n % 3 {
                    0 => (Poly::from_ints(&[2, -1, -1]), level + 1),
                    1 => (Poly::from_ints(&[1, 0, -1]), level + 1),
                    _ => (Poly::from_ints(&[2, -1, -1]), level + 2),
                };
                let scale = Rational::new(
                    BigInt::one(),
                    BigInt::from(3).pow(exponent) * factorial(level as u64),
                );
                if d.term(3, level) != Some(&shape.scale(&scale)) {
                    return Err(format!("k=3 at N={n}"));
                }
            }
        }
        Ok(())
    }));

    let all_passed = checks.iter().all(|c| c.passed);
    if json_mode {
        let mut results = Map::new();
        let mut rows = Vec::new();
        for c in &checks {
            let mut row = Map::new();
            row.insert("check".into(), json!(c.name));
            row.insert("passed".into(), json!(c.passed));
            if let Some(w) = &c.witness {
                row.insert("witness".into(), json!(w));
            }
            rows.push(Value::Object(row));
        }
        results.insert("checks".into(), Value::Array(rows));
        results.insert("all_passed".into(), json!(all_passed));
        let mut params = Map::new();
        params.insert("N_max".into(), json!(n_max.to_string()));
        OutputDocument::from_parts("verify", params, results, String::new()).emit(true);
    } else {
        for c in &checks {
            match &c.witness {
                None => println!("{:<42} PASS", c.name),
                Some(w) => println!("{:<42} FAIL ({w})", c.name),
            }
        }
        println!(
            "verify N<={n_max}: {}",
            if all_passed { "all checks passed" } else { "FAILURES" }
        );
    }
    if all_passed {
        0
    } else {
        1
    }
}
