//! Output documents: `{"command", "params", "results", "exact"}` in JSON
//! mode, plain lines in text mode.
//!
//! The JSON contract: rationals are `"p/q"` strings in lowest terms (`"p"`
//! when the denominator is one); polynomials are arrays of rational strings
//! ascending by degree; the Gamma table is keyed `"h,k,l"`; the sigma table
//! is an array of rows indexed by `t` with columns indexed by `j`, holding
//! integers of arbitrary size. Key order is fixed by insertion, so output is
//! byte-deterministic.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use qwave_core::degnum::{Center, DegKind, DegSeries};
use qwave_core::grsum::SigmaTable;
use qwave_core::poly::Poly;
use qwave_core::qpartial::{GammaTable, QPFDecomposition, RademacherTop};
use qwave_core::rational::{to_string as rat_str, Rational};

pub struct OutputDocument {
    command: &'static str,
    params: Map<String, Value>,
    results: Map<String, Value>,
    text: String,
}

fn big_number(v: &BigInt) -> Value {
    // arbitrary_precision keeps every digit
    Value::Number(Number::from_string_unchecked(v.to_string()))
}

fn poly_value(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| json!(rat_str(c))).collect())
}

fn params_of(pairs: &[(&str, String)]) -> Map<String, Value> {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert((*k).to_string(), json!(v));
    }
    m
}

impl OutputDocument {
    pub fn decompose(d: &QPFDecomposition, gamma: &GammaTable, verified: bool) -> Self {
        let mut g = Map::new();
        let mut text = String::new();
        for (k, l, poly) in d.terms() {
            g.insert(format!("{k},{l}"), poly_value(poly));
            text.push_str(&format!("g[{k},{l}] = {poly}\n"));
        }
        let mut gamma_map = Map::new();
        for ((h, k, l), v) in gamma.entries() {
            gamma_map.insert(format!("{h},{k},{l}"), json!(rat_str(v)));
        }
        text.push_str(&format!(
            "reconstruction: {}\n",
            if verified { "verified" } else { "FAILED" }
        ));
        let mut results = Map::new();
        results.insert("g".into(), Value::Object(g));
        results.insert("gamma".into(), Value::Object(gamma_map));
        results.insert("verified".into(), json!(verified));
        OutputDocument {
            command: "decompose",
            params: params_of(&[("N", d.n_parts().to_string())]),
            results,
            text,
        }
    }

    pub fn sigma(table: &SigmaTable) -> Self {
        let rows: Vec<Value> = table
            .rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(big_number).collect()))
            .collect();
        let mut text = String::new();
        for (t, row) in table.rows().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            text.push_str(&format!("t={t}: [{}]\n", cells.join(", ")));
        }
        let mut results = Map::new();
        results.insert("sigma".into(), Value::Array(rows));
        OutputDocument {
            command: "sigma",
            params: params_of(&[("k", table.index().to_string())]),
            results,
            text,
        }
    }

    pub fn gamma(j: u32, k: u32, n: u32, value: &Rational) -> Self {
        let mut results = Map::new();
        results.insert("gamma".into(), json!(rat_str(value)));
        OutputDocument {
            command: "gamma",
            params: params_of(&[
                ("j", j.to_string()),
                ("k", k.to_string()),
                ("N", n.to_string()),
            ]),
            results,
            text: format!("{}\n", rat_str(value)),
        }
    }

    pub fn wave(k: u32, n: u64, n_parts: u32, value: &Rational) -> Self {
        let mut results = Map::new();
        results.insert("wave".into(), json!(rat_str(value)));
        OutputDocument {
            command: "wave",
            params: params_of(&[
                ("k", k.to_string()),
                ("n", n.to_string()),
                ("N", n_parts.to_string()),
            ]),
            results,
            text: format!("W_{k}({n}; {n_parts}) = {}\n", rat_str(value)),
        }
    }

    pub fn partition(n: u64, max_part: u32, count: &BigInt) -> Self {
        let mut results = Map::new();
        results.insert("p".into(), big_number(count));
        OutputDocument {
            command: "partition",
            params: params_of(&[("n", n.to_string()), ("max_part", max_part.to_string())]),
            results,
            text: format!("{count}\n"),
        }
    }

    pub fn degnum(series: &DegSeries) -> Self {
        let kind = match series.kind {
            DegKind::Bernoulli => "bernoulli",
            DegKind::Euler => "euler",
        };
        let center = match series.center {
            Center::PlusOne => "+1",
            Center::MinusOne => "-1",
        };
        let coeffs: Vec<Value> = series.coeffs.iter().map(|c| json!(rat_str(c))).collect();
        let text = series
            .coeffs
            .iter()
            .map(rat_str)
            .collect::<Vec<_>>()
            .join(", ");
        let mut results = Map::new();
        results.insert("coeffs".into(), Value::Array(coeffs));
        OutputDocument {
            command: "degnum",
            params: params_of(&[
                ("kind", kind.to_string()),
                ("center", center.to_string()),
                ("m", series.m.to_string()),
                ("order", series.coeffs.len().to_string()),
            ]),
            results,
            text: format!("[{text}]\n"),
        }
    }

    pub fn rademacher(top: &RademacherTop) -> Self {
        let coords: Vec<Value> = top
            .value
            .coords()
            .iter()
            .map(|c| json!(rat_str(c)))
            .collect();
        let mut approx = Map::new();
        approx.insert("re".into(), json!(top.approx.0));
        approx.insert("im".into(), json!(top.approx.1));
        let mut results = Map::new();
        results.insert("coords".into(), Value::Array(coords));
        results.insert("approx".into(), Value::Object(approx));
        let text = format!(
            "C = {} in Q[x]/Phi_{}  (~ {} + {}i)\n",
            top.value.as_poly(),
            top.k,
            top.approx.0,
            top.approx.1
        );
        OutputDocument {
            command: "rademacher",
            params: params_of(&[
                ("h", top.h.to_string()),
                ("k", top.k.to_string()),
                ("N", top.n_parts.to_string()),
            ]),
            results,
            text,
        }
    }

    pub fn from_parts(
        command: &'static str,
        params: Map<String, Value>,
        results: Map<String, Value>,
        text: String,
    ) -> Self {
        OutputDocument {
            command,
            params,
            results,
            text,
        }
    }

    pub fn emit(&self, json: bool) {
        if json {
            let mut doc = Map::new();
            doc.insert("command".into(), json!(self.command));
            doc.insert("params".into(), Value::Object(self.params.clone()));
            doc.insert("results".into(), Value::Object(self.results.clone()));
            doc.insert("exact".into(), json!(true));
            println!("{}", Value::Object(doc));
        } else {
            print!("{}", self.text);
        }
    }
}
