//! JSON and CSV renderings of library values.

use mapforge::oracle_enum::CountTable;
use mapforge::series_engine::{Poly, RationalFunction, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// `[[e1, e2, ..., num, den], ...]` in exponent order.
pub fn series(s: &TruncatedSeries) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|(e, c)| {
                let mut row: Vec<Value> = e.iter().map(|&x| json!(x)).collect();
                row.push(int(c.numer()));
                row.push(int(c.denom()));
                Value::Array(row)
            })
            .collect(),
    )
}

/// `[[e1, e2, ..., coeff], ...]`.
pub fn poly(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| {
                let mut row: Vec<Value> = e.iter().map(|&x| json!(x)).collect();
                row.push(int(c));
                Value::Array(row)
            })
            .collect(),
    )
}

pub fn rational(f: &RationalFunction) -> Value {
    json!({ "num": poly(f.num()), "den": poly(f.den()) })
}

pub fn table(t: &CountTable) -> Value {
    let rows: Vec<Value> = t
        .counts
        .iter()
        .map(|(k, &c)| {
            let mut row: Vec<Value> = k.iter().map(|&x| json!(x)).collect();
            row.push(json!(c));
            Value::Array(row)
        })
        .collect();
    json!({ "genus": t.genus, "axis": t.axis, "counts": rows })
}

pub fn table_csv(t: &CountTable) -> String {
    let mut out = t.axis.join(",");
    out.push_str(",count\n");
    for (k, c) in &t.counts {
        for x in k {
            out.push_str(&format!("{x},"));
        }
        out.push_str(&format!("{c}\n"));
    }
    out
}
