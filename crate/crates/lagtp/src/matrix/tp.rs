use super::{det_exact, det_int, Mat};
use crate::exec::Exec;
use crate::poly::{Poly, Var};
use num_bigint::BigInt;
use num_traits::Signed;
use rand_core::{RngCore, SeedableRng};
use rand_xorshift::XorShiftRng;
use serde_json::{json, Value};
use std::collections::HashMap;

/// All `k`-subsets of `0..n` in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        out.push(s.clone());
        // bump the lowest position that can move without colliding
        let mut i = 0;
        while i < k && (if i + 1 < k { s[i] + 1 == s[i + 1] } else { s[i] + 1 == n }) {
            i += 1;
        }
        if i == k {
            return out;
        }
        s[i] += 1;
        for (j, x) in s.iter_mut().enumerate().take(i) {
            *x = j;
        }
    }
}

/// Every minor index pair of order `1..=order`, by order, then rows, then
/// columns, each in colex order.
fn minor_positions(rows: usize, cols: usize, order: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 1..=order.min(rows).min(cols) {
        let cs = colex_subsets(cols, k);
        for r in colex_subsets(rows, k) {
            for c in &cs {
                out.push((r.clone(), c.clone()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// The offending minor, symbolically.
    pub minor: Poly,
    /// The variable assignment, for sampled checks.
    pub sample: Option<Vec<(Var, i64)>>,
    pub value: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TpReport {
    pub ok: bool,
    pub order: usize,
    pub mode: &'static str,
    /// Minors (symbolic) or minor evaluations (sampled) examined.
    pub checked: usize,
    pub witness: Option<Witness>,
}

impl TpReport {
    pub fn to_json(&self) -> Value {
        let witness = self.witness.as_ref().map(|w| {
            let mut o = json!({
                "rows": w.rows,
                "cols": w.cols,
                "minor": w.minor.to_string(),
            });
            if let Some(s) = &w.sample {
                let m: serde_json::Map<String, Value> = s.iter().map(|(v, x)| (v.name().to_string(), json!(x))).collect();
                o["sample"] = Value::Object(m);
            }
            if let Some(v) = &w.value {
                o["value"] = json!(v.to_string());
            }
            o
        });
        json!({
            "ok": self.ok,
            "order": self.order,
            "mode": self.mode,
            "checked": self.checked,
            "witness": witness,
        })
    }
}

/// Coefficientwise check of every minor of order at most `order`. The
/// witness, if any, is the first failing minor in enumeration order, so the
/// result is the same under either execution strategy.
pub fn tp_check_symbolic(m: &Mat, order: usize) -> TpReport {
    tp_check_symbolic_with(m, order, Exec::default())
}

pub fn tp_check_symbolic_with(m: &Mat, order: usize, exec: Exec) -> TpReport {
    let pos = minor_positions(m.rows(), m.cols(), order);
    let hit = exec.find_first(&(0..pos.len()).collect::<Vec<_>>(), |&i| {
        let (r, c) = &pos[i];
        let d = det_exact(&m.submatrix(r, c));
        (!d.is_coeffwise_nonneg()).then_some((i, d))
    });
    match hit {
        None => TpReport { ok: true, order, mode: "symbolic", checked: pos.len(), witness: None },
        Some((i, d)) => TpReport {
            ok: false,
            order,
            mode: "symbolic",
            checked: i + 1,
            witness: Some(Witness { rows: pos[i].0.clone(), cols: pos[i].1.clone(), minor: d, sample: None, value: None }),
        },
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Sampler {
    pub seed: u64,
    pub samples: usize,
}

/// Evaluate the matrix at seeded random points with variables in `0..4`
/// and look for a negative minor. Passing is evidence, not proof.
pub fn tp_check_sampled(m: &Mat, order: usize, sampler: Sampler) -> TpReport {
    tp_check_sampled_with(m, order, sampler, Exec::default())
}

pub fn tp_check_sampled_with(m: &Mat, order: usize, sampler: Sampler, exec: Exec) -> TpReport {
    let vars = m.vars();
    let mut rng = XorShiftRng::seed_from_u64(sampler.seed);
    let points: Vec<Vec<i64>> = (0..sampler.samples)
        .map(|_| vars.iter().map(|_| i64::from(rng.next_u32() % 4)).collect())
        .collect();
    let pos = minor_positions(m.rows(), m.cols(), order);
    let hit = exec.find_first(&(0..points.len()).collect::<Vec<_>>(), |&s| {
        let env: HashMap<Var, BigInt> = vars.iter().zip(&points[s]).map(|(&v, &x)| (v, BigInt::from(x))).collect();
        let vals: Vec<BigInt> = m.entries().iter().map(|p| p.eval(&env).expect("all variables bound")).collect();
        pos.iter().enumerate().find_map(|(i, (r, c))| {
            let sub: Vec<BigInt> = r.iter().flat_map(|&a| c.iter().map(move |&b| (a, b))).map(|(a, b)| vals[a * m.cols() + b].clone()).collect();
            let d = det_int(&sub, r.len());
            d.is_negative().then_some((s, i, d))
        })
    });
    match hit {
        None => TpReport { ok: true, order, mode: "sampled", checked: pos.len() * points.len(), witness: None },
        Some((s, i, d)) => {
            let (r, c) = &pos[i];
            TpReport {
                ok: false,
                order,
                mode: "sampled",
                checked: s * pos.len() + i + 1,
                witness: Some(Witness {
                    rows: r.clone(),
                    cols: c.clone(),
                    minor: det_exact(&m.submatrix(r, c)),
                    sample: Some(vars.iter().copied().zip(points[s].iter().copied()).collect()),
                    value: Some(d),
                }),
            }
        }
    }
}
