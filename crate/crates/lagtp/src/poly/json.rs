use super::{Coeff, MPoly, Monomial, Poly, PolyError, Var};
use serde_json::{json, Value};

pub(super) fn poly_to_json<C: Coeff>(p: &MPoly<C>) -> Value {
    let vars = p.vars();
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let exp: Vec<u32> = vars.iter().map(|&v| m.exponent(v)).collect();
            json!({"exp": exp, "coef": c.to_dec()})
        })
        .collect();
    json!({"vars": vars.iter().map(|v| v.name()).collect::<Vec<_>>(), "terms": terms})
}

fn bad(msg: &str) -> PolyError {
    PolyError::Json(msg.to_string())
}

pub(super) fn poly_from_json<C: Coeff>(v: &Value) -> Result<MPoly<C>, PolyError> {
    let vars: Vec<Var> = v
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing vars"))?
        .iter()
        .map(|x| x.as_str().map(Var::new).ok_or_else(|| bad("var is not a string")))
        .collect::<Result<_, _>>()?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exp = t.get("exp").and_then(Value::as_array).ok_or_else(|| bad("missing exp"))?;
        if exp.len() != vars.len() {
            return Err(bad("exp length differs from vars"));
        }
        let mut pairs = Vec::with_capacity(exp.len());
        for (&var, e) in vars.iter().zip(exp) {
            let e = e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| bad("bad exponent"))?;
            pairs.push((var, e));
        }
        let coef = t
            .get("coef")
            .and_then(Value::as_str)
            .and_then(C::parse_dec)
            .ok_or_else(|| bad("bad coef"))?;
        out.push((Monomial::from_pairs(pairs), coef));
    }
    Ok(MPoly::from_terms(out))
}

/// `{"rows":N,"cols":M,"entries":[[poly,...],...]}`.
pub fn matrix_to_json(rows: usize, cols: usize, entries: &[Poly]) -> Value {
    let grid: Vec<Value> = (0..rows)
        .map(|i| Value::Array((0..cols).map(|j| entries[i * cols + j].to_json()).collect()))
        .collect();
    json!({"rows": rows, "cols": cols, "entries": grid})
}

/// Inverse of [`matrix_to_json`]; returns `(rows, cols, row-major entries)`.
pub fn matrix_from_json(v: &Value) -> Result<(usize, usize, Vec<Poly>), PolyError> {
    let rows = v.get("rows").and_then(Value::as_u64).ok_or_else(|| bad("missing rows"))? as usize;
    let cols = v.get("cols").and_then(Value::as_u64).ok_or_else(|| bad("missing cols"))? as usize;
    let grid = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing entries"))?;
    if grid.len() != rows {
        return Err(bad("row count mismatch"));
    }
    let mut out = Vec::with_capacity(rows * cols);
    for row in grid {
        let row = row.as_array().ok_or_else(|| bad("row is not an array"))?;
        if row.len() != cols {
            return Err(bad("column count mismatch"));
        }
        for e in row {
            // bare integers are accepted as a convenience for hand-written input
            let p = match e {
                Value::Number(n) => Poly::int(n.as_i64().ok_or_else(|| bad("entry out of range"))?),
                Value::String(s) => Poly::parse(s).map_err(|e| bad(&e.to_string()))?,
                _ => Poly::from_json(e)?,
            };
            out.push(p);
        }
    }
    Ok((rows, cols, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{p, QPoly};
    use proptest::prelude::*;

    #[test]
    fn layout() {
        let q = p("3 + 2*x*y^2 - y");
        let j = q.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"terms":[{"coef":"3","exp":[0,0]},{"coef":"-1","exp":[0,1]},{"coef":"2","exp":[1,2]}],"vars":["x","y"]}"#
        );
        assert_eq!(Poly::from_json(&j).unwrap(), q);
    }

    #[test]
    fn rational_round_trip() {
        let q = QPoly::parse("x/3 - 7/2").unwrap();
        assert_eq!(QPoly::from_json(&q.to_json()).unwrap(), q);
    }

    #[test]
    fn matrix_inputs() {
        let v: Value = serde_json::from_str(r#"{"rows":2,"cols":2,"entries":[[1,2],[3,"1+x"]]}"#).unwrap();
        let (r, c, e) = matrix_from_json(&v).unwrap();
        assert_eq!((r, c), (2, 2));
        assert_eq!(e[3], p("1 + x"));
        let back = matrix_to_json(r, c, &e);
        assert_eq!(matrix_from_json(&back).unwrap().2, e);
        let bad: Value = serde_json::from_str(r#"{"rows":2,"cols":2,"entries":[[1,2]]}"#).unwrap();
        assert!(matrix_from_json(&bad).is_err());
    }

    proptest! {
        #[test]
        fn bit_exact_round_trip(cs in prop::collection::vec((-1000i64..1000, 0u32..4, 0u32..4), 0..8)) {
            let q = Poly::from_terms(cs.into_iter().map(|(c, a, b)| {
                (Monomial::from_pairs(vec![(Var::new("u"), a), (Var::new("t9"), b)]), c.into())
            }));
            let text = q.to_json().to_string();
            let back = Poly::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(&back, &q);
            prop_assert_eq!(back.to_json().to_string(), text);
        }
    }
}
