//! `lagtp gen`: build a family and render it.

use std::fmt;
use std::str::FromStr;

use lagtp::digraphs::OracleWeights;
use lagtp::laguerre::{self, EdgeWeights, ProdMat, VertexWeights};
use lagtp::matrix::{output_matrix, Mat};
use lagtp::poly::{v, Poly, Var};
use lagtp::quadtp::{self, QuadFactorParams, QuadVariantParams};
use lagtp::srpaths::{self, KappaFamily, SRCoeffs, SrTable};
use serde_json::{json, Map, Value};

use crate::{CliError, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    LaguerreCoeff,
    LaguerrePoly,
    FirstMv,
    SecondMv,
    ProdMat(ProdMat),
    Smj,
    QuadGeneral,
    QuadVariant,
}

impl FromStr for Selector {
    type Err = String;
    fn from_str(s: &str) -> Result<Selector, String> {
        Ok(match s {
            "laguerre-coeff" => Selector::LaguerreCoeff,
            "laguerre-poly" => Selector::LaguerrePoly,
            "first-mv" => Selector::FirstMv,
            "second-mv" => Selector::SecondMv,
            "smj" => Selector::Smj,
            "quad-general" => Selector::QuadGeneral,
            "quad-variant" => Selector::QuadVariant,
            _ => {
                let name = s.strip_prefix("prodmat:").ok_or_else(|| format!("unknown selector {s:?}"))?;
                // accept the printed names as well: Pcirc, PFlat, ...
                let kebab = name.replace("Flat", "-flat").replace("Y", "-y").to_lowercase();
                Selector::ProdMat(kebab.parse().map_err(|_| format!("unknown production matrix {name:?}"))?)
            }
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::LaguerreCoeff => f.write_str("laguerre-coeff"),
            Selector::LaguerrePoly => f.write_str("laguerre-poly"),
            Selector::FirstMv => f.write_str("first-mv"),
            Selector::SecondMv => f.write_str("second-mv"),
            Selector::ProdMat(p) => write!(f, "prodmat:{p}"),
            Selector::Smj => f.write_str("smj"),
            Selector::QuadGeneral => f.write_str("quad-general"),
            Selector::QuadVariant => f.write_str("quad-variant"),
        }
    }
}

/// `sym` (the variable `a`) or an integer polynomial such as `-1` or `lam-1`.
pub fn parse_alpha(s: &str) -> Result<Poly, String> {
    if s == "sym" || s == "symbolic" {
        return Ok(v("a"));
    }
    Poly::parse(s).map_err(|e| {
        if s.contains('/') {
            format!("alpha {s:?}: only integer or symbolic alpha is supported")
        } else {
            format!("alpha {s:?}: {e}")
        }
    })
}

/// `name=value`, `value` a polynomial or `sym` (leave symbolic).
pub fn parse_binding(s: &str) -> Result<(Var, Option<Poly>), String> {
    let (name, val) = s.split_once('=').ok_or_else(|| format!("binding {s:?} is not name=value"))?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(format!("bad variable name {name:?}"));
    }
    let val = val.trim();
    if val == "sym" || val == "symbolic" {
        return Ok((Var::new(name), None));
    }
    Ok((Var::new(name), Some(Poly::parse(val).map_err(|e| format!("binding {s:?}: {e}"))?)))
}

#[derive(Clone, Debug)]
pub struct GenArgs {
    pub selector: Selector,
    pub alpha: Poly,
    pub n: usize,
    pub m: usize,
    pub j: usize,
    pub family: Option<KappaFamily>,
    pub flat: bool,
    pub reversed: bool,
    pub triangle: bool,
    pub bindings: Vec<(Var, Option<Poly>)>,
}

pub enum Body {
    Matrix(Vec<Vec<String>>),
    Polys(Vec<String>),
}

pub struct Generated {
    pub params: Map<String, Value>,
    pub body: Body,
}

fn strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn grid<T: ToString>(rows: &[Vec<T>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn bind(m: Mat, pairs: &[(Var, Poly)]) -> Mat {
    if pairs.is_empty() {
        m
    } else {
        m.substitute_pairs(pairs)
    }
}

pub fn generate(a: &GenArgs) -> Result<Generated, CliError> {
    let usage = CliError::usage;
    let pairs: Vec<(Var, Poly)> = a.bindings.iter().filter_map(|(v, p)| p.clone().map(|p| (*v, p))).collect();
    let mut params = Map::new();
    params.insert("selector".into(), json!(a.selector.to_string()));
    params.insert("n".into(), json!(a.n));
    let alpha_used = matches!(
        a.selector,
        Selector::LaguerreCoeff | Selector::LaguerrePoly | Selector::FirstMv | Selector::SecondMv | Selector::ProdMat(_)
    );
    if alpha_used {
        params.insert("alpha".into(), json!(a.alpha.to_string()));
    }
    if !a.bindings.is_empty() {
        let b: Map<String, Value> = a
            .bindings
            .iter()
            .map(|(v, p)| (v.name().to_string(), json!(p.as_ref().map_or("sym".to_string(), ToString::to_string))))
            .collect();
        params.insert("bindings".into(), Value::Object(b));
    }
    let n = a.n;
    let body = match a.selector {
        Selector::LaguerreCoeff => Body::Matrix(strings(&bind(laguerre::coeff_matrix_uni(&a.alpha, n), &pairs))),
        Selector::LaguerrePoly => {
            params.insert("reversed".into(), json!(a.reversed));
            let x = v("x");
            let polys = (0..n).map(|i| {
                let p = if a.reversed {
                    laguerre::monic_laguerre_reversed(i, &a.alpha, &x)
                } else {
                    laguerre::monic_laguerre(i, &a.alpha, &x)
                };
                if pairs.is_empty() { p } else { p.substitute_pairs(&pairs) }.to_string()
            });
            Body::Polys(polys.collect())
        }
        Selector::FirstMv => {
            let m = laguerre::coeff_matrix_first_mv(&a.alpha, &EdgeWeights::symbolic(), n).map_err(|e| usage(e.to_string()))?;
            Body::Matrix(strings(&bind(m, &pairs)))
        }
        Selector::SecondMv => {
            params.insert("flat".into(), json!(a.flat));
            let m = laguerre::coeff_matrix_second_mv(&a.alpha, &VertexWeights::symbolic(), n, a.flat)
                .map_err(|e| usage(e.to_string()))?;
            Body::Matrix(strings(&bind(m, &pairs)))
        }
        Selector::ProdMat(which) => {
            let m = laguerre::prodmat(which, &a.alpha, &VertexWeights::symbolic(), &v("x")).truncate(n);
            Body::Matrix(strings(&bind(m, &pairs)))
        }
        Selector::Smj => {
            params.insert("m".into(), json!(a.m));
            params.insert("j".into(), json!(a.j));
            params.insert("triangle".into(), json!(a.triangle));
            match &a.family {
                Some(fam) => {
                    if a.m != 2 || a.j != fam.j {
                        return Err(usage(format!("family {fam} needs --m 2 --j {}", fam.j)));
                    }
                    if !pairs.is_empty() {
                        return Err(usage("bindings are not supported with --family".into()));
                    }
                    params.insert("family".into(), json!(fam.to_string()));
                    let c = srpaths::kappa_family_coeffs(fam).map_err(|e| usage(e.to_string()))?;
                    if a.triangle {
                        Body::Matrix(grid(&SrTable::new(&c).triangle(a.j, n)))
                    } else {
                        Body::Matrix(grid(&srpaths::prodmat_smj_block(&c, a.j, n).map_err(|e| usage(e.to_string()))?))
                    }
                }
                None => {
                    if a.m == 0 {
                        return Err(usage("--m must be at least 1".into()));
                    }
                    let c = SRCoeffs::symbolic(a.m);
                    let pm = srpaths::prodmat_smj(&c, a.j, n).map_err(|e| usage(e.to_string()))?;
                    let m = if a.triangle { output_matrix(&pm, n) } else { pm.truncate(n) };
                    Body::Matrix(strings(&bind(m, &pairs)))
                }
            }
        }
        Selector::QuadGeneral => {
            Body::Matrix(strings(&bind(quadtp::build_general_quad(&QuadFactorParams::symbolic(n + 1)).truncate(n), &pairs)))
        }
        Selector::QuadVariant => {
            Body::Matrix(strings(&bind(quadtp::build_variant_quad(&QuadVariantParams::symbolic(n + 1)).truncate(n), &pairs)))
        }
    };
    Ok(Generated { params, body })
}

impl Generated {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut o = self.params.clone();
                match &self.body {
                    Body::Matrix(rows) => {
                        o.insert("rows".into(), json!(rows.len()));
                        o.insert("cols".into(), json!(rows.first().map_or(0, Vec::len)));
                        o.insert("entries".into(), json!(rows));
                    }
                    Body::Polys(ps) => {
                        o.insert("polys".into(), json!(ps));
                    }
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(o)).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let lines: Vec<String> = match &self.body {
                    Body::Matrix(rows) => rows.iter().map(|r| r.iter().map(|e| csv_field(e)).collect::<Vec<_>>().join(",")).collect(),
                    Body::Polys(ps) => ps.iter().map(|p| csv_field(p)).collect(),
                };
                let mut s = lines.join("\n");
                s.push('\n');
                s
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Oracle requests for `lagtp oracle`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigraphMode {
    FirstMv,
    SecondMv,
    SecondMvFlat,
    SecondMvGeneral,
}

impl FromStr for DigraphMode {
    type Err = String;
    fn from_str(s: &str) -> Result<DigraphMode, String> {
        Ok(match s {
            "first-mv" => DigraphMode::FirstMv,
            "second-mv" => DigraphMode::SecondMv,
            "second-mv-flat" => DigraphMode::SecondMvFlat,
            "second-mv-general" => DigraphMode::SecondMvGeneral,
            _ => return Err(format!("unknown oracle mode {s:?}")),
        })
    }
}

impl DigraphMode {
    pub fn weights(self) -> OracleWeights {
        match self {
            DigraphMode::FirstMv => OracleWeights::FirstMv(EdgeWeights::symbolic()),
            DigraphMode::SecondMv => OracleWeights::SecondMv { w: VertexWeights::symbolic(), flat: false },
            DigraphMode::SecondMvFlat => OracleWeights::SecondMv { w: VertexWeights::symbolic(), flat: true },
            DigraphMode::SecondMvGeneral => OracleWeights::SecondMv { w: VertexWeights::symbolic_general(), flat: false },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(selector: &str, n: usize) -> GenArgs {
        GenArgs {
            selector: selector.parse().unwrap(),
            alpha: v("a"),
            n,
            m: 1,
            j: 0,
            family: None,
            flat: false,
            reversed: false,
            triangle: false,
            bindings: vec![],
        }
    }

    #[test]
    fn selectors_round_trip() {
        for s in ["laguerre-coeff", "laguerre-poly", "first-mv", "second-mv", "smj", "quad-general", "quad-variant", "prodmat:p-flat"] {
            assert_eq!(s.parse::<Selector>().unwrap().to_string(), s);
        }
        assert_eq!("prodmat:PcircFlat".parse::<Selector>().unwrap(), Selector::ProdMat(ProdMat::PcircFlat));
        assert_eq!("prodmat:P".parse::<Selector>().unwrap(), Selector::ProdMat(ProdMat::P));
        assert!("prodmat:Q".parse::<Selector>().is_err());
        assert!("laguerre".parse::<Selector>().is_err());
    }

    #[test]
    fn alpha_and_bindings() {
        assert_eq!(parse_alpha("sym").unwrap(), v("a"));
        assert_eq!(parse_alpha("-1").unwrap(), Poly::int(-1));
        assert!(parse_alpha("1/2").unwrap_err().contains("integer"));
        assert_eq!(parse_binding("x=2").unwrap(), (Var::new("x"), Some(Poly::int(2))));
        assert_eq!(parse_binding("x=sym").unwrap(), (Var::new("x"), None));
        assert!(parse_binding("x").is_err());
    }

    #[test]
    fn csv_and_bindings() {
        let mut a = args("laguerre-coeff", 3);
        a.bindings = vec![(Var::new("a"), Some(Poly::int(0)))];
        let g = generate(&a).unwrap();
        assert_eq!(g.render(Format::Csv), "1,0,0\n1,1,0\n2,4,1\n");
    }
}
