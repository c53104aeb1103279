//! Named invariant suites with a machine-readable report.
//!
//! Each check is a plain function of the options. The report lists checks in
//! definition order whatever order they finish in, and is byte-stable for a
//! fixed seed unless timings are requested.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::banded::{self, DiagonalPolySpec};
use crate::exec::Exec;
use crate::laguerre::{self, EdgeWeights, Factorization, ProdMat, VertexWeights};
use crate::matrix::{
    bx_conjugate_eaz_identity_check, conjugate_by_binomial, eaz_matrix, hankel, output_matrix, production_of,
    riordan_matrix, riordan_production, tp_check_sampled, tp_check_symbolic, Mat, Sampler, TpReport,
};
use crate::poly::{p, v, Poly, QPoly, Var};
use crate::quadtp::{self, QuadFactorParams, QuadVariantParams};
use crate::series::Series;
use crate::srpaths::{self, Frac, KappaFamily, SRCoeffs, SrTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Univariate,
    Multivariate,
    Riordan,
    Srpaths,
    Quadtp,
    Banded,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::All, Suite::Univariate, Suite::Multivariate, Suite::Riordan, Suite::Srpaths, Suite::Quadtp, Suite::Banded];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Univariate => "univariate",
            Suite::Multivariate => "multivariate",
            Suite::Riordan => "riordan",
            Suite::Srpaths => "srpaths",
            Suite::Quadtp => "quadtp",
            Suite::Banded => "banded",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Upper bound on every truncation size; checks never grow past their
    /// own defaults.
    pub max_n: Option<usize>,
    pub seed: u64,
    pub samples: usize,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { max_n: None, seed: 42, samples: 100, exec: Exec::default() }
    }
}

impl VerifyOptions {
    pub fn n(&self, default: usize) -> usize {
        self.max_n.map_or(default, |m| m.min(default))
    }

    fn sampler(&self) -> Sampler {
        Sampler { seed: self.seed, samples: self.samples }
    }
}

pub type CheckFn = fn(&VerifyOptions) -> Result<(), String>;

pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub run: CheckFn,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: &'static str,
    pub ok: bool,
    pub detail: Option<String>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub max_n: Option<usize>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut o = json!({"suite": c.suite.name(), "name": c.name, "ok": c.ok});
                if let Some(d) = &c.detail {
                    o["detail"] = json!(d);
                }
                if timings {
                    o["ms"] = json!(c.elapsed.as_millis() as u64);
                }
                o
            })
            .collect();
        json!({"suite": self.suite.name(), "seed": self.seed, "max_n": self.max_n, "ok": self.ok(), "checks": checks})
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn mats_equal(name: &str, got: &Mat, want: &Mat) -> Result<(), String> {
    match got.first_difference(want) {
        None => Ok(()),
        Some((i, j)) => Err(format!("{name}: entries differ at ({i},{j})")),
    }
}

fn tp_ok(what: &str, r: TpReport) -> Result<(), String> {
    ensure(r.ok, || format!("{what}: {}", r.to_json()))
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn a() -> Poly {
    v("a")
}

/// Expected monic Laguerre, rook and Lah polynomials, as printed in the
/// source: `(selector, n, polynomial)`.
pub const GOLDENS: [(&str, usize, &str); 14] = [
    ("laguerre", 0, "1"),
    ("laguerre", 1, "(1+a) + x"),
    ("laguerre", 2, "(1+a)*(2+a) + 2*(2+a)*x + x^2"),
    ("laguerre", 3, "(1+a)*(2+a)*(3+a) + 3*(2+a)*(3+a)*x + 3*(3+a)*x^2 + x^3"),
    ("rook", 0, "1"),
    ("rook", 1, "1 + x"),
    ("rook", 2, "1 + 4*x + 2*x^2"),
    ("rook", 3, "1 + 9*x + 18*x^2 + 6*x^3"),
    ("rook", 4, "1 + 16*x + 72*x^2 + 96*x^3 + 24*x^4"),
    ("lah", 0, "1"),
    ("lah", 1, "x"),
    ("lah", 2, "2*x + x^2"),
    ("lah", 3, "6*x + 6*x^2 + x^3"),
    ("lah", 4, "24*x + 36*x^2 + 12*x^3 + x^4"),
];

/// The polynomial sequences behind [`GOLDENS`]: monic unsigned Laguerre in
/// `a`, the reversed `alpha = 0` family (square-board rook polynomials) and
/// `alpha = -1` (Lah).
pub fn golden_poly(family: &str, n: usize) -> Option<Poly> {
    let x = v("x");
    match family {
        "laguerre" => Some(laguerre::monic_laguerre(n, &a(), &x)),
        "rook" => Some(laguerre::monic_laguerre_reversed(n, &Poly::zero(), &x)),
        "lah" => Some(laguerre::monic_laguerre(n, &Poly::int(-1), &x)),
        _ => None,
    }
}

fn goldens(_: &VerifyOptions) -> Result<(), String> {
    for (fam, n, want) in GOLDENS {
        ensure(golden_poly(fam, n) == Some(p(want)), || format!("{fam} {n}"))?;
    }
    Ok(())
}

fn uni_output(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(9);
    let pc = laguerre::prodmat(ProdMat::Pcirc, &a(), &VertexWeights::symbolic(), &Poly::zero());
    mats_equal("O(Pcirc)", &output_matrix(&pc, n), &laguerre::coeff_matrix_uni(&a(), n))
}

fn uni_binomial_output(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(8);
    let x = v("x");
    let pm = laguerre::prodmat(ProdMat::P, &a(), &VertexWeights::symbolic(), &x);
    let lb = laguerre::binomial_rowgen_matrix(&laguerre::coeff_matrix_uni(&a(), n), &x);
    mats_equal("O(P)", &output_matrix(&pm, n), &lb)?;
    ensure(laguerre::prop32_check(&a(), &x, n), || "binomial-Laguerre entries".into())
}

fn uni_production(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(8);
    let l = laguerre::coeff_matrix_uni(&a(), n);
    let pc = laguerre::prodmat(ProdMat::Pcirc, &a(), &VertexWeights::symbolic(), &Poly::zero());
    mats_equal("P(L)", &production_of(&l).map_err(err)?, &pc.truncate(n - 1))
}

fn uni_misc(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(8);
    ensure(laguerre::unsigned_self_inverse_check(&a(), n), || "self-inverse".into())?;
    ensure(laguerre::direct_route_check(&v("lam"), n), || "direct route".into())
}

fn laguerre_egf(o: &VerifyOptions) -> Result<(), String> {
    let ord = o.n(8);
    let one_minus_t = &Series::one(ord) - &Series::t(ord);
    let lam = p("1+a").to_q();
    let xt = Series::t(ord).scale(&v("x").to_q());
    let log = one_minus_t.log().map_err(err)?;
    let inner = &log.scale(&-lam) + &(&xt * &one_minus_t.reciprocal().map_err(err)?);
    let egf = inner.exp().map_err(err)?;
    for n in 0..=ord {
        ensure(egf.egf_coef(n).map_err(err)? == laguerre::monic_laguerre(n, &a(), &v("x")), || format!("n = {n}"))?;
    }
    Ok(())
}

/// Hankel matrix of `L_n^{(lam-1)}(x)`, `n <= 2 size - 2`.
pub fn laguerre_hankel(size: usize) -> Mat {
    let alpha = &v("lam") - &Poly::one();
    let seq: Vec<Poly> = (0..2 * size - 1).map(|n| laguerre::monic_laguerre(n, &alpha, &v("x"))).collect();
    hankel(&seq, size)
}

fn hankel_tp(o: &VerifyOptions) -> Result<(), String> {
    let h = laguerre_hankel(o.n(5));
    tp_ok("TP3", tp_check_symbolic(&h, 3))?;
    tp_ok("TP4 sampled", tp_check_sampled(&h, 4, o.sampler()))
}

fn first_mv(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(7);
    let (f, g) = laguerre::first_mv_egfs(&a(), n - 1).map_err(err)?;
    let era = riordan_matrix(&f, &g, n).map_err(err)?;
    mats_equal("first mv", &era, &laguerre::coeff_matrix_first_mv(&a(), &EdgeWeights::symbolic(), n).map_err(err)?)
}

fn second_mv_flat(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(7);
    let w = VertexWeights::symbolic();
    let pf = laguerre::prodmat(ProdMat::PcircFlat, &a(), &w, &Poly::zero());
    let riordan = laguerre::coeff_matrix_second_mv(&a(), &w, n, true).map_err(err)?;
    mats_equal("O(PcircFlat)", &output_matrix(&pf, n), &riordan)?;
    laguerre::coeff_matrix_second_mv_checked(&a(), &w, n, true).map_err(err)?;
    Ok(())
}

fn second_mv_general(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(7);
    let w = VertexWeights::symbolic();
    let py = laguerre::prodmat(ProdMat::PcircY, &a(), &w, &Poly::zero());
    mats_equal("O(PcircY)", &output_matrix(&py, n), &laguerre::coeff_matrix_second_mv(&a(), &w, n, false).map_err(err)?)?;
    for flat in [false, true] {
        laguerre::coeff_matrix_second_mv_checked(&a(), &VertexWeights::symbolic_general(), o.n(6), flat).map_err(err)?;
    }
    Ok(())
}

fn specializations(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(7);
    let e = EdgeWeights::symbolic();
    let first = laguerre::coeff_matrix_first_mv(&a(), &e, n).map_err(err)?;
    for (w, extra) in [(VertexWeights::from_edges_outgoing(&e), &e.vm), (VertexWeights::from_edges_incoming(&e), &e.vp)] {
        let second = laguerre::coeff_matrix_second_mv(&a(), &w, n, false).map_err(err)?;
        let scaled = Mat::from_fn(n, n, |i, k| first.get(i, k) * &extra.pow(k as u32));
        mats_equal("second -> first", &second, &scaled)?;
    }
    Ok(())
}

fn conjugations(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(8);
    let w = VertexWeights::symbolic();
    let xi = v("xi");
    for (tri, quad) in [(ProdMat::Pcirc, ProdMat::P), (ProdMat::PcircFlat, ProdMat::PFlat), (ProdMat::PcircY, ProdMat::PY)] {
        let conj = conjugate_by_binomial(&laguerre::prodmat(tri, &a(), &w, &xi), Var::new("xi"), n);
        mats_equal(tri.name(), &conj, &laguerre::prodmat(quad, &a(), &w, &xi).truncate(n))?;
    }
    Ok(())
}

fn factorizations(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(7);
    for f in [Factorization::TridiagonalLU, Factorization::QuadridiagonalLLU, Factorization::FlatSplit] {
        ensure(laguerre::factorization_check(f, &a(), &VertexWeights::symbolic(), &v("x"), n), || format!("{f:?}"))?;
    }
    Ok(())
}

fn quad_substitution(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(8);
    let w = VertexWeights::symbolic();
    let q = QuadFactorParams::laguerre(&w, &v("x"), &v("lam"));
    let want = laguerre::prodmat(ProdMat::PFlat, &(&v("lam") - &Poly::one()), &w, &v("x")).truncate(n);
    mats_equal("quad -> P flat", &quadtp::build_general_quad(&q).truncate(n), &want.substitute_pairs(&[(Var::new("yfp"), v("yp"))]))
}

/// The flat quadridiagonal matrix under `yfp = yp`, `yda = yp`,
/// `ydd = yv + w`.
pub fn constrained_flat_quad() -> crate::matrix::HessMatrix {
    let w = VertexWeights::five([&v("yp"), &v("yv"), &v("yp"), &(&v("yv") + &v("w")), &v("yp")]);
    quadtp::build_general_quad(&QuadFactorParams::laguerre(&w, &v("x"), &v("lam")))
}

fn quad_laguerre_tp(o: &VerifyOptions) -> Result<(), String> {
    let m = constrained_flat_quad();
    tp_ok("TP3", tp_check_symbolic(&m.truncate(o.n(6)), 3))?;
    tp_ok("TP4 sampled", tp_check_sampled(&m.truncate(o.n(7)), 4, o.sampler()))
}

fn zeng(o: &VerifyOptions) -> Result<(), String> {
    match laguerre::zeng_egf_mismatch(o.n(7)).map_err(err)? {
        None => Ok(()),
        Some(n) => Err(format!("n = {n}")),
    }
}

fn symbolic_terms(prefix: &str, len: usize) -> Vec<QPoly> {
    (0..len).map(|i| QPoly::named(&format!("{prefix}{i}"))).collect()
}

fn bx_eaz(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(6);
    let ok = bx_conjugate_eaz_identity_check(&symbolic_terms("ea", n), &symbolic_terms("ez", n), Var::new("x"), n).map_err(err)?;
    ensure(ok, || "B_x conjugation of EAZ".into())
}

fn riordan_round_trip(o: &VerifyOptions) -> Result<(), String> {
    // F = 1/(1-t)^2, G = t/(1-t): the unsigned Lah-type array at alpha = 1
    let n = o.n(7);
    let one_minus_t = &Series::one(n) - &Series::t(n);
    let inv = one_minus_t.reciprocal().map_err(err)?;
    let f = &inv * &inv;
    let g = &Series::t(n) * &inv;
    let r = riordan_matrix(&f, &g, n).map_err(err)?;
    mats_equal("Riordan", &r, &laguerre::coeff_matrix_uni(&Poly::one(), n))?;
    let (az, zz) = riordan_production(&f, &g).map_err(err)?;
    mats_equal("EAZ", &production_of(&r).map_err(err)?, &eaz_matrix(&az, &zz, n - 1).map_err(err)?)
}

fn tp_negative(_: &VerifyOptions) -> Result<(), String> {
    let r = tp_check_symbolic(&Mat::from_ints(&[&[1, 2], &[3, 1]]), 2);
    let w = r.witness.ok_or("no witness")?;
    ensure(!r.ok && w.minor == Poly::int(-5), || "expected the -5 minor".into())
}

fn sr_oracle(o: &VerifyOptions) -> Result<(), String> {
    let cap = o.n(18).max(1);
    for m in 1..=3 {
        let s = SRCoeffs::symbolic(m);
        let mut t = SrTable::new(&s);
        for j in 0..=2 * m + 2 {
            for n in 0..=cap.saturating_sub(j) / (m + 1) {
                if (m + 1) * n + j > cap {
                    continue;
                }
                for k in 0..=n {
                    let want = srpaths::sr_path_oracle(&s, j, n, k).map_err(err)?;
                    ensure(t.get(j, n, k) == want, || format!("m={m} j={j} n={n} k={k}"))?;
                }
            }
        }
    }
    Ok(())
}

fn sr_triangles(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(6);
    for m in 1..=2 {
        let s = SRCoeffs::symbolic(m);
        for j in 0..=m {
            let pm = srpaths::prodmat_smj(&s, j, n).map_err(err)?;
            mats_equal(&format!("m={m} j={j}"), &output_matrix(&pm, n), &srpaths::sr_triangle(&s, j, n))?;
        }
    }
    let s2 = SRCoeffs::symbolic(2);
    for j in 0..=2 {
        let b = srpaths::prodmat_smj_block(&s2, j, n).map_err(err)?;
        for (r, row) in b.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                ensure(*e == srpaths::prodmat_m2_explicit(&s2, j, r, k), || format!("explicit m=2 j={j} ({r},{k})"))?;
            }
        }
    }
    Ok(())
}

fn sr_shifts(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(6);
    let s2 = SRCoeffs::symbolic(2);
    for j in 0..2 {
        ensure(srpaths::j_shift_check(&s2, j, n).map_err(err)?, || format!("j -> j+1 at j={j}"))?;
    }
    for j in 0..=2 {
        ensure(srpaths::deltas_check(&s2, j, 1, n), || format!("Delta shift j={j}"))?;
    }
    Ok(())
}

fn sr_specializations(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(5);
    for ell in 0..=2 {
        for i in 0..=n {
            ensure(srpaths::smm_ell_check(2, ell, i).map_err(err)?, || format!("l={ell} n={i}"))?;
        }
    }
    for j in 0..=2 {
        ensure(srpaths::alternate_genfn_check(2, j, n.min(4)).map_err(err)?, || format!("alternate form j={j}"))?;
    }
    Ok(())
}

fn sr_laguerre(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(8);
    let s = SRCoeffs::new(1, |i| {
        let k = (i as i64 + 1) / 2;
        if i % 2 == 1 {
            &Poly::int(k) + &v("a")
        } else {
            Poly::int(k)
        }
    });
    mats_equal("S-matrix", &srpaths::sr_triangle(&s, 0, n), &laguerre::coeff_matrix_uni(&a(), n))
}

fn table1(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(6);
    for (id, ..) in srpaths::CELLS {
        let fam = KappaFamily::from_cell(id, Frac::from(v("kappa"))).map_err(err)?;
        if let Some((i, k)) = srpaths::table1_mismatch(&fam, n).map_err(err)? {
            return Err(format!("{id}: entry ({i},{k})"));
        }
    }
    let half = KappaFamily::new(2, 1, Frac::ratio(1, 2));
    ensure(srpaths::verify_table1(&half, n).map_err(err)?, || "j2a1 at kappa = 1/2".into())
}

fn sr_tp(o: &VerifyOptions) -> Result<(), String> {
    let s2 = SRCoeffs::symbolic(2);
    let mut t = SrTable::new(&s2);
    let size = o.n(6);
    let h = o.n(4);
    for j in 0..=2 {
        let pm = srpaths::prodmat_smj(&s2, j, size).map_err(err)?.truncate(size);
        tp_ok(&format!("P(2;{j})"), tp_check_symbolic(&pm, 3))?;
        let seq: Vec<Poly> = (0..2 * h - 1).map(|i| t.get(j, i, 0)).collect();
        tp_ok(&format!("Hankel j={j}"), tp_check_symbolic(&hankel(&seq, h), 3))?;
    }
    Ok(())
}

fn sr_hankel_negative(_: &VerifyOptions) -> Result<(), String> {
    for m in 1..=2 {
        let (_, w) = srpaths::hankel_failure_witness(m, 3).ok_or_else(|| format!("no failing minor for m={m}"))?;
        ensure(!w.minor.is_coeffwise_nonneg(), || "witness is nonnegative".into())?;
    }
    Ok(())
}

fn general_identities(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(7);
    let q = QuadFactorParams::symbolic(n + 1);
    mats_equal("entries", &quadtp::build_general_quad(&q).truncate(n), &quadtp::general_from_factors(&q, n))?;
    ensure(quadtp::general_difference_check(&q, n), || "P = Q + D2 L2".into())
}

fn general_tp(o: &VerifyOptions) -> Result<(), String> {
    tp_ok("TP3", tp_check_symbolic(&quadtp::build_general_quad(&QuadFactorParams::symbolic(6)).truncate(o.n(6)), 3))?;
    let m = quadtp::build_general_quad(&QuadFactorParams::symbolic(7)).truncate(o.n(7));
    tp_ok("TP4 sampled", tp_check_sampled(&m, 4, o.sampler()))
}

fn variant_identities(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(7);
    let q = QuadVariantParams::symbolic(n + 1);
    mats_equal("entries", &quadtp::build_variant_quad(&q).truncate(n), &quadtp::variant_from_factors(&q, n))?;
    ensure(quadtp::variant_commutes(&q, o.n(6)), || "L1 L2 = L2 L1".into())?;
    ensure(quadtp::variant_difference_check(&q, n), || "P = Q + L2 D2".into())?;
    let [l1, l2, u, d1, _] = quadtp::variant_factors(&q, n + 1);
    mats_equal("Q", &quadtp::variant_quad_q(&q).truncate(n), &l1.mul(&l2.mul(&u).add(&d1)).square(n))
}

fn variant_tp(o: &VerifyOptions) -> Result<(), String> {
    tp_ok("TP3", tp_check_symbolic(&quadtp::build_variant_quad(&QuadVariantParams::symbolic(6)).truncate(o.n(6)), 3))?;
    let m = quadtp::build_variant_quad(&QuadVariantParams::symbolic(7)).truncate(o.n(7));
    tp_ok("TP4 sampled", tp_check_sampled(&m, 4, o.sampler()))
}

/// The tridiagonal Laguerre matrix as a diagonal spec.
pub fn pcirc_spec() -> DiagonalPolySpec {
    DiagonalPolySpec::new(2, vec![p("1"), p("2*n + 1 + a"), p("n + a")])
}

fn banded_laguerre(o: &VerifyOptions) -> Result<(), String> {
    let s = pcirc_spec();
    ensure(banded::check_banded_criterion(&s), || "criterion".into())?;
    let n = o.n(8);
    let want = laguerre::prodmat(ProdMat::P, &a(), &VertexWeights::symbolic(), &v("xi")).truncate(n);
    mats_equal("conjugate", &banded::conjugated(&s, n), &want)
}

fn banded_random(o: &VerifyOptions) -> Result<(), String> {
    let n = o.n(9);
    for i in 0..20 {
        let s = banded::random_spec(o.seed.wrapping_add(i));
        let crit = banded::check_banded_criterion(&s);
        ensure(crit == (banded::conjugate_and_measure_band(&s, n) <= s.r), || format!("measured band, spec {i}"))?;
        ensure(crit == banded::subdiagonal_vanishes(&s, s.r + 1, n), || format!("subdiagonal r+1, spec {i}"))?;
    }
    Ok(())
}

macro_rules! checks {
    ($($suite:ident $name:literal $f:ident),* $(,)?) => {
        &[$(Check { suite: Suite::$suite, name: $name, run: $f }),*]
    };
}

/// Every check, in report order.
pub const CHECKS: &[Check] = checks![
    Univariate "goldens" goldens,
    Univariate "tridiagonal-output" uni_output,
    Univariate "quadridiagonal-output" uni_binomial_output,
    Univariate "production-of-coefficients" uni_production,
    Univariate "self-inverse-and-direct-route" uni_misc,
    Univariate "laguerre-egf" laguerre_egf,
    Univariate "hankel-tp" hankel_tp,
    Multivariate "first-mv-riordan" first_mv,
    Multivariate "second-mv-flat" second_mv_flat,
    Multivariate "second-mv-general" second_mv_general,
    Multivariate "specializations" specializations,
    Multivariate "conjugations" conjugations,
    Multivariate "factorizations" factorizations,
    Multivariate "quad-substitution" quad_substitution,
    Multivariate "quad-laguerre-tp" quad_laguerre_tp,
    Multivariate "cycle-path-egfs" zeng,
    Riordan "bx-eaz" bx_eaz,
    Riordan "riordan-round-trip" riordan_round_trip,
    Riordan "tp-negative-control" tp_negative,
    Srpaths "recurrence-vs-paths" sr_oracle,
    Srpaths "output-triangles" sr_triangles,
    Srpaths "index-shifts" sr_shifts,
    Srpaths "specializations" sr_specializations,
    Srpaths "laguerre-s-matrix" sr_laguerre,
    Srpaths "table-cells" table1,
    Srpaths "tp" sr_tp,
    Srpaths "hankel-above-m-fails" sr_hankel_negative,
    Quadtp "general-identities" general_identities,
    Quadtp "general-tp" general_tp,
    Quadtp "variant-identities" variant_identities,
    Quadtp "variant-tp" variant_tp,
    Banded "laguerre-criterion" banded_laguerre,
    Banded "random-specs" banded_random,
];

pub fn checks_for(suite: Suite) -> Vec<&'static Check> {
    CHECKS.iter().filter(|c| suite == Suite::All || c.suite == suite).collect()
}

pub fn find(suite: Suite, name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.suite == suite && c.name == name)
}

pub fn run_check(c: &Check, opts: &VerifyOptions) -> CheckResult {
    let t = Instant::now();
    let r = (c.run)(opts);
    CheckResult { suite: c.suite, name: c.name, ok: r.is_ok(), detail: r.err(), elapsed: t.elapsed() }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Report {
    let checks = checks_for(suite);
    let results = opts.exec.map(&checks, |c| run_check(c, opts));
    Report { suite, seed: opts.seed, max_n: opts.max_n, checks: results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse_and_partition() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        let total: usize = Suite::ALL[1..].iter().map(|&s| checks_for(s).len()).sum();
        assert_eq!(total, CHECKS.len());
        let mut names: Vec<_> = CHECKS.iter().map(|c| (c.suite.name(), c.name)).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
    }

    #[test]
    fn small_suites_pass_deterministically() {
        let opts = VerifyOptions { max_n: Some(5), ..Default::default() };
        for s in [Suite::Srpaths, Suite::Banded, Suite::Riordan] {
            let r = run_suite(s, &opts);
            assert!(r.ok(), "{}", r.to_json(false));
            assert_eq!(r.to_json(false), run_suite(s, &opts).to_json(false));
        }
    }

    #[test]
    fn max_n_only_shrinks() {
        let o = VerifyOptions { max_n: Some(5), ..Default::default() };
        assert_eq!((o.n(9), o.n(3)), (5, 3));
        assert_eq!(VerifyOptions::default().n(9), 9);
    }
}
