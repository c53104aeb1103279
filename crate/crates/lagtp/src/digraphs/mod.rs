//! Brute-force Laguerre digraph enumeration and permutation-statistics
//! oracles. Everything here is exponential-time and exists to cross-check
//! the closed forms.

use crate::exec::Exec;
use crate::laguerre::{EdgeWeights, VertexWeights};
use crate::matrix::Mat;
use crate::poly::{Poly, Var};
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

pub const DEFAULT_LIMIT: usize = 9;

#[derive(Debug, Error, PartialEq)]
pub enum DigraphError {
    #[error("n = {n} exceeds the oracle limit {limit} (set LAGTP_LIMIT to raise it)")]
    LimitExceeded { n: usize, limit: usize },
    #[error("not a Laguerre digraph: {0}")]
    Invalid(String),
}

/// The digraph size cap: `LAGTP_LIMIT` if set, else [`DEFAULT_LIMIT`].
pub fn limit() -> usize {
    std::env::var("LAGTP_LIMIT").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_LIMIT)
}

fn check_limit(n: usize) -> Result<(), DigraphError> {
    let limit = limit();
    if n > limit {
        Err(DigraphError::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// A digraph on `0..n` (vertex `i` stands for `i + 1`) with in- and
/// out-degrees at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreDigraph {
    succ: Vec<Option<usize>>,
}

impl LaguerreDigraph {
    pub fn new(succ: Vec<Option<usize>>) -> Result<LaguerreDigraph, DigraphError> {
        let n = succ.len();
        let mut seen = vec![false; n];
        for &s in succ.iter().flatten() {
            if s >= n {
                return Err(DigraphError::Invalid(format!("successor {s} out of range")));
            }
            if std::mem::replace(&mut seen[s], true) {
                return Err(DigraphError::Invalid(format!("vertex {s} has in-degree 2")));
            }
        }
        Ok(LaguerreDigraph { succ })
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn succ(&self) -> &[Option<usize>] {
        &self.succ
    }
}

/// Statistics of a Laguerre digraph under 0-0 boundary conditions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigraphStats {
    pub pa: u8,
    pub cyc: u8,
    pub e: u8,
    pub e_minus: u8,
    pub e_zero: u8,
    pub e_plus: u8,
    pub p: u8,
    pub v: u8,
    pub da: u8,
    pub dd: u8,
    pub fp: u8,
    pub pcyc: u8,
    pub vcyc: u8,
    pub dacyc: u8,
    pub ddcyc: u8,
    pub ppa: u8,
    pub vpa: u8,
    pub dapa: u8,
    pub ddpa: u8,
}

const NONE: u8 = u8::MAX;

fn classify_raw(succ: &[u8]) -> DigraphStats {
    let n = succ.len();
    let mut pred = [NONE; 32];
    for (i, &s) in succ.iter().enumerate() {
        if s != NONE {
            pred[s as usize] = i as u8;
        }
    }
    // vertices reachable from a path start lie on paths, the rest on cycles
    let mut on_path = [false; 32];
    let mut st = DigraphStats::default();
    for i in 0..n {
        if pred[i] == NONE {
            st.pa += 1;
            let mut j = i as u8;
            while j != NONE {
                on_path[j as usize] = true;
                j = succ[j as usize];
            }
        }
    }
    let mut seen = on_path;
    for i in 0..n {
        if !seen[i] {
            st.cyc += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = succ[j] as usize;
            }
        }
    }
    // the virtual vertex 0 sits below every real vertex
    let lab = |x: u8| if x == NONE { -1i16 } else { x as i16 };
    for i in 0..n {
        let s = succ[i];
        if s != NONE {
            st.e += 1;
            match (s as usize).cmp(&i) {
                std::cmp::Ordering::Less => st.e_minus += 1,
                std::cmp::Ordering::Equal => st.e_zero += 1,
                std::cmp::Ordering::Greater => st.e_plus += 1,
            }
        }
        let (pi, me, si) = (lab(pred[i]), i as i16, lab(s));
        let path = on_path[i];
        if pi == me {
            st.fp += 1;
        } else if pi < me && me > si {
            st.p += 1;
            if path { st.ppa += 1 } else { st.pcyc += 1 }
        } else if pi > me && me < si {
            st.v += 1;
            if path { st.vpa += 1 } else { st.vcyc += 1 }
        } else if pi < me && me < si {
            st.da += 1;
            if path { st.dapa += 1 } else { st.dacyc += 1 }
        } else {
            st.dd += 1;
            if path { st.ddpa += 1 } else { st.ddcyc += 1 }
        }
    }
    st
}

pub fn classify(g: &LaguerreDigraph) -> DigraphStats {
    let raw: Vec<u8> = g.succ.iter().map(|s| s.map_or(NONE, |x| x as u8)).collect();
    classify_raw(&raw)
}

fn dfs(i: usize, succ: &mut Vec<u8>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[u8])) {
    let n = succ.len();
    if i == n {
        f(succ);
        return;
    }
    succ[i] = NONE;
    dfs(i + 1, succ, used, f);
    for j in 0..n {
        if !used[j] {
            used[j] = true;
            succ[i] = j as u8;
            dfs(i + 1, succ, used, f);
            used[j] = false;
        }
    }
}

/// Visit all digraphs whose vertex 0 has the given successor choice.
fn visit_branch(n: usize, first: Option<usize>, f: &mut dyn FnMut(&[u8])) {
    let mut succ = vec![NONE; n];
    let mut used = vec![false; n];
    if let Some(j) = first {
        succ[0] = j as u8;
        used[j] = true;
    }
    dfs(1, &mut succ, &mut used, f);
}

fn branches(n: usize) -> Vec<Option<usize>> {
    std::iter::once(None).chain((0..n).map(Some)).collect()
}

/// All Laguerre digraphs on `n` vertices in lexicographic order of the
/// successor vector (no successor sorts first).
pub fn enumerate_digraphs(n: usize) -> Result<Vec<LaguerreDigraph>, DigraphError> {
    check_limit(n)?;
    let mut out = Vec::new();
    let mut push = |s: &[u8]| {
        out.push(LaguerreDigraph { succ: s.iter().map(|&x| (x != NONE).then_some(x as usize)).collect() });
    };
    if n == 0 {
        push(&[]);
        return Ok(out);
    }
    for b in branches(n) {
        visit_branch(n, b, &mut push);
    }
    Ok(out)
}

/// Number of digraphs with each statistics vector.
pub type Histogram = BTreeMap<DigraphStats, u64>;

fn histogram_uncached(n: usize, exec: Exec) -> Histogram {
    if n == 0 {
        return BTreeMap::from([(DigraphStats::default(), 1)]);
    }
    let parts = exec.map(&branches(n), |&b| {
        let mut h: HashMap<DigraphStats, u64> = HashMap::new();
        visit_branch(n, b, &mut |s| *h.entry(classify_raw(s)).or_insert(0) += 1);
        h
    });
    let mut out = BTreeMap::new();
    for h in parts {
        for (k, c) in h {
            *out.entry(k).or_insert(0) += c;
        }
    }
    out
}

/// Statistics histogram of `LD_n`, cached per `n`.
pub fn histogram(n: usize) -> Result<Arc<Histogram>, DigraphError> {
    histogram_with(n, Exec::default())
}

pub fn histogram_with(n: usize, exec: Exec) -> Result<Arc<Histogram>, DigraphError> {
    check_limit(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Histogram>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().expect("histogram cache poisoned").get(&n) {
        return Ok(h.clone());
    }
    let h = Arc::new(histogram_uncached(n, exec));
    cache.lock().expect("histogram cache poisoned").insert(n, h.clone());
    Ok(h)
}

/// Which weighted sum over `LD_{n,k}` to form.
#[derive(Clone, Debug)]
pub enum OracleWeights {
    /// `vm^{e-} v0^{e0} vp^{e+} (1+a)^cyc`.
    FirstMv(EdgeWeights),
    /// Vertex weights with `(1+a)^cyc`; `flat` removes `zp^k`.
    SecondMv { w: VertexWeights, flat: bool },
}

fn stat_weight(st: &DigraphStats, w: &OracleWeights, lam: &Poly) -> Poly {
    let pw = |x: &Poly, e: u8| x.pow(e as u32);
    let body = match w {
        OracleWeights::FirstMv(e) => pw(&e.vm, st.e_minus) * pw(&e.v0, st.e_zero) * pw(&e.vp, st.e_plus),
        OracleWeights::SecondMv { w, flat } => {
            let z = w.path();
            // every path has at least one peak, so the flat exponent is >= 0
            let zp_exp = if *flat { st.ppa - st.pa } else { st.ppa };
            pw(&w.yp, st.pcyc)
                * pw(&w.yv, st.vcyc)
                * pw(&w.yda, st.dacyc)
                * pw(&w.ydd, st.ddcyc)
                * pw(&w.yfp, st.fp)
                * pw(&z.zp, zp_exp)
                * pw(&z.zv, st.vpa)
                * pw(&z.zda, st.dapa)
                * pw(&z.zdd, st.ddpa)
        }
    };
    body * pw(lam, st.cyc)
}

/// `sum over G in LD_{n,k}` of the requested weight, with `1 + alpha` per cycle.
pub fn oracle_entry(n: usize, k: usize, w: &OracleWeights, alpha: &Poly) -> Result<Poly, DigraphError> {
    let lam = alpha + &Poly::one();
    let h = histogram(n)?;
    Ok(h.iter()
        .filter(|(st, _)| st.pa as usize == k)
        .map(|(st, &c)| stat_weight(st, w, &lam) * Poly::constant(BigInt::from(c)))
        .sum())
}

/// The `rows x rows` coefficient matrix from the oracle.
pub fn oracle_matrix(rows: usize, w: &OracleWeights, alpha: &Poly) -> Result<Mat, DigraphError> {
    let lam = alpha + &Poly::one();
    let mut m = Mat::zeros(rows, rows);
    for n in 0..rows {
        let h = histogram(n)?;
        let mut row = vec![Poly::zero(); rows];
        for (st, &c) in h.iter() {
            row[st.pa as usize] += &(stat_weight(st, w, &lam) * Poly::constant(BigInt::from(c)));
        }
        for (k, e) in row.into_iter().enumerate() {
            m.set(n, k, e);
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermKind {
    /// Cycle classification, weights `yp yv yda ydd yfp` and `lam` per cycle.
    Cyclic,
    /// Word classification with `sigma_0 = sigma_{n+1} = 0`, weights `zp zv zda zdd`.
    Linear00,
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("pivot exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Statistics generating polynomial over `S_n`, computed directly from
/// permutations (independently of the digraph enumeration).
pub fn permutation_oracle(n: usize, kind: PermKind) -> Result<Poly, DigraphError> {
    check_limit(n)?;
    if n == 0 {
        return Ok(match kind {
            PermKind::Cyclic => Poly::one(),
            PermKind::Linear00 => Poly::zero(),
        });
    }
    let names: [&str; 6] = match kind {
        PermKind::Cyclic => ["yp", "yv", "yda", "ydd", "yfp", "lam"],
        PermKind::Linear00 => ["zp", "zv", "zda", "zdd", "", ""],
    };
    let mut counts: HashMap<[u32; 6], u64> = HashMap::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        let mut e = [0u32; 6];
        match kind {
            PermKind::Cyclic => {
                // values are 1-based; sigma(i) = perm[i-1]
                let sigma = |i: usize| perm[i - 1];
                let mut inv = vec![0; n + 1];
                for i in 1..=n {
                    inv[sigma(i)] = i;
                }
                for i in 1..=n {
                    let (pr, s) = (inv[i], sigma(i));
                    let slot = if pr == i {
                        4
                    } else if pr < i && i > s {
                        0
                    } else if pr > i && i < s {
                        1
                    } else if pr < i && i < s {
                        2
                    } else {
                        3
                    };
                    e[slot] += 1;
                }
                let mut seen = vec![false; n + 1];
                for i in 1..=n {
                    if !seen[i] {
                        e[5] += 1;
                        let mut j = i;
                        while !seen[j] {
                            seen[j] = true;
                            j = sigma(j);
                        }
                    }
                }
            }
            PermKind::Linear00 => {
                let w = |i: usize| if i == 0 || i == n + 1 { 0 } else { perm[i - 1] };
                for i in 1..=n {
                    let (a, b, c) = (w(i - 1), w(i), w(i + 1));
                    let slot = match (a < b, b > c) {
                        (true, true) => 0,
                        (false, false) => 1,
                        (true, false) => 2,
                        (false, true) => 3,
                    };
                    e[slot] += 1;
                }
            }
        }
        *counts.entry(e).or_insert(0) += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let vars: Vec<Option<Var>> = names.iter().map(|s| (!s.is_empty()).then(|| Var::new(s))).collect();
    Ok(counts
        .into_iter()
        .map(|(e, c)| {
            let pairs: Vec<(Var, u32)> = vars.iter().zip(e).filter_map(|(v, x)| v.map(|v| (v, x))).collect();
            Poly::term(crate::poly::Monomial::from_pairs(pairs), BigInt::from(c))
        })
        .sum())
}

/// Stirling numbers of the second kind `S(i, j)` for `i, j <= n`.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::from(0); n + 1]; n + 1];
    t[0][0] = BigInt::from(1);
    for i in 1..=n {
        for j in 1..=i {
            t[i][j] = &t[i - 1][j - 1] + BigInt::from(j) * &t[i - 1][j];
        }
    }
    t
}

/// Eulerian numbers `<n, j>` (permutations of `[n]` with `j` descents).
pub fn eulerian_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::from(0); n + 1]; n + 1];
    t[0][0] = BigInt::from(1);
    for i in 1..=n {
        for j in 0..i {
            let a = if j > 0 { BigInt::from(i - j) * &t[i - 1][j - 1] } else { BigInt::from(0) };
            t[i][j] = BigInt::from(j + 1) * &t[i - 1][j] + a;
        }
    }
    t
}
