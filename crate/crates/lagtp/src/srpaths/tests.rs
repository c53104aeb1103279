use super::*;
use crate::laguerre::coeff_matrix_uni;
use crate::matrix::output_matrix;
use crate::poly::{p, rising, v};
use proptest::prelude::*;

fn al(i: usize) -> Poly {
    Poly::var(alpha_var(i))
}

#[test]
fn sr_poly_examples() {
    let s1 = SRCoeffs::symbolic(1);
    for n in 1..6 {
        let want: Poly = (1..2 * n).map(al).sum();
        assert_eq!(sr_poly(&s1, 0, n, n - 1), want);
    }
    for m in 1..4 {
        let s = SRCoeffs::symbolic(m);
        for j in 0..=m + 1 {
            assert!((0..5).all(|n| sr_poly(&s, j, n, n).is_one()));
        }
    }
    assert_eq!(sr_poly(&SRCoeffs::symbolic(2), 0, 1, 0), al(2));
}

#[test]
fn oracle_examples() {
    let s1 = SRCoeffs::symbolic(1);
    assert_eq!(sr_path_oracle(&s1, 0, 2, 0).unwrap(), p("al1^2 + al1*al2"));
    assert!(sr_path_oracle(&s1, 0, 0, 0).unwrap().is_one());
    assert!(matches!(sr_path_oracle(&s1, 1, 12, 0), Err(SrError::PathTooLong { len: 25, cap: 24 })));
    for m in 1..4 {
        let s = SRCoeffs::symbolic(m);
        for n in 0..4 {
            let full = sr_path_oracle(&s, 0, n + 1, 0).unwrap();
            assert_eq!(sr_path_oracle(&s, m, n, 0).unwrap(), full.div_exact(&al(m)).unwrap());
        }
    }
}

#[test]
fn recurrence_matches_oracle() {
    for m in 1..=3 {
        let s = SRCoeffs::symbolic(m);
        let mut t = SrTable::new(&s);
        for j in 0..=2 * m + 2 {
            for n in 0..=(18usize.saturating_sub(j)) / (m + 1) {
                for k in 0..=n {
                    assert_eq!(t.get(j, n, k), sr_path_oracle(&s, j, n, k).unwrap(), "m={m} j={j} n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn classical_production_matrix() {
    let s = SRCoeffs::symbolic(1);
    let pm = prodmat_smj(&s, 0, 6).unwrap().truncate(6);
    assert_eq!(pm.get(1, 1), &p("al2 + al3"));
    assert_eq!(pm.get(0, 0), &al(1));
    for n in 1..6 {
        assert_eq!(pm.get(n, n), &(&al(2 * n) + &al(2 * n + 1)));
        assert_eq!(pm.get(n, n - 1), &(&al(2 * n - 1) * &al(2 * n)));
        assert!(pm.get(n - 1, n).is_one());
    }
}

#[test]
fn classical_recurrences() {
    // both triangles from the path oracle, so the recurrences are not circular
    let s = SRCoeffs::symbolic(1);
    let sp = |j: usize, n: usize, k: isize| -> Poly {
        if k < 0 {
            Poly::zero()
        } else {
            sr_path_oracle(&s, j, n, k as usize).unwrap()
        }
    };
    for n in 0..6 {
        for l in 0..=n as isize {
            let lu = l as usize;
            assert_eq!(sp(1, n, l), &sp(0, n, l) + &(&al(2 * lu + 2) * &sp(0, n, l + 1)));
            assert_eq!(sp(0, n + 1, l), &sp(1, n, l - 1) + &(&al(2 * lu + 1) * &sp(1, n, l)));
        }
        if n >= 1 {
            assert_eq!(sp(1, n, n as isize - 1), (1..=2 * n).map(al).sum::<Poly>());
        }
    }
}

#[test]
fn production_matrix_examples() {
    let s2 = SRCoeffs::symbolic(2);
    let pm = prodmat_smj(&s2, 0, 4).unwrap();
    assert_eq!(pm.entry(2, 0), p("al2*al4*al6"));
    for j in 0..2 {
        assert!(j_shift_check(&s2, j, 7).unwrap());
    }
    assert!(j_shift_check(&SRCoeffs::symbolic(3), 2, 6).unwrap());
    assert!(matches!(prodmat_smj(&s2, 3, 4), Err(SrError::BadType { j: 3, m: 2 })));
}

#[test]
fn m2_explicit_formulas() {
    let s2 = SRCoeffs::symbolic(2);
    for j in 0..=2 {
        let b = prodmat_smj_block(&s2, j, 8).unwrap();
        for (n, row) in b.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                assert_eq!(e, &prodmat_m2_explicit(&s2, j, n, k), "j={j} ({n},{k})");
            }
        }
    }
}

#[test]
fn output_of_production_is_triangle() {
    for m in 1..=2 {
        let s = SRCoeffs::symbolic(m);
        for j in 0..=m {
            let pm = prodmat_smj(&s, j, 6).unwrap();
            assert_eq!(output_matrix(&pm, 6), sr_triangle(&s, j, 6), "m={m} j={j}");
        }
    }
}

#[test]
fn deltas_shift() {
    let s2 = SRCoeffs::symbolic(2);
    for j in 0..=2 {
        assert!(deltas_check(&s2, j, 1, 5));
    }
    assert!(deltas_check(&SRCoeffs::symbolic(1), 0, 2, 4));
}

#[test]
fn tail_series() {
    let lam = v("lam");
    let euler = SRCoeffs::new(1, move |i| if i % 2 == 1 { &lam + &Poly::int((i as i64 - 1) / 2) } else { Poly::int(i as i64 / 2) });
    let f = sfrac_tail_series(&euler, 0, 6).unwrap();
    for n in 0..=6 {
        assert_eq!(f.coef(n), &rising(&v("lam"), n as u32).to_q());
    }
    let zero = SRCoeffs::new(2, |_| Poly::zero());
    assert_eq!(sfrac_tail_series(&zero, 2, 5).unwrap(), Series::one(5));
    // the tail product generates the first column
    for m in 1..=2 {
        let s = SRCoeffs::symbolic(m);
        for j in 0..=m + 1 {
            let f = sfrac_tail_series(&s, j, 4).unwrap();
            for n in 0..=4 {
                assert_eq!(f.coef(n), &sr_poly(&s, j, n, 0).to_q());
            }
        }
    }
}

#[test]
fn specialization_identities() {
    for ell in 0..=2 {
        for n in 0..=5 {
            assert!(smm_ell_check(2, ell, n).unwrap(), "l={ell} n={n}");
        }
    }
    for j in 0..=2 {
        assert!(alternate_genfn_check(2, j, 4).unwrap());
    }
    assert!(alternate_genfn_check(1, 1, 4).unwrap());
}

#[test]
fn laguerre_coefficients_as_s_matrix() {
    let a = v("a");
    let aa = a.clone();
    let s = SRCoeffs::new(1, move |i| {
        let k = (i as i64 + 1) / 2;
        if i % 2 == 1 { &Poly::int(k) + &aa } else { Poly::int(k) }
    });
    assert_eq!(sr_triangle(&s, 0, 8), coeff_matrix_uni(&a, 8));
}

fn seq(fam: &KappaFamily, n: usize) -> Vec<Frac> {
    let c = kappa_family_coeffs(fam).unwrap();
    (2..2 + n).map(|i| c.alpha(i)).collect()
}

fn ints(xs: &[i64]) -> Vec<Frac> {
    xs.iter().map(|&i| if i < 0 { Frac::from(v("x")) } else { Frac::int(i) }).collect()
}

#[test]
fn kappa_family_examples() {
    // -1 stands for x
    let k1 = KappaFamily::new(0, -1, Frac::one());
    assert_eq!(seq(&k1, 9), ints(&[-1, 1, 1, -1, 2, 2, -1, 3, 3]));
    let k0 = KappaFamily::new(0, -1, Frac::zero());
    assert_eq!(seq(&k0, 6), ints(&[-1, 0, 2, -1, 1, 3]));
    let j1a0 = "j1a0".parse::<KappaFamily>().unwrap();
    assert_eq!(seq(&j1a0, 6), ints(&[-1, 1, 1, -1, 2, 2]));
    assert_eq!(seq(&"j2a0".parse().unwrap(), 4), ints(&[0, -1, 1, 1]));
    assert_eq!(seq(&KappaFamily::new(2, -1, Frac::one()), 5), ints(&[0, 0, -1, 1, 1]));
    let half = KappaFamily::new(2, 1, Frac::ratio(1, 2));
    assert_eq!(c_n(&half.kappa, 3), Frac::ratio(3, 4));
    assert_eq!(seq(&half, 3)[1], Frac::ratio(1, 2));
    for (j, a) in [(0, 0), (0, 1), (1, 1), (3, -1), (2, 2)] {
        let bad = KappaFamily::new(j, a, Frac::one());
        assert!(matches!(kappa_family_coeffs(&bad), Err(SrError::Inadmissible { .. })));
    }
    assert!("j0a0".parse::<KappaFamily>().is_err());
    assert_eq!(KappaFamily::symbolic(2, 1).to_string(), "j2a1:kappa");
}

#[test]
fn table_cells() {
    let j1a0 = KappaFamily::from_cell("j1a0", Frac::one()).unwrap();
    assert!(verify_table1(&j1a0, 7).unwrap());
    let b = prodmat_smj_block(&kappa_family_coeffs(&j1a0).unwrap(), 1, 3).unwrap();
    assert_eq!(b[1][1], Frac::from(p("3 + x")));
    for (id, ..) in CELLS {
        let fam = KappaFamily::from_cell(id, Frac::from(v("kappa"))).unwrap();
        assert!(verify_table1(&fam, 6).unwrap(), "{id}");
        for k in [Frac::zero(), Frac::one(), Frac::ratio(1, 3)] {
            assert!(verify_table1(&KappaFamily::from_cell(id, k).unwrap(), 5).unwrap(), "{id}");
        }
    }
    assert!(verify_table1(&KappaFamily::new(2, 1, Frac::ratio(1, 2)), 6).unwrap());
    // a cell's weights do not fit the neighbouring alpha
    let wrong = KappaFamily::new(1, 0, Frac::one());
    let c = kappa_family_coeffs(&wrong).unwrap();
    let got = prodmat_smj_block(&c, 1, 4).unwrap();
    let want = prodmat(ProdMat::P, &Poly::int(1), &VertexWeights::symbolic(), &v("x")).truncate(4);
    assert!(got.iter().enumerate().any(|(i, r)| r.iter().enumerate().any(|(k, e)| *e != Frac::from(want.get(i, k).clone()))));
}

#[test]
fn type_above_m_breaks_hankel_positivity() {
    for m in 1..=2 {
        let (_, w) = hankel_failure_witness(m, 3).expect("a negative 2x2 minor");
        assert!(!w.minor.is_coeffwise_nonneg());
        assert_eq!(w.rows.len(), 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn integer_weights(m in 1usize..=3, j in 0usize..=3, ws in prop::collection::vec(0i64..4, 24)) {
        let ws = std::sync::Arc::new(ws);
        let c = SRCoeffs::new(m, move |i| Poly::int(ws[i % ws.len()]));
        let mut t = SrTable::new(&c);
        for n in 0..=(14 - j) / (m + 1) {
            for k in 0..=n {
                prop_assert_eq!(t.get(j, n, k), sr_path_oracle(&c, j, n, k).unwrap());
            }
        }
        let jj = j.min(m);
        prop_assert_eq!(output_matrix(&prodmat_smj(&c, jj, 5).unwrap(), 5), sr_triangle(&c, jj, 5));
    }
}
