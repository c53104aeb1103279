use super::*;
use crate::matrix::{conjugate_by_binomial, output_matrix, production_of};
use crate::poly::{p, v, Var};

fn a() -> Poly {
    v("a")
}

#[test]
fn monic_examples() {
    assert_eq!(monic_laguerre(0, &a(), &v("x")), Poly::one());
    assert_eq!(monic_laguerre(2, &a(), &v("x")), p("(1+a)*(2+a) + 2*(2+a)*x + x^2"));
    assert_eq!(monic_laguerre(3, &a(), &v("x")), p("(1+a)*(2+a)*(3+a) + 3*(2+a)*(3+a)*x + 3*(3+a)*x^2 + x^3"));
    assert_eq!(monic_laguerre_reversed(4, &Poly::zero(), &v("x")), p("1+16*x+72*x^2+96*x^3+24*x^4"));
    let rooks = ["1", "1+x", "1+4*x+2*x^2", "1+9*x+18*x^2+6*x^3", "1+16*x+72*x^2+96*x^3+24*x^4"];
    let lah = ["1", "x", "2*x+x^2", "6*x+6*x^2+x^3", "24*x+36*x^2+12*x^3+x^4"];
    for n in 0..5 {
        assert_eq!(monic_laguerre_reversed(n, &Poly::zero(), &v("x")), p(rooks[n]));
        assert_eq!(monic_laguerre(n, &Poly::int(-1), &v("x")), p(lah[n]));
    }
}

#[test]
fn coeff_matrix_examples() {
    let m = coeff_matrix_uni(&a(), 6);
    assert_eq!(m.get(3, 1), &p("3*(2+a)*(3+a)"));
    assert!(m.is_unit_lower_triangular());
    let lah = coeff_matrix_uni(&Poly::int(-1), 6);
    assert!((1..6).all(|n| lah.get(n, 0).is_zero()));
    let rg = rowgen_polys(&m, &v("x"), false);
    for (n, r) in rg.iter().enumerate() {
        assert_eq!(r, &monic_laguerre(n, &a(), &v("x")));
    }
    assert_eq!(rowgen_polys(&lah, &v("x"), false)[3], p("6*x+6*x^2+x^3"));
    assert_eq!(rowgen_polys(&coeff_matrix_uni(&Poly::zero(), 3), &v("x"), true)[2], p("1+4*x+2*x^2"));
}

#[test]
fn first_mv_examples() {
    let zero = Poly::zero();
    assert_eq!(coeff_matrix_first_mv(&zero, &EdgeWeights::ints(1, 0, 0), 5).unwrap().get(4, 2), &Poly::int(7));
    assert_eq!(coeff_matrix_first_mv(&zero, &EdgeWeights::ints(1, 1, 0), 5).unwrap().get(3, 1), &Poly::int(7));
    let vv = v("v");
    let m = coeff_matrix_first_mv(&a(), &EdgeWeights::uniform(&vv), 7).unwrap();
    let u = coeff_matrix_uni(&a(), 7);
    for n in 0..7 {
        for k in 0..=n {
            assert_eq!(m.get(n, k), &(u.get(n, k) * &vv.pow((n - k) as u32)));
        }
    }
    let sym = coeff_matrix_first_mv(&a(), &EdgeWeights::symbolic(), 7).unwrap();
    let vs = [Var::new("vm"), Var::new("v0"), Var::new("vp")];
    for n in 0..7 {
        for k in 0..=n {
            assert!(sym.get(n, k).is_homogeneous_in(&vs, (n - k) as u32));
        }
    }
}

#[test]
fn first_mv_egf_matches_oracle() {
    let (f, g) = first_mv_egfs(&a(), 6).unwrap();
    let era = riordan_matrix(&f, &g, 7).unwrap();
    assert_eq!(era, coeff_matrix_first_mv(&a(), &EdgeWeights::symbolic(), 7).unwrap());
}

#[test]
fn second_mv_examples() {
    let w = VertexWeights::symbolic();
    let m = coeff_matrix_second_mv(&a(), &w, 4, false).unwrap();
    assert_eq!(m.get(1, 0), &p("(1+a)*yfp"));
    assert_eq!(m.get(1, 1), &p("yp"));
    assert_eq!(m.get(3, 3), &p("yp^3"));
    assert_eq!(m.get(0, 0), &Poly::one());
}

#[test]
fn second_mv_routes_agree() {
    for flat in [false, true] {
        coeff_matrix_second_mv_checked(&a(), &VertexWeights::symbolic(), 7, flat).unwrap();
        coeff_matrix_second_mv_checked(&a(), &VertexWeights::symbolic_general(), 6, flat).unwrap();
    }
}

#[test]
fn second_to_first_specializations() {
    let e = EdgeWeights::symbolic();
    let first = coeff_matrix_first_mv(&a(), &e, 7).unwrap();
    for (w, extra) in [(VertexWeights::from_edges_outgoing(&e), &e.vm), (VertexWeights::from_edges_incoming(&e), &e.vp)] {
        let second = coeff_matrix_second_mv(&a(), &w, 7, false).unwrap();
        for n in 0..7 {
            for k in 0..=n {
                assert_eq!(second.get(n, k), &(first.get(n, k) * &extra.pow(k as u32)), "({n},{k})");
            }
        }
        // the flat form divides out exactly that factor
        let w_flat = VertexWeights { z: None, ..w.clone() };
        let flat = coeff_matrix_second_mv(&a(), &w_flat, 7, true).unwrap();
        assert_eq!(flat, first);
    }
}

#[test]
fn prodmat_examples() {
    let w = VertexWeights::symbolic();
    let x = v("x");
    let pc = prodmat(ProdMat::Pcirc, &a(), &w, &x);
    assert_eq!((pc.entry(2, 1), pc.entry(2, 2), pc.entry(2, 3)), (p("2*(2+a)"), p("5+a"), Poly::one()));
    assert_eq!(prodmat(ProdMat::P, &a(), &w, &x).entry(2, 0), p("2*x"));
    assert_eq!(prodmat(ProdMat::PFlat, &a(), &w, &x).entry(1, 0), p("(1+a)*yp*yv + (yda+ydd)*x"));
    assert_eq!(prodmat(ProdMat::PcircY, &a(), &w, &x).entry(0, 1), p("yp"));
    assert!(prodmat(ProdMat::P, &a(), &w, &x).entry(5, 2).is_zero());
    for which in ProdMat::ALL {
        assert_eq!(which.name().parse::<ProdMat>().unwrap(), which);
    }
    assert!("q".parse::<ProdMat>().is_err());
}

#[test]
fn output_of_production_matrices() {
    let w = VertexWeights::symbolic();
    let x = v("x");
    assert_eq!(output_matrix(&prodmat(ProdMat::Pcirc, &a(), &w, &x), 9), coeff_matrix_uni(&a(), 9));
    let o = output_matrix(&prodmat(ProdMat::P, &a(), &w, &x), 9);
    for n in 0..9 {
        assert_eq!(o.get(n, 0), &monic_laguerre(n, &a(), &x));
    }
    assert_eq!(o, binomial_rowgen_matrix(&coeff_matrix_uni(&a(), 9), &x));
    assert_eq!(output_matrix(&prodmat(ProdMat::PcircFlat, &a(), &w, &x), 7), coeff_matrix_second_mv(&a(), &w, 7, true).unwrap());
    assert_eq!(output_matrix(&prodmat(ProdMat::PcircY, &a(), &w, &x), 7), coeff_matrix_second_mv(&a(), &w, 7, false).unwrap());
    let py = output_matrix(&prodmat(ProdMat::PY, &a(), &w, &x), 6);
    assert_eq!(py, binomial_rowgen_matrix(&coeff_matrix_second_mv(&a(), &w, 6, false).unwrap(), &x));
}

#[test]
fn conjugation_links_tridiagonal_and_quadridiagonal() {
    let w = VertexWeights::symbolic();
    let xi = v("xi");
    for (tri, quad) in [(ProdMat::Pcirc, ProdMat::P), (ProdMat::PcircFlat, ProdMat::PFlat), (ProdMat::PcircY, ProdMat::PY)] {
        let conj = conjugate_by_binomial(&prodmat(tri, &a(), &w, &xi), Var::new("xi"), 8);
        assert_eq!(conj, prodmat(quad, &a(), &w, &xi).truncate(8), "{tri}");
    }
}

#[test]
fn production_of_coefficient_matrix() {
    let w = VertexWeights::symbolic();
    let l = coeff_matrix_uni(&a(), 7);
    assert_eq!(production_of(&l).unwrap(), prodmat(ProdMat::Pcirc, &a(), &w, &Poly::zero()).truncate(6));
}

#[test]
fn factorizations() {
    let w = VertexWeights::symbolic();
    let x = v("x");
    assert!(factorization_check(Factorization::TridiagonalLU, &a(), &w, &x, 7));
    assert!(factorization_check(Factorization::QuadridiagonalLLU, &a(), &w, &x, 7));
    assert!(factorization_check(Factorization::FlatSplit, &a(), &w, &x, 7));
    // equality case: yfp = yp and yda + ydd = yp + yv kill D
    let forced = VertexWeights { yfp: v("yp"), yda: v("yp"), ydd: v("yv"), ..w };
    assert_eq!(flat_split_d(&a(), &forced, 6), Mat::zeros(6, 6));
    assert_eq!(flat_split_q(&a(), &forced, 6), prodmat(ProdMat::PcircFlat, &a(), &forced, &x).truncate(6));
}

#[test]
fn unsigned_self_inverse() {
    assert!(unsigned_self_inverse_check(&a(), 6));
    assert!(unsigned_self_inverse_check(&a(), 1));
    assert!(unsigned_self_inverse_check(&Poly::zero(), 8));
}

#[test]
fn prop32_and_direct_route() {
    assert!(prop32_check(&a(), &v("x"), 8));
    let lb = binomial_rowgen_matrix(&coeff_matrix_uni(&a(), 5), &v("x"));
    assert_eq!(lb.get(3, 1), &(Poly::int(3) * monic_laguerre(2, &p("a+1"), &v("x"))));
    assert!(direct_route_check(&v("lam"), 8));
}

#[test]
fn euler_column() {
    let l = coeff_matrix_uni(&a(), 8);
    for n in 0..8 {
        assert_eq!(l.get(n, 0), &crate::poly::rising(&p("1+a"), n as u32));
    }
}

#[test]
fn laguerre_egf() {
    // (1-t)^{-(1+a)} e^{x t/(1-t)} via log/exp, compared coefficientwise
    let ord = 8;
    let one_minus_t = &Series::one(ord) - &Series::t(ord);
    let lam = p("1+a").to_q();
    let xt = Series::t(ord).scale(&p("x").to_q());
    let inner = &one_minus_t.log().unwrap().scale(&-lam) + &(&xt * &one_minus_t.reciprocal().unwrap());
    let egf = inner.exp().unwrap();
    for n in 0..=ord {
        assert_eq!(egf.egf_coef(n).unwrap(), monic_laguerre(n, &a(), &v("x")));
    }
}

#[test]
fn cycle_and_path_egfs() {
    assert_eq!(zeng_egf_mismatch(6).unwrap(), None);
}
