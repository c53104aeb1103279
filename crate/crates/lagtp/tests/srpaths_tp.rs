use lagtp::matrix::{hankel, tp_check_symbolic, Mat};
use lagtp::poly::Poly;
use lagtp::srpaths::{hankel_failure_witness, prodmat_smj, SRCoeffs, SrTable};

#[test]
fn production_matrices_tp3() {
    let s = SRCoeffs::symbolic(2);
    for j in 0..=2 {
        let m = prodmat_smj(&s, j, 6).unwrap().truncate(6);
        let r = tp_check_symbolic(&m, 3);
        assert!(r.ok, "j={j}: {:?}", r.witness);
    }
}

#[test]
fn modified_sr_hankel_tp3() {
    let s = SRCoeffs::symbolic(2);
    let mut t = SrTable::new(&s);
    for j in 0..=2 {
        let seq: Vec<Poly> = (0..7).map(|n| t.get(j, n, 0)).collect();
        let h: Mat = hankel(&seq, 4);
        let r = tp_check_symbolic(&h, 3);
        assert!(r.ok, "j={j}: {:?}", r.witness);
    }
}

#[test]
fn hankel_witness_above_m() {
    for m in 1..=2 {
        let (size, w) = hankel_failure_witness(m, 3).unwrap();
        println!("m={m} size={size} rows={:?} cols={:?} minor={}", w.rows, w.cols, w.minor);
        assert!(!w.minor.is_coeffwise_nonneg());
    }
}
