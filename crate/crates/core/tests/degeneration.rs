use hopfforge::catalog::{catalog_get, taft, x2_family};
use hopfforge::degeneration::{
    check_comul_condition, check_mul_condition, degenerate_closed_form, degenerate_pair, degenerate_symbolic,
    fitting_decompose, graded_degeneration, graded_symbolic, GradingVector,
};
use hopfforge::linalg::Matrix;
use hopfforge::scalars::{Conductor, CycScalar};
use hopfforge::{HopfData, LinearMap};

fn c1() -> Conductor {
    Conductor::new(1)
}

fn x2(big_n: usize, alpha: i64) -> HopfData {
    x2_family(big_n, &CycScalar::from_int(c1(), alpha)).unwrap()
}

fn group_span(big_n: usize) -> LinearMap {
    Matrix::from_fn(c1(), 2 * big_n, 2 * big_n, |i, j| {
        if i == j && i < big_n {
            CycScalar::one(c1())
        } else {
            CycScalar::zero(c1())
        }
    })
}

#[test]
fn identity_direction_is_trivial() {
    for id in ["KS_3", "T_9", "Adprime_C4"] {
        let h = catalog_get(id).unwrap();
        let phi = Matrix::<CycScalar>::identity(h.conductor(), h.dim());
        let fit = fitting_decompose(&phi);
        assert!(check_mul_condition(&h, &fit).holds && check_comul_condition(&h, &fit).holds);
        assert_eq!(degenerate_closed_form(&h, &phi).unwrap().limit, Some(h.clone()), "{id}");
        assert_eq!(degenerate_symbolic(&h, &phi).unwrap().limit, Some(h), "{id}");
    }
}

#[test]
fn dimension_twelve_group_span_projector() {
    let r = degenerate_closed_form(&x2(6, 1), &group_span(6)).unwrap();
    assert!(r.mul_condition.holds && r.comul_condition.holds);
    assert_eq!(r.limit, Some(x2(6, 0)));
    assert!(r.agrees_with(&degenerate_symbolic(&x2(6, 1), &group_span(6)).unwrap()));
}

#[test]
fn pair_form_reduces_to_phi() {
    // v + t·w = (P + t)·w; w fixes the unit, so no renormalization happens.
    let h = x2(4, 1);
    let w = Matrix::from_fn(c1(), 8, 8, |i, j| {
        let v = i64::from(i == j) * if i == 0 { 1 } else { 2 } + i64::from(j == i + 4);
        CycScalar::from_int(c1(), v)
    });
    let v = group_span(4).mul(&w);
    let r = degenerate_pair(&h, &v, &w).unwrap();
    let limit = r.limit.expect("degeneration exists");
    assert!(limit.verify().passed());
    assert_eq!(limit, x2(4, 0).transport(&w).unwrap());
}

#[test]
fn graded_examples() {
    let h = x2(4, 1);
    let zero = GradingVector::new(vec![0; 8]).unwrap();
    assert_eq!(graded_degeneration(&h, &zero).unwrap().limit, Some(h.clone()));
    let t = taft(3).unwrap();
    // basis y^i x^j at index 3j + i, graded by the power of x
    let g = GradingVector::new((0..9).map(|k| k / 3).collect()).unwrap();
    let r = graded_degeneration(&t, &g).unwrap();
    assert_eq!(r.limit.as_ref(), Some(&t));
    assert!(r.agrees_with(&graded_symbolic(&t, &g).unwrap()));
}

#[test]
fn zero_map_on_group_algebra_fails_on_comultiplication() {
    let h = catalog_get("KZ_3").unwrap();
    let zero = Matrix::<CycScalar>::zeros(c1(), 3, 3);
    let closed = degenerate_closed_form(&h, &zero).unwrap();
    let sym = degenerate_symbolic(&h, &zero).unwrap();
    assert!(!closed.comul_condition.holds && closed.limit.is_none());
    assert!(sym.poles.unwrap().comul);
}
