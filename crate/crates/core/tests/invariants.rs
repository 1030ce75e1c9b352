use hopfforge::catalog::{catalog_get, taft, GroupTable};
use hopfforge::invariants::{
    block_count, check_isomorphism, dual_grouplike_count, fingerprint, grouplike_count, orbit_dimension, Algebra,
};
use hopfforge::linalg::Matrix;
use hopfforge::scalars::{Conductor, CycScalar, Rational};

fn involutions_plus_one(g: &GroupTable) -> i64 {
    (0..g.order()).filter(|&a| g.inverse(a) == a).count() as i64
}

#[test]
fn trace_of_antipode_counts_self_inverse_elements() {
    for (id, g) in [
        ("KZ_4", GroupTable::cyclic(4)),
        ("KZ2xZ2", GroupTable::abelian(&[2, 2])),
        ("KD_4", GroupTable::dihedral(4)),
        ("KQ_8", GroupTable::quaternion()),
        ("KA_4", GroupTable::alternating4()),
    ] {
        let fp = fingerprint(&catalog_get(id).unwrap()).unwrap();
        assert_eq!(fp.trace_s, CycScalar::from_int(Conductor::new(1), involutions_plus_one(&g)), "{id}");
    }
    // D_4 and the quaternion group are told apart by this count (6 vs 2).
    let d4 = fingerprint(&catalog_get("KD_4").unwrap()).unwrap();
    let q8 = fingerprint(&catalog_get("KQ_8").unwrap()).unwrap();
    assert!(d4.differences(&q8).contains(&"trace_s"));
}

#[test]
fn taft_counts() {
    let t = taft(2).unwrap();
    // Grouplikes are 1 and y; characters send y to ±1 and x to 0.
    assert_eq!(grouplike_count(&t), 2);
    assert_eq!(dual_grouplike_count(&t), 2);
    assert_eq!(grouplike_count(&t.dual().unwrap()), dual_grouplike_count(&t));
    // x·y = −y·x and x² = 0 leave only scalars central, so there is one block.
    assert_eq!(Algebra::of_mul(&t).center().len(), 1);
    assert_eq!(block_count(&t), 1);
    assert_eq!(orbit_dimension(&t), 15);
}

#[test]
fn group_algebra_blocks_are_conjugacy_classes() {
    for (id, classes) in [("KS_3", 3), ("KD_4", 5), ("KQ_8", 5), ("KD_5", 4), ("KA_4", 4), ("KZ_7", 7)] {
        let h = catalog_get(id).unwrap();
        assert_eq!(block_count(&h), classes, "{id}");
    }
    let d3_dual = catalog_get("KS_3_dual").unwrap();
    assert_eq!(grouplike_count(&d3_dual), 2);
    assert_eq!(orbit_dimension(&catalog_get("KD_4_dual").unwrap()), 64);
}

#[test]
fn two_element_group_is_self_dual() {
    let h = catalog_get("KZ_2").unwrap();
    let d = h.dual().unwrap();
    let c = h.conductor();
    let half = CycScalar::from_rational(c, Rational::new(1, 2));
    // Dual basis (unit, δ_g) corresponds to (1, (1 − g)/2).
    let f = Matrix::from_rows(c, vec![vec![CycScalar::one(c), half.clone()], vec![CycScalar::zero(c), -&half]]);
    assert!(check_isomorphism(&f, &h, &d).unwrap());
    let id = Matrix::<CycScalar>::identity(c, 2);
    assert!(!check_isomorphism(&id, &h, &d).unwrap());
    let z4 = catalog_get("KZ_4").unwrap();
    let t4 = taft(2).unwrap();
    let id4 = Matrix::<CycScalar>::identity(t4.conductor(), 4);
    assert!(!check_isomorphism(&id4, &t4, &z4.map_scalars(|v| v.clone())).unwrap_or(false));
}
