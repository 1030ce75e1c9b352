use hopfforge::catalog::{catalog_get, catalog_list, family_get, GroupTable};
use hopfforge::invariants::{dual_grouplike_count, fingerprint, grouplike_count, orbit_dimension};

#[test]
fn every_entry_is_a_hopf_algebra() {
    for e in catalog_list() {
        let h = catalog_get(e.id).unwrap();
        let r = h.verify();
        assert!(r.passed(), "{}: {:?}", e.id, r.failures);
        assert!(h.antipode().is_some(), "{}", e.id);
    }
}

#[test]
fn stored_antipode_is_the_solved_one() {
    for e in catalog_list() {
        let h = catalog_get(e.id).unwrap();
        let solved = h.without_antipode().compute_antipode().unwrap();
        assert_eq!(Some(&solved), h.antipode(), "{}", e.id);
    }
}

#[test]
fn group_algebra_character_counts() {
    let groups = [
        ("KZ_6", GroupTable::cyclic(6)),
        ("KZ2xZ4", GroupTable::abelian(&[2, 4])),
        ("KS_3", GroupTable::dihedral(3)),
        ("KD_4", GroupTable::dihedral(4)),
        ("KD_5", GroupTable::dihedral(5)),
        ("KD_6", GroupTable::dihedral(6)),
        ("KQ_8", GroupTable::quaternion()),
        ("KA_4", GroupTable::alternating4()),
    ];
    for (id, g) in groups {
        let h = catalog_get(id).unwrap();
        assert_eq!(grouplike_count(&h), g.order(), "{id}");
        assert_eq!(dual_grouplike_count(&h), g.abelianization_order(), "{id}");
    }
}

#[test]
fn family_entries_verify_symbolically() {
    for id in ["H_t", "A_t", "A_t_dual"] {
        let f = family_get(id).unwrap();
        let r = f.verify();
        assert!(r.passed(), "{id}: {:?}", r.failures);
    }
}

#[test]
fn semisimple_orbits_are_open() {
    for e in catalog_list().into_iter().filter(|e| e.semisimple && e.dim <= 8) {
        let h = catalog_get(e.id).unwrap();
        assert_eq!(orbit_dimension(&h), e.dim * e.dim, "{}", e.id);
    }
}

#[test]
fn print_fingerprints() {
    for e in catalog_list() {
        let h = catalog_get(e.id).unwrap();
        let fp = fingerprint(&h).unwrap();
        println!("{} {}", e.id, serde_json::to_string(&fp).unwrap());
    }
}

#[test]
fn shipped_fixtures_match_the_builders() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for e in catalog_list() {
        let text = std::fs::read_to_string(dir.join("catalog").join(format!("{}.json", e.id))).unwrap();
        assert_eq!(text, catalog_get(e.id).unwrap().to_json_string() + "\n", "{}", e.id);
    }
    for id in ["H_t", "A_t", "A_t_dual"] {
        let text = std::fs::read_to_string(dir.join("families").join(format!("{id}.json"))).unwrap();
        assert_eq!(text, family_get(id).unwrap().to_json_string() + "\n", "{id}");
    }
}

#[test]
fn exactly_three_entries_of_dimension_four() {
    let four: Vec<_> = catalog_list().into_iter().filter(|e| e.dim == 4).map(|e| e.id).collect();
    assert_eq!(four, ["KZ_4", "KZ2xZ2", "T_4"]);
}

#[test]
fn scaling_x_rescales_the_parameter() {
    use hopfforge::catalog::x2_family;
    use hopfforge::invariants::check_isomorphism;
    use hopfforge::linalg::Matrix;
    use hopfforge::scalars::{Conductor, CycScalar};
    let c = Conductor::new(1);
    for big_n in [4, 6] {
        for (alpha, s) in [(1, 2), (-3, 3), (2, -1)] {
            // In the basis g^i, s·g^i x the relation reads x² = s²α(…).
            let f = Matrix::from_fn(c, 2 * big_n, 2 * big_n, |i, j| match (i == j, i >= big_n) {
                (true, true) => CycScalar::from_int(c, s),
                (true, false) => CycScalar::one(c),
                _ => CycScalar::zero(c),
            });
            let h = x2_family(big_n, &CycScalar::from_int(c, alpha)).unwrap();
            let target = x2_family(big_n, &CycScalar::from_int(c, s * s * alpha)).unwrap();
            assert!(check_isomorphism(&f, &h, &target).unwrap(), "N={big_n}, α={alpha}, s={s}");
            assert_eq!(check_isomorphism(&f, &h, &h).unwrap(), s * s == 1);
        }
    }
}
