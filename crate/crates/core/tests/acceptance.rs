//! Acceptance suite: one test per release criterion. All arithmetic is
//! exact, so every comparison is exact equality. Each test prints a
//! single verdict line (visible with `--nocapture`).

mod common;

use clifford_cpt::blade::{AlgebraSignature, IndexSet, Phase, SignedBlade};
use clifford_cpt::ext::{derive_ext_group, generating_group_from_ptc, ExtKey};
use clifford_cpt::gamma::{
    brauer_weyl_basis, fixture_basis, rep_of_blade, solve_intertwiner, unnormalized_x,
    unnormalized_y, verify_intertwiner, BladeRepTable, FixtureName,
};
use clifford_cpt::group::{
    central_product, is_isomorphic, is_subgroup_of, standard_group, verify_isomorphism, BladeGroup,
    CenterLabel, GroupTable, StandardGroup,
};
use clifford_cpt::verify::{run_all_checks, Status};
use common::XorShift;

fn sig(p: u32, q: u32) -> AlgebraSignature {
    AlgebraSignature::new(p, q).unwrap()
}

fn blade_group(p: u32, q: u32) -> BladeGroup {
    BladeGroup::generate(sig(p, q)).expect("dense table")
}

fn passed(criterion: &str) {
    println!("PASS {criterion}");
}

#[test]
fn criterion_01_group_orders() {
    for n in 1..=8 {
        for p in 0..=n {
            let g = blade_group(p, n - p);
            assert_eq!(g.order(), 1usize << (n + 1), "|G({p},{})|", n - p);
        }
    }
    passed("criterion 1: |G(p,q)| = 2^(n+1) for all p+q <= 8");
}

#[test]
fn criterion_02_order_structures() {
    let cases = [
        ((1, 3), "(11,20)"),
        ((4, 0), "(11,20)"),
        ((0, 4), "(11,20)"),
        ((3, 1), "(19,12)"),
        ((2, 2), "(19,12)"),
        ((4, 1), "(31,32)"),
    ];
    for ((p, q), expected) in cases {
        let g = blade_group(p, q);
        assert_eq!(
            g.table.order_structure().unwrap().to_string(),
            expected,
            "G({p},{q})"
        );
    }
    passed("criterion 2: order structures of the six named groups");
}

#[test]
fn criterion_03_centers() {
    assert_eq!(blade_group(1, 3).table.center().1, CenterLabel::Z2);
    assert_eq!(blade_group(4, 1).table.center().1, CenterLabel::Z4);
    passed("criterion 3: Z(G(1,3)) = Z2 and Z(G(4,1)) = Z4");
}

fn assert_iso_with_witness(a: &GroupTable, b: &GroupTable, what: &str) {
    let witness = is_isomorphic(a, b)
        .expect("within size limit")
        .unwrap_or_else(|| panic!("{what}: not isomorphic"));
    assert!(verify_isomorphism(a, b, &witness), "{what}: witness fails");
}

#[test]
fn criterion_04_central_product_isomorphisms() {
    let q4 = standard_group(StandardGroup::Q4);
    let d4 = standard_group(StandardGroup::D4);
    let d2 = standard_group(StandardGroup::D2);
    let z4 = standard_group(StandardGroup::Z4);
    let q4d4 = central_product(&q4, &d4).unwrap();
    let d4d4 = central_product(&d4, &d4).unwrap();

    assert_iso_with_witness(&blade_group(1, 3).table, &q4d4, "G(1,3) = Q4 o D4");
    assert_iso_with_witness(&blade_group(3, 1).table, &d4d4, "G(3,1) = D4 o D4");
    assert_iso_with_witness(&blade_group(2, 2).table, &d4d4, "G(2,2) = D4 o D4");
    assert_iso_with_witness(
        &blade_group(4, 1).table,
        &central_product(&q4d4, &z4).unwrap(),
        "G(4,1) = Q4 o D4 o Z4",
    );
    assert_iso_with_witness(
        &blade_group(3, 2).table,
        &central_product(&d4d4, &d2).unwrap(),
        "G(3,2) = D4 o D4 o D2",
    );
    assert_iso_with_witness(
        &blade_group(4, 0).table,
        &blade_group(0, 4).table,
        "G(4,0) = G(0,4)",
    );
    passed("criterion 4: the six isomorphisms hold with verified witnesses");
}

#[test]
fn criterion_05_even_subgroup() {
    let even = blade_group(4, 1).even_subgroup();
    assert_iso_with_witness(&even.table, &blade_group(1, 3).table, "G+(4,1) = G(1,3)");
    passed("criterion 5: even subgroup of G(4,1) is isomorphic to G(1,3)");
}

#[test]
fn criterion_06_tensor_basis_and_homomorphism() {
    let bw = brauer_weyl_basis(sig(4, 1)).unwrap();
    let sitter = fixture_basis(FixtureName::Sitter).unwrap();
    assert_eq!(bw.gammas(), sitter.gammas(), "matrix-for-matrix");

    let g41 = blade_group(4, 1);
    let reps = BladeRepTable::new(&sitter);
    for i in 0..g41.order() {
        for j in 0..g41.order() {
            let a = g41.blade_at(i);
            let b = g41.blade_at(j);
            let ab = sitter.sig.product(a, b).unwrap();
            assert_eq!(
                &reps.rep_signed(a) * &reps.rep_signed(b),
                reps.rep_signed(ab)
            );
        }
    }
    passed("criterion 6: Cl(4,1) tensor basis reproduced; homomorphism on all 64x64 pairs");
}

#[test]
fn criterion_07_fixtures_and_intertwiners() {
    // fixture relations are verified at construction; building them is
    // the check
    for name in FixtureName::ALL {
        fixture_basis(name).expect("Clifford relations hold");
    }
    let cb = fixture_basis(FixtureName::Canonical).unwrap();
    let wb = fixture_basis(FixtureName::Weyl).unwrap();
    let mb = fixture_basis(FixtureName::Majorana).unwrap();
    assert_eq!(verify_intertwiner(&unnormalized_x(), &cb, &wb), Ok(true));

    // The empirical determination of the printed transform's sign: both
    // candidates are tested, neither satisfies the similarity, and the
    // recorded resolution is the recomputed exact intertwiner. The claims
    // registry tracks this as paper-typo-suspected rather than a failure.
    let eps_results: Vec<bool> = [1i8, -1]
        .into_iter()
        .map(|e| verify_intertwiner(&unnormalized_y(e), &mb, &wb).unwrap())
        .collect();
    assert_eq!(eps_results, vec![false, false], "printed transform fails");
    let t = solve_intertwiner(&mb, &wb).expect("bases are equivalent");
    assert_eq!(verify_intertwiner(&t, &mb, &wb), Ok(true));
    let report = run_all_checks(Some("REP.y_intertwines_mb_wb"));
    assert_eq!(report.claims.len(), 1);
    assert_eq!(report.claims[0].status, Status::PaperTypoSuspected);

    passed(
        "criterion 7: fixture relations and X exact; Y fails for both signs and is \
         typo-flagged with the recomputed exact intertwiner",
    );
}

#[test]
fn criterion_08_automorphism_solver_outputs() {
    let idx = IndexSet::from_indices;
    // canonical Cl(1,3): gamma0..gamma3 are generators 1..4
    let ext13 = derive_ext_group(&fixture_basis(FixtureName::Canonical).unwrap()).unwrap();
    let expected13 = [
        (ExtKey::E, idx(&[2, 4])),     // gamma1 gamma3
        (ExtKey::Pi, idx(&[1, 2, 4])), // gamma0 gamma1 gamma3
        (ExtKey::C, idx(&[1, 3])),     // gamma0 gamma2
        (ExtKey::K, idx(&[3])),        // gamma2
        (ExtKey::S, idx(&[1])),        // gamma0
        (ExtKey::F, idx(&[2, 3, 4])),  // gamma1 gamma2 gamma3
    ];
    for (key, want) in expected13 {
        assert_eq!(ext13.blade(key).indices, want, "Cl(1,3) {key}");
    }

    let ext41 = derive_ext_group(&fixture_basis(FixtureName::Sitter).unwrap()).unwrap();
    let expected41 = [
        (ExtKey::E, idx(&[3, 4])),
        (ExtKey::C, idx(&[1, 2, 5])),
        (ExtKey::Pi, idx(&[1, 2, 3])),
        (ExtKey::K, idx(&[4, 5])),
        (ExtKey::S, idx(&[1, 2, 4])),
        (ExtKey::F, idx(&[3, 5])),
    ];
    for (key, want) in expected41 {
        assert_eq!(ext41.blade(key).indices, want, "Cl(4,1) {key}");
    }
    passed("criterion 8: solver outputs match the worked derivations in both algebras");
}

#[test]
fn criterion_09_signatures() {
    let cb = fixture_basis(FixtureName::Canonical).unwrap();
    let p = rep_of_blade(&cb, SignedBlade::from_indices(1, &[1]));
    let t = rep_of_blade(&cb, SignedBlade::from_indices(1, &[2, 4]));
    let c = &rep_of_blade(&cb, SignedBlade::from_indices(1, &[3])) * &p;
    let gen = generating_group_from_ptc(&cb, &p, &t, &c).unwrap();
    assert_eq!(gen.signature_string(), "+--+--+");
    assert_eq!(gen.rep_order_structure(), (3, 4));

    let ext13 = derive_ext_group(&cb).unwrap();
    assert_eq!(ext13.signature_string(), "--+--++");

    let ext41 = derive_ext_group(&fixture_basis(FixtureName::Sitter).unwrap()).unwrap();
    assert_eq!(ext41.signature_string(), "--+-+-+");
    passed("criterion 9: P/T/C, Cl(1,3), and Cl(4,1) signatures all exact");
}

#[test]
fn criterion_10_printed_tables() {
    let report = run_all_checks(None);
    for id in ["PTC.table", "EXT13.table", "EXT41.table"] {
        let claim = report
            .claims
            .iter()
            .find(|c| c.id == id)
            .unwrap_or_else(|| panic!("claim {id} registered"));
        assert_ne!(claim.status, Status::Mismatch, "{id}: {:?}", claim.note);
        if claim.status == Status::PaperTypoSuspected {
            let note = claim.note.as_ref().expect("flagged cells are listed");
            assert!(note.contains("recomputed"), "recomputed values attached");
        }
    }
    assert_eq!(report.exit_code(), 0, "harness exit code");
    passed("criterion 10: printed tables match except typo-flagged cells; exit code 0");
}

#[test]
fn criterion_11_subgroup_embeddings() {
    let g13 = blade_group(1, 3);
    let g41 = blade_group(4, 1);
    let full13 = derive_ext_group(&fixture_basis(FixtureName::Canonical).unwrap())
        .unwrap()
        .full_cpt_group()
        .unwrap();
    let full41 = derive_ext_group(&fixture_basis(FixtureName::Sitter).unwrap())
        .unwrap()
        .full_cpt_group()
        .unwrap();
    assert_eq!(full13.table.order(), 16);
    assert_eq!(full41.table.order(), 16);
    assert!(is_subgroup_of(&full13.table, &full13.blades, &g13));
    assert!(is_subgroup_of(&full41.table, &full41.blades, &g41));
    passed("criterion 11: both order-16 CPT groups embed in their blade groups");
}

#[test]
fn criterion_12_property_suites() {
    // exhaustive associativity for n <= 5
    for n in 1..=5u32 {
        for p in 0..=n {
            let s = sig(p, n - p);
            let size = 1u32 << n;
            for ma in 0..size {
                let a = SignedBlade::new(Phase::ONE, IndexSet(ma as u16));
                for mb in 0..size {
                    let b = SignedBlade::new(Phase::ONE, IndexSet(mb as u16));
                    let ab = s.product(a, b).unwrap();
                    for mc in 0..size {
                        let c = SignedBlade::new(Phase::ONE, IndexSet(mc as u16));
                        assert_eq!(
                            s.product(ab, c).unwrap(),
                            s.product(a, s.product(b, c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }
    // randomized associativity for n <= 8
    let mut rng = XorShift(0xacce_97ed_5eed);
    let sigs: Vec<AlgebraSignature> = (1..=8u32)
        .flat_map(|n| (0..=n).map(move |p| sig(p, n - p)))
        .collect();
    for _ in 0..10_000 {
        let s = sigs[rng.below(sigs.len() as u64) as usize];
        let size = 1u64 << s.n();
        let mut blade = || {
            SignedBlade::new(
                Phase::new(rng.below(4) as u8),
                IndexSet(rng.below(size) as u16),
            )
        };
        let (a, b, c) = (blade(), blade(), blade());
        assert_eq!(
            s.product(s.product(a, b).unwrap(), c).unwrap(),
            s.product(a, s.product(b, c).unwrap()).unwrap()
        );
    }
    // mod-8 laws against brute force everywhere (asserted internally)
    for s in &sigs {
        s.volume_square();
        s.center_type();
    }
    // involution identities on every blade of an 8-generator algebra
    for mask in 0..(1u32 << 8) {
        for k in 0..4 {
            let b = SignedBlade::new(Phase::new(k), IndexSet(mask as u16));
            assert_eq!(b.grade_involution().grade_involution(), b);
            assert_eq!(b.reversion().reversion(), b);
            assert_eq!(b.conjugation(), b.grade_involution().reversion());
            assert_eq!(
                b.pseudo_conjugation().reversion(),
                b.reversion().pseudo_conjugation()
            );
        }
    }
    // signature invariance under the canonical <-> Weyl basis change
    let ext_c = derive_ext_group(&fixture_basis(FixtureName::Canonical).unwrap()).unwrap();
    let ext_w = derive_ext_group(&fixture_basis(FixtureName::Weyl).unwrap()).unwrap();
    assert_eq!(ext_c.signature, ext_w.signature);
    passed("criterion 12: associativity, mod-8 laws, involutions, signature invariance");
}

#[test]
fn registry_covers_the_acceptance_claims() {
    let report = run_all_checks(None);
    let ids: Vec<&str> = report.claims.iter().map(|c| c.id.as_str()).collect();
    let required = [
        "G13.order",
        "G13.order_structure",
        "G40.order_structure",
        "G04.order_structure",
        "G31.order_structure",
        "G22.order_structure",
        "G41.order",
        "G41.order_structure",
        "G13.center",
        "G41.center",
        "G13.iso_Q4oD4",
        "G31.iso_D4oD4",
        "G22.iso_D4oD4",
        "G41.iso_Q4oD4oZ4",
        "G32.iso_D4oD4oD2",
        "G40.iso_G04",
        "EVEN41.iso_G13",
        "REP.bw41_matches_fixture",
        "REP.hom_64x64",
        "REP.x_intertwines_cb_wb",
        "REP.y_intertwines_mb_wb",
        "EXT13.blades",
        "EXT41.blades",
        "EXT13.signature",
        "EXT41.signature",
        "PTC.signature",
        "PTC.order_structure",
        "PTC.table",
        "EXT13.table",
        "EXT41.table",
        "EXT13.subgroup_G13",
        "EXT41.subgroup_G41",
        "ALG.mod8_laws",
    ];
    for id in required {
        assert!(ids.contains(&id), "registry is missing claim {id}");
    }
    assert_eq!(report.summary.mismatched, 0, "{}", report.render_text());
    passed("meta: claims registry covers the acceptance list; no mismatches");
}
