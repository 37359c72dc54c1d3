//! Gamma-basis suite: tensor-product bases across signatures, the
//! homomorphism oracle, intertwiners, and the wire format.

use clifford_cpt::blade::{AlgebraSignature, IndexSet, Phase, SignedBlade};
use clifford_cpt::gamma::{
    brauer_weyl_basis, fixture_basis, rep_of_blade, schur_scalar, solve_intertwiner,
    unnormalized_x, unnormalized_y, verify_intertwiner, BladeRepTable, FixtureName, GammaBasis,
    GammaBasisJson,
};
use clifford_cpt::matrix::{GaussianMatrix, MatrixError, G_I, G_ONE};

fn sig(p: u32, q: u32) -> AlgebraSignature {
    AlgebraSignature::new(p, q).unwrap()
}

#[test]
fn tensor_bases_satisfy_relations_for_all_signatures_up_to_n6() {
    for n in 2..=6 {
        for p in 0..=n {
            let basis = brauer_weyl_basis(sig(p, n - p)).unwrap();
            assert_eq!(basis.dim(), 1 << (n / 2));
        }
    }
}

#[test]
fn tensor_generators_are_hermitian_before_metric_scaling() {
    for n in 2..=6 {
        for p in 0..=n {
            let s = sig(p, n - p);
            let basis = brauer_weyl_basis(s).unwrap();
            for i in 1..=n {
                let g = basis.gamma(i);
                if i <= p {
                    assert_eq!(g.conj_transpose(), g.clone(), "({p},{}) gamma{i}", n - p);
                } else {
                    // i * hermitian: the adjoint negates it
                    assert_eq!(g.conj_transpose(), g.scale(-G_ONE));
                }
            }
        }
    }
}

#[test]
fn odd_volume_elements_are_schur_scalars_matching_the_square_law() {
    for n in [3u32, 5] {
        for p in 0..=n {
            let s = sig(p, n - p);
            let basis = brauer_weyl_basis(s).unwrap();
            let omega = rep_of_blade(&basis, s.volume_blade());
            let c = schur_scalar(&omega).expect("odd-n volume element is scalar");
            let square = c * c;
            assert_eq!(square.im, 0);
            assert_eq!(square.re as i8, s.volume_square(), "({p},{})", n - p);
        }
    }
}

#[test]
fn representation_is_a_homomorphism_exhaustively_up_to_n6() {
    let cases = [sig(2, 0), sig(1, 2), sig(2, 2), sig(4, 1), sig(3, 3)];
    for s in cases {
        let basis = brauer_weyl_basis(s).unwrap();
        let reps = BladeRepTable::new(&basis);
        let size = 1u32 << s.n();
        for ma in 0..size {
            for mb in 0..size {
                let a = SignedBlade::new(Phase::ONE, IndexSet(ma as u16));
                let b = SignedBlade::new(Phase::MINUS_ONE, IndexSet(mb as u16));
                let ab = s.product(a, b).unwrap();
                assert_eq!(
                    &reps.rep_signed(a) * &reps.rep_signed(b),
                    reps.rep_signed(ab),
                    "{s}"
                );
            }
        }
    }
}

#[test]
fn canonical_gamma0_block_form() {
    let cb = fixture_basis(FixtureName::Canonical).unwrap();
    let expected = GaussianMatrix::from_rows(&[
        &[(-1, 0), (0, 0), (0, 0), (0, 0)],
        &[(0, 0), (-1, 0), (0, 0), (0, 0)],
        &[(0, 0), (0, 0), (1, 0), (0, 0)],
        &[(0, 0), (0, 0), (0, 0), (1, 0)],
    ]);
    assert_eq!(cb.gamma(1), &expected);
}

#[test]
fn pauli_identities_from_the_fixture_sheet() {
    use clifford_cpt::matrix::pauli;
    assert_eq!(&pauli(1) * &pauli(2), pauli(3).scale(G_I));
    assert_eq!(pauli(1).kron(&GaussianMatrix::identity(2)).dim(), 4);
    let sitter = fixture_basis(FixtureName::Sitter).unwrap();
    assert_eq!(&pauli(3).kron(&pauli(1)), sitter.gamma(2));
}

#[test]
fn intertwiner_examples() {
    let cb = fixture_basis(FixtureName::Canonical).unwrap();
    let wb = fixture_basis(FixtureName::Weyl).unwrap();
    assert_eq!(verify_intertwiner(&unnormalized_x(), &cb, &wb), Ok(true));
    assert_eq!(
        verify_intertwiner(&GaussianMatrix::identity(4), &cb, &cb),
        Ok(true)
    );
    assert_eq!(
        verify_intertwiner(&GaussianMatrix::zero(4), &cb, &wb),
        Err(MatrixError::Singular)
    );
}

#[test]
fn intertwined_bases_have_conjugate_blade_images() {
    let cb = fixture_basis(FixtureName::Canonical).unwrap();
    let wb = fixture_basis(FixtureName::Weyl).unwrap();
    let x = unnormalized_x();
    for mask in 0..16u16 {
        let b = SignedBlade::new(Phase::ONE, IndexSet(mask));
        assert_eq!(&x * &rep_of_blade(&cb, b), &rep_of_blade(&wb, b) * &x);
    }
}

#[test]
fn the_printed_majorana_weyl_transform_fails_but_an_exact_one_exists() {
    let mb = fixture_basis(FixtureName::Majorana).unwrap();
    let wb = fixture_basis(FixtureName::Weyl).unwrap();
    // Both sign choices of the printed transform fail, in both directions.
    for eps in [1i8, -1] {
        let y = unnormalized_y(eps);
        assert_eq!(verify_intertwiner(&y, &mb, &wb), Ok(false));
        assert_eq!(verify_intertwiner(&y, &wb, &mb), Ok(false));
    }
    // Group averaging produces the actual integer intertwiner; frozen.
    let t = solve_intertwiner(&mb, &wb).expect("equivalent representations");
    let expected = GaussianMatrix::from_rows(&[
        &[(1, 0), (0, 0), (0, 1), (0, 0)],
        &[(0, 0), (1, 0), (0, 0), (0, 1)],
        &[(0, 0), (1, 0), (0, 0), (0, -1)],
        &[(-1, 0), (0, 0), (0, 1), (0, 0)],
    ]);
    assert_eq!(t, expected);
    assert_eq!(verify_intertwiner(&t, &mb, &wb), Ok(true));
}

#[test]
fn schur_scalar_examples() {
    let id = GaussianMatrix::identity(4);
    assert_eq!(schur_scalar(&id.scale(G_I)), Some(G_I));
    let cb = fixture_basis(FixtureName::Canonical).unwrap();
    assert_eq!(schur_scalar(cb.gamma(1)), None);
    let sitter = fixture_basis(FixtureName::Sitter).unwrap();
    let omega = rep_of_blade(&sitter, sitter.sig.volume_blade());
    assert_eq!(schur_scalar(&omega), Some(G_I));
}

#[test]
fn rep_of_blade_examples() {
    let cb = fixture_basis(FixtureName::Canonical).unwrap();
    assert_eq!(
        rep_of_blade(&cb, SignedBlade::UNIT),
        GaussianMatrix::identity(4)
    );
    let b = SignedBlade::from_indices(-1, &[1, 3]);
    let manual = (cb.gamma(1) * cb.gamma(3)).scale(-G_ONE);
    assert_eq!(rep_of_blade(&cb, b), manual);
}

#[test]
fn gamma_basis_json_round_trip() {
    for name in FixtureName::ALL {
        let basis = fixture_basis(name).unwrap();
        let json = serde_json::to_string(&basis.to_json()).unwrap();
        let parsed: GammaBasisJson = serde_json::from_str(&json).unwrap();
        let rebuilt = GammaBasis::from_json(&parsed).unwrap();
        assert_eq!(rebuilt.gammas(), basis.gammas());
        assert_eq!(rebuilt.sig, basis.sig);
    }
}
