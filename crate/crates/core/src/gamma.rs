//! Gamma-matrix spinor bases: tensor-product construction, embedded
//! fixture bases, and the map from signed blades to matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blade::{AlgebraSignature, IndexSet, Phase, SignedBlade};
use crate::matrix::{pauli, Gaussian, GaussianMatrix, MatrixError, G_I, G_ONE};

/// A verified set of gamma matrices for one signature.
///
/// Construction always checks the Clifford relations
/// `g_i g_j + g_j g_i = 2 g_ij I` exactly; a failure is surfaced as an
/// error, never repaired.
#[derive(Debug, Clone)]
pub struct GammaBasis {
    pub name: String,
    pub sig: AlgebraSignature,
    gammas: Vec<GaussianMatrix>,
    /// Display names of the generators (`γ0..γ3` for the spacetime
    /// fixtures, `γ1..γn` for tensor-product bases).
    pub labels: Vec<String>,
}

impl GammaBasis {
    pub fn new(
        name: impl Into<String>,
        sig: AlgebraSignature,
        gammas: Vec<GaussianMatrix>,
        labels: Vec<String>,
    ) -> Result<GammaBasis, MatrixError> {
        assert_eq!(gammas.len(), sig.n() as usize);
        assert_eq!(labels.len(), gammas.len());
        verify_clifford_relations(&gammas, sig)?;
        Ok(GammaBasis {
            name: name.into(),
            sig,
            gammas,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.gammas[0].dim()
    }

    /// Generator matrix, 1-based to match blade indices.
    pub fn gamma(&self, i: u32) -> &GaussianMatrix {
        &self.gammas[(i - 1) as usize]
    }

    pub fn gammas(&self) -> &[GaussianMatrix] {
        &self.gammas
    }

    /// Render a blade in this basis's generator labels, e.g. `γ13`.
    pub fn blade_name(&self, indices: IndexSet) -> String {
        if indices == IndexSet::EMPTY {
            return "1".to_string();
        }
        if indices == self.sig.volume_blade().indices {
            return "ω".to_string();
        }
        let mut s = String::from("γ");
        for i in indices.iter() {
            let label = &self.labels[(i - 1) as usize];
            s.push_str(label.trim_start_matches('γ'));
        }
        s
    }

    pub fn to_json(&self) -> GammaBasisJson {
        GammaBasisJson {
            name: self.name.clone(),
            p: self.sig.p(),
            q: self.sig.q(),
            dim: self.dim(),
            gammas: self
                .gammas
                .iter()
                .map(|g| {
                    (0..g.dim())
                        .map(|i| (0..g.dim()).map(|j| [g[(i, j)].re, g[(i, j)].im]).collect())
                        .collect()
                })
                .collect(),
        }
    }

    /// Rebuild from the wire form, re-verifying the Clifford relations.
    pub fn from_json(json: &GammaBasisJson) -> Result<GammaBasis, MatrixError> {
        let sig = AlgebraSignature::new(json.p, json.q)
            .map_err(|_| MatrixError::UnsupportedDimension(json.p + json.q))?;
        let mut gammas = Vec::with_capacity(json.gammas.len());
        for rows in &json.gammas {
            let mut m = GaussianMatrix::zero(json.dim);
            for (i, row) in rows.iter().enumerate() {
                for (j, &[re, im]) in row.iter().enumerate() {
                    m[(i, j)] = Gaussian::new(re, im);
                }
            }
            gammas.push(m);
        }
        let labels = (1..=sig.n()).map(|i| format!("γ{i}")).collect();
        GammaBasis::new(json.name.clone(), sig, gammas, labels)
    }
}

/// Wire form of a gamma basis: entries are `[re, im]` pairs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GammaBasisJson {
    pub name: String,
    pub p: u32,
    pub q: u32,
    pub dim: usize,
    pub gammas: Vec<Vec<Vec<[i64; 2]>>>,
}

fn verify_clifford_relations(
    gammas: &[GaussianMatrix],
    sig: AlgebraSignature,
) -> Result<(), MatrixError> {
    let dim = gammas[0].dim();
    for g in gammas {
        if g.dim() != dim {
            return Err(MatrixError::DimMismatch(g.dim(), dim));
        }
    }
    for i in 0..gammas.len() {
        for j in i..gammas.len() {
            let anti = &(&gammas[i] * &gammas[j]) + &(&gammas[j] * &gammas[i]);
            let expected = if i == j {
                let sign = sig.generator_square(i as u32 + 1) as i64;
                GaussianMatrix::identity(dim).scale(Gaussian::new(2 * sign, 0))
            } else {
                GaussianMatrix::zero(dim)
            };
            if anti != expected {
                return Err(MatrixError::RelationFailure { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(())
}

/// Tensor-product basis over `m = ceil(n/2)` Pauli factors.
///
/// The first `2m` generators come out Hermitian with square `+I`; for odd
/// `n` the extra diagonal factor is appended. The last `q` generators are
/// then multiplied by `i` so the squares realize the `(p,q)` metric.
pub fn brauer_weyl_basis(sig: AlgebraSignature) -> Result<GammaBasis, MatrixError> {
    let n = sig.n();
    let m = (n / 2) as usize;
    if m == 0 {
        return Err(MatrixError::UnsupportedDimension(n));
    }
    let mut gammas = Vec::with_capacity(n as usize);

    let slot_product = |active: usize, sigma: usize| -> GaussianMatrix {
        let mut factors = Vec::with_capacity(m);
        for slot in 0..m {
            factors.push(match slot.cmp(&active) {
                std::cmp::Ordering::Less => pauli(3),
                std::cmp::Ordering::Equal => pauli(sigma),
                std::cmp::Ordering::Greater => pauli(0),
            });
        }
        factors
            .into_iter()
            .reduce(|acc, f| acc.kron(&f))
            .expect("m >= 1")
    };

    let pairs = (n / 2) as usize;
    for j in 0..pairs {
        gammas.push(slot_product(j, 1));
    }
    for j in 0..pairs {
        gammas.push(slot_product(j, 2));
    }
    if n % 2 == 1 {
        // sigma_3 in every slot
        gammas.push(slot_product(m, 3));
    }

    for gamma in gammas.iter_mut().skip(sig.p() as usize) {
        *gamma = gamma.scale(G_I);
    }

    let labels = (1..=n).map(|i| format!("γ{i}")).collect();
    GammaBasis::new(
        format!("brauer-weyl({},{})", sig.p(), sig.q()),
        sig,
        gammas,
        labels,
    )
}

/// Names of the embedded fixture bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureName {
    Canonical,
    Weyl,
    Majorana,
    Majorana31,
    Sitter,
}

impl FixtureName {
    pub const ALL: [FixtureName; 5] = [
        FixtureName::Canonical,
        FixtureName::Weyl,
        FixtureName::Majorana,
        FixtureName::Majorana31,
        FixtureName::Sitter,
    ];

    pub fn parse(s: &str) -> Option<FixtureName> {
        match s {
            "canonical" => Some(FixtureName::Canonical),
            "weyl" => Some(FixtureName::Weyl),
            "majorana" => Some(FixtureName::Majorana),
            "majorana31" => Some(FixtureName::Majorana31),
            "sitter" => Some(FixtureName::Sitter),
            _ => None,
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FixtureName::Canonical => "canonical",
            FixtureName::Weyl => "weyl",
            FixtureName::Majorana => "majorana",
            FixtureName::Majorana31 => "majorana31",
            FixtureName::Sitter => "sitter",
        };
        write!(f, "{s}")
    }
}

/// 4x4 matrix from 2x2 blocks.
fn block4(
    a: &GaussianMatrix,
    b: &GaussianMatrix,
    c: &GaussianMatrix,
    d: &GaussianMatrix,
) -> GaussianMatrix {
    let mut m = GaussianMatrix::zero(4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = a[(i, j)];
            m[(i, j + 2)] = b[(i, j)];
            m[(i + 2, j)] = c[(i, j)];
            m[(i + 2, j + 2)] = d[(i, j)];
        }
    }
    m
}

/// One of the embedded spinor bases.
///
/// `canonical`, `weyl`, `majorana` realize Cl(1,3); `majorana31` is the
/// real basis for Cl(3,1); `sitter` is the tensor-product basis for
/// Cl(4,1). The Weyl basis is pinned as the image of the canonical basis
/// under the unnormalized block transform `X`, so the X-similarity holds
/// exactly (see [`unnormalized_x`]).
pub fn fixture_basis(name: FixtureName) -> Result<GammaBasis, MatrixError> {
    let zero = GaussianMatrix::zero(2);
    let one2 = GaussianMatrix::identity(2);
    match name {
        FixtureName::Canonical => {
            let sig = AlgebraSignature::new(1, 3).unwrap();
            let mut gammas = vec![block4(&-&one2, &zero, &zero, &one2)];
            for k in 1..=3 {
                gammas.push(block4(&zero, &pauli(k), &-&pauli(k), &zero));
            }
            GammaBasis::new("canonical", sig, gammas, labels0(4))
        }
        FixtureName::Weyl => {
            let sig = AlgebraSignature::new(1, 3).unwrap();
            let mut gammas = vec![block4(&zero, &-&one2, &-&one2, &zero)];
            for k in 1..=3 {
                gammas.push(block4(&zero, &pauli(k), &-&pauli(k), &zero));
            }
            GammaBasis::new("weyl", sig, gammas, labels0(4))
        }
        FixtureName::Majorana => {
            let sig = AlgebraSignature::new(1, 3).unwrap();
            let ms2 = -&pauli(2);
            let is3 = pauli(3).scale(G_I);
            let mis1 = pauli(1).scale(-G_I);
            let gammas = vec![
                block4(&zero, &ms2, &ms2, &zero),
                block4(&zero, &is3, &is3, &zero),
                block4(&one2.scale(G_I), &zero, &zero, &one2.scale(-G_I)),
                block4(&zero, &mis1, &mis1, &zero),
            ];
            GammaBasis::new("majorana", sig, gammas, labels0(4))
        }
        FixtureName::Majorana31 => {
            let sig = AlgebraSignature::new(3, 1).unwrap();
            let r = |rows: [[i64; 4]; 4]| {
                let pairs: Vec<Vec<(i64, i64)>> = rows
                    .iter()
                    .map(|row| row.iter().map(|&v| (v, 0)).collect())
                    .collect();
                let refs: Vec<&[(i64, i64)]> = pairs.iter().map(|r| r.as_slice()).collect();
                GaussianMatrix::from_rows(&refs)
            };
            let gammas = vec![
                r([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]),
                r([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
                r([[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]]),
                r([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]),
            ];
            GammaBasis::new("majorana31", sig, gammas, labels0(4))
        }
        FixtureName::Sitter => {
            let sig = AlgebraSignature::new(4, 1).unwrap();
            let gammas = vec![
                pauli(1).kron(&one2),
                pauli(3).kron(&pauli(1)),
                pauli(2).kron(&one2),
                pauli(3).kron(&pauli(2)),
                pauli(3).kron(&pauli(3)).scale(G_I),
            ];
            let labels = (1..=5).map(|i| format!("γ{i}")).collect();
            GammaBasis::new("sitter", sig, gammas, labels)
        }
    }
}

fn labels0(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("γ{i}")).collect()
}

/// The unnormalized block transform relating the canonical and Weyl
/// bases (the scalar normalization cancels in conjugation).
pub fn unnormalized_x() -> GaussianMatrix {
    let one2 = GaussianMatrix::identity(2);
    block4(&one2, &-&one2, &one2, &one2)
}

/// The unnormalized block transform stated to relate the Majorana and
/// Weyl bases, with its sign parameter left free.
pub fn unnormalized_y(epsilon: i8) -> GaussianMatrix {
    let one2 = GaussianMatrix::identity(2);
    let e = Gaussian::new(epsilon as i64, 0);
    block4(
        &one2,
        &one2.scale(G_I),
        &one2.scale(e),
        &one2.scale(-G_I * e),
    )
}

/// Representation of a signed blade: `phase * g_{i1} g_{i2} ...` with the
/// indices in ascending order.
pub fn rep_of_blade(basis: &GammaBasis, b: SignedBlade) -> GaussianMatrix {
    basis
        .sig
        .check_blade(b)
        .expect("blade valid for the basis signature");
    let mut m = GaussianMatrix::identity(basis.dim());
    for i in b.indices.iter() {
        m = &m * basis.gamma(i);
    }
    m.scale(phase_to_gaussian(b.phase))
}

pub fn phase_to_gaussian(p: Phase) -> Gaussian {
    match p.exponent() {
        0 => G_ONE,
        1 => G_I,
        2 => -G_ONE,
        _ => -G_I,
    }
}

/// Cache of `rep_of_blade` over every index set, for exhaustive scans.
pub struct BladeRepTable {
    reps: Vec<GaussianMatrix>,
}

impl BladeRepTable {
    pub fn new(basis: &GammaBasis) -> BladeRepTable {
        let n = basis.sig.n();
        let mut reps: Vec<GaussianMatrix> = Vec::with_capacity(1 << n);
        reps.push(GaussianMatrix::identity(basis.dim()));
        for mask in 1u32..(1 << n) {
            let low = mask.trailing_zeros() + 1;
            let rest = mask & (mask - 1);
            reps.push(basis.gamma(low) * &reps[rest as usize]);
        }
        BladeRepTable { reps }
    }

    /// Representation of the positive-phase blade `e_S`.
    pub fn rep(&self, indices: IndexSet) -> &GaussianMatrix {
        &self.reps[indices.0 as usize]
    }

    pub fn rep_signed(&self, b: SignedBlade) -> GaussianMatrix {
        self.rep(b.indices).scale(phase_to_gaussian(b.phase))
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Reverse lookup: which signed blade has exactly this matrix.
    ///
    /// Real phases are tried first so that a matrix proportional to two
    /// complementary blades (odd n, scalar volume element) is labeled by
    /// its real-phase representative.
    pub fn identify(&self, m: &GaussianMatrix) -> Option<SignedBlade> {
        for k in [0u8, 2, 1, 3] {
            let phase = Phase::new(k);
            let scaled = m.scale(phase_to_gaussian(phase.conj()));
            for (mask, rep) in self.reps.iter().enumerate() {
                if rep == &scaled {
                    return Some(SignedBlade::new(phase, IndexSet(mask as u16)));
                }
            }
        }
        None
    }
}

/// `Some(c)` iff `m = c * I` exactly.
pub fn schur_scalar(m: &GaussianMatrix) -> Option<Gaussian> {
    m.scalar()
}

/// Check that `a` intertwines the two bases: `a * g_i^from = g_i^to * a`
/// for every generator, with `a` invertible over the rationals.
pub fn verify_intertwiner(
    a: &GaussianMatrix,
    from: &GammaBasis,
    to: &GammaBasis,
) -> Result<bool, MatrixError> {
    if from.sig != to.sig {
        return Err(MatrixError::DimMismatch(from.dim(), to.dim()));
    }
    if a.dim() != from.dim() {
        return Err(MatrixError::DimMismatch(a.dim(), from.dim()));
    }
    if !a.is_invertible() {
        return Err(MatrixError::Singular);
    }
    for i in 1..=from.sig.n() {
        if a * from.gamma(i) != to.gamma(i) * a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compute an exact intertwiner `t` with `t * g^from = g^to * t` by
/// group averaging over the finite blade group, or `None` when the two
/// representations are inequivalent.
///
/// The result is content-reduced and phase-normalized so it is unique.
pub fn solve_intertwiner(from: &GammaBasis, to: &GammaBasis) -> Option<GaussianMatrix> {
    assert_eq!(from.sig, to.sig);
    let sig = from.sig;
    let dim = from.dim();
    let from_reps = BladeRepTable::new(from);
    let to_reps = BladeRepTable::new(to);
    let n = sig.n();

    for seed_pos in 0..dim * dim {
        let mut seed = GaussianMatrix::zero(dim);
        seed[(seed_pos / dim, seed_pos % dim)] = G_ONE;
        let mut sum = GaussianMatrix::zero(dim);
        for mask in 0..(1u32 << n) {
            let s = IndexSet(mask as u16);
            let blade = SignedBlade::new(Phase::ONE, s);
            // e_S^-1 = (e_S^2) e_S since squares are +-1
            let square = sig.product(blade, blade).expect("valid");
            let inv_sign = square.phase.real_sign().expect("real square");
            let term = &(to_reps.rep(s) * &seed)
                * &from_reps.rep(s).scale(Gaussian::new(inv_sign as i64, 0));
            sum = &sum + &term;
        }
        if !sum.is_zero() {
            let t = normalize_intertwiner(sum);
            if t.is_invertible() {
                return Some(t);
            }
        }
    }
    None
}

/// Divide by integer content and fix the overall power of `i` so the
/// first nonzero entry has positive real part (or, failing that,
/// positive imaginary part).
fn normalize_intertwiner(m: GaussianMatrix) -> GaussianMatrix {
    let mut g: i64 = 0;
    for z in m.entries() {
        g = gcd(g, z.re.abs());
        g = gcd(g, z.im.abs());
    }
    let mut t = if g > 1 {
        let dim = m.dim();
        let mut r = GaussianMatrix::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                r[(i, j)] = Gaussian::new(m[(i, j)].re / g, m[(i, j)].im / g);
            }
        }
        r
    } else {
        m
    };
    let first = *t
        .entries()
        .iter()
        .find(|z| **z != Gaussian::new(0, 0))
        .expect("nonzero");
    let rot = if first.re > 0 {
        G_ONE
    } else if first.re < 0 {
        -G_ONE
    } else if first.im > 0 {
        -G_I
    } else {
        G_I
    };
    if rot != G_ONE {
        t = t.scale(rot);
    }
    t
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_all_verify() {
        for name in FixtureName::ALL {
            let basis = fixture_basis(name).expect("fixture relations hold");
            assert_eq!(basis.dim(), 4);
        }
    }

    #[test]
    fn brauer_weyl_small_cases() {
        let b20 = brauer_weyl_basis(AlgebraSignature::new(2, 0).unwrap()).unwrap();
        assert_eq!(b20.gammas(), &[pauli(1), pauli(2)]);
        let b30 = brauer_weyl_basis(AlgebraSignature::new(3, 0).unwrap()).unwrap();
        assert_eq!(b30.gammas(), &[pauli(1), pauli(2), pauli(3)]);
    }

    #[test]
    fn brauer_weyl_41_matches_sitter_fixture() {
        let bw = brauer_weyl_basis(AlgebraSignature::new(4, 1).unwrap()).unwrap();
        let sitter = fixture_basis(FixtureName::Sitter).unwrap();
        assert_eq!(bw.gammas(), sitter.gammas());
    }

    #[test]
    fn sitter_volume_is_i_times_identity() {
        let sitter = fixture_basis(FixtureName::Sitter).unwrap();
        let omega = rep_of_blade(&sitter, sitter.sig.volume_blade());
        assert_eq!(schur_scalar(&omega), Some(G_I));
    }

    #[test]
    fn rep_of_unit_is_identity() {
        let basis = fixture_basis(FixtureName::Canonical).unwrap();
        assert_eq!(
            rep_of_blade(&basis, SignedBlade::UNIT),
            GaussianMatrix::identity(4)
        );
    }

    #[test]
    fn x_intertwines_canonical_to_weyl() {
        let cb = fixture_basis(FixtureName::Canonical).unwrap();
        let wb = fixture_basis(FixtureName::Weyl).unwrap();
        let x = unnormalized_x();
        assert_eq!(verify_intertwiner(&x, &cb, &wb), Ok(true));
        let id = GaussianMatrix::identity(4);
        assert_eq!(verify_intertwiner(&id, &cb, &cb), Ok(true));
    }

    #[test]
    fn majorana31_squares() {
        let b = fixture_basis(FixtureName::Majorana31).unwrap();
        let id = GaussianMatrix::identity(4);
        assert_eq!(b.gamma(1) * b.gamma(1), id.clone());
        assert_eq!(b.gamma(4) * b.gamma(4), id.scale(-G_ONE));
    }

    #[test]
    fn identify_blade_round_trip() {
        let basis = fixture_basis(FixtureName::Canonical).unwrap();
        let reps = BladeRepTable::new(&basis);
        let b = SignedBlade::new(Phase::MINUS_I, IndexSet::from_indices(&[1, 3]));
        let m = reps.rep_signed(b);
        assert_eq!(reps.identify(&m), Some(b));
    }
}
