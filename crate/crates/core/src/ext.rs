//! Spinor matrices of the eight Clifford-algebra automorphisms, the
//! extended automorphism (CPT) groups they generate, and the finite
//! groups built from P/T/C transformation matrices.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blade::{IndexSet, Phase, SignedBlade};
use crate::gamma::{rep_of_blade, BladeRepTable, GammaBasis};
use crate::group::{GroupError, GroupTable};
use crate::matrix::{GaussianMatrix, G_ONE};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtError {
    #[error("no blade implements the {0} constraint for this basis")]
    NoSolution(&'static str),
    #[error("multiple non-proportional blades solve the {0} constraint; basis is not irreducible")]
    MultipleSolutions(&'static str),
    #[error("generator {0} is neither fixed nor negated by the transform")]
    IrregularGenerator(u32),
    #[error("matrices do not close into signed representatives: {0}")]
    NotClosed(String),
    #[error("representative {0} does not square to a scalar +-1")]
    NonScalarSquare(String),
    #[error("group construction failed: {0}")]
    Group(#[from] GroupError),
}

/// Keys of the eight automorphism matrices, in the order their squares
/// form the seven-sign signature (I excluded).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtKey {
    I,
    W,
    E,
    C,
    Pi,
    K,
    S,
    F,
}

impl ExtKey {
    pub const ALL: [ExtKey; 8] = [
        ExtKey::I,
        ExtKey::W,
        ExtKey::E,
        ExtKey::C,
        ExtKey::Pi,
        ExtKey::K,
        ExtKey::S,
        ExtKey::F,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExtKey::I => "I",
            ExtKey::W => "W",
            ExtKey::E => "E",
            ExtKey::C => "C",
            ExtKey::Pi => "Pi",
            ExtKey::K => "K",
            ExtKey::S => "S",
            ExtKey::F => "F",
        }
    }
}

impl fmt::Display for ExtKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Result of an exhaustive blade-constraint search.
#[derive(Debug, Clone)]
pub struct SolverOutcome {
    /// Matrix of the chosen canonical representative (positive phase).
    pub matrix: GaussianMatrix,
    /// The blade whose representation equals `matrix`.
    pub blade: SignedBlade,
    /// All index sets whose blade matrices satisfy the constraint;
    /// for odd n these come in proportional complement pairs.
    pub solution_masks: Vec<IndexSet>,
    /// False when no blade satisfies the constraint exactly and the
    /// returned representative follows the padding convention instead
    /// (possible only for the conjugation constraint when the conjugate
    /// representation is inequivalent).
    pub exact: bool,
}

/// The matrix `W` realizing the grade involution, i.e. the representation
/// of the volume element.
///
/// For even n, `W g_i W^-1 = -g_i` holds and `inner_star` is true. For
/// odd n the volume element is central, the representation maps it to a
/// scalar, and the grade involution is not inner: `inner_star` is false.
pub struct StarMatrix {
    pub matrix: GaussianMatrix,
    pub blade: SignedBlade,
    pub inner_star: bool,
}

pub fn star_matrix(basis: &GammaBasis) -> StarMatrix {
    let blade = basis.sig.volume_blade();
    let matrix = rep_of_blade(basis, blade);
    let inner_star = if basis.sig.n().is_multiple_of(2) {
        let anticommutes = (1..=basis.sig.n())
            .all(|i| &matrix * basis.gamma(i) == (basis.gamma(i) * &matrix).scale(-G_ONE));
        assert!(
            anticommutes,
            "volume element of an even-n basis must anticommute with every generator"
        );
        true
    } else {
        false
    };
    StarMatrix {
        matrix,
        blade,
        inner_star,
    }
}

/// Search all 2^n blade matrices for those satisfying
/// `M t(g_i) = g_i M` for every generator, where `t` is the entrywise
/// transform (transpose or conjugation) supplied by the caller.
fn blade_constraint_solutions(
    basis: &GammaBasis,
    reps: &BladeRepTable,
    transform: impl Fn(&GaussianMatrix) -> GaussianMatrix,
) -> Vec<IndexSet> {
    let n = basis.sig.n();
    let transformed: Vec<GaussianMatrix> = (1..=n).map(|i| transform(basis.gamma(i))).collect();
    let mut masks = Vec::new();
    for mask in 0..(1u32 << n) {
        let s = IndexSet(mask as u16);
        let m = reps.rep(s);
        let ok = (1..=n).all(|i| m * &transformed[(i - 1) as usize] == basis.gamma(i) * m);
        if ok {
            masks.push(s);
        }
    }
    masks
}

/// Pick the canonical representative from the solution set.
///
/// Even n gives a unique index set. For odd n the solutions form a
/// complement pair with proportional matrices; the transpose solver
/// takes the even-grade member and the conjugation solver the odd-grade
/// member, matching the worked derivations this engine reproduces.
fn choose_representative(
    masks: &[IndexSet],
    reps: &BladeRepTable,
    prefer_even_grade: bool,
    constraint: &'static str,
) -> Result<(IndexSet, GaussianMatrix), ExtError> {
    match masks {
        [] => Err(ExtError::NoSolution(constraint)),
        [only] => Ok((*only, reps.rep(*only).clone())),
        _ => {
            for (i, &a) in masks.iter().enumerate() {
                for &b in &masks[i + 1..] {
                    if !reps.rep(a).proportional(reps.rep(b)) {
                        return Err(ExtError::MultipleSolutions(constraint));
                    }
                }
            }
            let chosen = masks
                .iter()
                .copied()
                .find(|m| (m.grade() % 2 == 0) == prefer_even_grade)
                .unwrap_or(masks[0]);
            Ok((chosen, reps.rep(chosen).clone()))
        }
    }
}

/// Matrix `E` of the reversion antiautomorphism: `E g_i^T E^-1 = g_i`.
pub fn solve_transpose_symmetry(basis: &GammaBasis) -> Result<SolverOutcome, ExtError> {
    let reps = BladeRepTable::new(basis);
    let masks = blade_constraint_solutions(basis, &reps, |m| m.transpose());
    let (mask, matrix) = choose_representative(&masks, &reps, true, "transpose symmetry")?;
    Ok(SolverOutcome {
        matrix,
        blade: SignedBlade::new(Phase::ONE, mask),
        solution_masks: masks,
        exact: true,
    })
}

/// Matrix `Pi` of the pseudoautomorphism: `Pi g_i^* Pi^-1 = g_i`.
///
/// When the conjugate representation is inequivalent (odd n with the
/// volume element represented by a scalar of square -1) no matrix can
/// satisfy the constraint exactly. The derivations reproduced here then
/// take the blade supported on the conjugation-fixed generators padded
/// with the lowest conjugation-negated one; the outcome is marked
/// `exact: false`.
pub fn solve_complex_conjugation(basis: &GammaBasis) -> Result<SolverOutcome, ExtError> {
    let reps = BladeRepTable::new(basis);
    let masks = blade_constraint_solutions(basis, &reps, |m| m.conj());
    if !masks.is_empty() {
        let (mask, matrix) = choose_representative(&masks, &reps, false, "complex conjugation")?;
        return Ok(SolverOutcome {
            matrix,
            blade: SignedBlade::new(Phase::ONE, mask),
            solution_masks: masks,
            exact: true,
        });
    }

    // Obstructed case: determine the conjugation sign of each generator
    // and build the conventional representative.
    let n = basis.sig.n();
    let mut fixed = Vec::new();
    let mut negated = Vec::new();
    for i in 1..=n {
        let g = basis.gamma(i);
        let conj = g.conj();
        if &conj == g {
            fixed.push(i);
        } else if conj == g.scale(-G_ONE) {
            negated.push(i);
        } else {
            return Err(ExtError::IrregularGenerator(i));
        }
    }
    if negated.is_empty() {
        // an all-real basis is solved exactly above
        return Err(ExtError::NoSolution("complex conjugation"));
    }
    let mut support = fixed;
    support.push(negated[0]);
    support.sort_unstable();
    let mask = IndexSet::from_indices(&support);
    Ok(SolverOutcome {
        matrix: reps.rep(mask).clone(),
        blade: SignedBlade::new(Phase::ONE, mask),
        solution_masks: Vec::new(),
        exact: false,
    })
}

/// The eight automorphism matrices with their signed 8x8 table and the
/// seven-sign signature.
#[derive(Debug, Clone)]
pub struct ExtGroup {
    pub basis_name: String,
    pub mats: Vec<GaussianMatrix>,
    /// The signed blade each matrix equals under the representation.
    pub blades: Vec<SignedBlade>,
    /// `table[a][b] = (c, sign)` with `mats[a] * mats[b] = sign * mats[c]`.
    pub table: [[(usize, i8); 8]; 8],
    /// Squares of W, E, C, Pi, K, S, F, each forced to be +-identity.
    pub signature: [i8; 7],
    /// Whether conjugation by W implements the grade involution.
    pub inner_star: bool,
    /// Whether Pi satisfies its conjugation constraint exactly.
    pub conjugation_exact: bool,
}

impl ExtGroup {
    pub fn key_index(key: ExtKey) -> usize {
        ExtKey::ALL.iter().position(|k| *k == key).expect("key")
    }

    pub fn mat(&self, key: ExtKey) -> &GaussianMatrix {
        &self.mats[Self::key_index(key)]
    }

    pub fn blade(&self, key: ExtKey) -> SignedBlade {
        self.blades[Self::key_index(key)]
    }

    /// Signature as a sign string like `--+--++`.
    pub fn signature_string(&self) -> String {
        signature_string(&self.signature)
    }

    /// `(order-2 count, order-4 count)` of the seven non-identity
    /// representatives, read off the signature signs.
    pub fn rep_order_structure(&self) -> (usize, usize) {
        split_signature(&self.signature)
    }

    /// The order-16 covering group of this extended automorphism group.
    pub fn full_cpt_group(&self) -> Result<CptGroup, ExtError> {
        let names: Vec<&str> = ExtKey::ALL.iter().map(|k| k.name()).collect();
        full_cpt_group(&names, &self.mats, &self.blades)
    }

    pub fn to_json(&self) -> ExtGroupJson {
        ExtGroupJson {
            basis: self.basis_name.clone(),
            blade_labels: self.blades.iter().map(|b| b.to_string()).collect(),
            table: self
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&(key, phase)| ExtCellJson {
                            key: ExtKey::ALL[key].name().to_string(),
                            phase,
                        })
                        .collect()
                })
                .collect(),
            signature: self.signature_string(),
        }
    }
}

/// Wire form of an extended automorphism group.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtGroupJson {
    pub basis: String,
    pub blade_labels: Vec<String>,
    pub table: Vec<Vec<ExtCellJson>>,
    pub signature: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtCellJson {
    pub key: String,
    pub phase: i8,
}

pub fn signature_string(signs: &[i8]) -> String {
    signs
        .iter()
        .map(|&s| if s > 0 { '+' } else { '-' })
        .collect()
}

fn split_signature(signs: &[i8]) -> (usize, usize) {
    let plus = signs.iter().filter(|&&s| s > 0).count();
    (plus, signs.len() - plus)
}

/// Derive the full extended automorphism group of a basis.
pub fn derive_ext_group(basis: &GammaBasis) -> Result<ExtGroup, ExtError> {
    let star = star_matrix(basis);
    let e = solve_transpose_symmetry(basis)?;
    let pi = solve_complex_conjugation(basis)?;

    let identity = GaussianMatrix::identity(basis.dim());
    let c = &e.matrix * &star.matrix;
    let k = &pi.matrix * &star.matrix;
    let s = &pi.matrix * &e.matrix;
    let f = &pi.matrix * &c;
    let mats = vec![identity, star.matrix, e.matrix, c, pi.matrix, k, s, f];

    let reps = BladeRepTable::new(basis);
    let mut blades = Vec::with_capacity(8);
    for (i, m) in mats.iter().enumerate() {
        let blade = reps.identify(m).ok_or_else(|| {
            ExtError::NotClosed(format!("matrix {} is not a blade image", ExtKey::ALL[i]))
        })?;
        blades.push(blade);
    }

    let table = signed_table(&mats)?;
    let mut signature = [0i8; 7];
    for k in 1..8 {
        let sq = &mats[k] * &mats[k];
        let scalar = sq
            .scalar()
            .filter(|z| z.im == 0 && z.re.abs() == 1)
            .ok_or_else(|| ExtError::NonScalarSquare(ExtKey::ALL[k].name().to_string()))?;
        signature[k - 1] = scalar.re as i8;
    }

    Ok(ExtGroup {
        basis_name: basis.name.clone(),
        mats,
        blades,
        table,
        signature,
        inner_star: star.inner_star,
        conjugation_exact: pi.exact,
    })
}

/// Compute the signed multiplication table of eight representative
/// matrices: every pairwise product must equal +-(one of the eight).
fn signed_table(mats: &[GaussianMatrix]) -> Result<[[(usize, i8); 8]; 8], ExtError> {
    let mut table = [[(0usize, 0i8); 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let p = &mats[a] * &mats[b];
            let mut entry = None;
            'search: for (c, m) in mats.iter().enumerate() {
                for sign in [1i8, -1] {
                    if p == m.scale(if sign == 1 { G_ONE } else { -G_ONE }) {
                        entry = Some((c, sign));
                        break 'search;
                    }
                }
            }
            table[a][b] = entry.ok_or_else(|| ExtError::NotClosed(format!("product ({a},{b})")))?;
        }
    }
    Ok(table)
}

/// The order-8 generating group built from P, T, C matrices: the signed
/// representatives 1, P, T, PT, C, CP, CT, CPT.
#[derive(Debug, Clone)]
pub struct GenGroup {
    pub basis_name: String,
    pub rep_names: [&'static str; 8],
    pub reps: Vec<GaussianMatrix>,
    /// Signed blades of the representatives (phases may be imaginary
    /// when the inputs carry i factors).
    pub blades: Vec<SignedBlade>,
    pub table: [[(usize, i8); 8]; 8],
    /// Squares of P, T, PT, C, CP, CT, CPT.
    pub signature: [i8; 7],
    /// True when the eight representatives are not pairwise distinct.
    pub degenerate: bool,
}

pub const GEN_GROUP_NAMES: [&str; 8] = ["1", "P", "T", "PT", "C", "CP", "CT", "CPT"];

impl GenGroup {
    pub fn signature_string(&self) -> String {
        signature_string(&self.signature)
    }

    /// `(order-2 count, order-4 count)` of the seven non-identity
    /// representatives, read off the signature signs.
    pub fn rep_order_structure(&self) -> (usize, usize) {
        split_signature(&self.signature)
    }

    /// The order-16 covering group of this generating group.
    pub fn full_cpt_group(&self) -> Result<CptGroup, ExtError> {
        full_cpt_group(&self.rep_names, &self.reps, &self.blades)
    }
}

/// Close `{1, P, T, PT, C, CP, CT, CPT}` under multiplication modulo
/// global signs.
pub fn generating_group_from_ptc(
    basis: &GammaBasis,
    p: &GaussianMatrix,
    t: &GaussianMatrix,
    c: &GaussianMatrix,
) -> Result<GenGroup, ExtError> {
    let reps = vec![
        GaussianMatrix::identity(basis.dim()),
        p.clone(),
        t.clone(),
        p * t,
        c.clone(),
        c * p,
        c * t,
        &(c * p) * t,
    ];

    let rep_table = BladeRepTable::new(basis);
    let mut blades = Vec::with_capacity(8);
    for (i, m) in reps.iter().enumerate() {
        let blade = rep_table.identify(m).ok_or_else(|| {
            ExtError::NotClosed(format!(
                "representative {} is not in the gamma-matrix group",
                GEN_GROUP_NAMES[i]
            ))
        })?;
        blades.push(blade);
    }

    let table = signed_table(&reps)?;
    let mut signature = [0i8; 7];
    for k in 1..8 {
        let sq = &reps[k] * &reps[k];
        let scalar = sq
            .scalar()
            .filter(|z| z.im == 0 && z.re.abs() == 1)
            .ok_or_else(|| ExtError::NonScalarSquare(GEN_GROUP_NAMES[k].to_string()))?;
        signature[k - 1] = scalar.re as i8;
    }

    let mut degenerate = false;
    for i in 0..8 {
        for j in i + 1..8 {
            if reps[i] == reps[j] {
                degenerate = true;
            }
        }
    }

    Ok(GenGroup {
        basis_name: basis.name.clone(),
        rep_names: GEN_GROUP_NAMES,
        reps,
        blades,
        table,
        signature,
        degenerate,
    })
}

/// The full order-16 group `{+-1, +-P, ..., +-CPT}` (or its quotient when
/// representatives coincide), as a plain group table plus the signed
/// blade labels used for subgroup-embedding checks.
pub struct CptGroup {
    pub table: GroupTable,
    pub blades: Vec<SignedBlade>,
}

pub fn full_cpt_group(
    names: &[&str],
    reps: &[GaussianMatrix],
    blades: &[SignedBlade],
) -> Result<CptGroup, ExtError> {
    assert_eq!(names.len(), reps.len());
    let mut elements: Vec<(String, GaussianMatrix, SignedBlade)> = Vec::new();
    for sign in [1i8, -1] {
        for (i, m) in reps.iter().enumerate() {
            let mat = if sign == 1 {
                m.clone()
            } else {
                m.scale(-G_ONE)
            };
            if elements.iter().any(|(_, existing, _)| *existing == mat) {
                continue;
            }
            let label = if sign == 1 {
                format!("+{}", names[i])
            } else {
                format!("-{}", names[i])
            };
            let blade = if sign == 1 {
                blades[i]
            } else {
                blades[i].negate()
            };
            elements.push((label, mat, blade));
        }
    }

    let order = elements.len();
    let mut rows = Vec::with_capacity(order);
    for i in 0..order {
        let mut row = Vec::with_capacity(order);
        for j in 0..order {
            let p = &elements[i].1 * &elements[j].1;
            let k = elements
                .iter()
                .position(|(_, m, _)| *m == p)
                .ok_or_else(|| ExtError::NotClosed(format!("product ({i},{j})")))?;
            row.push(k);
        }
        rows.push(row);
    }
    let labels = elements.iter().map(|(l, _, _)| l.clone()).collect();
    let table = GroupTable::new(labels, rows)?;
    let blades = elements.iter().map(|(_, _, b)| *b).collect();
    Ok(CptGroup { table, blades })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::AlgebraSignature;
    use crate::gamma::{brauer_weyl_basis, fixture_basis, FixtureName};
    use crate::matrix::G_I;

    #[test]
    fn star_matrix_for_cl20() {
        let basis = brauer_weyl_basis(AlgebraSignature::new(2, 0).unwrap()).unwrap();
        let star = star_matrix(&basis);
        // sigma1 sigma2 = i sigma3
        assert_eq!(star.matrix, crate::matrix::pauli(3).scale(G_I));
        assert!(star.inner_star);
    }

    #[test]
    fn sitter_star_is_scalar_and_not_inner() {
        let basis = fixture_basis(FixtureName::Sitter).unwrap();
        let star = star_matrix(&basis);
        assert_eq!(star.matrix.scalar(), Some(G_I));
        assert!(!star.inner_star);
    }

    #[test]
    fn transpose_solver_on_cl20() {
        // sigma1 is symmetric, sigma2 antisymmetric, so E must commute
        // with the first generator and anticommute with the second:
        // of the four blades only e1 does.
        let basis = brauer_weyl_basis(AlgebraSignature::new(2, 0).unwrap()).unwrap();
        let out = solve_transpose_symmetry(&basis).unwrap();
        assert_eq!(out.blade.indices, IndexSet::from_indices(&[1]));
        assert_eq!(out.matrix, crate::matrix::pauli(1));
        assert!(out.exact);
    }

    #[test]
    fn conjugation_solver_on_real_basis_gives_identity() {
        let basis = fixture_basis(FixtureName::Majorana31).unwrap();
        let out = solve_complex_conjugation(&basis).unwrap();
        assert_eq!(out.blade.indices, IndexSet::EMPTY);
        assert!(out.exact);
    }

    #[test]
    fn degenerate_ptc_input_is_flagged() {
        let basis = fixture_basis(FixtureName::Canonical).unwrap();
        let id = GaussianMatrix::identity(4);
        let gen = generating_group_from_ptc(&basis, &id, &id, &id).unwrap();
        assert!(gen.degenerate);
        let full = gen.full_cpt_group().unwrap();
        assert_eq!(full.table.order(), 2);
    }
}
