//! Signed basis blades of Cl(p,q) and its complexification.
//!
//! A blade is encoded as a bit set over the generators `e1..en` together
//! with a phase in Z4 (a power of `i`). All arithmetic is exact: the
//! product sign is computed from transposition counts and generator
//! squares, never from floating point.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of generators supported by the `u16` index encoding.
pub const MAX_GENERATORS: u32 = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BladeError {
    #[error("signature ({p},{q}) has {} generators, supported range is 1..={MAX_GENERATORS}", p + q)]
    UnsupportedSignature { p: u32, q: u32 },
    #[error("blade uses generator {index}, but the algebra has only {n} generators")]
    IndexOutOfRange { index: u32, n: u32 },
}

/// Element of Z4 representing the scalar phase `i^k` of a blade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn new(k: u8) -> Phase {
        Phase(k % 4)
    }

    /// Exponent `k` in `i^k`.
    pub fn exponent(self) -> u8 {
        self.0
    }

    /// Complex conjugate: `i^k -> i^-k`.
    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn negate(self) -> Phase {
        Phase((self.0 + 2) % 4)
    }

    /// Multiply by a sign in {+1, -1}.
    pub fn times_sign(self, sign: i8) -> Phase {
        debug_assert!(sign == 1 || sign == -1);
        if sign == 1 {
            self
        } else {
            self.negate()
        }
    }

    /// True for the real phases `+1` and `-1`.
    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// The sign as `+1`/`-1` when the phase is real.
    pub fn real_sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn from_sign(sign: i8) -> Phase {
        if sign >= 0 {
            Phase::ONE
        } else {
            Phase::MINUS_ONE
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{s}")
    }
}

/// Subset of the generators `{1..n}`, encoding the blade `e_S`.
///
/// Bit `i-1` set means generator `e_i` is present; the empty set is the
/// unit `e0 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet(pub u16);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// Build from 1-based generator indices.
    pub fn from_indices(indices: &[u32]) -> IndexSet {
        let mut mask = 0u16;
        for &i in indices {
            assert!(
                (1..=MAX_GENERATORS).contains(&i),
                "generator index {i} outside 1..={MAX_GENERATORS}"
            );
            mask |= 1 << (i - 1);
        }
        IndexSet(mask)
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, index: u32) -> bool {
        (1..=MAX_GENERATORS).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    /// 1-based generator indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        (1..=MAX_GENERATORS).filter(move |&i| self.contains(i))
    }

    pub fn max_index(self) -> u32 {
        16 - self.0.leading_zeros()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        if self.max_index() <= 9 {
            for i in self.iter() {
                write!(f, "{i}")?;
            }
        } else {
            let v: Vec<String> = self.iter().map(|i| i.to_string()).collect();
            write!(f, "{{{}}}", v.join(","))?;
        }
        Ok(())
    }
}

/// A basis element `i^k * e_S` of the (complexified) Clifford algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedBlade {
    pub phase: Phase,
    pub indices: IndexSet,
}

impl SignedBlade {
    pub const UNIT: SignedBlade = SignedBlade {
        phase: Phase::ONE,
        indices: IndexSet::EMPTY,
    };

    pub fn new(phase: Phase, indices: IndexSet) -> SignedBlade {
        SignedBlade { phase, indices }
    }

    /// Positive generator `e_i` (1-based).
    pub fn generator(i: u32) -> SignedBlade {
        SignedBlade::new(Phase::ONE, IndexSet::from_indices(&[i]))
    }

    pub fn from_indices(sign: i8, indices: &[u32]) -> SignedBlade {
        SignedBlade::new(Phase::from_sign(sign), IndexSet::from_indices(indices))
    }

    pub fn grade(self) -> u32 {
        self.indices.grade()
    }

    /// True when the phase lies in {+1, -1}, i.e. the blade belongs to the
    /// real algebra rather than its complexification.
    pub fn is_real(self) -> bool {
        self.phase.is_real()
    }

    pub fn negate(self) -> SignedBlade {
        SignedBlade::new(self.phase.negate(), self.indices)
    }

    /// Grade involution: multiplies a grade-k blade by (-1)^k.
    pub fn grade_involution(self) -> SignedBlade {
        let k = self.grade();
        self.scale_by_parity(k)
    }

    /// Reversion: multiplies a grade-k blade by (-1)^(k(k-1)/2).
    pub fn reversion(self) -> SignedBlade {
        let k = self.grade();
        self.scale_by_parity(k * (k.saturating_sub(1)) / 2)
    }

    /// Clifford conjugation: multiplies a grade-k blade by (-1)^(k(k+1)/2).
    /// Equal to reversion composed with the grade involution.
    pub fn conjugation(self) -> SignedBlade {
        let k = self.grade();
        self.scale_by_parity(k * (k + 1) / 2)
    }

    /// Pseudo-conjugation: complex conjugation of the phase, identity on
    /// the index set.
    pub fn pseudo_conjugation(self) -> SignedBlade {
        SignedBlade::new(self.phase.conj(), self.indices)
    }

    fn scale_by_parity(self, exponent: u32) -> SignedBlade {
        if exponent.is_multiple_of(2) {
            self
        } else {
            self.negate()
        }
    }
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.phase {
            Phase::ONE => "+",
            Phase::I => "+i*",
            Phase::MINUS_ONE => "-",
            _ => "-i*",
        };
        write!(f, "{sign}{}", self.indices)
    }
}

/// Center type of Cl(p,q) by the mod-8 law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterType {
    /// Center is the scalars only.
    Trivial,
    /// Center is spanned by 1 and the volume element.
    TwoElement,
}

/// Division ring class of the irreducible representation, by `p - q mod 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingClass {
    R,
    R2,
    C,
    H,
    H2,
}

impl fmt::Display for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RingClass::R => "R",
            RingClass::R2 => "R+R",
            RingClass::C => "C",
            RingClass::H => "H",
            RingClass::H2 => "H+H",
        };
        write!(f, "{s}")
    }
}

/// The pair (p, q): `p` generators squaring to +1 followed by `q`
/// generators squaring to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraSignature {
    p: u32,
    q: u32,
}

impl AlgebraSignature {
    pub fn new(p: u32, q: u32) -> Result<AlgebraSignature, BladeError> {
        let n = p + q;
        if n == 0 || n > MAX_GENERATORS {
            return Err(BladeError::UnsupportedSignature { p, q });
        }
        Ok(AlgebraSignature { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// Square of generator `e_i` (1-based): +1 for `i <= p`, -1 otherwise.
    pub fn generator_square(&self, i: u32) -> i8 {
        assert!(i >= 1 && i <= self.n(), "generator {i} out of range");
        if i <= self.p {
            1
        } else {
            -1
        }
    }

    pub fn check_blade(&self, b: SignedBlade) -> Result<(), BladeError> {
        let max = b.indices.max_index();
        if max > self.n() {
            return Err(BladeError::IndexOutOfRange {
                index: max,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Geometric product of two signed blades.
    ///
    /// The sign is assembled from (i) the number of transpositions needed
    /// to interleave-sort the concatenated index sequence, computed by a
    /// shifted popcount scan, (ii) the square of each repeated generator,
    /// and (iii) the product of the input phases.
    pub fn product(&self, a: SignedBlade, b: SignedBlade) -> Result<SignedBlade, BladeError> {
        self.check_blade(a)?;
        self.check_blade(b)?;

        let mut sign = reordering_sign(a.indices.0, b.indices.0);
        let mut common = a.indices.0 & b.indices.0;
        while common != 0 {
            let bit = common.trailing_zeros();
            sign *= self.generator_square(bit + 1);
            common &= common - 1;
        }

        let phase = (a.phase * b.phase).times_sign(sign);
        Ok(SignedBlade::new(phase, IndexSet(a.indices.0 ^ b.indices.0)))
    }

    /// The volume element `e_1 e_2 ... e_n` with positive phase.
    pub fn volume_blade(&self) -> SignedBlade {
        SignedBlade::new(Phase::ONE, IndexSet((1u32 << self.n()) as u16 - 1))
    }

    /// Sign of the square of the volume element, by the mod-8 law:
    /// -1 when p - q = 2,3,6,7 (mod 8), +1 when p - q = 0,1,4,5 (mod 8).
    ///
    /// The closed form is cross-checked against the blade product on
    /// every call.
    pub fn volume_square(&self) -> i8 {
        let closed = match self.p_minus_q_mod8() {
            2 | 3 | 6 | 7 => -1,
            _ => 1,
        };
        let omega = self.volume_blade();
        let square = self.product(omega, omega).expect("volume blade is valid");
        assert_eq!(square.indices, IndexSet::EMPTY);
        assert_eq!(
            square.phase.real_sign(),
            Some(closed),
            "mod-8 volume square law disagrees with the blade product for ({},{})",
            self.p,
            self.q
        );
        closed
    }

    /// Center of Cl(p,q) by the mod-8 law: trivial when p - q is even,
    /// {1, omega} when p - q is odd.
    ///
    /// Cross-checked by testing whether the volume element commutes with
    /// every generator.
    pub fn center_type(&self) -> CenterType {
        let closed = match self.p_minus_q_mod8() {
            1 | 3 | 5 | 7 => CenterType::TwoElement,
            _ => CenterType::Trivial,
        };
        let omega = self.volume_blade();
        let central = (1..=self.n()).all(|i| {
            let g = SignedBlade::generator(i);
            let left = self.product(omega, g).expect("valid");
            let right = self.product(g, omega).expect("valid");
            left == right
        });
        assert_eq!(
            central,
            closed == CenterType::TwoElement,
            "mod-8 center law disagrees with brute force for ({},{})",
            self.p,
            self.q
        );
        closed
    }

    /// Division ring of the irreducible representation by `p - q mod 8`.
    pub fn ring_class(&self) -> RingClass {
        match self.p_minus_q_mod8() {
            0 | 2 => RingClass::R,
            1 => RingClass::R2,
            3 | 7 => RingClass::C,
            4 | 6 => RingClass::H,
            _ => RingClass::H2,
        }
    }

    fn p_minus_q_mod8(&self) -> u32 {
        ((self.p as i64 - self.q as i64).rem_euclid(8)) as u32
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Number of transpositions (mod 2, as a sign) needed to merge the index
/// sequences of `e_A * e_B` into a single ascending sequence.
///
/// For each generator in `b`, counts the generators of `a` strictly above
/// it; each such crossing contributes one transposition.
fn reordering_sign(a: u16, b: u16) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: u32, q: u32) -> AlgebraSignature {
        AlgebraSignature::new(p, q).unwrap()
    }

    #[test]
    fn generators_anticommute() {
        let s = sig(2, 2);
        let e1 = SignedBlade::generator(1);
        let e2 = SignedBlade::generator(2);
        assert_eq!(
            s.product(e1, e2).unwrap(),
            SignedBlade::from_indices(1, &[1, 2])
        );
        assert_eq!(
            s.product(e2, e1).unwrap(),
            SignedBlade::from_indices(-1, &[1, 2])
        );
    }

    #[test]
    fn generator_squares_follow_signature() {
        let s = sig(1, 3);
        for i in 1..=4 {
            let e = SignedBlade::generator(i);
            let sq = s.product(e, e).unwrap();
            assert_eq!(sq.indices, IndexSet::EMPTY);
            assert_eq!(sq.phase.real_sign(), Some(if i == 1 { 1 } else { -1 }));
        }
    }

    #[test]
    fn bivector_square_in_spacetime_algebra() {
        // e12 * e12 = -e1 e1 e2 e2 = -(+1)(-1) = +1 in Cl(1,3)
        let s = sig(1, 3);
        let e12 = SignedBlade::from_indices(1, &[1, 2]);
        assert_eq!(s.product(e12, e12).unwrap(), SignedBlade::UNIT);
    }

    #[test]
    fn index_out_of_range_is_an_error() {
        let s = sig(1, 1);
        let bad = SignedBlade::from_indices(1, &[3]);
        assert_eq!(
            s.product(bad, SignedBlade::UNIT),
            Err(BladeError::IndexOutOfRange { index: 3, n: 2 })
        );
    }

    #[test]
    fn involution_signs_on_small_grades() {
        let e12 = SignedBlade::from_indices(1, &[1, 2]);
        assert_eq!(e12.grade_involution(), e12);
        assert_eq!(e12.reversion(), e12.negate());
        let e1 = SignedBlade::generator(1);
        assert_eq!(e1.conjugation(), e1.negate());
    }

    #[test]
    fn pseudo_conjugation_flips_imaginary_phase() {
        let b = SignedBlade::new(Phase::I, IndexSet::from_indices(&[3]));
        assert_eq!(b.pseudo_conjugation().phase, Phase::MINUS_I);
        let r = SignedBlade::from_indices(1, &[1, 2]);
        assert_eq!(r.pseudo_conjugation(), r);
        let mi = SignedBlade::new(Phase::MINUS_I, IndexSet::EMPTY);
        assert_eq!(mi.pseudo_conjugation().phase, Phase::I);
    }

    #[test]
    fn volume_square_examples() {
        assert_eq!(sig(4, 1).volume_square(), -1);
        assert_eq!(sig(1, 3).volume_square(), -1);
        assert_eq!(sig(1, 0).volume_square(), 1);
    }

    #[test]
    fn center_type_examples() {
        assert_eq!(sig(4, 1).center_type(), CenterType::TwoElement);
        assert_eq!(sig(1, 3).center_type(), CenterType::Trivial);
        assert_eq!(sig(0, 1).center_type(), CenterType::TwoElement);
    }

    #[test]
    fn ring_classes_of_the_dirac_subalgebras() {
        assert_eq!(sig(1, 3).ring_class(), RingClass::H);
        assert_eq!(sig(4, 0).ring_class(), RingClass::H);
        assert_eq!(sig(0, 4).ring_class(), RingClass::H);
        assert_eq!(sig(3, 1).ring_class(), RingClass::R);
        assert_eq!(sig(2, 2).ring_class(), RingClass::R);
        assert_eq!(sig(4, 1).ring_class(), RingClass::C);
    }

    #[test]
    fn signature_bounds() {
        assert!(AlgebraSignature::new(0, 0).is_err());
        assert!(AlgebraSignature::new(13, 0).is_err());
        assert!(AlgebraSignature::new(6, 6).is_ok());
    }
}
