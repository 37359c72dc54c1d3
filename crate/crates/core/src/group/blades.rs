//! The finite groups G(p,q) of signed basis blades, generated as dense
//! Cayley tables with a fixed, reproducible element order.

use crate::blade::{AlgebraSignature, IndexSet, Phase, SignedBlade};

use super::{GroupError, GroupTable};

/// Largest n for which dense 2^(n+1) tables are generated.
const DENSE_TABLE_MAX_N: u32 = 10;

/// A blade group G(p,q): the group table plus the blade attached to each
/// element.
///
/// Elements are ordered graded-lexicographically by index set, with the
/// positive-phase blade immediately before its negative, so tables are
/// byte-for-byte reproducible.
#[derive(Debug, Clone)]
pub struct BladeGroup {
    pub sig: AlgebraSignature,
    pub table: GroupTable,
    masks: Vec<u16>,
    position: Vec<Option<usize>>,
}

impl BladeGroup {
    /// Generate the full group of order 2^(n+1).
    pub fn generate(sig: AlgebraSignature) -> Result<BladeGroup, GroupError> {
        let all: Vec<u16> = (0..(1u32 << sig.n()) as u16).collect();
        BladeGroup::from_masks(sig, all)
    }

    /// Subgroup of the blades with even grade, order 2^n.
    pub fn even_subgroup(&self) -> BladeGroup {
        let even: Vec<u16> = self
            .masks
            .iter()
            .copied()
            .filter(|m| m.count_ones() % 2 == 0)
            .collect();
        BladeGroup::from_masks(self.sig, even).expect("even blades are closed")
    }

    fn from_masks(sig: AlgebraSignature, mut masks: Vec<u16>) -> Result<BladeGroup, GroupError> {
        if sig.n() > DENSE_TABLE_MAX_N {
            return Err(GroupError::DenseTableTooLarge(sig.n()));
        }
        masks.sort_by(graded_lex);
        let mut position = vec![None; 1 << sig.n()];
        for (i, &m) in masks.iter().enumerate() {
            position[m as usize] = Some(i);
        }

        let blade_at = |i: usize| {
            let phase = if i.is_multiple_of(2) {
                Phase::ONE
            } else {
                Phase::MINUS_ONE
            };
            SignedBlade::new(phase, IndexSet(masks[i / 2]))
        };
        let index_of = |b: SignedBlade| -> Option<usize> {
            let sign = b.phase.real_sign()?;
            let pos = position[b.indices.0 as usize]?;
            Some(2 * pos + usize::from(sign < 0))
        };

        let order = 2 * masks.len();
        let labels = (0..order).map(|i| blade_at(i).to_string()).collect();
        let mut rows = Vec::with_capacity(order);
        for i in 0..order {
            let a = blade_at(i);
            let mut row = Vec::with_capacity(order);
            for j in 0..order {
                let b = blade_at(j);
                let p = sig.product(a, b).expect("blades valid for signature");
                row.push(index_of(p).ok_or(GroupError::NotClosed)?);
            }
            rows.push(row);
        }
        let table = GroupTable::new(labels, rows)?;
        Ok(BladeGroup {
            sig,
            table,
            masks,
            position,
        })
    }

    pub fn order(&self) -> usize {
        2 * self.masks.len()
    }

    /// The signed blade attached to element `i` of the table.
    pub fn blade_at(&self, i: usize) -> SignedBlade {
        self.blade_at_raw(i)
    }

    fn blade_at_raw(&self, i: usize) -> SignedBlade {
        let mask = self.masks[i / 2];
        let phase = if i.is_multiple_of(2) {
            Phase::ONE
        } else {
            Phase::MINUS_ONE
        };
        SignedBlade::new(phase, IndexSet(mask))
    }

    /// Table index of a real-phase blade, if it belongs to the group.
    pub fn index_of(&self, b: SignedBlade) -> Option<usize> {
        let sign = b.phase.real_sign()?;
        let pos = self.position.get(b.indices.0 as usize).copied().flatten()?;
        Some(2 * pos + usize::from(sign < 0))
    }
}

/// Graded-lexicographic order on index sets: grade first, then the index
/// sequences compared lexicographically.
fn graded_lex(a: &u16, b: &u16) -> std::cmp::Ordering {
    let ga = a.count_ones();
    let gb = b.count_ones();
    ga.cmp(&gb).then_with(|| {
        let ia = IndexSet(*a).iter().collect::<Vec<_>>();
        let ib = IndexSet(*b).iter().collect::<Vec<_>>();
        ia.cmp(&ib)
    })
}

/// Check that the labeled embedding of `h` into the blade group `g` is an
/// injective homomorphism, by full table comparison.
pub fn is_subgroup_of(h: &GroupTable, h_blades: &[SignedBlade], g: &BladeGroup) -> bool {
    if h_blades.len() != h.order() {
        return false;
    }
    let mut map = Vec::with_capacity(h.order());
    for &b in h_blades {
        match g.index_of(b) {
            Some(idx) => map.push(idx),
            None => return false,
        }
    }
    let mut seen = vec![false; g.order()];
    for &m in &map {
        if seen[m] {
            return false;
        }
        seen[m] = true;
    }
    for a in 0..h.order() {
        for b in 0..h.order() {
            if map[h.mul(a, b)] != g.table.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}
