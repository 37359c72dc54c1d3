//! Finite groups given by explicit Cayley tables, and the analysis
//! operations used on the blade groups G(p,q): order structures, centers,
//! central products, classification, and isomorphism testing.

mod blades;
mod iso;
mod salingaros;
mod standard;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use blades::{is_subgroup_of, BladeGroup};
pub use iso::{is_isomorphic, verify_isomorphism};
pub use salingaros::{classify_salingaros, SalingarosClass};
pub use standard::{central_product, standard_group, StandardGroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("group order {order} exceeds the supported limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("element {index} has order {order}, expected 1, 2 or 4")]
    BadElementOrder { index: usize, order: usize },
    #[error("group has no central involution to glue")]
    NoCentralInvolution,
    #[error("not in the Salingaros taxonomy: {0}")]
    NotSalingaros(String),
    #[error("subset is not closed under the group product")]
    NotClosed,
    #[error("signature has too many generators for dense-table mode: n = {0}")]
    DenseTableTooLarge(u32),
    #[error("element is not a real-phase blade of the group")]
    NotABladeElement,
}

/// A finite group: an ordered element list and the full multiplication
/// table of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    labels: Vec<String>,
    table: Vec<u16>,
    identity: usize,
}

impl GroupTable {
    /// Build and validate a table. Checks closure bounds, a unique
    /// two-sided identity, unique inverses, and associativity
    /// (exhaustively up to order 32, on sampled triples above).
    pub fn new(labels: Vec<String>, rows: Vec<Vec<usize>>) -> Result<GroupTable, GroupError> {
        let order = labels.len();
        if order == 0 {
            return Err(GroupError::NotAGroup("empty element list".into()));
        }
        if order > u16::MAX as usize {
            return Err(GroupError::TooLarge {
                order,
                limit: u16::MAX as usize,
            });
        }
        if rows.len() != order {
            return Err(GroupError::NotAGroup("row count != order".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order {
                return Err(GroupError::NotAGroup("ragged table".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::NotAGroup(format!(
                        "entry {v} out of range 0..{order}"
                    )));
                }
                table.push(v as u16);
            }
        }

        let mut identity = None;
        for e in 0..order {
            let left = (0..order).all(|x| table[e * order + x] as usize == x);
            let right = (0..order).all(|x| table[x * order + e] as usize == x);
            if left && right {
                if identity.is_some() {
                    return Err(GroupError::NotAGroup("identity is not unique".into()));
                }
                identity = Some(e);
            }
        }
        let identity =
            identity.ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;

        let g = GroupTable {
            labels,
            table,
            identity,
        };

        for x in 0..order {
            let inverses = (0..order)
                .filter(|&y| g.mul(x, y) == identity && g.mul(y, x) == identity)
                .count();
            if inverses != 1 {
                return Err(GroupError::NotAGroup(format!(
                    "element {x} has {inverses} inverses"
                )));
            }
        }

        if order <= 32 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                            return Err(GroupError::NotAGroup(format!(
                                "associativity fails on ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state as usize
            };
            for _ in 0..20_000 {
                let (a, b, c) = (next() % order, next() % order, next() % order);
                if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                    return Err(GroupError::NotAGroup(format!(
                        "associativity fails on ({a},{b},{c})"
                    )));
                }
            }
        }

        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order())
            .find(|&y| self.mul(x, y) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
            assert!(k <= self.order(), "element order exceeds group order");
        }
        k
    }

    /// Counts of order-2 and order-4 elements. Errors when any element
    /// has a different composite order (the groups in scope have exponent
    /// dividing 4).
    pub fn order_structure(&self) -> Result<OrderStructure, GroupError> {
        let mut involutions = 0;
        let mut order4 = 0;
        for x in 0..self.order() {
            match self.element_order(x) {
                1 => {}
                2 => involutions += 1,
                4 => order4 += 1,
                order => return Err(GroupError::BadElementOrder { index: x, order }),
            }
        }
        Ok(OrderStructure {
            involutions,
            order4,
        })
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn centralizer_size(&self, x: usize) -> usize {
        (0..self.order())
            .filter(|&y| self.mul(x, y) == self.mul(y, x))
            .count()
    }

    pub fn center_indices(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| self.centralizer_size(x) == self.order())
            .collect()
    }

    /// The center as a subgroup table, with a structural label.
    pub fn center(&self) -> (GroupTable, CenterLabel) {
        let indices = self.center_indices();
        let sub = self
            .subgroup(&indices)
            .expect("center is closed under the product");
        let label = CenterLabel::of(&sub);
        (sub, label)
    }

    /// Subgroup generated by a set of elements. In a finite group the
    /// closed sub-semigroup containing the identity is already a
    /// subgroup, so iterating products to a fixpoint suffices.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order()];
        in_set[self.identity] = true;
        for &s in seed {
            in_set[s] = true;
        }
        loop {
            let members: Vec<usize> = (0..self.order()).filter(|&x| in_set[x]).collect();
            let mut added = false;
            for &a in &members {
                for &b in &members {
                    let p = self.mul(a, b);
                    if !in_set[p] {
                        in_set[p] = true;
                        added = true;
                    }
                }
            }
            if !added {
                return members;
            }
        }
    }

    /// Subgroup generated by all commutators.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut commutators = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)));
                commutators.push(c);
            }
        }
        commutators.sort_unstable();
        commutators.dedup();
        self.closure(&commutators)
    }

    /// Extract a closed subset as its own group, keeping labels.
    pub fn subgroup(&self, elements: &[usize]) -> Result<GroupTable, GroupError> {
        let mut sorted: Vec<usize> = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let pos = |x: usize| sorted.binary_search(&x).ok();
        let mut rows = Vec::with_capacity(sorted.len());
        for &a in &sorted {
            let mut row = Vec::with_capacity(sorted.len());
            for &b in &sorted {
                let p = pos(self.mul(a, b)).ok_or(GroupError::NotClosed)?;
                row.push(p);
            }
            rows.push(row);
        }
        let labels = sorted.iter().map(|&i| self.labels[i].clone()).collect();
        GroupTable::new(labels, rows)
    }

    pub fn to_json(&self) -> GroupTableJson {
        GroupTableJson {
            order: self.order(),
            elements: self.labels.clone(),
            table: (0..self.order())
                .map(|i| {
                    (0..self.order())
                        .map(|j| self.table[i * self.order() + j])
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(json: &GroupTableJson) -> Result<GroupTable, GroupError> {
        let rows = json
            .table
            .iter()
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect();
        GroupTable::new(json.elements.clone(), rows)
    }
}

/// Wire form of a group table: `{order, elements, table}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupTableJson {
    pub order: usize,
    pub elements: Vec<String>,
    pub table: Vec<Vec<u16>>,
}

/// Counts of order-2 and order-4 elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStructure {
    pub involutions: usize,
    pub order4: usize,
}

impl fmt::Display for OrderStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.involutions, self.order4)
    }
}

/// Structural label of a center (all centers in scope have order <= 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterLabel {
    Z2,
    Z4,
    Z2xZ2,
    Other(usize),
}

impl CenterLabel {
    fn of(center: &GroupTable) -> CenterLabel {
        match center.order() {
            2 => CenterLabel::Z2,
            4 => {
                let exponent = (0..4)
                    .map(|i| center.element_order(i))
                    .max()
                    .expect("nonempty");
                if exponent == 4 {
                    CenterLabel::Z4
                } else {
                    CenterLabel::Z2xZ2
                }
            }
            n => CenterLabel::Other(n),
        }
    }
}

impl fmt::Display for CenterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterLabel::Z2 => write!(f, "Z2"),
            CenterLabel::Z4 => write!(f, "Z4"),
            CenterLabel::Z2xZ2 => write!(f, "Z2xZ2"),
            CenterLabel::Other(n) => write!(f, "order-{n}"),
        }
    }
}
