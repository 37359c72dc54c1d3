//! Canonical small 2-groups and the central product gluing.

use std::fmt;

use super::{GroupError, GroupTable};

/// The reference groups used by the classification isomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGroup {
    /// Quaternion group of order 8.
    Q4,
    /// Dihedral group of order 8.
    D4,
    /// Klein four-group.
    D2,
    /// Cyclic group of order 4.
    Z4,
    /// Cyclic group of order 2.
    Z2,
}

impl StandardGroup {
    pub fn parse(s: &str) -> Option<StandardGroup> {
        match s {
            "Q4" | "q4" => Some(StandardGroup::Q4),
            "D4" | "d4" => Some(StandardGroup::D4),
            "D2" | "d2" => Some(StandardGroup::D2),
            "Z4" | "z4" => Some(StandardGroup::Z4),
            "Z2" | "z2" => Some(StandardGroup::Z2),
            _ => None,
        }
    }
}

impl fmt::Display for StandardGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StandardGroup::Q4 => "Q4",
            StandardGroup::D4 => "D4",
            StandardGroup::D2 => "D2",
            StandardGroup::Z4 => "Z4",
            StandardGroup::Z2 => "Z2",
        };
        write!(f, "{s}")
    }
}

/// Build the named group from its defining presentation.
pub fn standard_group(name: StandardGroup) -> GroupTable {
    match name {
        StandardGroup::Z2 => cyclic(2),
        StandardGroup::Z4 => cyclic(4),
        StandardGroup::D2 => {
            // (Z2)^2 under componentwise addition
            let labels = vec!["1", "a", "b", "ab"];
            let rows = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
            GroupTable::new(labels.into_iter().map(String::from).collect(), rows)
                .expect("D2 table is a group")
        }
        StandardGroup::Q4 => {
            // elements (s, u): sign s in {0,1}, unit u in {1, i, j, k}
            let unit_mul = |a: usize, b: usize| -> (usize, usize) {
                // returns (sign flip, unit index); units 0=1, 1=i, 2=j, 3=k
                match (a, b) {
                    (0, u) => (0, u),
                    (u, 0) => (0, u),
                    (u, v) if u == v => (1, 0),
                    (1, 2) => (0, 3),
                    (2, 1) => (1, 3),
                    (2, 3) => (0, 1),
                    (3, 2) => (1, 1),
                    (3, 1) => (0, 2),
                    (1, 3) => (1, 2),
                    _ => unreachable!(),
                }
            };
            let index = |sign: usize, unit: usize| unit * 2 + sign;
            let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
                .into_iter()
                .map(String::from)
                .collect();
            let rows = (0..8usize)
                .map(|x| {
                    (0..8usize)
                        .map(|y| {
                            let (sx, ux) = (x % 2, x / 2);
                            let (sy, uy) = (y % 2, y / 2);
                            let (flip, u) = unit_mul(ux, uy);
                            index((sx + sy + flip) % 2, u)
                        })
                        .collect()
                })
                .collect();
            GroupTable::new(labels, rows).expect("Q4 table is a group")
        }
        StandardGroup::D4 => {
            // elements r^a s^x with r^4 = s^2 = 1, s r s = r^-1
            let index = |a: usize, x: usize| x * 4 + a;
            let labels = ["1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
                .into_iter()
                .map(String::from)
                .collect();
            let rows = (0..8usize)
                .map(|e1| {
                    (0..8usize)
                        .map(|e2| {
                            let (a, x) = (e1 % 4, e1 / 4);
                            let (b, y) = (e2 % 4, e2 / 4);
                            // (r^a s^x)(r^b s^y) = r^(a + b or a - b) s^(x+y)
                            let exp = if x == 0 { (a + b) % 4 } else { (a + 4 - b) % 4 };
                            index(exp, (x + y) % 2)
                        })
                        .collect()
                })
                .collect();
            GroupTable::new(labels, rows).expect("D4 table is a group")
        }
    }
}

fn cyclic(n: usize) -> GroupTable {
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "a".to_string(),
            _ => format!("a{k}"),
        })
        .collect();
    let rows = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    GroupTable::new(labels, rows).expect("cyclic table is a group")
}

/// Central product `(G x H) / {(1,1), (z_G, z_H)}`.
///
/// The glued involutions are the lowest-indexed central involution of
/// each factor. For a Z4 factor that is the square of the generator (its
/// only involution); for D2 all three involutions are central and related
/// by automorphisms, so the choice does not affect the isomorphism class.
pub fn central_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable, GroupError> {
    let zg = central_involution(g)?;
    let zh = central_involution(h)?;

    let pair = |a: usize, b: usize| a * h.order() + b;
    let partner = |a: usize, b: usize| pair(g.mul(a, zg), h.mul(b, zh));
    // coset representative: lexicographically smaller pair index
    let rep = |a: usize, b: usize| pair(a, b).min(partner(a, b));

    let mut reps: Vec<usize> = (0..g.order())
        .flat_map(|a| (0..h.order()).map(move |b| rep(a, b)))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    assert_eq!(reps.len(), g.order() * h.order() / 2);

    let pos = |r: usize| reps.binary_search(&r).expect("rep present");
    let labels = reps
        .iter()
        .map(|&r| format!("({},{})", g.label(r / h.order()), h.label(r % h.order())))
        .collect();
    let rows = reps
        .iter()
        .map(|&r1| {
            let (a1, b1) = (r1 / h.order(), r1 % h.order());
            reps.iter()
                .map(|&r2| {
                    let (a2, b2) = (r2 / h.order(), r2 % h.order());
                    pos(rep(g.mul(a1, a2), h.mul(b1, b2)))
                })
                .collect()
        })
        .collect();
    GroupTable::new(labels, rows)
}

fn central_involution(g: &GroupTable) -> Result<usize, GroupError> {
    g.center_indices()
        .into_iter()
        .find(|&z| z != g.identity() && g.mul(z, z) == g.identity())
        .ok_or(GroupError::NoCentralInvolution)
}
