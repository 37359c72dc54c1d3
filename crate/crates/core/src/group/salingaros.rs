//! Classification of the blade groups G(p,q) into the Salingaros
//! families. The family follows from the center, the index within a
//! family from the group order together with the involution count (the
//! two extraspecial types of a given order differ only there).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CenterLabel, GroupError, GroupTable};

/// Salingaros class of a finite 2-group of blade type.
///
/// `N(k)` are the extraspecial groups (center Z2), `Omega(k)` the
/// center-Klein and `S(k)` the center-Z4 families, with the three small
/// abelian base cases listed separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SalingarosClass {
    Z2,
    Omega0,
    S0,
    N(u32),
    Omega(u32),
    S(u32),
}

impl fmt::Display for SalingarosClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SalingarosClass::Z2 => write!(f, "Z2"),
            SalingarosClass::Omega0 => write!(f, "Omega0"),
            SalingarosClass::S0 => write!(f, "S0"),
            SalingarosClass::N(k) => write!(f, "N{k}"),
            SalingarosClass::Omega(k) => write!(f, "Omega{k}"),
            SalingarosClass::S(k) => write!(f, "S{k}"),
        }
    }
}

/// Classify a group of order `2^(n+1)` arising from (or abstractly
/// isomorphic to) some G(p,q).
pub fn classify_salingaros(g: &GroupTable) -> Result<SalingarosClass, GroupError> {
    let order = g.order();
    if !order.is_power_of_two() || order < 2 {
        return Err(GroupError::NotSalingaros(format!(
            "order {order} is not a power of two"
        )));
    }
    let n = order.trailing_zeros() - 1;

    // Base cases of order 2 and 4.
    if order == 2 {
        return Ok(SalingarosClass::Z2);
    }
    if order == 4 {
        let exponent = (0..4).map(|x| g.element_order(x)).max().expect("order 4");
        return Ok(match exponent {
            4 => SalingarosClass::S0,
            _ => SalingarosClass::Omega0,
        });
    }

    let structure = g.order_structure()?;
    let inv = structure.involutions as i64;
    let (_, center) = g.center();
    match center {
        CenterLabel::Z2 => {
            if !n.is_multiple_of(2) {
                return Err(GroupError::NotSalingaros(format!(
                    "center Z2 with odd n = {n}"
                )));
            }
            let base = 1i64 << n;
            let offset = 1i64 << (n / 2);
            if inv == base + offset - 1 {
                Ok(SalingarosClass::N(n - 1))
            } else if inv == base - offset - 1 {
                Ok(SalingarosClass::N(n))
            } else {
                Err(GroupError::NotSalingaros(format!(
                    "extraspecial involution count {inv} matches neither type"
                )))
            }
        }
        CenterLabel::Z4 => {
            if n.is_multiple_of(2) {
                return Err(GroupError::NotSalingaros(format!(
                    "center Z4 with even n = {n}"
                )));
            }
            Ok(SalingarosClass::S((n - 1) / 2))
        }
        CenterLabel::Z2xZ2 => {
            if n.is_multiple_of(2) {
                return Err(GroupError::NotSalingaros(format!(
                    "center Z2xZ2 with even n = {n}"
                )));
            }
            let base = 1i64 << n;
            let offset = 1i64 << n.div_ceil(2);
            if inv == base + offset - 1 {
                Ok(SalingarosClass::Omega(n - 2))
            } else if inv == base - offset - 1 {
                Ok(SalingarosClass::Omega(n - 1))
            } else {
                Err(GroupError::NotSalingaros(format!(
                    "near-extraspecial involution count {inv} matches neither type"
                )))
            }
        }
        other => Err(GroupError::NotSalingaros(format!(
            "unexpected center {other}"
        ))),
    }
}
