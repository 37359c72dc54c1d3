//! The published 8x8 multiplication tables, embedded cell-for-cell as
//! printed. Each cell is `(sign, label)`; labels are generator-subscript
//! strings in the source's numbering (`"1"` the identity, `"w"` the
//! volume element). The tables are re-derived by the blade engine and
//! compared against these fixtures; a printed cell may disagree with the
//! recomputation, which is exactly what the comparison is for.

use crate::blade::{AlgebraSignature, BladeError, SignedBlade};

/// One printed table: header labels plus the 64 printed cells.
pub struct PrintedTable {
    pub name: &'static str,
    /// 0 when the source numbers generators from gamma_0, 1 when from
    /// gamma_1.
    pub first_index: u32,
    pub header: [&'static str; 8],
    pub cells: [[(i8, &'static str); 8]; 8],
}

/// Generating-group table of the P, T, C representatives in the
/// spacetime algebra (source numbering gamma_0..gamma_3).
pub const TABLE_PTC_13: PrintedTable = PrintedTable {
    name: "generating-group(1,3)",
    first_index: 0,
    header: ["1", "0", "13", "013", "20", "2", "2013", "213"],
    cells: [
        [
            (1, "1"),
            (1, "0"),
            (1, "13"),
            (1, "013"),
            (1, "2"),
            (1, "2"),
            (1, "2013"),
            (1, "213"),
        ],
        [
            (1, "0"),
            (1, "1"),
            (1, "013"),
            (1, "13"),
            (-1, "2"),
            (-1, "20"),
            (-1, "213"),
            (-1, "2013"),
        ],
        [
            (1, "13"),
            (1, "013"),
            (-1, "1"),
            (-1, "0"),
            (1, "2013"),
            (1, "213"),
            (-1, "20"),
            (-1, "2"),
        ],
        [
            (1, "013"),
            (1, "13"),
            (-1, "0"),
            (-1, "1"),
            (-1, "213"),
            (-1, "2013"),
            (1, "2"),
            (1, "20"),
        ],
        [
            (1, "20"),
            (1, "2"),
            (1, "2013"),
            (1, "213"),
            (1, "1"),
            (1, "0"),
            (1, "13"),
            (1, "013"),
        ],
        [
            (1, "2"),
            (1, "20"),
            (1, "213"),
            (1, "2013"),
            (-1, "0"),
            (-1, "1"),
            (-1, "013"),
            (-1, "13"),
        ],
        [
            (1, "2013"),
            (1, "213"),
            (-1, "20"),
            (1, "2"),
            (1, "13"),
            (1, "013"),
            (-1, "1"),
            (-1, "0"),
        ],
        [
            (1, "213"),
            (1, "2013"),
            (-1, "2"),
            (-1, "20"),
            (-1, "013"),
            (-1, "13"),
            (1, "0"),
            (1, "1"),
        ],
    ],
};

/// Extended automorphism group of the spacetime algebra in the canonical
/// basis (source numbering gamma_0..gamma_3).
pub const TABLE_EXT_13: PrintedTable = PrintedTable {
    name: "ext(1,3)",
    first_index: 0,
    header: ["1", "w", "13", "02", "013", "2", "0", "123"],
    cells: [
        [
            (1, "1"),
            (1, "w"),
            (1, "13"),
            (1, "02"),
            (1, "013"),
            (1, "2"),
            (1, "0"),
            (1, "123"),
        ],
        [
            (1, "w"),
            (-1, "1"),
            (1, "02"),
            (-1, "012"),
            (-1, "2"),
            (1, "013"),
            (-1, "123"),
            (1, "0"),
        ],
        [
            (1, "13"),
            (1, "02"),
            (-1, "1"),
            (-1, "w"),
            (-1, "0"),
            (-1, "123"),
            (1, "013"),
            (1, "2"),
        ],
        [
            (1, "02"),
            (-1, "13"),
            (-1, "w"),
            (1, "1"),
            (1, "123"),
            (-1, "0"),
            (-1, "2"),
            (1, "013"),
        ],
        [
            (1, "013"),
            (1, "2"),
            (-1, "0"),
            (-1, "123"),
            (-1, "1"),
            (-1, "w"),
            (1, "13"),
            (1, "02"),
        ],
        [
            (1, "2"),
            (-1, "013"),
            (-1, "123"),
            (1, "0"),
            (1, "w"),
            (-1, "1"),
            (-1, "02"),
            (1, "13"),
        ],
        [
            (1, "0"),
            (1, "123"),
            (1, "013"),
            (1, "2"),
            (1, "13"),
            (1, "02"),
            (1, "1"),
            (1, "w"),
        ],
        [
            (1, "123"),
            (-1, "0"),
            (1, "2"),
            (-1, "013"),
            (-1, "02"),
            (1, "13"),
            (-1, "w"),
            (1, "1"),
        ],
    ],
};

/// Extended automorphism group of Cl(4,1) in the tensor-product basis
/// (source numbering gamma_1..gamma_5).
pub const TABLE_EXT_41: PrintedTable = PrintedTable {
    name: "ext(4,1)",
    first_index: 1,
    header: ["1", "w", "34", "125", "123", "45", "124", "35"],
    cells: [
        [
            (1, "1"),
            (1, "w"),
            (1, "34"),
            (1, "125"),
            (1, "123"),
            (1, "45"),
            (1, "124"),
            (1, "35"),
        ],
        [
            (1, "w"),
            (-1, "1"),
            (-1, "125"),
            (1, "34"),
            (-1, "45"),
            (1, "123"),
            (1, "35"),
            (-1, "124"),
        ],
        [
            (1, "34"),
            (-1, "125"),
            (-1, "1"),
            (1, "w"),
            (-1, "124"),
            (1, "35"),
            (1, "123"),
            (-1, "45"),
        ],
        [
            (1, "125"),
            (1, "34"),
            (1, "w"),
            (1, "1"),
            (1, "35"),
            (1, "124"),
            (1, "45"),
            (-1, "123"),
        ],
        [
            (1, "123"),
            (-1, "45"),
            (1, "124"),
            (-1, "35"),
            (-1, "1"),
            (1, "w"),
            (-1, "34"),
            (1, "125"),
        ],
        [
            (1, "45"),
            (1, "123"),
            (-1, "35"),
            (-1, "124"),
            (1, "w"),
            (1, "1"),
            (-1, "125"),
            (1, "34"),
        ],
        [
            (1, "124"),
            (1, "35"),
            (-1, "123"),
            (1, "45"),
            (-1, "34"),
            (1, "125"),
            (-1, "1"),
            (-1, "w"),
        ],
        [
            (1, "35"),
            (-1, "124"),
            (1, "45"),
            (-1, "123"),
            (-1, "125"),
            (1, "34"),
            (-1, "w"),
            (1, "1"),
        ],
    ],
};

impl PrintedTable {
    /// Parse a printed label into a signed blade: a digit sequence in the
    /// source's generator numbering, evaluated as the product of the
    /// generators in the written order.
    pub fn parse_label(
        &self,
        sig: AlgebraSignature,
        sign: i8,
        label: &str,
    ) -> Result<SignedBlade, BladeError> {
        let mut blade = SignedBlade::from_indices(sign, &[]);
        if label == "w" {
            return Ok(if sign < 0 {
                sig.volume_blade().negate()
            } else {
                sig.volume_blade()
            });
        }
        if label == "1" {
            return Ok(blade);
        }
        for ch in label.chars() {
            let digit = ch.to_digit(10).ok_or(BladeError::IndexOutOfRange {
                index: 0,
                n: sig.n(),
            })?;
            let generator = digit + 1 - self.first_index;
            blade = sig.product(blade, SignedBlade::generator(generator))?;
        }
        Ok(blade)
    }
}
