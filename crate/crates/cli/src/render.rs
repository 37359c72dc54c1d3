//! Text rendering of Cayley tables and extended automorphism groups.

use clifford_cpt::ext::{ExtGroup, ExtKey};
use clifford_cpt::gamma::GammaBasis;
use clifford_cpt::group::GroupTable;

/// Text table capped at order 64; larger tables only ship as JSON.
const TEXT_TABLE_CAP: usize = 64;

pub fn cayley_table(group: &GroupTable) -> String {
    let order = group.order();
    if order > TEXT_TABLE_CAP {
        return format!(
            "  (table with {order} x {order} entries omitted in text mode; use --format json)\n"
        );
    }
    let width = group.labels().iter().map(|l| l.len()).max().unwrap_or(1);
    let mut out = String::new();
    out.push_str(&format!("{:>width$} |", ""));
    for j in 0..order {
        out.push_str(&format!(" {:>width$}", group.label(j)));
    }
    out.push('\n');
    out.push_str(&format!("{:->width$}-+", ""));
    out.push_str(&"-".repeat((width + 1) * order));
    out.push('\n');
    for i in 0..order {
        out.push_str(&format!("{:>width$} |", group.label(i)));
        for j in 0..order {
            out.push_str(&format!(" {:>width$}", group.label(group.mul(i, j))));
        }
        out.push('\n');
    }
    out
}

pub fn ext_group(basis: &GammaBasis, ext: &ExtGroup) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "extended automorphism group over the {} basis of {}\n",
        basis.name, basis.sig
    ));
    let names: Vec<String> = ext
        .blades
        .iter()
        .map(|b| basis.blade_name(b.indices))
        .collect();
    for (key, (blade, name)) in ExtKey::ALL.iter().zip(ext.blades.iter().zip(&names)) {
        out.push_str(&format!("  {key:>2} = {name:<6} ({blade})\n"));
    }
    if !ext.inner_star {
        out.push_str("  (odd n: W is a Schur scalar; the grade involution is not inner)\n");
    }
    if !ext.conjugation_exact {
        out.push_str(
            "  (conjugate representation is inequivalent; Pi follows the conventional \
             representative)\n",
        );
    }

    let width = names.iter().map(|n| n.len() + 1).max().unwrap_or(2);
    out.push_str(&format!("\n{:>width$} |", ""));
    for name in &names {
        out.push_str(&format!(" {name:>width$}"));
    }
    out.push('\n');
    out.push_str(&format!(
        "{:->width$}-+{}\n",
        "",
        "-".repeat((width + 1) * 8)
    ));
    for a in 0..8 {
        out.push_str(&format!("{:>width$} |", names[a]));
        for b in 0..8 {
            let (key, sign) = ext.table[a][b];
            let cell = if sign < 0 {
                format!("-{}", names[key])
            } else {
                names[key].clone()
            };
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push('\n');
    }

    out.push_str(&format!(
        "\nsignature (W,E,C,Pi,K,S,F squared): {}\n",
        ext.signature_string()
    ));
    let (inv, ord4) = ext.rep_order_structure();
    out.push_str(&format!("representative order structure: ({inv},{ord4})\n"));

    match ext.full_cpt_group() {
        Ok(full) => {
            let structure = full
                .table
                .order_structure()
                .map(|s| s.to_string())
                .unwrap_or_else(|_| "n/a".to_string());
            let (_, center) = full.table.center();
            out.push_str(&format!(
                "full covering group: order {}, order structure {}, center {}, {}\n",
                full.table.order(),
                structure,
                center,
                if full.table.is_abelian() {
                    "abelian"
                } else {
                    "non-abelian"
                }
            ));
        }
        Err(e) => out.push_str(&format!("full covering group: unavailable ({e})\n")),
    }
    out
}
