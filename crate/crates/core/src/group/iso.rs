//! Isomorphism testing by invariant fingerprints plus a backtracking
//! generator-mapping search. Every positive answer comes with an explicit
//! witness map that is re-verified as a bijective homomorphism by full
//! table comparison.

use super::{GroupError, GroupTable};

const ISO_SIZE_LIMIT: usize = 128;

/// Cheap isomorphism invariants compared before any search.
#[derive(Debug, PartialEq, Eq)]
struct Fingerprint {
    order: usize,
    abelian: bool,
    /// (element order, multiplicity), sorted.
    order_profile: Vec<(usize, usize)>,
    center_size: usize,
    centralizer_profile: Vec<usize>,
    commutator_size: usize,
}

fn fingerprint(g: &GroupTable) -> Fingerprint {
    let mut orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    orders.sort_unstable();
    let mut order_profile = Vec::new();
    for &o in &orders {
        match order_profile.last_mut() {
            Some((v, count)) if *v == o => *count += 1,
            _ => order_profile.push((o, 1)),
        }
    }
    let mut centralizer_profile: Vec<usize> =
        (0..g.order()).map(|x| g.centralizer_size(x)).collect();
    centralizer_profile.sort_unstable();
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        order_profile,
        center_size: g.center_indices().len(),
        centralizer_profile,
        commutator_size: g.commutator_subgroup().len(),
    }
}

/// Decide isomorphism; on success returns the witness `map` with
/// `map[i]` the image in `h` of element `i` of `g`.
pub fn is_isomorphic(g: &GroupTable, h: &GroupTable) -> Result<Option<Vec<usize>>, GroupError> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.order() > ISO_SIZE_LIMIT {
        return Err(GroupError::TooLarge {
            order: g.order(),
            limit: ISO_SIZE_LIMIT,
        });
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }

    let generators = generating_sequence(g);
    let mut search = Search {
        g,
        h,
        generators: &generators,
        img: vec![None; g.order()],
        used: vec![None; h.order()],
        mapped: Vec::with_capacity(g.order()),
    };
    search.assign(g.identity(), h.identity());

    if search.run(0) {
        let map: Vec<usize> = search.img.iter().map(|v| v.expect("total map")).collect();
        assert!(
            verify_isomorphism(g, h, &map),
            "search produced a non-isomorphism"
        );
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Full verification of a candidate witness: bijectivity plus the
/// homomorphism property on every pair.
pub fn verify_isomorphism(g: &GroupTable, h: &GroupTable, map: &[usize]) -> bool {
    if map.len() != g.order() || g.order() != h.order() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &v in map {
        if v >= h.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

/// Greedy irredundant generating sequence: repeatedly adjoin the first
/// element outside the subgroup generated so far. For 2-groups this gives
/// at most log2(order) generators.
fn generating_sequence(g: &GroupTable) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut generated = g.closure(&[]);
    while generated.len() < g.order() {
        let next = (0..g.order())
            .find(|x| generated.binary_search(x).is_err())
            .expect("subgroup is proper");
        gens.push(next);
        generated = g.closure(&gens);
    }
    gens
}

struct Search<'a> {
    g: &'a GroupTable,
    h: &'a GroupTable,
    generators: &'a [usize],
    img: Vec<Option<usize>>,
    used: Vec<Option<usize>>,
    /// Elements of `g` with an image, in assignment order; doubles as the
    /// trail for backtracking.
    mapped: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, x: usize, y: usize) {
        self.img[x] = Some(y);
        self.used[y] = Some(x);
        self.mapped.push(x);
    }

    fn rollback(&mut self, mark: usize) {
        while self.mapped.len() > mark {
            let x = self.mapped.pop().expect("nonempty trail");
            let y = self.img[x].take().expect("assigned");
            self.used[y] = None;
        }
    }

    /// Close the partial map under products; false on any conflict.
    /// Processing every pair `(mapped[i], mapped[j])` with `j <= i` in
    /// both orders covers all pairs, including those involving elements
    /// discovered mid-propagation.
    fn propagate(&mut self) -> bool {
        let mut i = 0;
        while i < self.mapped.len() {
            let a = self.mapped[i];
            for j in 0..=i {
                let b = self.mapped[j];
                for (x, y) in [(a, b), (b, a)] {
                    let p = self.g.mul(x, y);
                    let q = self
                        .h
                        .mul(self.img[x].expect("mapped"), self.img[y].expect("mapped"));
                    match self.img[p] {
                        Some(existing) => {
                            if existing != q {
                                return false;
                            }
                        }
                        None => {
                            if self.used[q].is_some() {
                                return false;
                            }
                            self.assign(p, q);
                        }
                    }
                }
            }
            i += 1;
        }
        true
    }

    fn run(&mut self, level: usize) -> bool {
        if level == self.generators.len() {
            return self.mapped.len() == self.g.order();
        }
        let gen = self.generators[level];
        let gen_order = self.g.element_order(gen);
        let gen_centralizer = self.g.centralizer_size(gen);
        for candidate in 0..self.h.order() {
            if self.used[candidate].is_some()
                || self.h.element_order(candidate) != gen_order
                || self.h.centralizer_size(candidate) != gen_centralizer
            {
                continue;
            }
            let mark = self.mapped.len();
            self.assign(gen, candidate);
            if self.propagate() && self.run(level + 1) {
                return true;
            }
            self.rollback(mark);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{standard_group, StandardGroup};

    #[test]
    fn identity_witness_on_equal_groups() {
        let q4 = standard_group(StandardGroup::Q4);
        let map = is_isomorphic(&q4, &q4)
            .unwrap()
            .expect("isomorphic to itself");
        assert!(verify_isomorphism(&q4, &q4, &map));
    }

    #[test]
    fn q4_not_isomorphic_to_d4() {
        let q4 = standard_group(StandardGroup::Q4);
        let d4 = standard_group(StandardGroup::D4);
        assert_eq!(is_isomorphic(&q4, &d4).unwrap(), None);
    }

    #[test]
    fn relabeled_group_is_isomorphic() {
        let d4 = standard_group(StandardGroup::D4);
        // Conjugate the table by a permutation and check the search
        // recovers an isomorphism.
        let perm: Vec<usize> = vec![3, 5, 0, 7, 1, 6, 2, 4];
        let mut inv = [0; 8];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let labels = (0..8).map(|i| format!("x{i}")).collect();
        let rows = (0..8)
            .map(|a| (0..8).map(|b| perm[d4.mul(inv[a], inv[b])]).collect())
            .collect();
        let shuffled = GroupTable::new(labels, rows).unwrap();
        let map = is_isomorphic(&d4, &shuffled).unwrap().expect("isomorphic");
        assert!(verify_isomorphism(&d4, &shuffled, &map));
    }
}
