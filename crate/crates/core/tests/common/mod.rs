//! Shared test oracles, independent of the library's fast paths.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use clifford_cpt::blade::{AlgebraSignature, Phase, SignedBlade};

/// A blade as a literal word `i^k * e_{f1} e_{f2} ...` over generator
/// indices, reduced by explicit adjacent transpositions. This is the
/// symbol-pushing oracle for the bit-set product: no popcount tricks,
/// just bubble sort with a sign flip per swap and cancellation of equal
/// neighbours by the generator square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordBlade {
    pub k: u8,
    pub factors: Vec<u32>,
}

impl WordBlade {
    pub fn from_signed(b: SignedBlade) -> WordBlade {
        WordBlade {
            k: b.phase.exponent(),
            factors: b.indices.iter().collect(),
        }
    }

    pub fn to_signed(&self) -> SignedBlade {
        let mut seen = self.factors.clone();
        seen.sort_unstable();
        seen.windows(2)
            .for_each(|w| assert_ne!(w[0], w[1], "not reduced"));
        SignedBlade::new(
            Phase::new(self.k),
            clifford_cpt::blade::IndexSet::from_indices(&self.factors),
        )
    }
}

/// Multiply two word blades by concatenation followed by full reduction.
pub fn word_product(a: &WordBlade, b: &WordBlade, sig: AlgebraSignature) -> WordBlade {
    let mut factors: Vec<u32> = a.factors.iter().chain(b.factors.iter()).copied().collect();
    let mut k = (a.k + b.k) % 4;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < factors.len() {
            if factors[i] == factors[i + 1] {
                if sig.generator_square(factors[i]) < 0 {
                    k = (k + 2) % 4;
                }
                factors.drain(i..=i + 1);
                changed = true;
                i = i.saturating_sub(1);
            } else if factors[i] > factors[i + 1] {
                factors.swap(i, i + 1);
                k = (k + 2) % 4;
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    WordBlade { k, factors }
}

/// Oracle product on `SignedBlade`s.
pub fn oracle_product(a: SignedBlade, b: SignedBlade, sig: AlgebraSignature) -> SignedBlade {
    word_product(&WordBlade::from_signed(a), &WordBlade::from_signed(b), sig).to_signed()
}

/// Small deterministic generator for randomized sweeps.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}
