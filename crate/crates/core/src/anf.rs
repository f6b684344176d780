//! Algebraic normal form.

use crate::bits::Bits;
use crate::truth_table::TruthTable;

/// Block masks selecting the lower half of each 2s-bit block, s = 1..32.
const LOW_HALVES: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// ANF coefficients: bit `u` is the coefficient of the monomial
/// `prod_{j : bit j-1 of u set} x_j`, with `u = 0` the constant term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AnfPolynomial {
    n: u32,
    coefficients: Bits,
}

/// In-place Möbius transform over GF(2). The transform is an involution.
fn moebius_in_place(bits: &mut Bits) {
    let len = bits.len();
    let words = bits.words_mut();
    for (step, &low) in LOW_HALVES.iter().enumerate() {
        let stride = 1usize << step;
        if stride >= len {
            break;
        }
        for w in words.iter_mut() {
            *w ^= (*w & low) << stride;
        }
    }
    let mut word_stride = 1usize;
    while word_stride < words.len() {
        for block in words.chunks_mut(2 * word_stride) {
            let (lo, hi) = block.split_at_mut(word_stride);
            hi.iter_mut().zip(lo.iter()).for_each(|(h, l)| *h ^= l);
        }
        word_stride *= 2;
    }
    bits.trim();
}

impl AnfPolynomial {
    pub fn from_truth_table(f: &TruthTable) -> Self {
        let mut coefficients = f.raw().clone();
        moebius_in_place(&mut coefficients);
        AnfPolynomial {
            n: f.n(),
            coefficients,
        }
    }

    /// Applies the Möbius transform again, recovering the truth table.
    pub fn to_truth_table(&self) -> TruthTable {
        let mut bits = self.coefficients.clone();
        moebius_in_place(&mut bits);
        TruthTable::from_bits(self.n, bits)
    }

    /// Reads the coefficient vector as a truth table (no transform).
    pub fn coefficients(&self) -> TruthTable {
        TruthTable::from_bits(self.n, self.coefficients.clone())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coefficient(&self, monomial: u64) -> bool {
        self.coefficients.get(monomial as usize)
    }

    /// Monomial masks with a nonzero coefficient, ascending.
    pub fn monomials(&self) -> impl Iterator<Item = u64> + '_ {
        self.coefficients.ones_iter().map(|u| u as u64)
    }

    /// Largest monomial size; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.monomials().map(|u| u.count_ones()).max().unwrap_or(0)
    }
}
