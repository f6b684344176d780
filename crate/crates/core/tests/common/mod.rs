//! Independent reference implementations over plain integers. Nothing here
//! calls into the library, so agreement with it is meaningful.

#![allow(dead_code)]

/// Truth-table positions that never vary inside a class, by the X = 2^n loop.
pub fn fixed_positions(n: u32) -> Vec<u64> {
    let mut x = 1u64 << n;
    let mut out = Vec::new();
    for i in 0..=n {
        out.push(x);
        x = x.wrapping_sub(1 << i);
    }
    out.sort_unstable();
    out
}

/// Inputs at the fixed positions (position p holds input p - 1).
pub fn fixed_inputs(n: u32) -> Vec<u64> {
    fixed_positions(n).into_iter().map(|p| p - 1).collect()
}

/// Rule number of x -> parity(mask & x) ^ c, for n <= 6.
pub fn affine_rule(n: u32, mask: u64, c: bool) -> u64 {
    (0..1u64 << n).fold(0, |acc, x| {
        let bit = ((mask & x).count_ones() & 1 == 1) ^ c;
        acc | (u64::from(bit) << x)
    })
}

/// All affine rules, ordered by mask with the constant-0 half first.
pub fn affines_in_class_order(n: u32) -> Vec<u64> {
    let half = 1u64 << n;
    (0..2 * half)
        .map(|i| affine_rule(n, i % half, i >= half))
        .collect()
}

fn bit(rule: u64, x: u64) -> u64 {
    (rule >> x) & 1
}

/// Class index by scanning every affine function for agreement on the fixed
/// inputs.
pub fn class_of(n: u32, rule: u64) -> u64 {
    let inputs = fixed_inputs(n);
    let hits: Vec<u64> = affines_in_class_order(n)
        .iter()
        .enumerate()
        .filter(|(_, &a)| inputs.iter().all(|&x| bit(a, x) == bit(rule, x)))
        .map(|(i, _)| i as u64 + 1)
        .collect();
    assert_eq!(hits.len(), 1, "signature must select exactly one affine");
    hits[0]
}

/// Hamming distance from the class's affine function.
pub fn hd(n: u32, rule: u64) -> u64 {
    let a = affines_in_class_order(n)[class_of(n, rule) as usize - 1];
    u64::from((a ^ rule).count_ones())
}

/// Algebraic normal form coefficients by the O(4^n) definition.
pub fn anf(n: u32, rule: u64) -> u64 {
    let size = 1u64 << n;
    let mut out = 0;
    for u in 0..size {
        let mut c = 0;
        for x in 0..size {
            if x & !u == 0 {
                c ^= bit(rule, x);
            }
        }
        out |= c << u;
    }
    out
}

pub fn is_affine(n: u32, rule: u64) -> bool {
    let coeffs = anf(n, rule);
    (0..1u64 << n).all(|u| u.count_ones() <= 1 || bit(coeffs, u) == 0)
}

pub fn is_linear(n: u32, rule: u64) -> bool {
    is_affine(n, rule) && bit(anf(n, rule), 0) == 0
}

/// The recursive product construction, in construction order, as rules.
pub fn recursive_classes(n: u32) -> Vec<Vec<u64>> {
    let mut classes: Vec<Vec<u64>> = vec![vec![0], vec![2], vec![3], vec![1]];
    let mut width = 2u32;
    for _ in 1..n {
        let half = classes.len() / 2;
        let evens: Vec<u64> = classes[..half].iter().flatten().copied().collect();
        let odds: Vec<u64> = classes[half..].iter().flatten().copied().collect();
        let mut next = Vec::with_capacity(classes.len() * 2);
        for tail in [&evens, &odds] {
            for class in &classes {
                next.push(
                    class
                        .iter()
                        .flat_map(|&a| tail.iter().map(move |&b| (a << width) | b))
                        .collect(),
                );
            }
        }
        classes = next;
        width *= 2;
    }
    classes
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// MSB-first binary string of width 2^n.
pub fn bit_string(n: u32, rule: u64) -> String {
    format!("{rule:0width$b}", width = 1usize << n)
}

/// MSB-first hex string of width 2^n / 4.
pub fn hex_string(n: u32, rule: u64) -> String {
    format!("{rule:0width$x}", width = (1usize << n) / 4)
}
