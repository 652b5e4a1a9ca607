//! Affine transformations over F2 and code automorphisms.
//!
//! The useful facts, in code form: entry `(i, j)` of a transformation matrix
//! stands for the substitution `x̄_i -> x̄_j`; it is admissible for a
//! monomial code iff the substituted generating set stays inside the set.
//! Admissibility is checked directly on information-set indices: take every
//! index with bit `i` clear, set bit `i` and clear bit `j`, and require the
//! result to be an information index again. Upper-triangular matrices with
//! unit diagonal built from admissible entries give `2^t` automorphisms not
//! absorbed by SC decoding; lower-triangular ones (LTA) are automorphisms of
//! every decreasing monomial code.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::code::{PolarCode, RowBasis};

/// Square binary matrix with rows stored as bitmasks (bit `j` of `rows[i]`
/// is entry `(i, j)`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BitMatrix {
    n: usize,
    rows: Vec<u32>,
}

impl BitMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 20);
        Self { n, rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i] = 1 << i;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn row(&self, i: usize) -> u32 {
        self.rows[i]
    }

    /// Matrix-vector product over F2; `x` is a bitmask with bit `k` = `x_k`.
    pub fn mul_vec(&self, x: u32) -> u32 {
        let mut y = 0u32;
        for (i, &row) in self.rows.iter().enumerate() {
            y |= (((row & x).count_ones() & 1) as u32) << i;
        }
        y
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.n, other.n);
        let mut out = BitMatrix::zero(self.n);
        for i in 0..self.n {
            let mut acc = 0u32;
            for j in 0..self.n {
                if self.get(i, j) {
                    acc ^= other.rows[j];
                }
            }
            out.rows[i] = acc;
        }
        out
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.n;
        let mut m = self.rows.clone();
        let mut inv = BitMatrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r] >> col & 1 == 1)?;
            m.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && m[r] >> col & 1 == 1 {
                    m[r] ^= m[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(BitMatrix { n, rows: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn is_lower_unit(&self) -> bool {
        (0..self.n).all(|i| self.rows[i] >> i == 1)
    }

    pub fn is_upper_unit(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) && self.rows[i] & ((1 << i) - 1) == 0)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            if i + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Affine map `x -> A·x + b` with invertible `A`, acting on the variable
/// vectors (and hence on codeword positions) of a length-`2^n` code.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineTransform {
    a: BitMatrix,
    b: u32,
}

impl AffineTransform {
    /// Construct, verifying invertibility of `A`.
    pub fn new(a: BitMatrix, b: u32) -> Option<Self> {
        if a.is_invertible() {
            Some(Self { a, b })
        } else {
            None
        }
    }

    pub fn identity(n: usize) -> Self {
        Self { a: BitMatrix::identity(n), b: 0 }
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.a
    }

    pub fn offset(&self) -> u32 {
        self.b
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.a.mul_vec(x) ^ self.b
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AffineTransform) -> AffineTransform {
        AffineTransform { a: self.a.mul(&other.a), b: self.a.mul_vec(other.b) ^ self.b }
    }

    pub fn inverse(&self) -> AffineTransform {
        let ainv = self.a.inverse().expect("A invertible by construction");
        let b = ainv.mul_vec(self.b);
        AffineTransform { a: ainv, b }
    }

    pub fn is_identity(&self) -> bool {
        self.b == 0 && self.a == BitMatrix::identity(self.a.n())
    }

    /// Permutation of codeword positions: position `p` maps to the integer
    /// whose bit vector is `A·bits(p) + b`.
    pub fn to_permutation(&self) -> CodewordPermutation {
        let len = 1usize << self.n();
        let map = (0..len).map(|p| self.apply(p as u32)).collect();
        CodewordPermutation::new(map).expect("affine maps are bijections")
    }
}

/// Uniformly random element of LTA(n): lower-triangular unit-diagonal `A`
/// and arbitrary offset `b`.
pub fn sample_lta(n: usize, rng: &mut impl RngCore) -> AffineTransform {
    let mut a = BitMatrix::identity(n);
    for i in 1..n {
        let row_bits = rng.next_u32() & ((1 << i) - 1);
        a.rows[i] |= row_bits;
    }
    let b = rng.next_u32() & ((1u32 << n) - 1);
    AffineTransform { a, b }
}

/// All `2^(n(n-1)/2) · 2^n` elements of LTA(n), identity first.
pub fn lta_group(n: usize) -> impl Iterator<Item = AffineTransform> {
    let strict = n * (n - 1) / 2;
    assert!(strict + n <= 40, "LTA enumeration too large");
    (0u64..1 << (strict + n)).map(move |code| {
        let mut a = BitMatrix::identity(n);
        let mut t = 0;
        for i in 1..n {
            for j in 0..i {
                if code >> t & 1 == 1 {
                    a.set(i, j, true);
                }
                t += 1;
            }
        }
        let b = (code >> strict) as u32;
        AffineTransform { a, b }
    })
}

/// Set of strictly upper-triangular admissible positions of a code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UtlMask {
    n: usize,
    positions: Vec<(usize, usize)>,
}

impl UtlMask {
    pub fn new(n: usize, mut positions: Vec<(usize, usize)>) -> Self {
        assert!(positions.iter().all(|&(i, j)| i < j && j < n));
        positions.sort_unstable();
        positions.dedup();
        Self { n, positions }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `t`, the number of admissible positions: the code has `2^t` UTL
    /// automorphisms.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    pub fn group_order(&self) -> u64 {
        1u64 << self.positions.len()
    }

    /// The transform with ones exactly at the positions selected by `subset`
    /// (bit `t` selects `positions()[t]`), plus the unit diagonal.
    pub fn transform(&self, subset: u64) -> AffineTransform {
        debug_assert!(subset < 1u64 << self.positions.len());
        let mut a = BitMatrix::identity(self.n);
        for (t, &(i, j)) in self.positions.iter().enumerate() {
            if subset >> t & 1 == 1 {
                a.set(i, j, true);
            }
        }
        AffineTransform { a, b: 0 }
    }
}

/// The variable change `x̄_i -> x̄_j` on a row index: set bit `i`, clear bit
/// `j`. Defined for indices whose bit `i` is clear (monomial contains `x̄_i`).
pub fn substitute_index(index: usize, i: usize, j: usize) -> usize {
    (index | 1 << i) & !(1 << j)
}

/// Theorem-2 admissibility of entry `(i, j)`: substituting `x̄_i -> x̄_j` in
/// every generating monomial containing `x̄_i` must land inside the
/// generating set. Diagonal entries are always admissible.
pub fn is_admissible(code: &PolarCode, i: usize, j: usize) -> bool {
    if i == j {
        return true;
    }
    let info = code.info_set();
    let mut member = vec![false; code.len()];
    for &x in info {
        member[x as usize] = true;
    }
    info.iter().all(|&x| {
        let x = x as usize;
        x >> i & 1 == 1 || member[substitute_index(x, i, j)]
    })
}

/// All strictly upper-triangular admissible positions.
pub fn admissible_mask(code: &PolarCode) -> UtlMask {
    let n = code.n();
    let mut positions = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if is_admissible(code, i, j) {
                positions.push((i, j));
            }
        }
    }
    UtlMask { n, positions }
}

/// All `2^t` UTL transforms generated by a mask, identity first.
pub fn utl_group(mask: &UtlMask) -> impl Iterator<Item = AffineTransform> + '_ {
    (0..mask.group_order()).map(move |s| mask.transform(s))
}

/// A bijection on codeword positions; `map[p]` is the image of `p`, and a
/// permuted codeword satisfies `x'[map[p]] = x[p]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CodewordPermutation {
    map: Vec<u32>,
}

impl CodewordPermutation {
    pub fn new(map: Vec<u32>) -> Option<Self> {
        let len = map.len();
        let mut seen = vec![false; len];
        for &p in &map {
            let p = p as usize;
            if p >= len || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        Some(Self { map })
    }

    pub fn identity(len: usize) -> Self {
        Self { map: (0..len as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image_of(&self, p: usize) -> usize {
        self.map[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(p, &q)| p as u32 == q)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &CodewordPermutation) -> CodewordPermutation {
        assert_eq!(self.len(), other.len());
        let map = (0..self.len()).map(|p| self.map[other.image_of(p)]).collect();
        CodewordPermutation { map }
    }

    pub fn inverse(&self) -> CodewordPermutation {
        let mut map = vec![0u32; self.len()];
        for (p, &q) in self.map.iter().enumerate() {
            map[q as usize] = p as u32;
        }
        CodewordPermutation { map }
    }

    /// Permute a word: output at `map[p]` takes the input at `p`.
    pub fn permute<T: Copy + Default>(&self, word: &[T]) -> Vec<T> {
        debug_assert_eq!(word.len(), self.len());
        let mut out = vec![T::default(); word.len()];
        for (p, &v) in word.iter().enumerate() {
            out[self.map[p] as usize] = v;
        }
        out
    }

    /// Transposition of two positions, everything else fixed.
    pub fn swap(len: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<u32> = (0..len as u32).collect();
        map.swap(a, b);
        Self { map }
    }
}

/// Automorphism oracle: the permutation maps the code onto itself iff every
/// permuted generator row stays in the row space.
pub fn is_automorphism(code: &PolarCode, perm: &CodewordPermutation) -> bool {
    assert_eq!(perm.len(), code.len());
    let basis = RowBasis::for_code(code);
    code.info_set().iter().all(|&i| {
        let row = code.generator_row(i as usize);
        basis.contains(&perm.permute(&row))
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountError {
    BlockLengthTooLarge { len: usize, limit: usize },
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::BlockLengthTooLarge { len, limit } => {
                write!(f, "block length {len} exceeds brute-force limit {limit}")
            }
        }
    }
}

impl core::error::Error for CountError {}

/// Brute-force `(|Aut|, |Aff|)`: the number of permutations of all `N!`
/// mapping the code onto itself, and the number of affine maps `(A, b)` with
/// invertible `A` doing so. Rejects early on the first failing generator.
pub fn count_automorphisms_bruteforce(code: &PolarCode) -> Result<(u64, u64), CountError> {
    let len = code.len();
    if len > 8 {
        return Err(CountError::BlockLengthTooLarge { len, limit: 8 });
    }
    let basis = RowBasis::for_code(code);
    let rows: Vec<Vec<u8>> =
        code.info_set().iter().map(|&i| code.generator_row(i as usize)).collect();
    let accepts = |map: &[u32]| -> bool {
        rows.iter().all(|row| {
            let mut permuted = vec![0u8; len];
            for (p, &v) in row.iter().enumerate() {
                permuted[map[p] as usize] = v;
            }
            basis.contains(&permuted)
        })
    };

    let mut aut = 0u64;
    let mut map: Vec<u32> = (0..len as u32).collect();
    // lexicographic permutation streaming
    loop {
        if accepts(&map) {
            aut += 1;
        }
        if !next_permutation(&mut map) {
            break;
        }
    }

    let n = code.n();
    let mut aff = 0u64;
    for rows_code in 0u64..1 << (n * n) {
        let mut a = BitMatrix::zero(n);
        for i in 0..n {
            a.rows[i] = (rows_code >> (i * n)) as u32 & ((1 << n) - 1);
        }
        if !a.is_invertible() {
            continue;
        }
        for b in 0..1u32 << n {
            let t = AffineTransform { a: a.clone(), b };
            if accepts(&t.to_permutation().map) {
                aff += 1;
            }
        }
    }
    Ok((aut, aff))
}

fn next_permutation(v: &mut [u32]) -> bool {
    let len = v.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = len - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Entry constraint in a [`StarPattern`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cell {
    Zero,
    One,
    Star,
}

/// Template for a family of affine transforms: fixed zeros and ones plus
/// free star entries in `A` and `b`.
#[derive(Clone, Debug)]
pub struct StarPattern {
    pub n: usize,
    pub a: Vec<Vec<Cell>>,
    pub b: Vec<Cell>,
}

impl StarPattern {
    /// Parse rows like `["1000", "**-0", ...]` where `*` is free, `0`/`1`
    /// fixed; `b` uses the same symbols.
    pub fn parse(a_rows: &[&str], b: &str) -> Self {
        let n = a_rows.len();
        let cell = |c: u8| match c {
            b'0' => Cell::Zero,
            b'1' => Cell::One,
            b'*' => Cell::Star,
            _ => panic!("bad pattern cell"),
        };
        let a = a_rows.iter().map(|r| {
            assert_eq!(r.len(), n);
            r.bytes().map(cell).collect()
        }).collect();
        assert_eq!(b.len(), n);
        StarPattern { n, a, b: b.bytes().map(cell).collect() }
    }

    fn stars(&self) -> usize {
        self.a.iter().flatten().chain(self.b.iter()).filter(|&&c| c == Cell::Star).count()
    }
}

/// Count the automorphisms of `code` among all completions of a star
/// pattern with invertible `A`, using the permutation oracle.
pub fn affine_structure_count(code: &PolarCode, pattern: &StarPattern) -> Result<u64, CountError> {
    assert_eq!(pattern.n, code.n());
    let stars = pattern.stars();
    if code.len() > 16 || stars > 24 {
        return Err(CountError::BlockLengthTooLarge { len: code.len(), limit: 16 });
    }
    let basis = RowBasis::for_code(code);
    let rows: Vec<Vec<u8>> =
        code.info_set().iter().map(|&i| code.generator_row(i as usize)).collect();
    let n = pattern.n;
    let mut count = 0u64;
    for assign in 0u64..1 << stars {
        let mut t = 0;
        let mut fill = |c: &Cell| -> bool {
            match c {
                Cell::Zero => false,
                Cell::One => true,
                Cell::Star => {
                    let v = assign >> t & 1 == 1;
                    t += 1;
                    v
                }
            }
        };
        let mut a = BitMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = fill(&pattern.a[i][j]);
                a.set(i, j, v);
            }
        }
        let mut b = 0u32;
        for (i, c) in pattern.b.iter().enumerate() {
            if fill(c) {
                b |= 1 << i;
            }
        }
        if !a.is_invertible() {
            continue;
        }
        let perm = AffineTransform { a, b }.to_permutation();
        let ok = rows.iter().all(|row| basis.contains(&perm.permute(row)));
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::SeedableRng;

    fn example_16_7() -> PolarCode {
        PolarCode::new(4, [7, 10, 11, 12, 13, 14, 15], None).unwrap()
    }

    #[test]
    fn binary_index_variable_change() {
        // variable change x̄1 -> x̄2 on the worked example
        assert_eq!(substitute_index(12, 1, 2), 10);
        assert_eq!(substitute_index(13, 1, 2), 11);
    }

    #[test]
    fn admissibility_worked_example() {
        let code = example_16_7();
        assert!(is_admissible(&code, 1, 2));
        assert!(!is_admissible(&code, 0, 1));
        assert!(!is_admissible(&code, 0, 2));
        for i in 0..3 {
            assert!(!is_admissible(&code, i, 3), "({i},3) must not be admissible");
        }
        assert!(is_admissible(&code, 2, 2), "diagonal needs no check");
        let mask = admissible_mask(&code);
        assert_eq!(mask.positions(), &[(1, 2)]);
    }

    #[test]
    fn rm_code_has_full_mask() {
        // (8,4) = RM(1,3): closed under all variable renamings
        let code = PolarCode::new(3, [3, 5, 6, 7], None).unwrap();
        let mask = admissible_mask(&code);
        assert_eq!(mask.len(), 3);
    }

    #[test]
    fn utl_group_sizes() {
        let empty = UtlMask::new(4, vec![]);
        let g: Vec<_> = utl_group(&empty).collect();
        assert_eq!(g.len(), 1);
        assert!(g[0].is_identity());

        let one = UtlMask::new(4, vec![(1, 2)]);
        assert_eq!(utl_group(&one).count(), 2);

        // A^(5) star pattern: positions (0,1), (0,3), (2,3)
        let a5 = UtlMask::new(4, vec![(0, 1), (0, 3), (2, 3)]);
        assert_eq!(utl_group(&a5).count(), 8);
        for t in utl_group(&a5) {
            assert!(t.matrix().is_upper_unit());
            assert!(t.matrix().is_invertible());
        }
    }

    #[test]
    fn lta_group_order_and_samples() {
        assert_eq!(lta_group(4).count(), 1024);
        assert_eq!(lta_group(1).count(), 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let t = sample_lta(4, &mut rng);
            assert!(t.matrix().is_lower_unit());
        }
    }

    #[test]
    fn permutation_from_affine() {
        let id = AffineTransform::identity(3);
        assert!(id.to_permutation().is_identity());

        // b = e0: toggles the LSB
        let t = AffineTransform::new(BitMatrix::identity(3), 1).unwrap();
        let p = t.to_permutation();
        for x in 0..8 {
            assert_eq!(p.image_of(x), x ^ 1);
        }

        // single UT entry (1,2): bit 1 flips exactly when bit 2 is set
        let mut a = BitMatrix::identity(3);
        a.set(1, 2, true);
        let p = AffineTransform::new(a, 0).unwrap().to_permutation();
        assert_eq!(p.image_of(4), 6);
        for x in 0..8usize {
            let expect = if x >> 2 & 1 == 1 { x ^ 2 } else { x };
            assert_eq!(p.image_of(x), expect);
        }
    }

    #[test]
    fn permutation_group_structure() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let t1 = sample_lta(4, &mut rng);
            let t2 = sample_lta(4, &mut rng);
            let lhs = t1.compose(&t2).to_permutation();
            let rhs = t1.to_permutation().compose(&t2.to_permutation());
            assert_eq!(lhs, rhs);
            let inv = t1.compose(&t1.inverse()).to_permutation();
            assert!(inv.is_identity());
        }
    }

    #[test]
    fn automorphism_oracle() {
        let code = example_16_7();
        assert!(is_automorphism(&code, &CodewordPermutation::identity(16)));

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let t = sample_lta(4, &mut rng);
            assert!(is_automorphism(&code, &t.to_permutation()));
        }

        // the admissible UT entry is an automorphism, inadmissible ones not
        let mut a = BitMatrix::identity(4);
        a.set(1, 2, true);
        assert!(is_automorphism(&code, &AffineTransform::new(a, 0).unwrap().to_permutation()));
        let mut a = BitMatrix::identity(4);
        a.set(0, 1, true);
        assert!(!is_automorphism(&code, &AffineTransform::new(a, 0).unwrap().to_permutation()));
    }

    #[test]
    fn non_affine_automorphism_exists() {
        // (8,3) code I={5,6,7}: swapping positions 3 and 7 preserves the
        // code but no affine map realizes it.
        let code = PolarCode::new(3, [5, 6, 7], None).unwrap();
        let swap = CodewordPermutation::swap(8, 3, 7);
        assert!(is_automorphism(&code, &swap));
    }

    #[test]
    fn brute_force_counts_match_known_rows() {
        let rows: &[(&[usize], u64, u64)] = &[
            (&[7], 40320, 1344),               // K=1
            (&[3, 5, 6, 7], 1344, 1344),       // K=4, RM(1,3)
            (&[2, 3, 4, 5, 6, 7], 1152, 192),  // K=6
        ];
        for &(info, aut, aff) in rows {
            let code = PolarCode::new(3, info.iter().copied(), None).unwrap();
            assert_eq!(count_automorphisms_bruteforce(&code).unwrap(), (aut, aff));
        }
    }

    #[test]
    fn structure_count_patterns() {
        let code = example_16_7();
        // identity A with free b: the 2^n translations, all automorphisms
        let pat = StarPattern::parse(&["1000", "0100", "0010", "0001"], "****");
        assert_eq!(affine_structure_count(&code, &pat).unwrap(), 16);

        // full lower-triangular pattern = LTA(4)
        let pat = StarPattern::parse(&["1000", "*100", "**10", "***1"], "****");
        assert_eq!(affine_structure_count(&code, &pat).unwrap(), 1024);
    }

    #[test]
    fn count_guard() {
        let code = PolarCode::new(4, [15], None).unwrap();
        assert!(count_automorphisms_bruteforce(&code).is_err());
    }
}
