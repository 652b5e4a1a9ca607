//! Polar code objects: encoding, CRC attachment, and small-code oracles.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::monomial::{Monomial, MonomialSet};

/// Bit-serial CRC specification. `poly` carries the full polynomial
/// including the leading `x^width` coefficient, e.g. `0x1D5` for the default
/// 8-bit CRC `x^8+x^7+x^6+x^4+x^2+1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CrcSpec {
    pub width: u8,
    pub poly: u64,
}

impl CrcSpec {
    pub const DEFAULT_8: CrcSpec = CrcSpec { width: 8, poly: 0x1D5 };

    pub fn new(width: u8, poly: u64) -> Result<Self, CodeError> {
        if width == 0 || width > 32 || poly >> width != 1 {
            return Err(CodeError::BadCrc);
        }
        Ok(Self { width, poly })
    }

    /// Remainder of `bits(x) * x^width mod poly`, MSB-first, as `width` bits.
    pub fn remainder(&self, bits: &[u8]) -> Vec<u8> {
        let w = self.width as u32;
        let mask = (1u64 << w) - 1;
        let mut reg = 0u64;
        for &b in bits {
            let top = (reg >> (w - 1)) & 1;
            reg = (reg << 1) & mask | u64::from(b);
            if top == 1 {
                reg ^= self.poly & mask;
            }
        }
        for _ in 0..w {
            let top = (reg >> (w - 1)) & 1;
            reg = (reg << 1) & mask;
            if top == 1 {
                reg ^= self.poly & mask;
            }
        }
        (0..w).rev().map(|k| (reg >> k & 1) as u8).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CodeError {
    PayloadLength { expected: usize, got: usize },
    DimensionTooLarge { k: usize, limit: usize },
    BadInfoSet,
    BadCrc,
    BlockLengthTooLarge,
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::PayloadLength { expected, got } => {
                write!(f, "payload length {got}, expected {expected}")
            }
            CodeError::DimensionTooLarge { k, limit } => {
                write!(f, "dimension {k} exceeds enumeration limit {limit}")
            }
            CodeError::BadInfoSet => write!(f, "information set invalid"),
            CodeError::BadCrc => write!(f, "CRC spec invalid"),
            CodeError::BlockLengthTooLarge => write!(f, "block length out of range"),
        }
    }
}

impl core::error::Error for CodeError {}

/// An `(N, K)` polar code: `N = 2^n`, information set of `K` row indices,
/// optionally with a CRC occupying the last CRC-width information positions.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PolarCode {
    n: u8,
    #[cfg_attr(feature = "serde", serde(rename = "K"))]
    k: u32,
    info_set: Vec<u32>,
    crc: Option<CrcSpec>,
}

impl PolarCode {
    pub fn new(
        n: usize,
        info_set: impl IntoIterator<Item = usize>,
        crc: Option<CrcSpec>,
    ) -> Result<Self, CodeError> {
        if n > 20 {
            return Err(CodeError::BlockLengthTooLarge);
        }
        let mut v: Vec<u32> = Vec::new();
        for i in info_set {
            if i >= 1usize << n {
                return Err(CodeError::BadInfoSet);
            }
            v.push(i as u32);
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) || v.is_empty() {
            return Err(CodeError::BadInfoSet);
        }
        if let Some(c) = crc {
            if usize::from(c.width) >= v.len() {
                return Err(CodeError::BadCrc);
            }
        }
        Ok(Self { n: n as u8, k: v.len() as u32, info_set: v, crc })
    }

    pub fn from_monomial_set(set: &MonomialSet, crc: Option<CrcSpec>) -> Result<Self, CodeError> {
        Self::new(set.n(), set.indices().iter().map(|&i| i as usize), crc)
    }

    pub fn monomial_set(&self) -> MonomialSet {
        MonomialSet::from_indices(self.n(), self.info_set.iter().map(|&i| i as usize))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Block length `N = 2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Code dimension `K` (information positions, including CRC bits if any).
    pub fn dimension(&self) -> usize {
        self.k as usize
    }

    /// Number of payload bits accepted by [`encode`](Self::encode):
    /// `K` without CRC, `K - width` with CRC.
    pub fn payload_len(&self) -> usize {
        self.dimension() - self.crc.map_or(0, |c| usize::from(c.width))
    }

    pub fn info_set(&self) -> &[u32] {
        &self.info_set
    }

    pub fn crc(&self) -> Option<CrcSpec> {
        self.crc
    }

    pub fn with_crc(mut self, crc: Option<CrcSpec>) -> Result<Self, CodeError> {
        if let Some(c) = crc {
            if usize::from(c.width) >= self.dimension() {
                return Err(CodeError::BadCrc);
            }
        }
        self.crc = crc;
        Ok(self)
    }

    pub fn is_info(&self, i: usize) -> bool {
        self.info_set.binary_search(&(i as u32)).is_ok()
    }

    /// Frozen indicator per position, convenient for decoders.
    pub fn frozen_mask(&self) -> Vec<bool> {
        let mut m = vec![true; self.len()];
        for &i in &self.info_set {
            m[i as usize] = false;
        }
        m
    }

    /// Payload plus CRC remainder, length `K`.
    pub fn attach_crc(&self, payload: &[u8]) -> Result<Vec<u8>, CodeError> {
        let expected = self.payload_len();
        if payload.len() != expected {
            return Err(CodeError::PayloadLength { expected, got: payload.len() });
        }
        let mut bits = payload.to_vec();
        if let Some(c) = self.crc {
            bits.extend(c.remainder(payload));
        }
        Ok(bits)
    }

    /// CRC check over `K` information bits (payload followed by remainder).
    pub fn check_crc(&self, info_bits: &[u8]) -> bool {
        match self.crc {
            None => true,
            Some(c) => {
                let split = info_bits.len() - usize::from(c.width);
                c.remainder(&info_bits[..split]) == info_bits[split..]
            }
        }
    }

    /// Encode a payload of [`payload_len`](Self::payload_len) bits: CRC bits
    /// are appended when configured, information bits fill the information
    /// set in increasing index order, and the butterfly applies `u · T_N`.
    pub fn encode(&self, payload: &[u8]) -> Result<Vec<u8>, CodeError> {
        let info_bits = self.attach_crc(payload)?;
        Ok(self.encode_info_bits(&info_bits))
    }

    /// Encode `K` already-assembled information bits (CRC included, if any).
    pub fn encode_info_bits(&self, info_bits: &[u8]) -> Vec<u8> {
        assert_eq!(info_bits.len(), self.dimension());
        let mut x = vec![0u8; self.len()];
        for (&i, &b) in self.info_set.iter().zip(info_bits) {
            x[i as usize] = b;
        }
        polar_transform(&mut x);
        x
    }

    /// Extract the `K` information bits from a codeword. `T_N` is an
    /// involution, so this is one more butterfly pass.
    pub fn extract_info_bits(&self, codeword: &[u8]) -> Vec<u8> {
        assert_eq!(codeword.len(), self.len());
        let mut u = codeword.to_vec();
        polar_transform(&mut u);
        self.info_set.iter().map(|&i| u[i as usize]).collect()
    }

    /// Generator row for information index `i`: row `i` of `T_N`.
    pub fn generator_row(&self, i: usize) -> Vec<u8> {
        Monomial::of_index(i, self.n()).evaluate()
    }

    /// All `2^K` codewords; guarded against large dimensions.
    pub fn codebook(&self) -> Result<Vec<Vec<u8>>, CodeError> {
        const LIMIT: usize = 20;
        let k = self.dimension();
        if k > LIMIT {
            return Err(CodeError::DimensionTooLarge { k, limit: LIMIT });
        }
        let mut out = Vec::with_capacity(1 << k);
        let mut info = vec![0u8; k];
        for w in 0..1usize << k {
            for (t, b) in info.iter_mut().enumerate() {
                *b = (w >> t & 1) as u8;
            }
            out.push(self.encode_info_bits(&info));
        }
        Ok(out)
    }

    /// Membership test against the row space of the generator rows.
    pub fn contains(&self, word: &[u8]) -> bool {
        RowBasis::for_code(self).contains(word)
    }
}

/// In-place polar transform `x <- x · T_N` (self-inverse over F2).
pub fn polar_transform(bits: &mut [u8]) {
    let n = bits.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        let mut i = 0;
        while i < n {
            if i & h == 0 {
                bits[i] ^= bits[i + h];
                i += 1;
            } else {
                i += h;
            }
        }
        h <<= 1;
    }
}

/// Row-reduced basis of the code's generator rows, packed 64 bits per word.
/// Built once, then answers membership queries by elimination.
pub struct RowBasis {
    words: usize,
    /// pivot bit position -> reduced row
    rows: Vec<(usize, Vec<u64>)>,
}

impl RowBasis {
    pub fn for_code(code: &PolarCode) -> Self {
        let len = code.len();
        let mut basis = Self { words: len.div_ceil(64), rows: Vec::new() };
        for &i in code.info_set() {
            let row = code.generator_row(i as usize);
            basis.insert(&pack_bits(&row));
        }
        basis
    }

    fn insert(&mut self, row: &[u64]) -> bool {
        let mut r = row.to_vec();
        for (pivot, b) in &self.rows {
            if r[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (x, y) in r.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        match leading_bit(&r) {
            None => false,
            Some(p) => {
                self.rows.push((p, r));
                true
            }
        }
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        let mut r = pack_bits(word);
        debug_assert_eq!(r.len(), self.words);
        for (pivot, b) in &self.rows {
            if r[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (x, y) in r.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        r.iter().all(|&w| w == 0)
    }
}

fn pack_bits(bits: &[u8]) -> Vec<u64> {
    let mut out = vec![0u64; bits.len().div_ceil(64)];
    for (p, &b) in bits.iter().enumerate() {
        out[p / 64] |= u64::from(b) << (p % 64);
    }
    out
}

fn leading_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn kernel_row() {
        let code = PolarCode::new(1, [1], None).unwrap();
        assert_eq!(code.encode(&[1]).unwrap(), bits("11"));
        assert_eq!(code.encode(&[0]).unwrap(), bits("00"));
    }

    #[test]
    fn single_row_codes_match_monomial_evaluations() {
        let code = PolarCode::new(3, [7], None).unwrap();
        assert_eq!(code.encode(&[1]).unwrap(), bits("11111111"));
        let code = PolarCode::new(3, [6], None).unwrap();
        assert_eq!(code.encode(&[1]).unwrap(), bits("10101010"));
    }

    #[test]
    fn transform_rows_equal_monomial_evaluations() {
        for n in 0..=6 {
            let len = 1usize << n;
            for i in 0..len {
                let mut row = vec![0u8; len];
                row[i] = 1;
                polar_transform(&mut row);
                assert_eq!(row, Monomial::of_index(i, n).evaluate(), "n={n} row {i}");
            }
        }
    }

    #[test]
    fn transform_is_involution() {
        let mut v: Vec<u8> = (0..64u32).map(|i| (i * 7 % 3 == 0) as u8).collect();
        let orig = v.clone();
        polar_transform(&mut v);
        assert_ne!(v, orig);
        polar_transform(&mut v);
        assert_eq!(v, orig);
    }

    #[test]
    fn codebook_small() {
        let rep = PolarCode::new(1, [1], None).unwrap();
        assert_eq!(rep.codebook().unwrap(), vec![bits("00"), bits("11")]);

        let code = PolarCode::new(3, [7], None).unwrap();
        assert_eq!(code.codebook().unwrap(), vec![bits("00000000"), bits("11111111")]);

        // RM(1,3): 16 codewords, minimum weight 4
        let rm13 = PolarCode::new(3, [3, 5, 6, 7], None).unwrap();
        let book = rm13.codebook().unwrap();
        assert_eq!(book.len(), 16);
        let min_w = book
            .iter()
            .map(|c| c.iter().map(|&b| u32::from(b)).sum::<u32>())
            .filter(|&w| w > 0)
            .min();
        assert_eq!(min_w, Some(4));
        // all codewords unique
        let mut sorted = book.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);
    }

    #[test]
    fn membership() {
        let code = PolarCode::new(3, [3, 5, 6, 7], None).unwrap();
        assert!(code.contains(&bits("00000000")));
        assert!(code.contains(&Monomial::of_index(7, 3).evaluate()));
        let mut e0 = vec![0u8; 8];
        e0[0] = 1;
        assert!(!code.contains(&e0)); // weight 1 < min distance 4
        for cw in code.codebook().unwrap() {
            assert!(code.contains(&cw));
        }
    }

    #[test]
    fn linearity() {
        let code = PolarCode::new(4, [7, 10, 11, 12, 13, 14, 15], None).unwrap();
        let p1 = bits("1011010");
        let p2 = bits("0111001");
        let x1 = code.encode(&p1).unwrap();
        let x2 = code.encode(&p2).unwrap();
        let sum: Vec<u8> = p1.iter().zip(&p2).map(|(a, b)| a ^ b).collect();
        let xs = code.encode(&sum).unwrap();
        let xor: Vec<u8> = x1.iter().zip(&x2).map(|(a, b)| a ^ b).collect();
        assert_eq!(xs, xor);
    }

    #[test]
    fn crc_roundtrip_and_detection() {
        let crc = CrcSpec::DEFAULT_8;
        // all-zero payload -> all-zero remainder
        assert_eq!(crc.remainder(&[0; 16]), vec![0u8; 8]);

        let code = PolarCode::new(5, (12..32).collect::<Vec<_>>(), Some(crc)).unwrap();
        assert_eq!(code.payload_len(), 12);
        let payload = bits("101100111010");
        let info = code.attach_crc(&payload).unwrap();
        assert!(code.check_crc(&info));
        // any single-bit corruption is detected
        for p in 0..info.len() {
            let mut bad = info.clone();
            bad[p] ^= 1;
            assert!(!code.check_crc(&bad), "flip at {p} undetected");
        }
        // encode/extract roundtrip keeps the CRC valid
        let cw = code.encode(&payload).unwrap();
        assert!(code.check_crc(&code.extract_info_bits(&cw)));
    }

    #[test]
    fn encode_extract_roundtrip() {
        let code = PolarCode::new(4, [7, 10, 11, 12, 13, 14, 15], None).unwrap();
        let p = bits("1100101");
        let cw = code.encode(&p).unwrap();
        let info = code.extract_info_bits(&cw);
        assert_eq!(info, p);
    }

    #[test]
    fn payload_length_checked() {
        let code = PolarCode::new(3, [5, 6, 7], None).unwrap();
        assert!(matches!(
            code.encode(&[1, 0]),
            Err(CodeError::PayloadLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn codebook_guard() {
        let code = PolarCode::new(5, (0..32).collect::<Vec<_>>(), None).unwrap();
        assert!(matches!(code.codebook(), Err(CodeError::DimensionTooLarge { .. })));
    }
}
