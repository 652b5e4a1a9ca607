//! Negative monomials and generating monomial sets.
//!
//! Rows of the polar transform `T_N = T_2^{⊗n}` are evaluations of negative
//! monomials over `F_2^n`: row index `i` corresponds to the product of all
//! `x̄_k` for which bit `k` of `i` is zero (bit 0 is `x_0`). A code is
//! described by the set of monomials generating its rows, and most
//! automorphism questions reduce to substitution closure of that set.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A product of negated Boolean variables, `x̄_k = 1 ⊕ x_k`.
///
/// Stored as a bitmask over the `n` variables: bit `k` set means `x̄_k` is a
/// factor. The empty mask is the constant monomial `1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    vars: u32,
    n: u8,
}

impl Monomial {
    /// Monomial with the given variable mask over `n` variables.
    pub fn new(vars: u32, n: usize) -> Self {
        assert!(n <= 20, "variable count out of range");
        assert_eq!(vars >> n, 0, "variable bit at position >= n");
        Self { vars, n: n as u8 }
    }

    /// The constant monomial `1`.
    pub fn one(n: usize) -> Self {
        Self::new(0, n)
    }

    /// Monomial generating row `index` of `T_N`: the factors are the zero
    /// bits of the index.
    pub fn of_index(index: usize, n: usize) -> Self {
        assert!(index < 1usize << n, "row index out of range");
        let mask = (1u32 << n) - 1;
        Self::new(!(index as u32) & mask, n)
    }

    /// Row index of `T_N` whose monomial this is (inverse of [`of_index`]).
    ///
    /// [`of_index`]: Monomial::of_index
    pub fn index(&self) -> usize {
        let mask = (1u32 << self.n) - 1;
        (!self.vars & mask) as usize
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.vars.count_ones()
    }

    pub fn contains_var(&self, k: usize) -> bool {
        (self.vars >> k) & 1 == 1
    }

    /// Substitute `x̄_i -> x̄_j`. Idempotent factors collapse, so the result
    /// loses a degree when `x̄_j` was already present.
    pub fn substitute(&self, i: usize, j: usize) -> Self {
        debug_assert!(self.contains_var(i));
        let vars = (self.vars & !(1 << i)) | (1 << j);
        Self::new(vars, self.n as usize)
    }

    /// Evaluation over all `2^n` points; entry `p` is 1 iff every factor
    /// `x̄_k` evaluates to 1 at `p`, i.e. iff `p` and the variable mask are
    /// disjoint. This equals row `index()` of `T_N`.
    pub fn evaluate(&self) -> Vec<u8> {
        let len = 1usize << self.n;
        (0..len)
            .map(|p| u8::from(p as u32 & self.vars == 0))
            .collect()
    }

    /// Divisors of this monomial obtained by removing a single factor.
    pub fn single_factor_divisors(&self) -> impl Iterator<Item = Monomial> + '_ {
        let m = *self;
        (0..self.n as usize)
            .filter(move |&k| m.contains_var(k))
            .map(move |k| Monomial::new(m.vars & !(1 << k), m.n as usize))
    }

    /// Decreasing order on monomials: `self ⪯ other` iff `self` is obtained
    /// from a divisor of `other` by lowering variable indices. Smaller
    /// monomials correspond to more reliable bit channels.
    pub fn le(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n, other.n);
        if self.degree() > other.degree() {
            return false;
        }
        // Greedy matching: pair each factor of `self` (ascending) with the
        // smallest unused factor of `other` that is >= it; equivalently match
        // against the top `deg(self)` factors of `other` elementwise.
        let a: Vec<usize> = (0..self.n as usize).filter(|&k| self.contains_var(k)).collect();
        let b: Vec<usize> = (0..other.n as usize).filter(|&k| other.contains_var(k)).collect();
        let shift = b.len() - a.len();
        a.iter().zip(b[shift..].iter()).all(|(x, y)| x <= y)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars == 0 {
            return write!(f, "1");
        }
        for k in 0..self.n as usize {
            if self.contains_var(k) {
                write!(f, "x{k}")?;
            }
        }
        Ok(())
    }
}

/// Indices that dominate `i` in the universal partial order by a single
/// covering step: removing a factor (flipping a zero bit to one) or moving a
/// factor to a lower variable (swapping a zero bit up past a one bit). Every
/// returned channel is at least as reliable as `i` on any symmetric channel.
pub fn upo_successors(i: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for b in 0..n {
        if i >> b & 1 == 0 {
            out.push(i | 1 << b);
            for k in 0..b {
                if i >> k & 1 == 1 {
                    out.push((i | 1 << b) & !(1 << k));
                }
            }
        }
    }
    out
}

/// Reliability comparison under the universal partial order: true iff channel
/// `hi` is at least as reliable as channel `lo` for every symmetric channel.
pub fn upo_at_least_as_reliable(hi: usize, lo: usize, n: usize) -> bool {
    Monomial::of_index(hi, n).le(&Monomial::of_index(lo, n))
}

/// A set of monomials over a common variable count, canonically stored as the
/// sorted set of corresponding row indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialSet {
    n: u8,
    indices: Vec<u32>,
}

impl MonomialSet {
    /// Build from row indices (the information set view). Duplicates are
    /// forbidden.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<u32> = indices.into_iter().map(|i| {
            assert!(i < 1usize << n, "row index out of range");
            i as u32
        }).collect();
        v.sort_unstable();
        assert!(v.windows(2).all(|w| w[0] != w[1]), "duplicate member");
        Self { n: n as u8, indices: v }
    }

    pub fn from_monomials(n: usize, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        Self::from_indices(n, monomials.into_iter().map(|m| m.index()))
    }

    pub fn empty(n: usize) -> Self {
        Self { n: n as u8, indices: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Sorted row indices, i.e. the information set generated by this set.
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn members(&self) -> impl Iterator<Item = Monomial> + '_ {
        let n = self.n as usize;
        self.indices.iter().map(move |&i| Monomial::of_index(i as usize, n))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.contains_index(m.index())
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.indices.binary_search(&(index as u32)).is_ok()
    }

    /// Insert a monomial; returns false if it was already present.
    pub fn insert(&mut self, m: Monomial) -> bool {
        match self.indices.binary_search(&(m.index() as u32)) {
            Ok(_) => false,
            Err(pos) => {
                self.indices.insert(pos, m.index() as u32);
                true
            }
        }
    }

    /// True iff the set is decreasing: closed under removing factors and
    /// under replacing any factor `x̄_j` by `x̄_k` with `k < j`.
    pub fn is_decreasing(&self) -> bool {
        self.members().all(|m| {
            m.single_factor_divisors().all(|d| self.contains(&d))
                && (0..self.n as usize).all(|j| {
                    !m.contains_var(j)
                        || (0..j).all(|k| m.contains_var(k) || self.contains(&m.substitute(j, k)))
                })
        })
    }

    /// Comma-joined rendering, e.g. `1,x0,x1,x0x1`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        // most reliable rows last in index order; render by ascending degree
        // then index to match the usual table layout
        let mut ms: Vec<Monomial> = self.members().collect();
        ms.sort_by_key(|m| (m.degree(), m.vars));
        for (t, m) in ms.iter().enumerate() {
            if t > 0 {
                s.push(',');
            }
            let _ = write!(s, "{m}");
        }
        s
    }
}
