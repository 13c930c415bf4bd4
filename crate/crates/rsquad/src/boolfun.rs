//! Brute-force oracle: bit-packed truth tables, exact weights, fast
//! Walsh–Hadamard transform and nonlinearity.
//!
//! Index convention (frozen, since Walsh indices depend on it): table index
//! `v` encodes the input `(x_0, ..., x_{n-1})` with `x_0` in the most
//! significant of the low `n` bits, i.e. `x_j` is bit `n-1-j` of `v`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rsq::{RsQuadratic, Semantics};

/// Hard cap on variable count: a packed table at n = 28 is 32 MB.
pub const MAX_VARS: usize = 28;

/// A bit-packed table of all 2^n function values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    bits: Vec<u64>,
}

/// Rotate the low `n` bits of `w` left by `r` (0 <= r < n).
fn rotl_n(w: u32, r: usize, n: usize) -> u32 {
    let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    if r == 0 {
        w & mask
    } else {
        ((w << r) | (w >> (n - r))) & mask
    }
}

impl TruthTable {
    /// Evaluate a rotation symmetric quadratic on all 2^n inputs.
    ///
    /// `Anf` requires every offset to reduce into `1..=n/2` mod n; offset
    /// `n/2` contributes the n/2-term short orbit. `Orbit` accepts any
    /// offsets: each contributes the full n-term orbit sum (so short orbits
    /// cancel), and an offset divisible by n contributes
    /// `x_0 + ... + x_{n-1}`.
    pub fn from_rs_quadratic(q: &RsQuadratic, n: usize, semantics: Semantics) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidN);
        }
        if n > MAX_VARS {
            return Err(Error::VariableCap(n, MAX_VARS));
        }
        let expansion = q.expand(n, semantics)?;
        let size = 1usize << n;
        let mut bits = vec![0u64; size.div_ceil(64)];
        // mask selecting x_j for j < n/2, i.e. the top n/2 of the low n bits
        let short_mask: u32 = if expansion.short {
            ((1u32 << (n / 2)) - 1) << (n - n / 2)
        } else {
            0
        };
        for v in 0..size as u32 {
            let mut acc = 0u32;
            for &r in &expansion.pair_rotations {
                acc ^= (v & rotl_n(v, r, n)).count_ones();
            }
            if expansion.linear {
                acc ^= v.count_ones();
            }
            if expansion.short {
                acc ^= (v & rotl_n(v, n / 2, n) & short_mask).count_ones();
            }
            if acc & 1 == 1 {
                bits[v as usize / 64] |= 1u64 << (v % 64);
            }
        }
        Ok(TruthTable { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, v: usize) -> bool {
        self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    /// Number of ones in the table.
    pub fn weight(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// True iff the table is invariant under rotating the input coordinates.
    pub fn is_rotation_invariant(&self) -> bool {
        (0..self.len()).all(|v| {
            let rotated = rotl_n(v as u32, 1, self.n) as usize;
            self.get(v) == self.get(rotated)
        })
    }

    /// Full Walsh spectrum via the in-place fast Walsh–Hadamard transform.
    pub fn walsh(&self) -> WalshSpectrum {
        let mut vals: Vec<i32> = (0..self.len())
            .map(|v| if self.get(v) { -1 } else { 1 })
            .collect();
        let mut h = 1;
        while h < vals.len() {
            for block in vals.chunks_mut(2 * h) {
                for i in 0..h {
                    let (a, b) = (block[i], block[i + h]);
                    block[i] = a + b;
                    block[i + h] = a - b;
                }
            }
            h *= 2;
        }
        WalshSpectrum {
            n: self.n,
            values: vals,
        }
    }

    /// 2^{n-1} minus half the largest absolute Walsh value.
    pub fn nonlinearity(&self) -> u64 {
        self.walsh().nonlinearity()
    }

    /// Raw little-endian packed bits, 2^n of them, for table dumps.
    pub fn to_bytes(&self) -> Vec<u8> {
        let nbytes = self.len().div_ceil(8);
        let mut out = Vec::with_capacity(nbytes);
        for w in &self.bits {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out.truncate(nbytes);
        out
    }
}

/// JSON header accompanying a raw table dump.
#[derive(Debug, Serialize)]
pub struct TableDumpHeader {
    pub n: usize,
    pub semantics: Semantics,
    pub offsets: Vec<u32>,
}

/// The 2^n signed Walsh values; index `w` holds the correlation with the
/// linear function `w . x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn max_abs(&self) -> u64 {
        self.values.iter().map(|v| v.unsigned_abs() as u64).max().unwrap()
    }

    pub fn nonlinearity(&self) -> u64 {
        (1u64 << (self.n - 1)) - self.max_abs() / 2
    }

    /// True iff every value lies in `{0, ±2^{(n+v)/2}}`.
    pub fn is_plateaued_with(&self, v: usize) -> bool {
        if (self.n + v) % 2 != 0 {
            return false;
        }
        let level = 1i64 << ((self.n + v) / 2);
        self.values
            .iter()
            .all(|&w| w == 0 || (w as i64).abs() == level)
    }

    /// Parseval's identity; holds for every spectrum of a genuine table.
    pub fn parseval_holds(&self) -> bool {
        let sum: u64 = self.values.iter().map(|&v| (v as i64 * v as i64) as u64).sum();
        sum == 1u64 << (2 * self.n)
    }
}
