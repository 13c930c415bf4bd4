//! Arithmetic in GF(2^n) with the absolute trace, trace-form evaluation and
//! linearized-polynomial kernels.
//!
//! Elements are plain bit-sequences of length `n` in the polynomial basis
//! (bit `k` is the coefficient of `x^k`), stored in a `u32`. The modulus is
//! deterministic — the lexicographically smallest irreducible polynomial of
//! degree `n` by ascending coefficient bit-pattern — so all outputs are
//! reproducible bit for bit.

use crate::bits;
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::rsq::RsQuadratic;

/// Hard cap on the extension degree.
pub const MAX_DEGREE: usize = 24;

/// A fixed finite field GF(2^n).
#[derive(Debug, Clone)]
pub struct FieldCtx {
    n: usize,
    /// Modulus coefficients as a bit word; bit n is always set.
    modulus_bits: u32,
    modulus: Gf2Poly,
}

fn is_irreducible(p: &Gf2Poly, n: usize) -> bool {
    // no irreducible factor of degree <= n/2 means irreducible for degree n:
    // check gcd(x^{2^k} + x, p) = 1 for k = 1..n/2
    let x = Gf2Poly::x();
    let mut xq = x.clone();
    for _ in 1..=n / 2 {
        xq = xq.square().rem(p).unwrap();
        let g = xq.add(&x).gcd(p).unwrap();
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

impl FieldCtx {
    /// Build GF(2^n), choosing the deterministic modulus.
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 || n > MAX_DEGREE {
            return Err(Error::DegreeCap(n, MAX_DEGREE));
        }
        // degree-n candidates with nonzero constant term, ascending bit-pattern
        let top = 1u32 << n;
        for low in (1..(1u32 << n)).step_by(2) {
            let bits = top | low;
            let p = poly_from_bits(bits);
            if is_irreducible(&p, n) {
                return Ok(FieldCtx {
                    n,
                    modulus_bits: bits,
                    modulus: p,
                });
            }
        }
        unreachable!("an irreducible polynomial exists for every degree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.modulus
    }

    /// Number of field elements, 2^n.
    pub fn order(&self) -> u64 {
        1u64 << self.n
    }

    /// Product in the field: carry-less multiply then reduce.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < 1 << self.n && b < 1 << self.n);
        let mut prod = 0u64;
        let mut a64 = a as u64;
        let mut b64 = b as u64;
        while b64 != 0 {
            if b64 & 1 == 1 {
                prod ^= a64;
            }
            a64 <<= 1;
            b64 >>= 1;
        }
        // reduce the (at most 2n-1 bit) product modulo the modulus
        let m = self.modulus_bits as u64;
        for bit in (self.n..2 * self.n).rev() {
            if prod >> bit & 1 == 1 {
                prod ^= m << (bit - self.n);
            }
        }
        prod as u32
    }

    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    /// `a^{2^k}`: the k-th Frobenius power; k is reduced mod n first.
    pub fn frobenius_pow(&self, a: u32, k: usize) -> u32 {
        let mut out = a;
        for _ in 0..k % self.n {
            out = self.square(out);
        }
        out
    }

    /// The absolute trace `a + a^2 + ... + a^{2^{n-1}}`, in {0, 1}.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0u32;
        let mut cur = a;
        for _ in 0..self.n {
            acc ^= cur;
            cur = self.square(cur);
        }
        debug_assert!(acc <= 1, "trace must land in the prime field");
        acc
    }

    /// The bit `Σ_i Tr(x^{2^i + 1})` over the offsets of `q`.
    pub fn eval_trace_form(&self, q: &RsQuadratic, x: u32) -> u32 {
        let mut acc = 0u32;
        for &i in q.offsets() {
            let y = self.frobenius_pow(x, i as usize);
            acc ^= self.trace(self.mul(y, x));
        }
        acc
    }

    /// Weight of the full 2^n-point table of the trace form.
    pub fn trace_form_weight(&self, q: &RsQuadratic) -> u64 {
        (0..self.order() as u32)
            .map(|x| self.eval_trace_form(q, x) as u64)
            .sum()
    }

    /// A GF(2)-basis of the kernel of the linearized map
    /// `z ↦ Σ_i (z^{2^{n-i mod n}} + z^{2^{i mod n}})` over the offsets of
    /// `q`, as bit-packed elements.
    pub fn linearized_kernel(&self, q: &RsQuadratic) -> Vec<u32> {
        // image of each polynomial-basis element
        let mut images = vec![0u32; self.n];
        for (j, img) in images.iter_mut().enumerate() {
            let e = 1u32 << j;
            for &i in q.offsets() {
                let i = i as usize % self.n;
                *img ^= self.frobenius_pow(e, (self.n - i) % self.n);
                *img ^= self.frobenius_pow(e, i);
            }
        }
        // transpose so rows index output coordinates, columns index inputs
        let rows: Vec<u64> = (0..self.n)
            .map(|r| {
                (0..self.n)
                    .map(|c| ((images[c] >> r & 1) as u64) << c)
                    .fold(0, |a, b| a | b)
            })
            .collect();
        bits::nullspace(&rows, self.n)
            .into_iter()
            .map(|v| v as u32)
            .collect()
    }
}

fn poly_from_bits(bits: u32) -> Gf2Poly {
    let exps: Vec<usize> = (0..32).filter(|&k| bits >> k & 1 == 1).collect();
    Gf2Poly::from_exponents(&exps)
}
