//! Polynomial arithmetic over GF(2).
//!
//! Coefficients are packed little-endian by exponent: bit `k` of the word
//! sequence is the coefficient of `x^k`. The zero polynomial has empty
//! support and its degree is `None`; there is no `-1` sentinel anywhere.
//!
//! Beyond the ring operations this module provides the three quantities the
//! rest of the crate keeps asking for: the multiplicity of the factor `x+1`,
//! the smallest odd `m` with `radical(p) | x^m + 1`, and the smallest
//! `N = 2^t * m` with `p | x^N + 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A polynomial over GF(2), bit-packed by exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / WORD_BITS + 1];
        words[k / WORD_BITS] = 1u64 << (k % WORD_BITS);
        Gf2Poly { words }
    }

    /// Build from the list of exponents with coefficient 1.
    /// Repeated exponents cancel in pairs.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Gf2Poly::zero();
        for &e in exps {
            p.toggle(e);
        }
        p.normalize();
        p
    }

    /// Ascending list of exponents with coefficient 1.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b);
                w &= w - 1;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let w = self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (63 - w.leading_zeros() as usize))
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words
            .get(k / WORD_BITS)
            .map(|w| (w >> (k % WORD_BITS)) & 1 == 1)
            .unwrap_or(false)
    }

    fn toggle(&mut self, k: usize) {
        let wi = k / WORD_BITS;
        if wi >= self.words.len() {
            self.words.resize(wi + 1, 0);
        }
        self.words[wi] ^= 1u64 << (k % WORD_BITS);
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Addition (= subtraction) over GF(2).
    pub fn add(&self, rhs: &Gf2Poly) -> Gf2Poly {
        let mut words = vec![0u64; self.words.len().max(rhs.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ rhs.words.get(i).copied().unwrap_or(0);
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Gf2Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let word_shift = k / WORD_BITS;
        let bit_shift = k % WORD_BITS;
        let mut words = vec![0u64; self.words.len() + word_shift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + word_shift] |= w << bit_shift;
            if bit_shift != 0 {
                words[i + word_shift + 1] |= w >> (WORD_BITS - bit_shift);
            }
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }

    /// Carry-less (shift-xor) product. The degree of a product of nonzero
    /// polynomials is the sum of the degrees.
    pub fn mul(&self, rhs: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf2Poly::zero();
        }
        let mut acc = Gf2Poly::zero();
        for e in self.exponents() {
            acc = acc.add(&rhs.shl(e));
        }
        acc
    }

    pub fn square(&self) -> Gf2Poly {
        // (sum x^e)^2 = sum x^{2e} in characteristic two
        Gf2Poly::from_exponents(&self.exponents().iter().map(|e| 2 * e).collect::<Vec<_>>())
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn divrem(&self, rhs: &Gf2Poly) -> Result<(Gf2Poly, Gf2Poly)> {
        let db = rhs.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = Gf2Poly::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let k = dr - db;
            q.toggle(k);
            r = r.add(&rhs.shl(k));
        }
        q.normalize();
        Ok((q, r))
    }

    pub fn rem(&self, rhs: &Gf2Poly) -> Result<Gf2Poly> {
        Ok(self.divrem(rhs)?.1)
    }

    /// Greatest common divisor (monic automatically over GF(2)).
    pub fn gcd(&self, rhs: &Gf2Poly) -> Result<Gf2Poly> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Formal derivative; over GF(2) only odd-exponent terms survive.
    pub fn derivative(&self) -> Gf2Poly {
        let exps: Vec<usize> = self
            .exponents()
            .into_iter()
            .filter(|e| e % 2 == 1)
            .map(|e| e - 1)
            .collect();
        Gf2Poly::from_exponents(&exps)
    }

    /// Square root of a perfect square (all exponents even).
    fn sqrt(&self) -> Gf2Poly {
        let exps = self.exponents();
        debug_assert!(exps.iter().all(|e| e % 2 == 0));
        Gf2Poly::from_exponents(&exps.iter().map(|e| e / 2).collect::<Vec<_>>())
    }

    /// Squarefree radical: the product of the distinct irreducible factors.
    pub fn radical(&self) -> Result<Gf2Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Gf2Poly::one());
        }
        let d = self.derivative();
        if d.is_zero() {
            // perfect square in characteristic two
            return self.sqrt().radical();
        }
        let g = self.gcd(&d)?;
        // w carries each odd-multiplicity prime exactly once
        let w = self.divrem(&g)?.0;
        // strip w's primes from g; the leftover is a perfect square holding
        // the even-multiplicity primes
        let mut rest = g;
        loop {
            let h = rest.gcd(&w)?;
            if h.degree() == Some(0) {
                break;
            }
            rest = rest.divrem(&h)?.0;
        }
        Ok(w.mul(&rest.sqrt().radical()?))
    }

    /// Exact multiplicity of the factor `x + 1` (= `x - 1` over GF(2)).
    pub fn unit_multiplicity(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = Gf2Poly::from_exponents(&[0, 1]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.divrem(&unit)?;
            if !r.is_zero() {
                return Ok(k);
            }
            p = q;
            k += 1;
        }
    }

    /// Smallest odd `m` such that the squarefree radical divides `x^m + 1`.
    ///
    /// Requires a nonzero constant term. Equals the multiplicative order of
    /// `x` modulo the radical, which is automatically odd because every root
    /// lies in some `GF(2^k)^*` of odd order `2^k - 1`.
    pub fn radical_odd_order(&self) -> Result<u64> {
        if !self.coeff(0) {
            return Err(Error::ConstantTermZero);
        }
        let rad = self.radical()?;
        let deg = rad.degree().expect("radical of a nonzero polynomial");
        if deg == 0 {
            return Ok(1);
        }
        let bound = if deg >= 63 {
            u64::MAX
        } else {
            (1u64 << deg) - 1
        };
        let x = Gf2Poly::x();
        let mut cur = x.rem(&rad)?;
        let mut m = 1u64;
        while !cur.is_one() {
            cur = cur.mul(&x).rem(&rad)?;
            m += 1;
            if m > bound {
                return Err(Error::Falsified(format!(
                    "order of x modulo radical exceeds 2^{deg} - 1"
                )));
            }
        }
        Ok(m)
    }

    /// Smallest `N = 2^t * m` (m odd) with `self | x^N + 1`.
    ///
    /// `m` is [`Self::radical_odd_order`]; `t` is the smallest integer with
    /// `2^t` at least the maximum multiplicity of any irreducible factor,
    /// found here by direct divisibility tests via
    /// `x^{2^t m} + 1 = (x^m + 1)^{2^t}`.
    pub fn dividing_period(&self) -> Result<u64> {
        if !self.coeff(0) {
            return Err(Error::ConstantTermZero);
        }
        if self.degree() == Some(0) {
            return Ok(1);
        }
        let m = self.radical_odd_order()?;
        for t in 0..64u32 {
            let n = m << t;
            if x_pow_mod(n, self)?.is_one() {
                return Ok(n);
            }
        }
        Err(Error::Falsified(
            "no dividing period within 64 doublings".into(),
        ))
    }

    /// Coefficient list reversed: `x^deg * p(1/x)`.
    pub fn reverse(&self) -> Gf2Poly {
        match self.degree() {
            None => Gf2Poly::zero(),
            Some(d) => Gf2Poly::from_exponents(
                &self.exponents().iter().map(|e| d - e).collect::<Vec<_>>(),
            ),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.reverse()
    }

    /// Compact hex dump of the coefficient bits, most significant digit first.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, w) in self.words.iter().enumerate().rev() {
            if s.is_empty() {
                s = format!("{w:x}");
            } else {
                s.push_str(&format!("{w:016x}"));
            }
            let _ = i;
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Gf2Poly> {
        let s = s.trim();
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(Error::Parse(format!("invalid hex polynomial: {s:?}")));
        }
        let mut words = Vec::new();
        let bytes = s.as_bytes();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = std::str::from_utf8(&bytes[start..end]).unwrap();
            let w = u64::from_str_radix(chunk, 16)
                .map_err(|e| Error::Parse(format!("invalid hex polynomial: {e}")))?;
            words.push(w);
            end = start;
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        Ok(p)
    }
}

/// `x^e mod modulus` by binary exponentiation.
pub fn x_pow_mod(e: u64, modulus: &Gf2Poly) -> Result<Gf2Poly> {
    let mut result = Gf2Poly::one().rem(modulus)?;
    let mut base = Gf2Poly::x().rem(modulus)?;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base).rem(modulus)?;
        }
        base = base.mul(&base).rem(modulus)?;
        e >>= 1;
    }
    Ok(result)
}

impl fmt::Display for Gf2Poly {
    /// Ascending textual form: `1+x+x^4` has exponent set {0, 1, 4}.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gf2Poly> {
        let s = s.trim();
        if s == "0" {
            return Ok(Gf2Poly::zero());
        }
        let mut exps = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let e = if term == "1" {
                0
            } else if term == "x" {
                1
            } else if let Some(rest) = term.strip_prefix("x^") {
                rest.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad exponent {rest:?}: {e}")))?
            } else {
                return Err(Error::Parse(format!("bad polynomial term {term:?}")));
            };
            exps.push(e);
        }
        Ok(Gf2Poly::from_exponents(&exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn mul_examples() {
        let x1 = p("1+x");
        assert_eq!(x1.mul(&x1), p("1+x^2"));
        assert_eq!(x1.mul(&p("1+x+x^2")), p("1+x^3"));
        // schoolbook oracle: (x^3+1)^2 = x^6+1
        assert_eq!(p("1+x^3").mul(&p("1+x^3")), p("1+x^6"));
        assert_eq!(p("1+x^3").square(), p("1+x^6"));
    }

    #[test]
    fn mul_degree_adds() {
        let a = p("1+x^5");
        let b = p("1+x+x^7");
        assert_eq!(
            a.mul(&b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p("1+x^6").divrem(&p("1+x+x^3+x^4")).unwrap();
        assert_eq!(q, p("1+x+x^2"));
        assert!(r.is_zero());
        // reconstruct through mul
        assert_eq!(q.mul(&p("1+x+x^3+x^4")).add(&r), p("1+x^6"));

        let (q, r) = p("1+x+x^2").divrem(&p("1+x")).unwrap();
        assert_eq!(q, p("x"));
        assert_eq!(r, p("1"));

        let (q, r) = Gf2Poly::zero().divrem(&p("1+x")).unwrap();
        assert!(q.is_zero() && r.is_zero());

        assert!(matches!(
            p("1").divrem(&Gf2Poly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_examples() {
        let g = p("1+x^6").gcd(&p("1+x+x^3+x^4")).unwrap();
        assert_eq!(g.degree(), Some(4));
        assert_eq!(g, p("1+x+x^3+x^4"));

        // gcd(x^i+1, x^j+1) = x^{gcd(i,j)}+1
        assert_eq!(p("1+x^7").gcd(&p("1+x")).unwrap(), p("1+x"));

        let q = p("1+x^2+x^5");
        assert_eq!(q.gcd(&q).unwrap(), q);

        assert!(matches!(
            Gf2Poly::zero().gcd(&Gf2Poly::zero()),
            Err(Error::GcdBothZero)
        ));
    }

    #[test]
    fn unit_multiplicity_examples() {
        assert_eq!(p("1+x+x^7+x^8").unit_multiplicity().unwrap(), 2);
        assert_eq!(p("1+x+x^2").unit_multiplicity().unwrap(), 0);
        // numerator of A for offsets {1,2,3}
        assert_eq!(
            p("1+x+x^2+x^4+x^5+x^6").unit_multiplicity().unwrap(),
            4
        );
        assert!(matches!(
            Gf2Poly::zero().unit_multiplicity(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn radical_of_square_and_mixed() {
        // (x+1)^2 (x^2+x+1) = x^4+x^3+x+1
        let r = p("1+x+x^3+x^4").radical().unwrap();
        assert_eq!(r, p("1+x").mul(&p("1+x+x^2")));
        // perfect square: (x^3+1)^2
        assert_eq!(p("1+x^6").radical().unwrap(), p("1+x^3"));
        // (x+1)^6
        assert_eq!(p("1+x").square().mul(&p("1+x").square()).mul(&p("1+x").square()).radical().unwrap(), p("1+x"));
    }

    #[test]
    fn radical_odd_order_examples() {
        assert_eq!(p("1+x+x^2").radical_odd_order().unwrap(), 3);
        assert_eq!(p("1+x+x^3+x^4").radical_odd_order().unwrap(), 3);
        let big = p("1+x^5").mul(&p("1+x^3"));
        assert_eq!(big.radical_odd_order().unwrap(), 15);
        assert!(matches!(
            p("x").radical_odd_order(),
            Err(Error::ConstantTermZero)
        ));
    }

    #[test]
    fn dividing_period_examples() {
        // numerator of A for offsets {1,4}
        let a14 = p("1+x^3+x^5+x^8");
        assert_eq!(a14.dividing_period().unwrap(), 30);
        // numerator of A for offsets {1,2}
        assert_eq!(p("1+x+x^3+x^4").dividing_period().unwrap(), 6);
        // x^{2t}+1 for t=3
        assert_eq!(p("1+x^6").dividing_period().unwrap(), 6);
    }

    #[test]
    fn text_and_hex_round_trip() {
        let q = p("1+x+x^4");
        assert_eq!(q.to_string(), "1+x+x^4");
        assert_eq!(q.to_hex(), "13");
        assert_eq!(Gf2Poly::from_hex("13").unwrap(), q);
        assert_eq!(Gf2Poly::zero().to_string(), "0");
        assert_eq!("0".parse::<Gf2Poly>().unwrap(), Gf2Poly::zero());
    }

    #[test]
    fn palindromic() {
        assert!(p("1+x+x^2+x^4+x^5+x^6").is_palindromic());
        assert!(!p("1+x^2+x^3").is_palindromic());
    }
}
