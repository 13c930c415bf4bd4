//! Rotation symmetric quadratics as offset sets.
//!
//! A function is identified by the strictly ascending set of positive
//! monomial offsets. Two evaluation semantics exist side by side:
//!
//! * `Anf` — offset `t` contributes the n-term orbit `x_0 x_t + x_1 x_{t+1}
//!   + ...`, or the n/2-term short orbit when `t = n/2`; offsets must reduce
//!   into `1..=n/2`.
//! * `Orbit` — offset `i` always contributes the full n-term orbit sum with
//!   indices mod n. Short orbits then cancel (each monomial appears twice)
//!   and an offset divisible by n contributes the linear part
//!   `x_0 + ... + x_{n-1}`. This matches the finite-field trace form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;

/// Which orbit-expansion convention to evaluate under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Anf,
    Orbit,
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semantics::Anf => write!(f, "anf"),
            Semantics::Orbit => write!(f, "orbit"),
        }
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "anf" => Ok(Semantics::Anf),
            "orbit" => Ok(Semantics::Orbit),
            other => Err(Error::Parse(format!(
                "semantics must be \"anf\" or \"orbit\", got {other:?}"
            ))),
        }
    }
}

/// A quadratic rotation symmetric function, given by its monomial offsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RsQuadratic {
    offsets: Vec<u32>,
}

impl RsQuadratic {
    /// Offsets must be nonempty, strictly ascending and positive.
    pub fn new(offsets: &[u32]) -> Result<Self> {
        if offsets.is_empty()
            || offsets[0] == 0
            || offsets.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::InvalidOffsets);
        }
        Ok(RsQuadratic {
            offsets: offsets.to_vec(),
        })
    }

    pub fn single(t: u32) -> Self {
        RsQuadratic::new(&[t]).expect("positive offset")
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    /// The largest offset.
    pub fn max_offset(&self) -> u32 {
        *self.offsets.last().unwrap()
    }

    pub fn term_count(&self) -> usize {
        self.offsets.len()
    }

    /// The numerator of the associated polynomial: with `m` the largest
    /// offset, the sum of `x^{m+i} + x^{m-i}` over all offsets `i`, with the
    /// largest power of `x` divided out so the constant term is 1.
    ///
    /// The result is always palindromic.
    pub fn a_polynomial(&self) -> Gf2Poly {
        let m = self.max_offset() as usize;
        let mut exps = Vec::with_capacity(2 * self.offsets.len());
        for &i in &self.offsets {
            exps.push(m + i as usize);
            exps.push(m - i as usize);
        }
        let p = Gf2Poly::from_exponents(&exps);
        // offsets are distinct so the top term x^{2m} survives; the lowest
        // set exponent is x^0 from i = m, present exactly once
        debug_assert!(!p.is_zero());
        let low = p.exponents()[0];
        Gf2Poly::from_exponents(&p.exponents().iter().map(|e| e - low).collect::<Vec<_>>())
    }

    /// The multiset of offsets reduced mod `n`.
    pub fn reduce_mod(&self, n: usize) -> Result<ResidueMultiset> {
        if n < 1 {
            return Err(Error::InvalidN);
        }
        let mut counts = BTreeMap::new();
        for &i in &self.offsets {
            *counts.entry(i as usize % n).or_insert(0usize) += 1;
        }
        Ok(ResidueMultiset { n, counts })
    }

    /// True iff the full orbit expansion is the zero function on `n`
    /// variables, i.e. the residue multiset is equitable or semi-equitable.
    pub fn vanishes_identically(&self, n: usize) -> Result<bool> {
        let m = self.reduce_mod(n)?;
        Ok(m.is_equitable() || m.is_semi_equitable())
    }

    /// Reduce the offsets to their effective monomial content on `n`
    /// variables under the given semantics.
    ///
    /// Under `Anf` offsets fold to `min(t mod n, n - t mod n)`, since `t`
    /// and `n - t` trace out the same monomial set; the representative
    /// `n/2` (even n) switches the short pairing on or off, and an offset
    /// divisible by `n` is rejected (the monomial degenerates). Under
    /// `Orbit` rotations fold the same way but an `n/2` orbit cancels
    /// outright (each monomial appears twice) and an offset divisible by
    /// `n` toggles the linear part.
    pub fn expand(&self, n: usize, semantics: Semantics) -> Result<Expansion> {
        if n < 1 {
            return Err(Error::InvalidN);
        }
        let mut parity = vec![false; n / 2 + 1];
        let mut short = false;
        let mut linear = false;
        for &t in &self.offsets {
            let r = t as usize % n;
            match semantics {
                Semantics::Anf => {
                    if r == 0 {
                        return Err(Error::OffsetOutOfRange {
                            offset: t,
                            reduced: 0,
                            n,
                            half: n / 2,
                        });
                    }
                    let rp = r.min(n - r);
                    if n % 2 == 0 && rp == n / 2 {
                        short = !short;
                    } else {
                        parity[rp] = !parity[rp];
                    }
                }
                Semantics::Orbit => {
                    if r == 0 {
                        linear = !linear;
                    } else {
                        let rp = r.min(n - r);
                        if n % 2 == 0 && rp == n / 2 {
                            // the full n-term orbit at n/2 covers each
                            // monomial twice and vanishes
                        } else {
                            parity[rp] = !parity[rp];
                        }
                    }
                }
            }
        }
        let pair_rotations = (1..n.div_ceil(2)).filter(|&r| parity[r]).collect();
        Ok(Expansion {
            n,
            pair_rotations,
            short,
            linear,
        })
    }

    /// Offsets grouped by their 2-adic valuation.
    pub fn partition_by_valuation(&self) -> BTreeMap<u32, RsQuadratic> {
        let mut blocks: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &i in &self.offsets {
            blocks.entry(i.trailing_zeros()).or_default().push(i);
        }
        blocks
            .into_iter()
            .map(|(mu, offs)| (mu, RsQuadratic { offsets: offs }))
            .collect()
    }
}

impl fmt::Display for RsQuadratic {
    /// Comma-separated offsets, e.g. `3,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.offsets.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for RsQuadratic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let offsets: Vec<u32> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad offset {p:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        RsQuadratic::new(&offsets)
    }
}

/// The effective monomial content of a function on `n` variables after
/// cancellation: full orbits for rotations below `n/2`, the optional short
/// `n/2` pairing, and the optional linear part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub n: usize,
    /// Rotations `r` in `1..⌈n/2⌉` contributing the full orbit
    /// `Σ_j x_j x_{j+r}`.
    pub pair_rotations: Vec<usize>,
    /// Whether the short pairing `Σ_{j<n/2} x_j x_{j+n/2}` is present.
    pub short: bool,
    /// Whether the linear part `x_0 + ... + x_{n-1}` is present.
    pub linear: bool,
}

impl Expansion {
    /// True iff there is no monomial at all (the zero function).
    pub fn is_zero(&self) -> bool {
        self.pair_rotations.is_empty() && !self.short && !self.linear
    }
}

/// Offsets reduced mod `n`, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueMultiset {
    n: usize,
    counts: BTreeMap<usize, usize>,
}

impl ResidueMultiset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    fn class_parities(&self) -> (bool, bool, bool) {
        // parities of: the residue-0 class, the residue-n/2 class (even n),
        // and the union of all paired classes {r, n-r}
        let mut zero_odd = false;
        let mut half_odd = false;
        let mut pairs_ok = true;
        let half = if self.n % 2 == 0 {
            Some(self.n / 2)
        } else {
            None
        };
        for (&r, &c) in &self.counts {
            if r == 0 {
                zero_odd = c % 2 == 1;
            } else if Some(r) == half {
                half_odd = c % 2 == 1;
            } else if r < self.n - r {
                let mate = self.counts.get(&(self.n - r)).copied().unwrap_or(0);
                if (c + mate) % 2 == 1 {
                    pairs_ok = false;
                }
            }
        }
        (zero_odd, half_odd, pairs_ok)
    }

    /// True iff the multiset splits into pairs `{i, i'}` with
    /// `i + i' ≡ 0 mod n` or `i ≡ i' mod n` — equivalently each class
    /// `{r, n-r}` (including `{0}` and `{n/2}`) has even total multiplicity.
    pub fn is_equitable(&self) -> bool {
        let (zero_odd, half_odd, pairs_ok) = self.class_parities();
        !zero_odd && !half_odd && pairs_ok
    }

    /// Equitable except for an odd count at residue `n/2`; requires even `n`.
    pub fn is_semi_equitable(&self) -> bool {
        let (zero_odd, half_odd, pairs_ok) = self.class_parities();
        self.n % 2 == 0 && !zero_odd && half_odd && pairs_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> RsQuadratic {
        s.parse().unwrap()
    }

    #[test]
    fn construction_validation() {
        assert!(RsQuadratic::new(&[]).is_err());
        assert!(RsQuadratic::new(&[0]).is_err());
        assert!(RsQuadratic::new(&[2, 2]).is_err());
        assert!(RsQuadratic::new(&[3, 1]).is_err());
        assert!(RsQuadratic::new(&[1, 2, 3]).is_ok());
    }

    #[test]
    fn a_polynomial_examples() {
        // single offset t gives x^{2t}+1
        assert_eq!(q("3").a_polynomial(), "1+x^6".parse().unwrap());
        assert_eq!(q("3,4").a_polynomial(), "1+x+x^7+x^8".parse().unwrap());
        assert_eq!(
            q("1,2,3").a_polynomial(),
            "1+x+x^2+x^4+x^5+x^6".parse().unwrap()
        );
    }

    #[test]
    fn a_polynomial_is_palindromic() {
        for s in ["1", "3,4", "1,2,3", "1,4", "2,5,6,9"] {
            assert!(q(s).a_polynomial().is_palindromic(), "{s}");
        }
    }

    #[test]
    fn reduce_mod_examples() {
        let m = q("3,4").reduce_mod(7).unwrap();
        assert_eq!(m.counts().get(&3), Some(&1));
        assert_eq!(m.counts().get(&4), Some(&1));
        let m = q("5").reduce_mod(4).unwrap();
        assert_eq!(m.counts().get(&1), Some(&1));
        assert_eq!(m.total(), 1);
    }

    #[test]
    fn equitable_examples() {
        assert!(q("3,4").reduce_mod(7).unwrap().is_equitable());
        assert!(q("1,2,3").reduce_mod(4).unwrap().is_semi_equitable());
        let m = q("3,4").reduce_mod(8).unwrap();
        assert!(!m.is_equitable() && !m.is_semi_equitable());
        // residue-0 class must pair up too
        assert!(q("4,8").reduce_mod(4).unwrap().is_equitable());
        assert!(!q("4").reduce_mod(4).unwrap().is_equitable());
    }

    #[test]
    fn vanishes_identically_examples() {
        assert!(q("1,2,3").vanishes_identically(4).unwrap());
        assert!(q("3,4").vanishes_identically(7).unwrap());
        for n in 3..=16 {
            assert!(!q("1").vanishes_identically(n).unwrap());
        }
    }

    #[test]
    fn partition_by_valuation_examples() {
        let p = q("1,2,3").partition_by_valuation();
        assert_eq!(p[&0], q("1,3"));
        assert_eq!(p[&1], q("2"));
        let p = q("3,4").partition_by_valuation();
        assert_eq!(p[&0], q("3"));
        assert_eq!(p[&2], q("4"));
        let p = q("6").partition_by_valuation();
        assert_eq!(p[&1], q("6"));
    }

    #[test]
    fn expand_semantics() {
        // full orbits at r and n-r coincide and cancel in pairs
        let e = q("3,4").expand(7, Semantics::Orbit).unwrap();
        assert!(e.is_zero());
        // the n/2 orbit cancels on its own
        let e = q("3").expand(6, Semantics::Orbit).unwrap();
        assert!(e.is_zero());
        // ...but the short pairing does not
        let e = q("3").expand(6, Semantics::Anf).unwrap();
        assert!(e.short && e.pair_rotations.is_empty());
        // offsets divisible by n give the linear part
        let e = q("4").expand(4, Semantics::Orbit).unwrap();
        assert!(e.linear && e.is_zero() == false);
        // offsets fold to min(t, n-t): 4 and 2 give the same monomials at n=6
        let e = q("4").expand(6, Semantics::Anf).unwrap();
        assert_eq!(e.pair_rotations, [2]);
        // ...so {2,4} cancels entirely
        assert!(q("2,4").expand(6, Semantics::Anf).unwrap().is_zero());
        // an offset divisible by n degenerates under ANF
        assert!(q("6").expand(6, Semantics::Anf).is_err());
    }

    #[test]
    fn literal_round_trip() {
        for s in ["1", "3,4", "1,2,3"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert!("".parse::<RsQuadratic>().is_err());
        assert!("2,1".parse::<RsQuadratic>().is_err());
    }
}
