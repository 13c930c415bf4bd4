//! Closed-form balance classification.
//!
//! Balancedness of the full-orbit (trace) form depends only on the 2-adic
//! valuation of the variable count, and only valuations up to `ν_Q` can be
//! balanced, where `2^{ν_Q - 1} < d_Q <= 2^{ν_Q}` and `d_Q` is the
//! multiplicity of `x + 1` in the associated polynomial. So the whole
//! balance behaviour over all n is pinned down by testing the kernel
//! criterion at `n = 1, 2, 4, ..., 2^{ν_Q}` — no truth tables, and feasible
//! even when those powers run into the thousands.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadform;
use crate::rsq::{RsQuadratic, Semantics};

/// The multiplicity of `x + 1` in the associated polynomial. Always
/// positive: the associated polynomial has evenly many terms.
pub fn d_q(q: &RsQuadratic) -> usize {
    let d = q
        .a_polynomial()
        .unit_multiplicity()
        .expect("associated polynomial is nonzero");
    assert!(d >= 1, "associated polynomial always vanishes at x = 1");
    d
}

/// The exponent with `2^{nu_q - 1} < d_q <= 2^{nu_q}`.
pub fn nu_q(q: &RsQuadratic) -> u32 {
    let d = d_q(q);
    (d as u64).next_power_of_two().trailing_zeros()
}

/// Which 2-adic valuations of n give a balanced function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", content = "k")]
pub enum Shape {
    /// Balanced for no n at all.
    #[serde(rename = "NEVER")]
    Never,
    /// Balanced exactly when the valuation of n equals k.
    #[serde(rename = "EXACT_VALUATION")]
    ExactValuation(u32),
    /// Balanced exactly when the valuation of n is at most k.
    #[serde(rename = "VALUATION_AT_MOST")]
    ValuationAtMost(u32),
}

/// The complete balance behaviour of one function over all n.
#[derive(Debug, Clone, Serialize)]
pub struct BalanceProfile {
    #[serde(flatten)]
    pub shape: Shape,
    /// `k + 1` for the non-`NEVER` shapes: the exponent in the congruence
    /// description "n ≢ 0 mod 2^{c}" (at-most) or "n ≡ 2^{d-1} mod 2^d"
    /// (exact).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_or_d: Option<u32>,
    pub d_q: usize,
    pub nu_q: u32,
    /// Kernel-criterion verdicts at n = 2^0, 2^1, ..., 2^{nu_q}.
    pub witness: Vec<bool>,
}

/// Classify the function by testing balancedness at every power of two up
/// to `2^{ν_Q}`.
///
/// The witness bits are constrained by the term-count parity: an odd number
/// of offsets forces an initial segment `{0..k}`, an even number forces the
/// empty set or a singleton `{k}` with `k >= 1`. A violation is reported as
/// a falsification, never silently repaired.
pub fn profile(q: &RsQuadratic) -> Result<BalanceProfile> {
    let dq = d_q(q);
    let nuq = nu_q(q);
    let witness: Vec<bool> = (0..=nuq)
        .map(|nu| quadform::is_balanced(q, 1usize << nu, Semantics::Orbit))
        .collect::<Result<_>>()?;
    let balanced: Vec<u32> = (0..=nuq).filter(|&nu| witness[nu as usize]).collect();
    let odd_terms = q.term_count() % 2 == 1;
    let shape = if odd_terms {
        let k = *balanced.last().ok_or_else(|| {
            Error::Falsified(format!("{q} has oddly many terms but is balanced at no power of two"))
        })?;
        if balanced != (0..=k).collect::<Vec<_>>() {
            return Err(Error::Falsified(format!(
                "{q} has oddly many terms but its balanced valuations {balanced:?} \
                 are not an initial segment"
            )));
        }
        Shape::ValuationAtMost(k)
    } else {
        match balanced[..] {
            [] => Shape::Never,
            [k] if k >= 1 => Shape::ExactValuation(k),
            _ => {
                return Err(Error::Falsified(format!(
                    "{q} has evenly many terms but its balanced valuations {balanced:?} \
                     are not empty or a positive singleton"
                )))
            }
        }
    };
    let c_or_d = match shape {
        Shape::Never => None,
        Shape::ExactValuation(k) | Shape::ValuationAtMost(k) => Some(k + 1),
    };
    Ok(BalanceProfile {
        shape,
        c_or_d,
        d_q: dq,
        nu_q: nuq,
        witness,
    })
}

impl BalanceProfile {
    /// Balancedness at any n, read off from the shape.
    pub fn balanced_at(&self, n: usize) -> bool {
        let nu = n.trailing_zeros();
        match self.shape {
            Shape::Never => false,
            Shape::ExactValuation(k) => nu == k,
            Shape::ValuationAtMost(k) => nu <= k,
        }
    }
}

/// Balancedness at `n` from the closed-form profile; always agrees with the
/// kernel criterion at `n` itself.
pub fn is_balanced_fast(q: &RsQuadratic, n: usize) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidN);
    }
    Ok(profile(q)?.balanced_at(n))
}

/// One valuation block of the offsets and the `x + 1` multiplicity of its
/// own associated polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct ValuationBlock {
    pub mu: u32,
    pub offsets: RsQuadratic,
    pub block_d: usize,
}

/// Per-block decomposition report for `d_q`.
#[derive(Debug, Clone, Serialize)]
pub struct ValuationPartitionReport {
    pub blocks: Vec<ValuationBlock>,
    pub d_q: usize,
}

/// Split the offsets by 2-adic valuation and compute each block's own
/// `x + 1` multiplicity. Two structural facts are asserted: a block at
/// valuation μ has multiplicity of exact valuation μ + 1, and the combined
/// `d_q` is the minimum over the blocks.
pub fn valuation_partition_check(q: &RsQuadratic) -> Result<ValuationPartitionReport> {
    let combined = d_q(q);
    let mut blocks = Vec::new();
    for (mu, block) in q.partition_by_valuation() {
        let block_d = d_q(&block);
        if block_d.trailing_zeros() != mu + 1 || block_d == 0 {
            return Err(Error::Falsified(format!(
                "valuation block μ={mu} of {q} has multiplicity {block_d}, \
                 whose valuation is not μ+1"
            )));
        }
        blocks.push(ValuationBlock {
            mu,
            offsets: block,
            block_d,
        });
    }
    let min = blocks.iter().map(|b| b.block_d).min().expect("offsets nonempty");
    if combined != min {
        return Err(Error::Falsified(format!(
            "d_q({q}) = {combined} but the valuation-block minimum is {min}"
        )));
    }
    Ok(ValuationPartitionReport {
        blocks,
        d_q: combined,
    })
}
