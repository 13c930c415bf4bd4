//! Polynomial-time analysis of a rotation symmetric quadratic at a given n,
//! with no truth table in sight: circulant form matrix and its kernel,
//! balancedness, Dickson rank and sign, exact weight and nonlinearity,
//! v-values and their periods.

use num_integer::Integer;
use serde::Serialize;

use crate::bits::wide;
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::rsq::{Expansion, RsQuadratic, Semantics};

/// The circulant matrix data of a quadratic on `n` variables.
///
/// `C = B + Bᵀ` where `B` holds the quadratic monomials; `C` is symmetric
/// with zero diagonal and fully determined by its first row.
#[derive(Debug, Clone)]
pub struct FormMatrices {
    expansion: Expansion,
    /// First row of `C` as an n-bit vector: bit `r` set iff `x_0 x_r` has an
    /// odd number of sources.
    first_row: Vec<u64>,
}

impl FormMatrices {
    pub fn new(q: &RsQuadratic, n: usize, semantics: Semantics) -> Result<Self> {
        let expansion = q.expand(n, semantics)?;
        let mut first_row = wide::zero(n);
        for &r in &expansion.pair_rotations {
            wide::toggle(&mut first_row, r);
            wide::toggle(&mut first_row, n - r);
        }
        if expansion.short {
            wide::toggle(&mut first_row, n / 2);
        }
        Ok(FormMatrices {
            expansion,
            first_row,
        })
    }

    pub fn n(&self) -> usize {
        self.expansion.n
    }

    pub fn expansion(&self) -> &Expansion {
        &self.expansion
    }

    /// Row `r` of `C`: the first row rotated by `r`.
    pub fn row(&self, r: usize) -> Vec<u64> {
        wide::rotl(&self.first_row, r, self.n())
    }

    /// Evaluate the function (quadratic part plus any linear part) on a
    /// single n-bit input.
    pub fn evaluate(&self, v: &[u64]) -> bool {
        let n = self.n();
        let mut acc = false;
        for &r in &self.expansion.pair_rotations {
            acc ^= wide::and_parity(v, &wide::rotl(v, r, n));
        }
        if self.expansion.short {
            for j in 0..n / 2 {
                acc ^= wide::get(v, j) & wide::get(v, j + n / 2);
            }
        }
        if self.expansion.linear {
            acc ^= wide::parity(v);
        }
        acc
    }

    /// Null space of `C` and the parity decomposition of the function on it.
    pub fn kernel_and_parity(&self) -> KernelParity {
        let n = self.n();
        let rows: Vec<Vec<u64>> = (0..n).map(|r| self.row(r)).collect();
        let basis = wide::nullspace(&rows, n);
        // the restriction of the function to ker C is GF(2)-linear, so it is
        // nonzero somewhere iff it is nonzero on some basis vector
        let v1_nonempty = basis.iter().any(|v| self.evaluate(v));
        let v0_dim = basis.len() - usize::from(v1_nonempty);
        KernelParity {
            basis,
            v0_dim,
            v1_nonempty,
        }
    }
}

/// Kernel of the circulant matrix together with the split of the function's
/// values on it: `v0_dim` is the dimension of the zero set, `v1_nonempty`
/// says whether the function takes the value 1 anywhere on the kernel.
#[derive(Debug, Clone)]
pub struct KernelParity {
    pub basis: Vec<Vec<u64>>,
    pub v0_dim: usize,
    pub v1_nonempty: bool,
}

/// Degree of `gcd(x^n + 1, A)` where `A` is the function's associated
/// polynomial — the plateau parameter.
pub fn v_value(q: &RsQuadratic, n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidN);
    }
    let xn1 = Gf2Poly::from_exponents(&[0, n]);
    let g = xn1.gcd(&q.a_polynomial())?;
    Ok(g.degree().expect("gcd of nonzero polynomials"))
}

/// One full period of the v-value sequence.
#[derive(Debug, Clone, Serialize)]
pub struct VPeriod {
    /// The period length `N`.
    pub period: u64,
    /// First `n` covered by `values` (one past twice the largest offset).
    pub start: usize,
    /// `v(start), v(start+1), ..., v(start+period-1)`.
    pub values: Vec<usize>,
}

/// Period of the v-value sequence: the dividing period of the associated
/// polynomial, with one full period of values starting at `2J + 1`
/// (`J` the largest offset).
///
/// Two structural facts are asserted, not assumed: exactly one value per
/// period equals the maximum `2J`, and the sequence is symmetric around
/// multiples of the period, `v(N + r) = v(N - r)`.
pub fn v_period(q: &RsQuadratic) -> Result<VPeriod> {
    let a = q.a_polynomial();
    let period = a.dividing_period()?;
    let n_period = period as usize;
    let j = q.max_offset() as usize;
    let start = 2 * j + 1;
    let values: Vec<usize> = (start..start + n_period)
        .map(|n| v_value(q, n))
        .collect::<Result<_>>()?;
    let max_hits = values.iter().filter(|&&v| v == 2 * j).count();
    if max_hits != 1 {
        return Err(Error::Falsified(format!(
            "v-period of {q}: expected exactly one maximum 2J={} per period, found {max_hits}",
            2 * j
        )));
    }
    for r in 1..n_period {
        let left = v_value(q, n_period - r)?;
        let right = v_value(q, n_period + r)?;
        if left != right {
            return Err(Error::Falsified(format!(
                "v-period of {q}: v({}) = {left} but v({}) = {right}, breaking symmetry",
                n_period - r,
                n_period + r
            )));
        }
    }
    for n in 1..=n_period {
        if v_value(q, n)? != v_value(q, n + n_period)? {
            return Err(Error::Falsified(format!(
                "v-period of {q}: sequence does not repeat with period {period} at n={n}"
            )));
        }
    }
    Ok(VPeriod {
        period,
        start,
        values,
    })
}

/// Balancedness by the kernel criterion: the function is balanced iff its
/// (linear) restriction to the null space of `C` is not identically zero.
pub fn is_balanced(q: &RsQuadratic, n: usize, semantics: Semantics) -> Result<bool> {
    Ok(FormMatrices::new(q, n, semantics)?
        .kernel_and_parity()
        .v1_nonempty)
}

/// The constant of the reduced canonical form for an unbalanced quadratic,
/// or the marker that the function is balanced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DicksonB {
    #[serde(rename = "balanced")]
    Balanced,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
}

/// Reduce the function to its canonical shape
/// `x_1 x_2 + ... + x_{2d-1} x_{2d} (+ affine tail)` by iterated hyperbolic
/// splitting over GF(2). Returns the rank parameter `d` and the tail:
/// a surviving linear term means balanced, otherwise the constant `b`.
pub fn dickson_reduce(q: &RsQuadratic, n: usize, semantics: Semantics) -> Result<(usize, DicksonB)> {
    let fm = FormMatrices::new(q, n, semantics)?;
    // full symmetric coefficient matrix (zero diagonal), linear vector,
    // constant bit
    let mut m: Vec<Vec<u64>> = (0..n).map(|r| fm.row(r)).collect();
    let mut ell = wide::zero(n);
    if fm.expansion().linear {
        for i in 0..n {
            wide::toggle(&mut ell, i);
        }
    }
    let mut c = false;
    let mut d = 0usize;
    loop {
        let Some(p) = (0..n).find(|&i| !wide::is_zero(&m[i])) else {
            // no quadratic part left
            return Ok(if !wide::is_zero(&ell) {
                (d, DicksonB::Balanced)
            } else if c {
                (d, DicksonB::One)
            } else {
                (d, DicksonB::Zero)
            });
        };
        let qi = (0..n).find(|&j| wide::get(&m[p], j)).unwrap();
        // f = (x_p + B')(x_qi + A) + A·B' + rest, with
        //   A  = other terms sharing x_p  (affine: linear part + constant a0)
        //   B' = other terms sharing x_qi
        let mut a = m[p].clone();
        let mut b = m[qi].clone();
        let a0 = wide::get(&ell, p);
        let b0 = wide::get(&ell, qi);
        for v in [&mut a, &mut b] {
            if wide::get(v, p) {
                wide::toggle(v, p);
            }
            if wide::get(v, qi) {
                wide::toggle(v, qi);
            }
        }
        // drop x_p and x_qi from the form entirely
        for row in m.iter_mut() {
            if wide::get(row, p) {
                wide::toggle(row, p);
            }
            if wide::get(row, qi) {
                wide::toggle(row, qi);
            }
        }
        m[p] = wide::zero(n);
        m[qi] = wide::zero(n);
        if a0 {
            wide::toggle(&mut ell, p);
        }
        if b0 {
            wide::toggle(&mut ell, qi);
        }
        // add the cross-product A·B' back in: quadratic part symmetric in
        // (i, j); the diagonal x_i^2 = x_i lands in the linear part
        for i in 0..n {
            if wide::get(&a, i) {
                wide::xor_assign(&mut m[i], &b);
                if wide::get(&b, i) {
                    wide::toggle(&mut ell, i);
                    // undo the diagonal bit the row xor just set
                    wide::toggle(&mut m[i], i);
                }
                if a0 {
                    // nothing: a0 pairs with B', handled below
                }
            }
            if wide::get(&b, i) {
                wide::xor_assign(&mut m[i], &a);
                if wide::get(&a, i) {
                    wide::toggle(&mut m[i], i);
                }
            }
        }
        if a0 {
            wide::xor_assign(&mut ell, &b);
        }
        if b0 {
            wide::xor_assign(&mut ell, &a);
        }
        if a0 && b0 {
            c = !c;
        }
        d += 1;
    }
}

/// Everything known about one (function, n) pair.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub q: RsQuadratic,
    pub n: usize,
    pub semantics: Semantics,
    /// Plateau parameter; `n = 2d + v`.
    pub v: usize,
    /// Dickson rank.
    pub d: usize,
    pub balanced: bool,
    pub dickson_b: DicksonB,
    pub weight: u128,
    pub nonlinearity: u128,
    /// The affine-equivalence signature (weight, nonlinearity).
    pub signature: (u128, u128),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn weight_from(n: usize, d: usize, b: DicksonB) -> (u128, u128) {
    let half = 1u128 << (n - 1);
    let weight = match b {
        DicksonB::Balanced => half,
        DicksonB::Zero => half - (1u128 << (n - d - 1)),
        DicksonB::One => half + (1u128 << (n - d - 1)),
    };
    let nonlinearity = if d == 0 { 0 } else { half - (1u128 << (n - d - 1)) };
    (weight, nonlinearity)
}

/// Complete closed-form report for one (function, n) pair.
///
/// A single offset `t` with `n >= 2t + 1` takes the arithmetic fast path
/// (weights from gcds alone); everything else goes through Dickson
/// reduction and the kernel criterion. Under `Orbit` semantics the plateau
/// parameter is cross-checked against the gcd formula.
pub fn closed_form_report(
    q: &RsQuadratic,
    n: usize,
    semantics: Semantics,
) -> Result<AnalysisReport> {
    if n < 1 {
        return Err(Error::InvalidN);
    }
    if n > 126 {
        return Err(Error::VariableCap(n, 126));
    }
    if let &[t] = q.offsets() {
        let t = t as usize;
        if n >= 2 * t + 1 && t >= 1 {
            return mrs_report(q, t, n, semantics);
        }
    }
    let (d, b) = dickson_reduce(q, n, semantics)?;
    let v = n - 2 * d;
    if semantics == Semantics::Orbit {
        let v_gcd = v_value(q, n)?;
        if v_gcd != v {
            return Err(Error::Falsified(format!(
                "plateau parameter mismatch for {q} at n={n}: rank gives {v}, gcd gives {v_gcd}"
            )));
        }
    }
    let (weight, nonlinearity) = weight_from(n, d, b);
    let note = match (q.offsets(), semantics) {
        (&[t], Semantics::Anf) if n == 2 * t as usize => Some(format!(
            "short quadratic at n = 2t: weight {weight} comes from the Dickson reduction \
             (2^{} - 2^{}); the generic even-case closed form does not apply here",
            n - 1,
            n - d - 1
        )),
        _ => None,
    };
    Ok(AnalysisReport {
        q: q.clone(),
        n,
        semantics,
        v,
        d,
        balanced: b == DicksonB::Balanced,
        dickson_b: b,
        weight,
        nonlinearity,
        signature: (weight, nonlinearity),
        note,
    })
}

fn mrs_report(q: &RsQuadratic, t: usize, n: usize, semantics: Semantics) -> Result<AnalysisReport> {
    let k = n.gcd(&t);
    let v = n.gcd(&(2 * t));
    let balanced = (n / k) % 2 == 1;
    // consistency: v = k exactly when balanced, v = 2k otherwise
    let expected_v = if balanced { k } else { 2 * k };
    if v != expected_v {
        return Err(Error::Falsified(format!(
            "single-offset invariants broken for t={t}, n={n}: gcd(n,2t)={v}, expected {expected_v}"
        )));
    }
    let half = 1u128 << (n - 1);
    let (weight, nonlinearity, b) = if balanced {
        (half, half - (1u128 << ((n + k - 2) / 2)), DicksonB::Balanced)
    } else {
        let w = half - (1u128 << (n / 2 + k - 1));
        (w, w, DicksonB::Zero)
    };
    let d = (n - v) / 2;
    Ok(AnalysisReport {
        q: q.clone(),
        n,
        semantics,
        v,
        d,
        balanced,
        dickson_b: b,
        weight,
        nonlinearity,
        signature: (weight, nonlinearity),
        note: None,
    })
}
