//! Weight-recursion machinery: the rules matrices for single-offset
//! functions, exact minimal polynomials of integer matrices, recurrence
//! fitting from weight sequences, forward/backward extension, and a numeric
//! root-modulus report.
//!
//! All fitting and minimal-polynomial work is exact (big rationals);
//! floating point appears only in [`root_moduli`].

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on the rules-matrix parameter (dimension 2^t + 1).
pub const MAX_RULES_T: u32 = 10;

/// A square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix { dim, rows }
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        IntMatrix { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Product, skipping zero entries (the rules matrices are sparse).
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut rows = vec![vec![BigInt::zero(); self.dim]; self.dim];
        for i in 0..self.dim {
            for k in 0..self.dim {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                let a = &self.rows[i][k];
                for j in 0..self.dim {
                    if !rhs.rows[k][j].is_zero() {
                        rows[i][j] += a * &rhs.rows[k][j];
                    }
                }
            }
        }
        IntMatrix {
            dim: self.dim,
            rows,
        }
    }

    /// Matrix-vector product with zero skipping.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// True iff the matrix is `lambda` times the identity.
    pub fn is_scalar(&self, lambda: &BigInt) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { e == lambda } else { e.is_zero() })
        })
    }
}

/// A big integer rendered as a JSON number when it fits in 128 bits and a
/// decimal string otherwise.
struct JsonInt<'a>(&'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i128() {
            Some(v) => s.serialize_i128(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

fn serialize_bigints<S: Serializer>(
    v: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&JsonInt(x))?;
    }
    seq.end()
}

/// An integer-coefficient polynomial, coefficients ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntPoly {
    /// `coeffs[k]` is the coefficient of `x^k`; the last entry is nonzero.
    #[serde(serialize_with = "serialize_bigints")]
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.is_one()).unwrap_or(false)
    }
}

impl fmt::Display for IntPoly {
    /// Descending human form, e.g. `x^7 - 2x^6 - 8x + 16`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The square rules matrix of size 2^t whose rows are the rotations of
/// `(1, 0.., 1, 0..)` and `(1, 0.., -1, 0..)`.
pub fn r_matrix(t: u32) -> Result<IntMatrix> {
    if t < 1 || t > MAX_RULES_T {
        return Err(Error::RulesCap(t, MAX_RULES_T));
    }
    let size = 1usize << t;
    let half = size / 2;
    let mut rows = Vec::with_capacity(size);
    for i in 0..half {
        for sign in [1i32, -1] {
            // base row (1, 0_{half-1}, ±1, 0_{half-1}) rotated right i times
            let mut row = vec![BigInt::zero(); size];
            row[i % size] = BigInt::one();
            row[(half + i) % size] = BigInt::from(sign);
            rows.push(row);
        }
    }
    Ok(IntMatrix::from_rows(rows))
}

/// The bordered rules matrix of size 2^t + 1: `r_matrix` plus a final
/// column `(0, ..., 0, 2)` and final row `(0_{2^{t-1}}, 1_{2^{t-1}}, 2)`.
pub fn rules_matrix(t: u32) -> Result<IntMatrix> {
    let r = r_matrix(t)?;
    let size = r.dim();
    let half = size / 2;
    let mut rows: Vec<Vec<BigInt>> = r
        .rows()
        .iter()
        .map(|row| {
            let mut row = row.clone();
            row.push(BigInt::zero());
            row
        })
        .collect();
    let mut last = vec![BigInt::zero(); size + 1];
    for e in last.iter_mut().take(size).skip(half) {
        *e = BigInt::one();
    }
    last[size] = BigInt::from(2);
    rows.push(last);
    Ok(IntMatrix::from_rows(rows))
}

/// The 2^t by 2^t sign matrix with entries `(-1)^{popcount(i & j)}`;
/// squares to `2^t` times the identity.
pub fn m_matrix(t: u32) -> Result<IntMatrix> {
    if t < 1 || t > MAX_RULES_T {
        return Err(Error::RulesCap(t, MAX_RULES_T));
    }
    let size = 1usize << t;
    let rows = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if (i & j).count_ones() % 2 == 0 {
                        BigInt::one()
                    } else {
                        BigInt::from(-1)
                    }
                })
                .collect()
        })
        .collect();
    Ok(IntMatrix::from_rows(rows))
}

fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from(x.clone())).collect()
}

/// Monic annihilator (ascending rational coefficients) of the Krylov
/// sequence `v, Mv, M^2 v, ...`.
fn vector_annihilator(m: &IntMatrix, v: &[BigInt]) -> Vec<BigRational> {
    // echelon rows with their expression in terms of the Krylov vectors
    let mut echelon: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
    let mut krylov = v.to_vec();
    for k in 0..=m.dim() {
        let mut w = to_rational(&krylov);
        // comb tracks w as a combination of Krylov vectors 0..=k
        let mut comb = vec![BigRational::zero(); k + 1];
        comb[k] = BigRational::one();
        for (pivot, row, row_comb) in &echelon {
            let factor = w[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi -= &factor * ri;
                }
            }
            for (ci, rc) in comb.iter_mut().zip(row_comb) {
                *ci -= &factor * rc;
            }
        }
        if let Some(pivot) = w.iter().position(|x| !x.is_zero()) {
            let lead = w[pivot].clone();
            for x in w.iter_mut() {
                *x /= &lead;
            }
            let mut comb_n = vec![BigRational::zero(); m.dim() + 1];
            for (c, x) in comb_n.iter_mut().zip(&comb) {
                *c = x / &lead;
            }
            echelon.push((pivot, w, comb_n));
            krylov = m.apply(&krylov);
        } else {
            // dependency: comb gives Σ comb[j]·M^j v = 0 with comb[k] = 1
            return comb;
        }
    }
    unreachable!("a dependency must appear by degree dim")
}

/// Evaluate `p(M) v` with `p` given by ascending rational coefficients
/// whose denominators are 1.
fn poly_apply(m: &IntMatrix, p: &[BigRational], v: &[BigInt]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); v.len()];
    let mut w = v.to_vec();
    for (k, c) in p.iter().enumerate() {
        if !c.is_zero() {
            let ci = c.to_integer();
            for (a, x) in acc.iter_mut().zip(&w) {
                *a += &ci * x;
            }
        }
        if k + 1 < p.len() {
            w = m.apply(&w);
        }
    }
    acc
}

fn rational_poly_divrem(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while r.len() > db && r.iter().any(|x| !x.is_zero()) {
        if r.last().unwrap().is_zero() {
            r.pop();
            continue;
        }
        let k = r.len() - 1 - db;
        let factor = r.last().unwrap() / &b[db];
        for i in 0..=db {
            let t = &factor * &b[i];
            r[k + i] -= t;
        }
        q[k] = factor;
        r.pop();
    }
    while r.last().map(|x| x.is_zero()).unwrap_or(false) {
        r.pop();
    }
    (q, r)
}

fn rational_poly_lcm(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    // gcd by Euclid, then lcm = a*b / gcd, normalized monic
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = rational_poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    // x is the gcd; lcm = a/(gcd) * b
    let (q, r) = rational_poly_divrem(a, &x);
    debug_assert!(r.is_empty());
    // multiply q by b
    let mut prod = vec![BigRational::zero(); q.len() + b.len() - 1];
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            prod[i + j] += qi * bj;
        }
    }
    let lead = prod.last().unwrap().clone();
    for c in prod.iter_mut() {
        *c /= &lead;
    }
    prod
}

/// Exact minimal polynomial of an integer matrix, returned monic with
/// integer coefficients (the minimal polynomial of an integer matrix always
/// has integer coefficients; this is asserted, not assumed).
///
/// Strategy: the annihilator of a fixed pseudo-random vector is almost
/// always the minimal polynomial already; it is then verified against every
/// standard basis vector, folding in the annihilator of any vector that
/// fails. Everything is exact.
pub fn minimal_polynomial(m: &IntMatrix) -> Result<IntPoly> {
    // deterministic "random" starting vector
    let mut state = 0x9e3779b97f4a7c15u64;
    let v: Vec<BigInt> = (0..m.dim())
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            BigInt::from((state >> 33) as i64 - (1 << 30))
        })
        .collect();
    let mut candidate = vector_annihilator(m, &v);
    loop {
        let mut all_ok = true;
        for i in 0..m.dim() {
            let mut e = vec![BigInt::zero(); m.dim()];
            e[i] = BigInt::one();
            if !poly_apply(m, &candidate, &e).iter().all(|x| x.is_zero()) {
                let extra = vector_annihilator(m, &e);
                candidate = rational_poly_lcm(&candidate, &extra);
                all_ok = false;
                break;
            }
        }
        if all_ok {
            break;
        }
    }
    let coeffs: Vec<BigInt> = candidate
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Falsified(format!(
                    "minimal polynomial of an integer matrix came out non-integral: {c}"
                )))
            }
        })
        .collect::<Result<_>>()?;
    Ok(IntPoly::new(coeffs))
}

/// An exact integer linear recurrence `u(n) = Σ_j c_j u(n-j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceSpec {
    pub order: usize,
    /// `coeffs[j-1]` is `c_j`; the last entry is nonzero.
    #[serde(serialize_with = "serialize_bigints")]
    pub coeffs: Vec<BigInt>,
    /// `x^r - c_1 x^{r-1} - ... - c_r`, ascending.
    pub charpoly: IntPoly,
    /// Smallest index at which the recurrence is claimed (or was verified).
    pub valid_from: i64,
}

impl RecurrenceSpec {
    pub fn new(coeffs: Vec<BigInt>, valid_from: i64) -> Self {
        assert!(!coeffs.is_empty() && !coeffs.last().unwrap().is_zero());
        let order = coeffs.len();
        let mut cp = vec![BigInt::zero(); order + 1];
        cp[order] = BigInt::one();
        for (j, c) in coeffs.iter().enumerate() {
            cp[order - 1 - j] = -c;
        }
        RecurrenceSpec {
            order,
            coeffs,
            charpoly: IntPoly::new(cp),
            valid_from,
        }
    }

    /// Build the recurrence whose characteristic polynomial is a given
    /// monic integer polynomial.
    pub fn from_charpoly(p: &IntPoly, valid_from: i64) -> Self {
        assert!(p.is_monic());
        let order = p.degree();
        let coeffs: Vec<BigInt> = (0..order).map(|j| -&p.coeffs[order - 1 - j]).collect();
        assert!(!coeffs.last().unwrap().is_zero());
        RecurrenceSpec::new(coeffs, valid_from)
    }
}

/// The closed-form weight recurrence for a single offset `t`:
/// characteristic polynomial `(x - 2)(x^{2t} - 2^t)`, valid from `2t + 1`.
pub fn mrs_recursion_poly(t: u32) -> IntPoly {
    let r = 2 * t as usize + 1;
    let mut c = vec![BigInt::zero(); r + 1];
    c[r] = BigInt::one();
    c[r - 1] = BigInt::from(-2);
    c[1] = -(BigInt::one() << t);
    c[0] = BigInt::one() << (t + 1);
    IntPoly::new(c)
}

/// The recurrence form of [`mrs_recursion_poly`].
pub fn mrs_recurrence(t: u32) -> RecurrenceSpec {
    RecurrenceSpec::from_charpoly(&mrs_recursion_poly(t), 2 * t as i64 + 1)
}

/// Fit the minimal-order exact integer recurrence to `seq`, whose first
/// entry is the term with index `start_index`.
///
/// Orders up to `(len - 1) / 2` are tried in increasing order; a candidate
/// is accepted only if it reproduces every supplied term from
/// `start_index + order` on, so `valid_from = start_index + order`.
pub fn fit_recurrence(seq: &[BigInt], start_index: i64) -> Result<RecurrenceSpec> {
    let len = seq.len();
    let r_max = len.saturating_sub(1) / 2;
    if r_max == 0 {
        return Err(Error::NoRecurrence(0));
    }
    for r in 1..=r_max {
        if let Some(coeffs) = try_fit_order(seq, r) {
            if coeffs.last().unwrap().is_zero() {
                // a shorter recurrence would have matched; skip degenerate fits
                continue;
            }
            return Ok(RecurrenceSpec::new(coeffs, start_index + r as i64));
        }
    }
    Err(Error::NoRecurrence(r_max))
}

/// Solve for `c_1..c_r` with `u(n) = Σ c_j u(n-j)` over all equations the
/// data supports; `None` if the system is inconsistent or the solution is
/// not integral.
fn try_fit_order(seq: &[BigInt], r: usize) -> Option<Vec<BigInt>> {
    let len = seq.len();
    // rows: [u(n-1), ..., u(n-r) | u(n)] for n = r..len-1 (relative)
    let mut rows: Vec<Vec<BigRational>> = (r..len)
        .map(|n| {
            let mut row: Vec<BigRational> =
                (1..=r).map(|j| BigRational::from(seq[n - j].clone())).collect();
            row.push(BigRational::from(seq[n].clone()));
            row
        })
        .collect();
    // Gaussian elimination on the augmented system
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut row_idx = 0;
    for col in 0..r {
        let Some(pi) = (row_idx..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row_idx, pi);
        let lead = rows[row_idx][col].clone();
        for x in rows[row_idx].iter_mut() {
            *x /= &lead;
        }
        let pivot = rows[row_idx].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != row_idx && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivot_rows.push(col);
        row_idx += 1;
    }
    // inconsistency: a zero row with nonzero right-hand side
    for row in rows.iter().skip(row_idx) {
        if !row[r].is_zero() {
            return None;
        }
    }
    // read the solution (free variables zero)
    let mut sol = vec![BigRational::zero(); r];
    for (i, &col) in pivot_rows.iter().enumerate() {
        sol[col] = rows[i][r].clone();
    }
    // verify against every equation and require integrality
    for n in r..len {
        let mut acc = BigRational::zero();
        for (j, c) in sol.iter().enumerate() {
            acc += c * BigRational::from(seq[n - 1 - j].clone());
        }
        if acc != BigRational::from(seq[n].clone()) {
            return None;
        }
    }
    let mut out = Vec::with_capacity(r);
    for c in sol {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(out)
}

/// Direction of sequence extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Extend a sequence from `order` consecutive seed terms.
///
/// Forward appends `count` terms after the seed; backward prepends `count`
/// terms before it (returned in ascending index order), solving
/// `u(n-r) = (u(n) - Σ_{j<r} c_j u(n-j)) / c_r` with an exact-divisibility
/// check at every step.
pub fn extend(
    spec: &RecurrenceSpec,
    seed: &[BigInt],
    direction: Direction,
    count: usize,
) -> Result<Vec<BigInt>> {
    let r = spec.order;
    if seed.len() != r {
        return Err(Error::SeedLength(seed.len(), r));
    }
    match direction {
        Direction::Forward => {
            let mut window: Vec<BigInt> = seed.to_vec();
            let mut out = Vec::with_capacity(count);
            for _ in 0..count {
                let next: BigInt = spec
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * &window[r - 1 - j])
                    .sum();
                window.remove(0);
                window.push(next.clone());
                out.push(next);
            }
            Ok(out)
        }
        Direction::Backward => {
            let mut window: Vec<BigInt> = seed.to_vec();
            let mut out = Vec::with_capacity(count);
            for step in 1..=count {
                // window holds u(m), ..., u(m+r-1); recover u(m-1)
                let mut num = window[r - 1].clone();
                for j in 1..r {
                    num -= &spec.coeffs[j - 1] * &window[r - 1 - j];
                }
                let cr = &spec.coeffs[r - 1];
                let (qt, rem) = num.div_rem(cr);
                if !rem.is_zero() {
                    return Err(Error::NonIntegralBackwardStep(step));
                }
                window.pop();
                window.insert(0, qt.clone());
                out.push(qt);
            }
            out.reverse();
            Ok(out)
        }
    }
}

/// One numeric root with its modulus and the deviations from the two
/// moduli the weight recursions are expected to produce.
#[derive(Debug, Clone, Serialize)]
pub struct RootInfo {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub dev_from_2: f64,
    pub dev_from_sqrt2: f64,
}

/// Numeric roots of an integer polynomial with modulus annotations.
#[derive(Debug, Clone, Serialize)]
pub struct RootReport {
    pub roots: Vec<RootInfo>,
    /// Largest over all roots of the distance to the nearer of 2 and √2.
    pub max_deviation: f64,
}

/// Approximate all complex roots (Durand–Kerner iteration) and report each
/// modulus together with its deviation from 2 and from √2.
pub fn root_moduli(p: &IntPoly) -> RootReport {
    let deg = p.degree();
    let lead = p.coeffs[deg].to_f64().expect("leading coefficient fits in f64");
    let coeffs: Vec<f64> = p
        .coeffs
        .iter()
        .map(|c| c.to_f64().expect("coefficient fits in f64") / lead)
        .collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..1000 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    let infos: Vec<RootInfo> = roots
        .iter()
        .map(|z| {
            let m = z.norm();
            RootInfo {
                re: z.re,
                im: z.im,
                modulus: m,
                dev_from_2: (m - 2.0).abs(),
                dev_from_sqrt2: (m - std::f64::consts::SQRT_2).abs(),
            }
        })
        .collect();
    let max_deviation = infos
        .iter()
        .map(|r| r.dev_from_2.min(r.dev_from_sqrt2))
        .fold(0.0, f64::max);
    RootReport {
        roots: infos,
        max_deviation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn r_matrix_shape() {
        let r = r_matrix(3).unwrap();
        assert_eq!(r.dim(), 8);
        let expect: Vec<i64> = vec![1, 0, 0, 0, 1, 0, 0, 0];
        assert_eq!(r.rows()[0], expect.into_iter().map(b).collect::<Vec<_>>());
        let expect: Vec<i64> = vec![1, 0, 0, 0, -1, 0, 0, 0];
        assert_eq!(r.rows()[1], expect.into_iter().map(b).collect::<Vec<_>>());
        let expect: Vec<i64> = vec![0, 1, 0, 0, 0, 1, 0, 0];
        assert_eq!(r.rows()[2], expect.into_iter().map(b).collect::<Vec<_>>());
    }

    #[test]
    fn bordered_matrix_t1() {
        let r = rules_matrix(1).unwrap();
        let expect: Vec<Vec<i64>> = vec![vec![1, 1, 0], vec![1, -1, 0], vec![0, 1, 2]];
        for (row, erow) in r.rows().iter().zip(&expect) {
            assert_eq!(row, &erow.iter().map(|&v| b(v)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn m_matrix_rows_and_square() {
        let m = m_matrix(2).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![1, 1, 1, 1],
            vec![1, -1, 1, -1],
            vec![1, 1, -1, -1],
            vec![1, -1, -1, 1],
        ];
        for (row, erow) in m.rows().iter().zip(&expect) {
            assert_eq!(row, &erow.iter().map(|&v| b(v)).collect::<Vec<_>>());
        }
        for t in 1..=5 {
            let m = m_matrix(t).unwrap();
            assert!(m.mul(&m).is_scalar(&(BigInt::one() << t)), "t={t}");
        }
    }

    #[test]
    fn r_matrix_power_identity() {
        for t in 1..=5u32 {
            let r = r_matrix(t).unwrap();
            let mut p = IntMatrix::identity(r.dim());
            for _ in 0..2 * t {
                p = p.mul(&r);
            }
            assert!(p.is_scalar(&(BigInt::one() << t)), "t={t}");
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(
            minimal_polynomial(&IntMatrix::identity(4)).unwrap(),
            IntPoly::new(vec![b(-1), b(1)])
        );
        let p = minimal_polynomial(&rules_matrix(1).unwrap()).unwrap();
        assert_eq!(p, IntPoly::new(vec![b(4), b(-2), b(-2), b(1)]));
        let p = minimal_polynomial(&rules_matrix(3).unwrap()).unwrap();
        assert_eq!(p, mrs_recursion_poly(3));
        assert_eq!(p.to_string(), "x^7 - 2x^6 - 8x + 16");
    }

    #[test]
    fn minimal_polynomial_matches_closed_form() {
        for t in 1..=5 {
            assert_eq!(
                minimal_polynomial(&rules_matrix(t).unwrap()).unwrap(),
                mrs_recursion_poly(t),
                "t={t}"
            );
        }
    }

    #[test]
    fn closed_form_poly() {
        assert_eq!(mrs_recursion_poly(1).to_string(), "x^3 - 2x^2 - 2x + 4");
        let spec = mrs_recurrence(3);
        assert_eq!(spec.order, 7);
        assert_eq!(spec.valid_from, 7);
        assert_eq!(
            spec.coeffs,
            vec![b(2), b(0), b(0), b(0), b(0), b(8), b(-16)]
        );
    }

    #[test]
    fn fit_constant_and_fibonacci() {
        let seq: Vec<BigInt> = std::iter::repeat_with(|| b(1)).take(8).collect();
        let spec = fit_recurrence(&seq, 0).unwrap();
        assert_eq!(spec.order, 1);
        assert_eq!(spec.coeffs, vec![b(1)]);

        let mut fib = vec![b(1), b(1)];
        for i in 2..12 {
            let next = &fib[i - 1] + &fib[i - 2];
            fib.push(next);
        }
        let spec = fit_recurrence(&fib, 1).unwrap();
        assert_eq!(spec.order, 2);
        assert_eq!(spec.coeffs, vec![b(1), b(1)]);
        assert_eq!(spec.valid_from, 3);
    }

    #[test]
    fn fit_round_trip() {
        let spec = RecurrenceSpec::new(vec![b(3), b(-2), b(5)], 0);
        let mut seq = vec![b(1), b(4), b(-2)];
        for n in 3..20 {
            let next: BigInt = (0..3).map(|j| &spec.coeffs[j] * &seq[n - 1 - j]).sum();
            seq.push(next);
        }
        let fitted = fit_recurrence(&seq, 0).unwrap();
        assert_eq!(fitted.coeffs, spec.coeffs);
    }

    #[test]
    fn extend_both_directions() {
        let spec = RecurrenceSpec::new(vec![b(1), b(1)], 0);
        let fwd = extend(&spec, &[b(5), b(8)], Direction::Forward, 3).unwrap();
        assert_eq!(fwd, vec![b(13), b(21), b(34)]);
        let bwd = extend(&spec, &[b(5), b(8)], Direction::Backward, 4).unwrap();
        assert_eq!(bwd, vec![b(1), b(1), b(2), b(3)]);
        assert!(matches!(
            extend(&spec, &[b(5)], Direction::Forward, 1),
            Err(Error::SeedLength(1, 2))
        ));
    }

    #[test]
    fn root_moduli_examples() {
        // x^2 - 2
        let p = IntPoly::new(vec![b(-2), b(0), b(1)]);
        let rep = root_moduli(&p);
        assert_eq!(rep.roots.len(), 2);
        for r in &rep.roots {
            assert!(r.dev_from_sqrt2 < 1e-9, "modulus {}", r.modulus);
        }
        // (x - 2)(x^6 - 8): moduli {2} and √2 six times
        let p = mrs_recursion_poly(3);
        let rep = root_moduli(&p);
        assert!(rep.max_deviation < 1e-9, "max dev {}", rep.max_deviation);
        let near2 = rep.roots.iter().filter(|r| r.dev_from_2 < 1e-6).count();
        assert_eq!(near2, 1);
    }
}
