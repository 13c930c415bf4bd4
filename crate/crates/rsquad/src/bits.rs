//! Small GF(2) linear-algebra helpers on bit-packed rows.
//!
//! Rows are `u64` bit-vectors (column `j` is bit `j`), which is enough for
//! every matrix in this crate: dimensions are capped well below 64.

/// Null-space basis of an `rows.len() x ncols` matrix over GF(2).
///
/// Returns basis vectors as `u64` bit-vectors. `ncols` must be at most 64.
pub fn nullspace(rows: &[u64], ncols: usize) -> Vec<u64> {
    assert!(ncols <= 64);
    let mut reduced: Vec<u64> = rows.to_vec();
    // Gauss-Jordan: pivot_col[i] = column of the pivot of reduced row i
    let mut pivot_of_col = vec![usize::MAX; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pi) = (rank..reduced.len()).find(|&i| reduced[i] >> col & 1 == 1) else {
            continue;
        };
        reduced.swap(rank, pi);
        for i in 0..reduced.len() {
            if i != rank && reduced[i] >> col & 1 == 1 {
                reduced[i] ^= reduced[rank];
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        // set the free variable to 1, read pivot variables off the rows
        let mut v = 1u64 << free;
        for col in 0..ncols {
            let pi = pivot_of_col[col];
            if pi != usize::MAX && reduced[pi] >> free & 1 == 1 {
                v |= 1u64 << col;
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of an `rows.len() x ncols` matrix over GF(2).
pub fn rank(rows: &[u64], ncols: usize) -> usize {
    ncols - nullspace(rows, ncols).len()
}

/// Bit-vectors wider than 64 bits, stored little-endian in `u64` words.
/// Used by the circulant-kernel path, which must handle variable counts in
/// the thousands.
pub mod wide {
    pub fn zero(n: usize) -> Vec<u64> {
        vec![0u64; n.div_ceil(64)]
    }

    pub fn get(v: &[u64], i: usize) -> bool {
        v[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn toggle(v: &mut [u64], i: usize) {
        v[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(v: &mut [u64], rhs: &[u64]) {
        for (a, b) in v.iter_mut().zip(rhs) {
            *a ^= b;
        }
    }

    pub fn is_zero(v: &[u64]) -> bool {
        v.iter().all(|&w| w == 0)
    }

    /// Parity of the number of set bits.
    pub fn parity(v: &[u64]) -> bool {
        v.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 1
    }

    /// Parity of `popcount(a & b)`.
    pub fn and_parity(a: &[u64], b: &[u64]) -> bool {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x & y).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Rotate an `n`-bit vector left by `r`: output bit `(i + r) mod n` is
    /// input bit `i`.
    pub fn rotl(v: &[u64], r: usize, n: usize) -> Vec<u64> {
        let mut out = zero(n);
        for i in 0..n {
            if get(v, i) {
                toggle(&mut out, (i + r) % n);
            }
        }
        out
    }

    /// Null-space basis of a matrix with `n`-bit rows over GF(2).
    pub fn nullspace(rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
        let mut reduced: Vec<Vec<u64>> = rows.to_vec();
        let mut pivot_of_col = vec![usize::MAX; ncols];
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pi) = (rank..reduced.len()).find(|&i| get(&reduced[i], col)) else {
                continue;
            };
            reduced.swap(rank, pi);
            let pivot_row = reduced[rank].clone();
            for (i, row) in reduced.iter_mut().enumerate() {
                if i != rank && get(row, col) {
                    xor_assign(row, &pivot_row);
                }
            }
            pivot_of_col[col] = rank;
            rank += 1;
        }
        let mut basis = Vec::new();
        for free in 0..ncols {
            if pivot_of_col[free] != usize::MAX {
                continue;
            }
            let mut v = zero(ncols);
            toggle(&mut v, free);
            for col in 0..ncols {
                let pi = pivot_of_col[col];
                if pi != usize::MAX && get(&reduced[pi], free) {
                    toggle(&mut v, col);
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_identity_is_empty() {
        let rows: Vec<u64> = (0..5).map(|i| 1u64 << i).collect();
        assert!(nullspace(&rows, 5).is_empty());
        assert_eq!(rank(&rows, 5), 5);
    }

    #[test]
    fn nullspace_of_zero_matrix_is_everything() {
        let rows = vec![0u64; 3];
        assert_eq!(nullspace(&rows, 3).len(), 3);
    }

    #[test]
    fn nullspace_vectors_annihilate_rows() {
        // circulant first row 0101 (n=4): kernel dimension 2
        let rows = vec![0b1010u64, 0b0101, 0b1010, 0b0101];
        let basis = nullspace(&rows, 4);
        assert_eq!(basis.len(), 2);
        for &v in &basis {
            for &r in &rows {
                assert_eq!((r & v).count_ones() % 2, 0);
            }
        }
    }
}
