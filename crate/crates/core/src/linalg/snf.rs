//! Smith normal form over the integers.

use super::matrix::{div_round, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Decomposition `u * m * v == d` with `u`, `v` unimodular and `d` diagonal,
/// nonnegative, each entry dividing the next, zeros trailing. `d` is the
/// unique Smith normal form of `m`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `d`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn min_abs_nonzero(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let v = d.at(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d.at(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn find_nondivisible(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let p = d.at(k, k);
    for i in k + 1..d.rows() {
        for j in k + 1..d.cols() {
            if !d.at(i, j).mod_floor(p).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Classical elimination with minimum-absolute-value pivoting. Total: every
/// integer matrix, including zero-dimension ones, has a Smith normal form.
pub fn snf(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_nonzero(&d, k) else {
            break; // remaining submatrix is zero
        };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        loop {
            // clear the pivot column below k
            let mut dirty = false;
            for i in k + 1..rows {
                if d.at(i, k).is_zero() {
                    continue;
                }
                let q = div_round(d.at(i, k), d.at(k, k));
                if !q.is_zero() {
                    let nq = -q;
                    d.add_mul_row(i, k, &nq);
                    u.add_mul_row(i, k, &nq);
                }
                if !d.at(i, k).is_zero() {
                    // remainder is strictly smaller than the pivot: promote it
                    d.swap_rows(k, i);
                    u.swap_rows(k, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // clear the pivot row right of k
            for j in k + 1..cols {
                if d.at(k, j).is_zero() {
                    continue;
                }
                let q = div_round(d.at(k, j), d.at(k, k));
                if !q.is_zero() {
                    let nq = -q;
                    d.add_mul_col(j, k, &nq);
                    v.add_mul_col(j, k, &nq);
                }
                if !d.at(k, j).is_zero() {
                    d.swap_cols(k, j);
                    v.swap_cols(k, j);
                    dirty = true;
                }
            }
            if dirty {
                continue; // column swaps can repopulate the pivot column
            }
            // pivot row and column are clear; pull any nondivisible entry of
            // the remaining submatrix into the pivot row and keep reducing
            if let Some((i, _)) = find_nondivisible(&d, k) {
                let one = BigInt::one();
                d.add_mul_row(k, i, &one);
                u.add_mul_row(k, i, &one);
                continue;
            }
            if d.at(k, k).is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
            break;
        }
        k += 1;
    }

    SnfResult { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_decomposition(m: &IntMatrix) -> SnfResult {
        let s = snf(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "u*m*v != d for {m:?}");
        assert_eq!(s.u.det().abs(), BigInt::one());
        assert_eq!(s.v.det().abs(), BigInt::one());
        let diag = s.diagonal();
        for (i, x) in diag.iter().enumerate() {
            assert!(!x.is_negative());
            if i + 1 < diag.len() {
                let next = &diag[i + 1];
                if x.is_zero() {
                    assert!(next.is_zero(), "zeros must trail");
                } else {
                    assert!(next.mod_floor(x).is_zero(), "divisibility chain broken");
                }
            }
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.at(i, j).is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let s = check_decomposition(&m);
        assert_eq!(s.d, IntMatrix::from_i64_rows(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn zero_matrix_is_its_own_form() {
        let m = IntMatrix::zero(2, 2);
        let s = check_decomposition(&m);
        assert!(s.d.is_zero());
    }

    #[test]
    fn rank_one_matrix() {
        // gcd of entries is 1, all 2x2 minors vanish
        let m = IntMatrix::from_i64_rows(&[&[4, 6], &[6, 9]]);
        let s = check_decomposition(&m);
        assert_eq!(s.d, IntMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn known_4x4() {
        let m = IntMatrix::from_i64_rows(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let s = check_decomposition(&m);
        assert_eq!(
            s.diagonal(),
            [1, 3, 21, 0].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let m = IntMatrix::zero(r, c);
            let s = check_decomposition(&m);
            assert_eq!((s.d.rows(), s.d.cols()), (r, c));
        }
    }

    #[test]
    fn nonsquare() {
        let m = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12]]);
        check_decomposition(&m);
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4], &[5, 6]]);
        check_decomposition(&m);
    }
}
