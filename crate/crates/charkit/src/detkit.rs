//! Exact determinant utilities: fraction-free (Bareiss) elimination as the
//! reference evaluator, and the generalized Laplace expansion of a
//! determinant along a fixed column set, with the shuffle-permutation signs
//! that weight each pair of complementary minors.
//!
//! Two deliberately independent algorithms: the expansion is the one the
//! character formulas lean on, the elimination is what it is tested against.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> IntMatrix {
        let n = entries.len();
        assert!(
            entries.iter().all(|row| row.len() == n),
            "matrix must be square"
        );
        IntMatrix { n, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        IntMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    /// Submatrix with rows and columns given by 1-based index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| self.entries[r - 1][c - 1].clone())
                    .collect()
            })
            .collect()
    }
}

/// A strictly increasing set of 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> IndexSet {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]) && indices.iter().all(|&i| i >= 1),
            "index set must be strictly increasing and 1-based"
        );
        IndexSet { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `[1..n]` minus this set, ascending.
    pub fn complement(&self, n: usize) -> IndexSet {
        let mut out = Vec::with_capacity(n - self.indices.len());
        let mut it = self.indices.iter().peekable();
        for i in 1..=n {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        IndexSet { indices: out }
    }

    fn check_bounds(&self, n: usize) -> Result<()> {
        if self.indices.last().is_some_and(|&m| m > n) {
            return Err(Error::IndexOutOfRange {
                set: self.indices.clone(),
                n,
            });
        }
        Ok(())
    }
}

/// Sign of the shuffle permutation sending `(1..n)` to `(S ascending, then
/// complement ascending)`. Inversions occur exactly between an element `s` of
/// S and the smaller complement elements it jumps over, giving
/// `sum(s_i - i)` inversions in total.
pub fn shuffle_sign(s: &IndexSet, n: usize) -> Result<i8> {
    s.check_bounds(n)?;
    let inversions: usize = s
        .indices
        .iter()
        .enumerate()
        .map(|(i, &si)| si - (i + 1))
        .sum();
    Ok(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// All k-element subsets of `items`, in lexicographic order.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance the rightmost index that can still move
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Exact over the
/// integers; row swaps flip the running sign.
pub fn det_bareiss(matrix: &IntMatrix) -> BigInt {
    det_bareiss_raw(matrix.entries.clone())
}

pub(crate) fn det_bareiss_raw(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev; // exact by the Bareiss identity
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant of a rational matrix by exact Gaussian elimination.
pub fn det_rational(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let pivot = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != k {
            m.swap(k, pivot);
            det = -det;
        }
        det *= m[k][k].clone();
        let inv = m[k][k].recip();
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] * &inv;
            for (j, entry) in row.iter_mut().enumerate().skip(k) {
                let t = &factor * &pivot_row[j];
                *entry -= t;
            }
        }
    }
    det
}

/// Generalized Laplace expansion along the column set `S`:
/// `det(B) = sign(S) * sum over row subsets R of |S| elements of
/// sign(R) * det(B[R,S]) * det(B[R',S'])`, where the signs are shuffle
/// signs and primes denote complements. The column block contributes its
/// own shuffle sign as a global factor, which is +1 whenever S is a prefix.
pub fn laplace_expand(matrix: &IntMatrix, s: &IndexSet) -> Result<BigInt> {
    let n = matrix.order();
    s.check_bounds(n)?;
    let k = s.len();
    let col_sign = shuffle_sign(s, n)?;
    let s_comp = s.complement(n);
    let all_rows: Vec<usize> = (1..=n).collect();
    let mut total = BigInt::zero();
    for rows in combinations(&all_rows, k) {
        let r = IndexSet::new(rows);
        let eps = shuffle_sign(&r, n)?;
        let r_comp = r.complement(n);
        let minor = det_bareiss_raw(matrix.submatrix(r.indices(), s.indices()));
        if minor.is_zero() {
            continue;
        }
        let cominor = det_bareiss_raw(matrix.submatrix(r_comp.indices(), s_comp.indices()));
        let term = minor * cominor;
        if eps == col_sign {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}
