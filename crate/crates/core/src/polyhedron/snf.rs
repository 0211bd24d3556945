//! Smith normal form over the integers.
//!
//! Two arithmetic modes share one elimination routine: checked `i64`, which
//! fails with [`Error::Overflow`] instead of wrapping, and arbitrary-precision
//! [`BigInt`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product with checked arithmetic.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Internal(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a.checked_mul(other.get(k, j)).ok_or(Error::Overflow)?;
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].checked_add(p).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SnfMode {
    /// Fixed-width `i64`; overflow is reported as [`Error::Overflow`].
    #[default]
    Checked,
    /// Arbitrary precision.
    Exact,
}

/// Invariant factors `d1 | d2 | ... | dr`, all positive; `r` is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

trait Scalar: Clone + PartialEq + fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    fn neg(&self) -> Result<Self>;
    fn quotient(&self, d: &Self) -> Result<Self>;
    fn is_multiple_of(&self, d: &Self) -> bool;
    /// `self - q * x`
    fn sub_mul(&self, q: &Self, x: &Self) -> Result<Self>;
    fn add(&self, x: &Self) -> Result<Self>;
    fn is_negative(&self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn neg(&self) -> Result<Self> {
        self.checked_neg().ok_or(Error::Overflow)
    }
    fn quotient(&self, d: &Self) -> Result<Self> {
        self.checked_div(*d).ok_or(Error::Overflow)
    }
    fn is_multiple_of(&self, d: &Self) -> bool {
        self.checked_rem(*d).is_none_or(|r| r == 0)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Result<Self> {
        q.checked_mul(*x)
            .and_then(|p| self.checked_sub(p))
            .ok_or(Error::Overflow)
    }
    fn add(&self, x: &Self) -> Result<Self> {
        self.checked_add(*x).ok_or(Error::Overflow)
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn neg(&self) -> Result<Self> {
        Ok(-self)
    }
    fn quotient(&self, d: &Self) -> Result<Self> {
        Ok(self / d)
    }
    fn is_multiple_of(&self, d: &Self) -> bool {
        Zero::is_zero(&(self % d))
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Result<Self> {
        Ok(self - q * x)
    }
    fn add(&self, x: &Self) -> Result<Self> {
        Ok(self + x)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Computes the invariant factors of `m`.
pub fn smith_normal_form(m: &IntMatrix, mode: SnfMode) -> Result<SmithForm> {
    match mode {
        SnfMode::Checked => eliminate::<i64>(m),
        SnfMode::Exact => eliminate::<BigInt>(m),
    }
}

/// Checked mode first, falling back to exact arithmetic on overflow.
pub fn smith_normal_form_auto(m: &IntMatrix) -> Result<SmithForm> {
    match smith_normal_form(m, SnfMode::Checked) {
        Err(Error::Overflow) => smith_normal_form(m, SnfMode::Exact),
        other => other,
    }
}

fn eliminate<T: Scalar>(m: &IntMatrix) -> Result<SmithForm> {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<T>> = (0..rows)
        .map(|r| (0..cols).map(|c| T::from_i64(m.get(r, c))).collect())
        .collect();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the trailing block as pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(t) {
            for (c, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && pivot.is_none_or(|(pr, pc)| x.magnitude_lt(&a[pr][pc])) {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].quotient(&a[t][t])?;
                for c in t..cols {
                    let v = a[r][c].sub_mul(&q, &a[t][c])?;
                    a[r][c] = v;
                }
                if !a[r][t].is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].quotient(&a[t][t])?;
                for row in a.iter_mut().skip(t) {
                    let v = row[c].sub_mul(&q, &row[t])?;
                    row[c] = v;
                }
                if !a[t][c].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                move_min_to_pivot(&mut a, t);
                continue;
            }
            // Pivot row and column are clear; enforce divisibility on the rest.
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a[r][c].is_multiple_of(&a[t][t])));
            match bad {
                Some(r) => {
                    for c in t..cols {
                        let v = a[t][c].add(&a[r][c])?;
                        a[t][c] = v;
                    }
                }
                None => break,
            }
        }
        let d = if a[t][t].is_negative() {
            a[t][t].neg()?
        } else {
            a[t][t].clone()
        };
        factors.push(d.to_big());
        t += 1;
    }
    Ok(SmithForm { factors })
}

fn move_min_to_pivot<T: Scalar>(a: &mut [Vec<T>], t: usize) {
    let mut best = (t, t);
    for r in t..a.len() {
        if !a[r][t].is_zero() && (a[best.0][best.1].is_zero() || a[r][t].magnitude_lt(&a[best.0][best.1])) {
            best = (r, t);
        }
    }
    for c in t..a[t].len() {
        if !a[t][c].is_zero() && (a[best.0][best.1].is_zero() || a[t][c].magnitude_lt(&a[best.0][best.1])) {
            best = (t, c);
        }
    }
    if best.0 != t {
        a.swap(t, best.0);
    } else if best.1 != t {
        for row in a.iter_mut() {
            row.swap(t, best.1);
        }
    }
}

/// Rank over the field with two elements.
pub fn rank_mod2(m: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m.rows);
    let words = m.cols.div_ceil(64);
    for r in 0..m.rows {
        let mut bits = vec![0u64; words];
        for c in 0..m.cols {
            if m.get(r, c).rem_euclid(2) == 1 {
                bits[c / 64] |= 1 << (c % 64);
            }
        }
        rows.push(bits);
    }
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Converts a factor to `u64`, failing with [`Error::Overflow`] if it does not fit.
pub fn factor_to_u64(d: &BigInt) -> Result<u64> {
    d.to_u64().ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows), SnfMode::Checked)
            .unwrap()
            .factors
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    // Determinantal divisors: d_1 ... d_k = gcd of k x k minors.
    fn minor_gcds(m: &[Vec<i64>]) -> Vec<i128> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut out = Vec::new();
        for k in 1..=rows.min(cols) {
            let mut g: i128 = 0;
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<i128>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                        .collect();
                    g = gcd(g, bareiss(sub));
                }
            }
            if g == 0 {
                break;
            }
            out.push(g);
        }
        out
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    fn bareiss(mut a: Vec<Vec<i128>>) -> i128 {
        let n = a.len();
        let mut sign = 1;
        let mut prev = 1;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }

    #[test]
    fn diagonal_normalises_to_divisibility_chain() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(factors(&[vec![0, 0], vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[]), Vec::<i64>::new());
    }

    #[test]
    fn random_matrices_match_minor_gcds() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..20 {
            let m: Vec<Vec<i64>> = (0..8)
                .map(|_| (0..8).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let mut want = Vec::new();
            let divisors = minor_gcds(&m);
            for (k, d) in divisors.iter().enumerate() {
                want.push(if k == 0 { *d } else { d / divisors[k - 1] });
            }
            let got: Vec<i128> = factors(&m).into_iter().map(i128::from).collect();
            assert_eq!(got, want, "{m:?}");
        }
    }

    #[test]
    fn small_random_matrices_match_minor_gcds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(0..5);
            let cols = rng.gen_range(0..5);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-4..=4)).collect())
                .collect();
            let divisors = minor_gcds(&m);
            let want: Vec<i128> = divisors
                .iter()
                .enumerate()
                .map(|(k, d)| if k == 0 { *d } else { d / divisors[k - 1] })
                .collect();
            let got: Vec<i128> = if cols == 0 {
                vec![]
            } else {
                factors(&m).into_iter().map(i128::from).collect()
            };
            assert_eq!(got, want, "{m:?}");
        }
    }

    #[test]
    fn checked_mode_reports_overflow_and_exact_mode_recovers() {
        let big = i64::MAX / 2 + 1;
        let m = IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 1, big - 2]]);
        // determinant is -1 so the factors are [1, 1]
        let exact = smith_normal_form(&m, SnfMode::Exact).unwrap();
        assert_eq!(exact.factors, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(smith_normal_form_auto(&m).unwrap(), exact);
    }

    #[test]
    fn checked_mode_fails_loudly() {
        let m = IntMatrix::from_rows(&[vec![i64::MAX, 0], vec![i64::MAX - 1, 2]]);
        match smith_normal_form(&m, SnfMode::Checked) {
            Ok(f) => assert_eq!(f, smith_normal_form(&m, SnfMode::Exact).unwrap()),
            Err(e) => assert_eq!(e, Error::Overflow),
        }
    }

    #[test]
    fn mod2_rank() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1], vec![3, 0]]);
        assert_eq!(rank_mod2(&m), 2);
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(rank_mod2(&m), 0);
    }
}
