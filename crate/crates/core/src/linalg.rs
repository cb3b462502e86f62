//! Dense exact linear algebra over a prime field `F_p`.
//!
//! Vectors are rows and matrices act on the right (`x ↦ xA`), which matches
//! the right-module convention used everywhere else in the crate.

use std::fmt;

use crate::error::{Error, Result};

/// Default working prime.
pub const DEFAULT_PRIME: u32 = 32003;
/// Small prime used for cross-checks.
pub const CHECK_PRIME: u32 = 101;

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates that `p` is prime and small enough for `u64` products.
pub fn check_prime(p: u32) -> Result<u32> {
    if p >= 1 << 31 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p)
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1u32 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, (p - 2) as u64, p)
}

/// Reduces a signed integer into `[0, p)`.
pub fn reduce(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// A scalar of `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Result<Self> {
        check_prime(modulus)?;
        Ok(Fp {
            value: reduce(value, modulus),
            modulus,
        })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Fp> {
        (self.value != 0).then(|| Fp {
            value: inv_mod(self.value, self.modulus),
            modulus: self.modulus,
        })
    }

    /// Signed representative in `(-p/2, p/2]`.
    pub fn signed(self) -> i64 {
        let v = self.value as i64;
        if v > self.modulus as i64 / 2 {
            v - self.modulus as i64
        } else {
            v
        }
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        Fp {
            value: add_mod(self.value, o.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        Fp {
            value: sub_mod(self.value, o.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        Fp {
            value: mul_mod(self.value, o.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: sub_mod(0, self.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Row-major dense matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {} [", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// Result of [`FpMatrix::row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub reduced: FpMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        FpMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw row-major data; entries are reduced mod `p`.
    pub fn from_vec(rows: usize, cols: usize, p: u32, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(FpMatrix {
            rows,
            cols,
            p,
            data: data.into_iter().map(|x| x % p).collect(),
        })
    }

    pub fn from_rows(rows: &[Vec<i64>], p: u32) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| reduce(x, p)).collect();
        Ok(FpMatrix {
            rows: rows.len(),
            cols,
            p,
            data,
        })
    }

    pub(crate) fn from_row_slices(rows: &[Vec<u32>], cols: usize, p: u32) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        FpMatrix {
            rows: rows.len(),
            cols,
            p,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entries as signed integers, one `Vec` per row.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        debug_assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let mut out = FpMatrix::zeros(self.rows, other.cols, self.p);
        if other.cols == 0 {
            return out;
        }
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (dst, &b) in acc.iter_mut().zip(orow) {
                    *dst += a * b as u64;
                    if *dst >= 1 << 62 {
                        *dst %= p;
                    }
                }
            }
            for (dst, a) in out.row_mut(r).iter_mut().zip(&acc) {
                *dst = (*a % p) as u32;
            }
        }
        out
    }

    /// `x ↦ x·self` for a single row vector.
    pub fn apply_row(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = self.p as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (dst, &b) in acc.iter_mut().zip(self.row(k)) {
                *dst = (*dst + a as u64 * b as u64) % p;
            }
        }
        acc.into_iter().map(|x| x as u32).collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| add_mod(a, b, self.p))
            .collect();
        FpMatrix {
            rows: self.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| sub_mod(a, b, self.p))
            .collect();
        FpMatrix {
            rows: self.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let data = self.data.iter().map(|&a| mul_mod(a, s, self.p)).collect();
        FpMatrix {
            rows: self.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &FpMatrix, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = add_mod(*a, mul_mod(b, s, p), p);
        }
    }

    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut out = FpMatrix::zeros(self.rows, cols, self.p);
        for r in 0..self.rows {
            out.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            out.row_mut(r)[self.cols..].copy_from_slice(other.row(r));
        }
        out
    }

    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &FpMatrix) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.rows + other.rows, self.cols + other.cols, self.p);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FpMatrix) {
        for r in 0..block.rows {
            let dst =
                &mut self.data[(r0 + r) * self.cols + c0..(r0 + r) * self.cols + c0 + block.cols];
            dst.copy_from_slice(block.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FpMatrix {
        let mut out = FpMatrix::zeros(rows, cols, self.p);
        for r in 0..rows {
            out.row_mut(r)
                .copy_from_slice(&self.row(r0 + r)[c0..c0 + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(idx.len(), self.cols, self.p);
        for (i, &r) in idx.iter().enumerate() {
            out.row_mut(i).copy_from_slice(self.row(r));
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.rows, idx.len(), self.p);
        for r in 0..self.rows {
            for (i, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + i] = self.get(r, c);
            }
        }
        out
    }

    /// Reduced row-echelon form with pivot columns and rank.
    pub fn row_reduce(&self) -> RowEchelon {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        RowEchelon {
            reduced: m,
            pivots,
            rank,
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = inv_mod(self.data[r * cols + c], p);
            for k in c..cols {
                self.data[r * cols + k] = mul_mod(self.data[r * cols + k], inv, p);
            }
            let pivot_row: Vec<u32> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                let row = &mut self.data[i * cols + c..(i + 1) * cols];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = sub_mod(*x, mul_mod(f, y, p), p);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Rows spanning the left kernel `{v : vM = 0}`, linearly independent.
    pub fn kernel_basis(&self) -> FpMatrix {
        let t = self.transpose();
        t.right_kernel_rows()
    }

    /// Rows `x` with `self · xᵀ = 0`.
    fn right_kernel_rows(&self) -> FpMatrix {
        let ech = self.row_reduce();
        let n = self.cols;
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; n];
            for &c in &ech.pivots {
                is_pivot[c] = true;
            }
            (0..n).filter(|&c| !is_pivot[c]).collect()
        };
        let mut out = FpMatrix::zeros(free.len(), n, self.p);
        for (k, &f) in free.iter().enumerate() {
            out.data[k * n + f] = 1;
            for (i, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.reduced.get(i, f);
                out.data[k * n + pc] = sub_mod(0, v, self.p);
            }
        }
        out
    }

    /// Finds one `x` with `x · self = b`, or `Ok(None)` when inconsistent.
    pub fn solve_linear(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.cols {
            return Err(Error::Shape(format!(
                "rhs of length {} for {} columns",
                b.len(),
                self.cols
            )));
        }
        // x A = b  <=>  Aᵀ xᵀ = bᵀ
        let n = self.rows;
        let mut aug = FpMatrix::zeros(self.cols, n + 1, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[c * (n + 1) + r] = self.get(r, c);
            }
        }
        for (c, &v) in b.iter().enumerate() {
            aug.data[c * (n + 1) + n] = v % self.p;
        }
        let ech = aug.row_reduce();
        if ech.pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = vec![0u32; n];
        for (i, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.reduced.get(i, n);
        }
        Ok(Some(x))
    }

    /// Solves `X · self = rhs` row by row; `None` if any row is inconsistent.
    pub fn solve_left(&self, rhs: &FpMatrix) -> Option<FpMatrix> {
        assert_eq!(rhs.cols, self.cols);
        if rhs.rows == 0 {
            return Some(FpMatrix::zeros(0, self.rows, self.p));
        }
        let n = self.rows;
        let k = rhs.rows;
        let mut aug = FpMatrix::zeros(self.cols, n + k, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[c * (n + k) + r] = self.get(r, c);
            }
        }
        for r in 0..k {
            for c in 0..self.cols {
                aug.data[c * (n + k) + n + r] = rhs.get(r, c);
            }
        }
        let ech = aug.row_reduce();
        if ech.pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = FpMatrix::zeros(k, n, self.p);
        for (i, &pc) in ech.pivots.iter().enumerate() {
            for r in 0..k {
                x.data[r * n + pc] = ech.reduced.get(i, n + r);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&FpMatrix::identity(n, self.p));
        let ech = aug.row_reduce();
        if ech.rank < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(ech.reduced.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.rows, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |t, i| add_mod(t, self.get(i, i), self.p))
    }

    /// Characteristic polynomial `det(x·I − self)`, coefficients from the
    /// constant term up; monic of degree `n`.
    pub fn charpoly(&self) -> Vec<u32> {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
                continue;
            };
            if i != j + 1 {
                for k in 0..n {
                    h.data.swap(i * n + k, (j + 1) * n + k);
                }
                for k in 0..n {
                    h.data.swap(k * n + i, k * n + j + 1);
                }
            }
            let inv = inv_mod(h.get(j + 1, j), p);
            for i in j + 2..n {
                let u = mul_mod(h.get(i, j), inv, p);
                if u == 0 {
                    continue;
                }
                for k in 0..n {
                    let v = sub_mod(h.get(i, k), mul_mod(u, h.get(j + 1, k), p), p);
                    h.data[i * n + k] = v;
                }
                for k in 0..n {
                    let v = add_mod(h.get(k, j + 1), mul_mod(u, h.get(k, i), p), p);
                    h.data[k * n + j + 1] = v;
                }
            }
        }
        // polys[k] = charpoly of the leading k×k block
        let mut polys: Vec<Vec<u32>> = vec![vec![1]];
        for k in 1..=n {
            let hk = h.get(k - 1, k - 1);
            let prev = &polys[k - 1];
            let mut next = vec![0u32; k + 1];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = add_mod(next[d + 1], c, p);
                next[d] = sub_mod(next[d], mul_mod(hk, c, p), p);
            }
            let mut t = 1u32;
            for i in (1..k).rev() {
                t = mul_mod(t, h.get(i, i - 1), p);
                if t == 0 {
                    break;
                }
                let coef = mul_mod(t, h.get(i - 1, k - 1), p);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i - 1].iter().enumerate() {
                    next[d] = sub_mod(next[d], mul_mod(coef, c, p), p);
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Roots in `F_p` of the characteristic polynomial, ascending.
    pub fn eigenvalues(&self) -> Vec<u32> {
        poly_roots(&self.charpoly(), self.p)
    }
}

/// Evaluates a polynomial (constant term first) at `x`.
pub fn poly_eval(coeffs: &[u32], x: u32, p: u32) -> u32 {
    coeffs
        .iter()
        .rev()
        .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// All roots in `F_p`, by exhaustive evaluation.
pub fn poly_roots(coeffs: &[u32], p: u32) -> Vec<u32> {
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    (0..p).filter(|&x| poly_eval(coeffs, x, p) == 0).collect()
}

/// A subspace of `F_p^n` held as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(rows: &FpMatrix) -> Self {
        let ech = rows.row_reduce();
        let basis = ech.reduced.select_rows(&(0..ech.rank).collect::<Vec<_>>());
        Subspace {
            basis,
            pivots: ech.pivots,
        }
    }

    pub fn zero(n: usize, p: u32) -> Self {
        Subspace {
            basis: FpMatrix::zeros(0, n, p),
            pivots: Vec::new(),
        }
    }

    pub fn whole(n: usize, p: u32) -> Self {
        Subspace {
            basis: FpMatrix::identity(n, p),
            pivots: (0..n).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `w` modulo the subspace; returns (coordinates, residual).
    pub fn decompose(&self, w: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let p = self.basis.prime();
        let mut res = w.to_vec();
        let mut coords = vec![0u32; self.dim()];
        for (i, &pc) in self.pivots.iter().enumerate() {
            let f = res[pc];
            if f == 0 {
                continue;
            }
            coords[i] = f;
            for (x, &y) in res.iter_mut().zip(self.basis.row(i)) {
                *x = sub_mod(*x, mul_mod(f, y, p), p);
            }
        }
        (coords, res)
    }

    pub fn contains(&self, w: &[u32]) -> bool {
        self.decompose(w).1.iter().all(|&x| x == 0)
    }

    /// Coordinates of `w` in the echelon basis when `w` lies in the subspace.
    pub fn coords(&self, w: &[u32]) -> Option<Vec<u32>> {
        let (c, r) = self.decompose(w);
        r.iter().all(|&x| x == 0).then_some(c)
    }

    /// Standard basis indices spanning a complement (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = a·B1 = b·B2  <=>  [a | b] · [B1; -B2] = 0
        let n = self.ambient();
        let p = self.basis.prime();
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(n, p);
        }
        let stacked = self.basis.vstack(&other.basis.scale(p - 1));
        let ker = stacked.kernel_basis();
        let a = ker.block(0, 0, ker.rows(), self.dim());
        Subspace::span(&a.mul(&self.basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 101;

    fn m(rows: &[Vec<i64>]) -> FpMatrix {
        FpMatrix::from_rows(rows, P).unwrap()
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Fp::new(3, 100).is_err());
        assert!(check_prime(32003).is_ok());
        assert_eq!(Fp::new(-1, 101).unwrap().value(), 100);
    }

    #[test]
    fn row_reduce_examples() {
        let id = FpMatrix::identity(2, P);
        let e = id.row_reduce();
        assert_eq!(e.reduced, id);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rank, 2);

        let z = FpMatrix::zeros(3, 2, P);
        let e = z.row_reduce();
        assert!(e.reduced.is_zero());
        assert!(e.pivots.is_empty());

        let e = m(&[vec![1, 2], vec![2, 4]]).row_reduce();
        assert_eq!(e.reduced, m(&[vec![1, 2], vec![0, 0]]));
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FpMatrix::identity(3, P).kernel_basis().rows(), 0);
        assert_eq!(
            FpMatrix::zeros(3, 2, P).kernel_basis(),
            FpMatrix::identity(3, P)
        );
        let k = m(&[vec![1, 2], vec![2, 4]]).kernel_basis();
        assert_eq!(k.rows(), 1);
        // span{[2, -1]}
        let r = k.row(0);
        assert_eq!(mul_mod(r[0], inv_mod(r[1], P), P), reduce(-2, P));
    }

    #[test]
    fn solve_examples() {
        let b = vec![5, 7, 9];
        assert_eq!(
            FpMatrix::identity(3, P).solve_linear(&b).unwrap(),
            Some(b.clone())
        );
        assert_eq!(FpMatrix::zeros(2, 3, P).solve_linear(&b).unwrap(), None);
        let a = m(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(a.solve_linear(&[1, 2]).unwrap(), Some(vec![1, 1]));
        assert!(a.solve_linear(&[1]).is_err());
    }

    #[test]
    fn charpoly_of_companion() {
        // companion of x^3 - 2x + 5
        let c = m(&[vec![0, 1, 0], vec![0, 0, 1], vec![-5, 2, 0]]);
        assert_eq!(c.charpoly(), vec![5, reduce(-2, P), 0, 1]);
    }

    #[test]
    fn subspace_intersection() {
        let a = Subspace::span(&m(&[vec![1, 0, 0], vec![0, 1, 0]]));
        let b = Subspace::span(&m(&[vec![0, 1, 0], vec![0, 0, 1]]));
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[0, 3, 0]));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
