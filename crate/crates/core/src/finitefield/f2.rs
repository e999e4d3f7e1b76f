use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest row or column count accepted by [`F2Matrix::new`].
pub const MAX_F2_DIM: usize = 4096;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// Bit-packed vector over `F_2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let m = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Dense matrix over `F_2`, one packed bit-row per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows > MAX_F2_DIM || cols > MAX_F2_DIM {
            return Err(Error::DimensionCap(rows.max(cols)));
        }
        Ok(Self::zeros(rows, cols))
    }

    /// Zero matrix; panics above [`MAX_F2_DIM`].
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows <= MAX_F2_DIM && cols <= MAX_F2_DIM, "F2 matrix dimension cap exceeded");
        let stride = words_for(cols);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b & 1 == 1);
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect()).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        let w = &mut self.data[i * self.stride + j / 64];
        let m = 1u64 << (j % 64);
        if b {
            *w |= m;
        } else {
            *w &= !m;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.stride + j / 64] ^= 1u64 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (d, &w) in b.iter_mut().zip(a) {
            *d ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut m = self.clone();
        for (d, &w) in m.data.iter_mut().zip(&o.data) {
            *d ^= w;
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let base = i * out.stride;
                    for (w, &x) in o.row(k).iter().enumerate() {
                        out.data[base + w] ^= x;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(self.cols, v.len());
        let mut out = F2Vector::zeros(self.rows);
        for i in 0..self.rows {
            let parity = self.row(i).iter().zip(&v.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>();
            out.set(i, parity % 2 == 1);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.get(i, c)) else { continue };
            self.swap_rows(r, piv);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, true);
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Basis of the null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<F2Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = F2Vector::zeros(self.cols);
                v.set(free, true);
                for (r, &pc) in pivots.iter().enumerate() {
                    if m.get(r, free) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect()
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }
}

/// Null-space basis of `m`; the basis has `cols - rank` vectors.
pub fn f2_solve_kernel(m: &F2Matrix) -> Vec<F2Vector> {
    m.kernel()
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let s: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

impl Serialize for F2Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for F2Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u8>>::deserialize(d)?;
        if rows.iter().any(|r| r.len() != rows.first().map_or(0, Vec::len)) {
            return Err(serde::de::Error::custom("ragged bit matrix"));
        }
        Ok(Self::from_rows(&rows))
    }
}
