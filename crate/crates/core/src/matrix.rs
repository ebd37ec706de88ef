//! Invertible matrices over GF(p), the concrete group elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::intmatrix::IntMatrix;
use crate::scalars::{FieldElement, PrimeField};

/// A square matrix over GF(p), stored row-major as residues.
///
/// Equality, hashing and ordering use the row-major residue encoding, so the
/// derived `Ord` is the canonical encoding order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    n: usize,
    data: Vec<u32>,
    field: PrimeField,
}

impl GroupElement {
    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % field.modulus();
        }
        Self { n, data, field }
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix is not square".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.reduce(v)).collect();
        Ok(Self { n, data, field })
    }

    pub fn diagonal(field: PrimeField, entries: &[i64]) -> Self {
        let n = entries.len();
        let mut data = vec![0; n * n];
        for (i, &v) in entries.iter().enumerate() {
            data[i * n + i] = field.reduce(v);
        }
        Self { n, data, field }
    }

    /// `I + t E_{ij}`.
    pub fn elementary(field: PrimeField, n: usize, i: usize, j: usize, t: i64) -> Self {
        let mut m = Self::identity(field, n);
        let v = field.reduce(t);
        m.data[i * n + j] = field.add_raw(m.data[i * n + j], v);
        m
    }

    pub fn scalar(field: PrimeField, n: usize, lambda: u32) -> Self {
        let mut m = Self::identity(field, n);
        for i in 0..n {
            m.data[i * n + i] = lambda % field.modulus();
        }
        m
    }

    /// Reduces an integer matrix modulo p.
    pub fn from_int(field: PrimeField, m: &IntMatrix) -> Self {
        let n = m.dim();
        Self { n, data: m.entries().iter().map(|&v| field.reduce(v)).collect(), field }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.field.elem(self.get(i, j) as i64)
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Row-major residues as little-endian bytes.
    pub fn encoding(&self) -> Vec<u8> {
        self.data.iter().flat_map(|v| v.to_le_bytes()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.n).all(|i| {
            self.get(i, i) == 1 && (0..i).all(|j| self.get(i, j) == 0)
        })
    }

    pub fn diagonal_entries(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        debug_assert_eq!(self.field, other.field);
        let n = self.n;
        let p = self.field.modulus() as u64;
        let mut acc = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut acc[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b as u64;
                }
            }
            // entries stay below n * p^2, reduce once per row
            for d in &mut acc[i * n..(i + 1) * n] {
                *d %= p;
            }
        }
        Self { n, data: acc.into_iter().map(|v| v as u32).collect(), field: self.field }
    }

    pub fn scale(&self, lambda: u32) -> Self {
        let f = self.field;
        Self { n: self.n, data: self.data.iter().map(|&v| f.mul_raw(v, lambda)).collect(), field: f }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn determinant(&self) -> u32 {
        let f = self.field;
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else { return 0 };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = f.neg_raw(det);
            }
            let pv = a[col * n + col];
            det = f.mul_raw(det, pv);
            let inv = f.inv_raw(pv).expect("nonzero pivot");
            for r in (col + 1)..n {
                let factor = f.mul_raw(a[r * n + col], inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.mul_raw(factor, a[col * n + j]);
                    a[r * n + j] = f.sub_raw(a[r * n + j], v);
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let f = self.field;
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(f, n).data;
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * n + col] != 0).ok_or(Error::NotInvertible)?;
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
            }
            let s = f.inv_raw(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul_raw(a[col * n + j], s);
                inv[col * n + j] = f.mul_raw(inv[col * n + j], s);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.mul_raw(factor, a[col * n + j]);
                    a[r * n + j] = f.sub_raw(a[r * n + j], v);
                    let w = f.mul_raw(factor, inv[col * n + j]);
                    inv[r * n + j] = f.sub_raw(inv[r * n + j], w);
                }
            }
        }
        Ok(Self { n, data: inv, field: f })
    }

    /// `g x g^{-1}`, with `g_inv` supplied by the caller.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        g.mul(self).mul(g_inv)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}
