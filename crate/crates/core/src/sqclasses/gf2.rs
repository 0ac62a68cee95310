//! Dense linear algebra over F_2 on packed bit rows.

use std::fmt;

use crate::error::{Error, Result};

/// A fixed-length vector over F_2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b & 1 == 1);
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
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `matrix * x = rhs` over F_2, one row per equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GF2System {
    cols: usize,
    rows: Vec<BitVector>,
    rhs: Vec<bool>,
}

impl GF2System {
    pub fn new(cols: usize) -> Self {
        GF2System {
            cols,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn rhs(&self) -> &[bool] {
        &self.rhs
    }

    pub fn push(&mut self, row: BitVector, rhs: bool) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                got: row.len(),
            });
        }
        self.rows.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    /// Whether `x` satisfies every equation.
    pub fn is_solution(&self, x: &BitVector) -> bool {
        x.len() == self.cols && self.rows.iter().zip(&self.rhs).all(|(r, &b)| r.dot(x) == b)
    }

    /// Gauss-Jordan elimination. Free variables are set to 0, so the result
    /// is deterministic. `None` if the system is inconsistent.
    pub fn solve(&self) -> Option<BitVector> {
        let mut rows = self.rows.clone();
        let mut rhs = self.rhs.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            rhs.swap(next, found);
            for r in 0..rows.len() {
                if r != next && rows[r].get(col) {
                    let pivot = rows[next].clone();
                    rows[r].xor_assign(&pivot);
                    rhs[r] ^= rhs[next];
                }
            }
            pivots.push(col);
            next += 1;
        }
        if rhs[next..].iter().any(|&b| b) {
            return None;
        }
        let mut x = BitVector::zeros(self.cols);
        for (r, &col) in pivots.iter().enumerate() {
            x.set(col, rhs[r]);
        }
        debug_assert!(self.is_solution(&x));
        Some(x)
    }
}
