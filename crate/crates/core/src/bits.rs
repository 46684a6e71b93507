//! Vectors over GF(2), used both for elements of `(C_2)^n` and for the
//! exponent vectors of its characters.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_RANK};

/// A length-`n` vector over GF(2). Coordinate `i` (0-based) lives in bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitVector {
    bits: u32,
    len: u8,
}

impl BitVector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_RANK, "rank {len} exceeds {MAX_RANK}");
        BitVector { bits: 0, len: len as u8 }
    }

    /// The all-ones vector.
    pub fn ones(len: usize) -> Self {
        assert!(len <= MAX_RANK, "rank {len} exceeds {MAX_RANK}");
        BitVector {
            bits: low_mask(len),
            len: len as u8,
        }
    }

    /// The unit vector with a single 1 at 0-based position `i`.
    pub fn unit(len: usize, i: usize) -> Self {
        assert!(i < len);
        BitVector::from_mask(len, 1 << i)
    }

    pub fn from_mask(len: usize, mask: u32) -> Self {
        assert!(len <= MAX_RANK, "rank {len} exceeds {MAX_RANK}");
        BitVector {
            bits: mask & low_mask(len),
            len: len as u8,
        }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.len() > MAX_RANK {
            return Err(Error::Domain(format!(
                "rank {} exceeds supported maximum {MAX_RANK}",
                bits.len()
            )));
        }
        let mut mask = 0u32;
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => mask |= 1 << i,
                other => return Err(Error::Domain(format!("bit value {other} is not 0 or 1"))),
            }
        }
        Ok(BitVector::from_mask(bits.len(), mask))
    }

    /// Parses comma-separated bits such as `1,0,1`.
    pub fn parse_csv(s: &str) -> Result<Self> {
        let mut bits = Vec::new();
        let mut offset = 0;
        for tok in s.split(',') {
            let t = tok.trim();
            let pos = offset + tok.find(|c: char| !c.is_whitespace()).unwrap_or(0);
            match t {
                "0" => bits.push(0),
                "1" => bits.push(1),
                _ => return Err(Error::parse(s, pos, format!("expected 0 or 1, found {t:?}"))),
            }
            offset += tok.len() + 1;
        }
        if bits.len() > MAX_RANK {
            return Err(Error::parse(s, 0, format!("more than {MAX_RANK} bits")));
        }
        BitVector::from_bits(&bits)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn mask(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        self.bits >> i & 1 == 1
    }

    pub fn with(mut self, i: usize, value: bool) -> Self {
        debug_assert!(i < self.len());
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
        self
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_ones(&self) -> bool {
        self.bits == low_mask(self.len())
    }

    /// Parity of the weight, as a GF(2) element.
    pub fn parity(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        self.check_len(other.len())?;
        Ok(BitVector {
            bits: self.bits ^ other.bits,
            len: self.len,
        })
    }

    pub fn and(&self, other: &BitVector) -> Result<BitVector> {
        self.check_len(other.len())?;
        Ok(BitVector {
            bits: self.bits & other.bits,
            len: self.len,
        })
    }

    /// Standard GF(2) dot product.
    pub fn dot(&self, other: &BitVector) -> Result<bool> {
        Ok(self.and(other)?.parity())
    }

    /// Complement inside `{1..n}`.
    pub fn complement(&self) -> BitVector {
        BitVector {
            bits: !self.bits & low_mask(self.len()),
            len: self.len,
        }
    }

    /// Indices (0-based) of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.get(i))
    }

    /// Permuted vector `h·a` with `(h·a)_i = a_{h^{-1}(i)}`.
    pub fn permuted(&self, h: &Permutation) -> Result<BitVector> {
        self.check_len(h.len())?;
        let mut out = 0u32;
        for i in self.support() {
            out |= 1 << h.apply(i);
        }
        Ok(BitVector {
            bits: out,
            len: self.len,
        })
    }

    /// Integer whose binary digits read `a_1 a_2 … a_n`; orders vectors
    /// lexicographically.
    pub fn lex_key(&self) -> u32 {
        (0..self.len()).fold(0, |acc, i| acc << 1 | (self.bits >> i & 1))
    }

    /// All vectors of length `len` in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = BitVector> {
        assert!(len <= MAX_RANK);
        (0u32..1 << len).map(move |k| {
            let mut mask = 0;
            for i in 0..len {
                if k >> (len - 1 - i) & 1 == 1 {
                    mask |= 1 << i;
                }
            }
            BitVector::from_mask(len, mask)
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i) as u8).collect()
    }

    /// Comma-separated form without brackets, as accepted by `parse_csv`.
    pub fn to_csv(&self) -> String {
        self.to_bits()
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn check_len(&self, other: usize) -> Result<()> {
        if self.len() != other {
            return Err(Error::Dimension {
                expected: self.len(),
                found: other,
            });
        }
        Ok(())
    }
}

fn low_mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_csv())
    }
}

impl serde::Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_bits().serialize(s)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_reads_first_coordinate_as_most_significant() {
        let all: Vec<_> = BitVector::all(3).map(|v| v.to_bits()).collect();
        assert_eq!(all[0], vec![0, 0, 0]);
        assert_eq!(all[1], vec![0, 0, 1]);
        assert_eq!(all[4], vec![1, 0, 0]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let v = BitVector::parse_csv("1, 0,1").unwrap();
        assert_eq!(v.to_csv(), "1,0,1");
        assert_eq!(v.weight(), 2);
        let err = BitVector::parse_csv("1,2,0").unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 2, .. }), "{err:?}");
    }

    #[test]
    fn dot_product_and_length_checks() {
        let a = BitVector::from_bits(&[1, 1, 0]).unwrap();
        let b = BitVector::from_bits(&[1, 1, 1]).unwrap();
        assert!(!a.dot(&b).unwrap());
        assert!(a.xor(&BitVector::zero(4)).is_err());
    }
}
