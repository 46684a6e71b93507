//! Permutations of `{0, …, n-1}`, rendered 1-based in cycle notation.
//!
//! Composition follows `(στ)(i) = σ(τ(i))`, so `compose` applies its
//! argument first.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    images: [u8; MAX_RANK],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        let mut images = [0u8; MAX_RANK];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Permutation { n: n as u8, images }
    }

    /// Builds a permutation from its 0-based image list.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_RANK {
            return Err(Error::Domain(format!(
                "rank {n} exceeds supported maximum {MAX_RANK}"
            )));
        }
        let mut p = Permutation::identity(n);
        let mut seen = [false; MAX_RANK];
        for (i, &img) in images.iter().enumerate() {
            if img >= n || seen[img] {
                return Err(Error::Domain(format!("{images:?} is not a bijection")));
            }
            seen[img] = true;
            p.images[i] = img as u8;
        }
        Ok(p)
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_RANK {
            return Err(Error::Domain(format!(
                "rank {n} exceeds supported maximum {MAX_RANK}"
            )));
        }
        let mut p = Permutation::identity(n);
        let mut seen = [false; MAX_RANK];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::Domain(format!("point {} outside 1..{n}", x + 1)));
                }
                if seen[x] {
                    return Err(Error::Domain(format!("point {} repeated", x + 1)));
                }
                seen[x] = true;
                p.images[x] = cycle[(k + 1) % cycle.len()] as u8;
            }
        }
        Ok(p)
    }

    /// The transposition of two 0-based points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(i, j);
        p
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images[..self.len()].iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images().enumerate().all(|(i, x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..self.len() {
            out.images[i] = self.images[other.images[i] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = *self;
        for i in 0..self.len() {
            out.images[self.images[i] as usize] = i as u8;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Permutation {
        (0..k).fold(Permutation::identity(self.len()), |acc, _| acc.compose(self))
    }

    /// `g σ g^{-1}`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// All cycles, including fixed points. Each cycle starts at its smallest
    /// point and cycles are sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; MAX_RANK];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths sorted in decreasing order (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, lcm)
    }

    /// All permutations of `n` points in lexicographic order of images.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// Parses cycle notation such as `(1 2)(3 4 5)` or `()`, 1-based.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        parse_cycles(s, 0, s, n)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Parses the cycle part of a literal. `offset` and `full` are only used for
/// position reporting against the enclosing input.
pub(crate) fn parse_cycles(s: &str, offset: usize, full: &str, n: usize) -> Result<Permutation> {
    if n > MAX_RANK {
        return Err(Error::parse(full, offset, format!("rank {n} exceeds {MAX_RANK}")));
    }
    let bytes = s.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if s[i..].trim_end() == "()" {
        return Ok(Permutation::identity(n));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = [false; MAX_RANK];
    while i < bytes.len() {
        skip_ws(&mut i);
        if i >= bytes.len() {
            break;
        }
        if bytes[i] != b'(' {
            return Err(Error::parse(full, offset + i, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            if i >= bytes.len() {
                return Err(Error::parse(full, offset + i, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::parse(
                    full,
                    offset + start,
                    format!("expected a point or ')', found {:?}", bytes[start] as char),
                ));
            }
            let v: usize = s[start..i]
                .parse()
                .map_err(|_| Error::parse(full, offset + start, "point out of range"))?;
            if v == 0 || v > n {
                return Err(Error::parse(
                    full,
                    offset + start,
                    format!("point {v} outside 1..{n}"),
                ));
            }
            if seen[v - 1] {
                return Err(Error::parse(
                    full,
                    offset + start,
                    format!("point {v} appears twice; cycles must be disjoint"),
                ));
            }
            seen[v - 1] = true;
            cycle.push(v - 1);
        }
        if cycle.len() < 2 {
            return Err(Error::parse(
                full,
                offset + i - 1,
                "a cycle needs at least two points",
            ));
        }
        cycles.push(cycle);
    }
    if cycles.is_empty() {
        return Err(Error::parse(full, offset, "empty permutation; write () for identity"));
    }
    Permutation::from_cycles(n, &cycles).map_err(|e| Error::parse(full, offset, e.to_string()))
}

pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next?;
        // Standard next-permutation step on the image array.
        let n = current.len();
        let mut p = current;
        let a = &mut p.images[..n];
        let mut k = n.checked_sub(2);
        while let Some(i) = k {
            if a[i] < a[i + 1] {
                break;
            }
            k = i.checked_sub(1);
        }
        self.next = match k {
            Some(i) => {
                let mut j = n - 1;
                while a[j] <= a[i] {
                    j -= 1;
                }
                a.swap(i, j);
                a[i + 1..].reverse();
                Some(p)
            }
            None => None,
        };
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
