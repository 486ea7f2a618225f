use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letter `i` is `sigma_i`, letter `-i` its inverse (`1 <= i < strands`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        for &g in &letters {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(Error::InvalidBraid(format!("generator {g} is not in B{strands}")));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// `sigma_1^n` in `B2` (negative `n` gives inverse letters).
    pub fn torus(n: i32) -> Self {
        let g = if n >= 0 { 1 } else { -1 };
        Self { strands: 2, letters: vec![g; n.unsigned_abs() as usize] }
    }

    /// Comma or whitespace separated signed generators, e.g. `"1,-2,1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
            let g: i32 = tok
                .parse()
                .map_err(|_| Error::InvalidBraid(format!("'{tok}' is not a signed generator index")))?;
            letters.push(g);
        }
        Self::new(strands, letters)
    }

    pub fn random<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Result<Self> {
        if strands < 2 && len > 0 {
            return Err(Error::InvalidBraid("B1 has no generators".into()));
        }
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum (writhe of the closure).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    /// Underlying permutation: strand starting at position `j` ends at `perm[j]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
        }
        cycles
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|g| -g).collect() }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// `g * self * g^-1`.
    pub fn conjugate(&self, g: &Self) -> Result<Self> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Markov stabilisation: adds a strand and appends `sigma_n^(+-1)`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        Self { strands: self.strands + 1, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "B{}: e", self.strands);
        }
        let s: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "B{}: {}", self.strands, s.join(","))
    }
}
