//! Integer partitions and the shape classes used throughout the crate.
//!
//! A [`Partition`] is stored without trailing zeros, so `(a, 0)` and `(a)`
//! are the same value. Parts are indexed from zero in code; `part(i)` reads
//! a missing part as `0`.
//!
//! Text syntax: comma separated parts, each optionally raised to an
//! exponent, e.g. `6,2,1^6` is `(6,2,1,1,1,1,1,1)`. The empty partition is
//! written `()` (an empty string and `0` are accepted as well).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Arm and leg lengths of the diagonal cells, `(α₁,…,α_d | β₁,…,β_d)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub alphas: Vec<usize>,
    pub betas: Vec<usize>,
}

impl FrobeniusCoords {
    /// Number of diagonal cells.
    pub fn rank(&self) -> usize {
        self.alphas.len()
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{:?} is not weakly decreasing",
                parts
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(arm, 1^leg)`. `arm` must be at least 1 unless `leg = 0`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        assert!(arm >= 1 || leg == 0, "hook needs a first row");
        let mut parts = Vec::with_capacity(leg + 1);
        if arm > 0 {
            parts.push(arm);
        }
        parts.extend(std::iter::repeat_n(1, leg));
        Partition(parts)
    }

    /// `(x, y)` with `x >= y`.
    pub fn two_row(x: usize, y: usize) -> Result<Self> {
        Self::new(vec![x, y])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero-based part lookup, `0` past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let mut cols = Vec::with_capacity(width);
        for j in 0..width {
            cols.push(self.0.iter().take_while(|&&p| p > j).count());
        }
        Partition(cols)
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.transpose();
        let d = self
            .0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count();
        FrobeniusCoords {
            alphas: (0..d).map(|i| self.0[i] - i - 1).collect(),
            betas: (0..d).map(|i| conj.0[i] - i - 1).collect(),
        }
    }

    /// Rebuilds a partition from its Frobenius coordinates.
    pub fn from_frobenius(coords: &FrobeniusCoords) -> Result<Self> {
        let d = coords.alphas.len();
        let strictly_decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if coords.betas.len() != d
            || !strictly_decreasing(&coords.alphas)
            || !strictly_decreasing(&coords.betas)
        {
            return Err(Error::InvalidPartition(format!(
                "bad Frobenius coordinates {:?}",
                coords
            )));
        }
        // Rows 1..=d come from the arms; rows below the diagonal are read off
        // the legs as a partition of the lower-left region.
        let mut parts: Vec<usize> = (0..d).map(|i| coords.alphas[i] + i + 1).collect();
        let lower_rows = coords.betas.first().map_or(0, |b| b + 1);
        for row in d..lower_rows {
            // row `row` (0-based) has a cell in column k (k < d) iff β_k + k >= row
            let width = (0..d).filter(|&k| coords.betas[k] + k >= row).count();
            parts.push(width);
        }
        Self::new(parts)
    }

    /// `true` iff `inner ⊆ self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Parts from index 3 on (1-based), empty when `ℓ < 3`.
    pub fn tail(&self) -> Partition {
        if self.len() >= 3 {
            Partition(self.0[2..].to_vec())
        } else {
            Partition::empty()
        }
    }

    /// Number of 2's in the tail.
    pub fn tail_twos(&self) -> usize {
        self.tail().0.iter().filter(|&&p| p == 2).count()
    }

    /// Number of 1's in the tail.
    pub fn tail_ones(&self) -> usize {
        self.tail().0.iter().filter(|&&p| p == 1).count()
    }

    /// At most two rows, or third part at most 2.
    pub fn is_double_hook(&self) -> bool {
        self.len() <= 2 || self.0[2] <= 2
    }

    /// `Some((arm, leg))` for a nonempty hook `(arm, 1^leg)`.
    pub fn as_hook(&self) -> Option<(usize, usize)> {
        if self.is_empty() || self.0[1..].iter().any(|&p| p != 1) {
            None
        } else {
            Some((self.0[0], self.len() - 1))
        }
    }

    pub fn is_hook(&self) -> bool {
        self.as_hook().is_some()
    }

    /// `Some((d, e))` when the partition has at most two rows (`e` may be 0).
    pub fn as_two_row(&self) -> Option<(usize, usize)> {
        (!self.is_empty() && self.len() <= 2).then(|| (self.part(0), self.part(1)))
    }

    /// `Some((a, b, c))` for `(a, b, 1^c)` with `a >= b >= 2`.
    pub fn as_near_hook(&self) -> Option<(usize, usize, usize)> {
        if self.len() < 2 || self.0[1] < 2 || self.0[2..].iter().any(|&p| p != 1) {
            None
        } else {
            Some((self.0[0], self.0[1], self.len() - 2))
        }
    }
}

/// `true` iff `mu ⊆ lambda` (missing parts read as 0).
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    lambda.contains(mu)
}

/// Whether `lambda / mu` has at most one cell in every column.
pub fn is_horizontal_strip(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained(mu.to_string(), lambda.to_string()));
    }
    Ok((0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i)))
}

/// Size-checked double-hook test: `|η| = n` and `η ∈ DH(n)`.
pub fn is_double_hook(eta: &Partition, n: usize) -> bool {
    eta.size() == n && eta.is_double_hook()
}

/// Partitions of `n` in reverse-lexicographic order, optionally limited to
/// at most `max_length` parts.
pub fn partitions_of(n: usize, max_length: Option<usize>) -> impl Iterator<Item = Partition> {
    ReverseLex::new(n).filter(move |p| max_length.is_none_or(|m| p.len() <= m))
}

/// Collects [`partitions_of`] into a vector.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n, None).collect()
}

/// All partitions contained in `outer`, of every size, smallest size first.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=outer.size() {
        out.extend(partitions_of(k, Some(outer.len())).filter(|p| outer.contains(p)));
    }
    out
}

struct ReverseLex {
    current: Option<Vec<usize>>,
}

impl ReverseLex {
    fn new(n: usize) -> Self {
        ReverseLex {
            current: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl Iterator for ReverseLex {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let mut parts = current.clone();
        let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
        parts.truncate(parts.len() - ones);
        if let Some(last) = parts.pop() {
            let x = last - 1;
            let mut rest = ones + 1 + x;
            while rest > 0 {
                let take = x.min(rest);
                parts.push(take);
                rest -= take;
            }
            self.current = Some(parts);
        }
        Some(Partition(current))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let bad = |_| Error::Parse(format!("bad partition token {:?} in {:?}", token, s));
            let base: usize = base.parse().map_err(bad)?;
            let exp: usize = exp.parse().map_err(bad)?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

/// Shorthand used heavily in tests: `p(&[4, 2])`.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}
