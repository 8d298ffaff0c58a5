//! Skew semistandard tableaux, Yamanouchi words and Littlewood–Richardson
//! coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A semistandard filling of `outer / inner`.
///
/// `rows[i]` holds the labels of row `i` from column `inner_i` to
/// `outer_i - 1`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewSSYT {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

/// Label multiplicities `(t₁,…,t_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<usize>);

impl SkewSSYT {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained(inner.to_string(), outer.to_string()));
        }
        if rows.len() > outer.len()
            || (0..outer.len()).any(|i| {
                rows.get(i).map_or(0, Vec::len) != outer.part(i) - inner.part(i)
            })
        {
            return Err(Error::Domain("row lengths do not match the skew shape".into()));
        }
        let mut rows = rows;
        rows.resize(outer.len(), Vec::new());
        let t = SkewSSYT { outer, inner, rows };
        if !t.is_semistandard() {
            return Err(Error::Domain("filling is not semistandard".into()));
        }
        Ok(t)
    }

    /// Straight shape tableau from its rows.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Self::new(shape, Partition::empty(), rows)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Label at row `i`, absolute column `j`, if the cell is in the skew shape.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        let start = self.inner.part(i);
        if j < start {
            return None;
        }
        self.rows.get(i).and_then(|r| r.get(j - start)).copied()
    }

    fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i == 0 {
                continue;
            }
            for (k, &x) in row.iter().enumerate() {
                let j = self.inner.part(i) + k;
                if let Some(above) = self.get(i - 1, j) {
                    if above >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn weight(&self) -> Weight {
        let mut counts = Vec::new();
        for &x in self.rows.iter().flatten() {
            if counts.len() < x {
                counts.resize(x, 0);
            }
            counts[x - 1] += 1;
        }
        Weight(counts)
    }

    /// Rows read right to left, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// `ytableau` body, with `\none` for the inner cells.
    pub fn to_ytableau(&self) -> String {
        let mut lines = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = vec!["\\none".to_string(); self.inner.part(i)];
            cells.extend(row.iter().map(|x| x.to_string()));
            lines.push(cells.join(" & "));
        }
        lines.join(" \\\\\n")
    }
}

/// ASCII grid; inner cells are drawn as `.`.
impl fmt::Display for SkewSSYT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = vec![format!("{:>w$}", ".", w = width); self.inner.part(i)];
            cells.extend(row.iter().map(|x| format!("{:>w$}", x, w = width)));
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Every prefix has at least as many `i`'s as `(i+1)`'s.
pub fn is_yamanouchi(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x >= 2 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// Backtracking over LR fillings of `lambda / mu` with weight `nu`. Cells are
/// filled in reading order so the Yamanouchi condition is checked on each
/// prefix as it grows.
struct LrSearch<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    cells: Vec<(usize, usize)>,
    rows: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl<'a> LrSearch<'a> {
    fn new(lambda: &'a Partition, mu: &'a Partition, nu: &'a Partition) -> Option<Self> {
        if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu)
        {
            return None;
        }
        let mut cells = Vec::with_capacity(nu.size());
        for i in 0..lambda.len() {
            for j in (mu.part(i)..lambda.part(i)).rev() {
                cells.push((i, j));
            }
        }
        let rows = (0..lambda.len())
            .map(|i| vec![0; lambda.part(i) - mu.part(i)])
            .collect();
        Some(LrSearch {
            lambda,
            mu,
            nu,
            cells,
            rows,
            counts: vec![0; nu.len() + 1],
        })
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if k == self.cells.len() {
            visit(&self.rows);
            return;
        }
        let (i, j) = self.cells[k];
        let lo = if i > 0 && j >= self.mu.part(i - 1) {
            self.rows[i - 1][j - self.mu.part(i - 1)] + 1
        } else {
            1
        };
        let hi = if j + 1 < self.lambda.part(i) {
            self.rows[i][j + 1 - self.mu.part(i)]
        } else {
            self.nu.len()
        };
        for v in lo..=hi.min(self.nu.len()) {
            if self.counts[v] >= self.nu.part(v - 1) {
                continue;
            }
            if v >= 2 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.rows[i][j - self.mu.part(i)] = v;
            self.run(k + 1, visit);
            self.counts[v] -= 1;
        }
        self.rows[i][j - self.mu.part(i)] = 0;
    }
}

/// `c^λ_{μν}`: the number of LR tableaux of shape `λ/μ` and weight `ν`.
/// Degenerate inputs (wrong sizes, `μ ⊄ λ`) give 0.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let Some(mut search) = LrSearch::new(lambda, mu, nu) else {
        return 0;
    };
    let mut count = 0u64;
    search.run(0, &mut |_| count += 1);
    count
}

/// The LR tableaux counted by [`lr_coefficient`], in search order.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<SkewSSYT> {
    let Some(mut search) = LrSearch::new(lambda, mu, nu) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    search.run(0, &mut |rows| {
        out.push(SkewSSYT {
            outer: lambda.clone(),
            inner: mu.clone(),
            rows: rows.to_vec(),
        })
    });
    out
}

/// Closed form for `c^{(d,e)}_{(x,y),(u,v)}`: one exactly when
/// `max(x+v, y+u) <= d <= x+u`.
pub fn lr_two_row(x: usize, y: usize, u: usize, v: usize, d: usize, e: usize) -> Result<u8> {
    if x < y || u < v || d < e || d + e != x + y + u + v {
        return Err(Error::Domain(format!(
            "two-row LR needs x>=y, u>=v, d>=e, d+e=x+y+u+v; got ({x},{y},{u},{v},{d},{e})"
        )));
    }
    Ok(((x + v).max(y + u) <= d && d <= x + u) as u8)
}

/// `𝒩_{ν η s₁ s₂}`: partitions `κ` with `κ/η` a horizontal strip of size
/// `s₁` and `ν/κ` a horizontal strip of size `s₂`. Negative sizes give 0.
pub fn strip_chain_count(nu: &Partition, eta: &Partition, s1: i64, s2: i64) -> u64 {
    if s1 < 0 || s2 < 0 || !nu.contains(eta) {
        return 0;
    }
    if eta.size() as i64 + s1 + s2 != nu.size() as i64 {
        return 0;
    }
    // max(η_i, ν_{i+1}) <= κ_i <= min(ν_i, η_{i-1})
    let rows = nu.len();
    let bounds: Vec<(usize, usize)> = (0..rows)
        .map(|i| {
            let lo = eta.part(i).max(nu.part(i + 1));
            let hi = if i == 0 {
                nu.part(0)
            } else {
                nu.part(i).min(eta.part(i - 1))
            };
            (lo, hi)
        })
        .collect();
    if bounds.iter().any(|&(lo, hi)| lo > hi) {
        return 0;
    }
    fn count(i: usize, left: usize, bounds: &[(usize, usize)], eta: &Partition) -> u64 {
        if i == bounds.len() {
            return (left == 0) as u64;
        }
        let (lo, hi) = bounds[i];
        let mut total = 0;
        for k in lo..=hi {
            let added = k - eta.part(i);
            if added > left {
                break;
            }
            total += count(i + 1, left - added, bounds, eta);
        }
        total
    }
    count(0, s1 as usize, &bounds, eta)
}

/// `𝒩_{ν η j (b−1−j)} − 𝒩_{ν η (j−1) (b−j)}`, which equals
/// `c^ν_{η,(b−1−j,j)}` by the Jacobi–Trudi expansion of a two-row Schur
/// function.
pub fn lr_via_strip_difference(nu: &Partition, eta: &Partition, b: usize, j: usize) -> Result<i64> {
    if b == 0 || 2 * j > b - 1 {
        return Err(Error::Domain(format!("need 0 <= j <= (b-1)/2, got b={b}, j={j}")));
    }
    if eta.size() + b != nu.size() + 1 {
        return Err(Error::SizeMismatch(format!(
            "|η| = {} but |ν| - b + 1 = {}",
            eta.size(),
            (nu.size() + 1) as i64 - b as i64
        )));
    }
    let (j, b) = (j as i64, b as i64);
    Ok(strip_chain_count(nu, eta, j, b - 1 - j) as i64
        - strip_chain_count(nu, eta, j - 1, b - j) as i64)
}
