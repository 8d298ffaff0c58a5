//! Colored words, Haiman's mixed insertion and Blasiak's rule for
//! Kronecker coefficients indexed by a hook.
//!
//! A colored letter is a positive integer that is either plain or barred.
//! Letters are totally ordered by `1' < 1 < 2' < 2 < ...`; in text a bar is
//! written as a trailing apostrophe.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::SkewSSYT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, bool)", into = "(usize, bool)")]
pub struct ColoredLetter {
    pub value: usize,
    pub barred: bool,
}

impl ColoredLetter {
    pub fn plain(value: usize) -> Self {
        ColoredLetter { value, barred: false }
    }

    pub fn barred(value: usize) -> Self {
        ColoredLetter { value, barred: true }
    }

    fn key(&self) -> (usize, bool) {
        (self.value, !self.barred)
    }
}

impl Ord for ColoredLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ColoredLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<(usize, bool)> for ColoredLetter {
    fn from((value, barred): (usize, bool)) -> Self {
        ColoredLetter { value, barred }
    }
}

impl From<ColoredLetter> for (usize, bool) {
    fn from(x: ColoredLetter) -> Self {
        (x.value, x.barred)
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "'" } else { "" })
    }
}

impl FromStr for ColoredLetter {
    type Err = Error;

    /// Accepts `3`, `3'`, and `3` followed by a combining overline or macron.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = &s[digits.len()..];
        let barred = match rest {
            "" => false,
            "'" | "\u{0305}" | "\u{0304}" => true,
            _ => return Err(Error::Parse(format!("bad colored letter {s:?}"))),
        };
        let value: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad colored letter {s:?}")))?;
        if value == 0 {
            return Err(Error::Parse("colored letters start at 1".into()));
        }
        Ok(ColoredLetter { value, barred })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredWord(pub Vec<ColoredLetter>);

impl ColoredWord {
    pub fn letters(&self) -> &[ColoredLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Occurrences of `i` and `i'` together, for `i = 1..=max`.
    pub fn content(&self) -> Vec<usize> {
        content_of(self.0.iter().map(|x| x.value))
    }

    /// Total color: the number of barred letters.
    pub fn tc(&self) -> usize {
        self.0.iter().filter(|x| x.barred).count()
    }

    pub fn blft(&self) -> Vec<usize> {
        blft(self)
    }
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for ColoredWord {
    type Err = Error;

    /// Letters separated by whitespace or commas: `"2' 1 4' 4"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(ColoredLetter::from_str)
            .collect::<Result<Vec<_>>>()
            .map(ColoredWord)
    }
}

fn content_of(values: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut counts = Vec::new();
    for v in values {
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
    }
    counts
}

/// Barred letters moved to the front in their original order, then all
/// bars erased.
pub fn blft(w: &ColoredWord) -> Vec<usize> {
    let barred = w.0.iter().filter(|x| x.barred).map(|x| x.value);
    let plain = w.0.iter().filter(|x| !x.barred).map(|x| x.value);
    barred.chain(plain).collect()
}

/// Every suffix has partition content (read right to left, each `i+1` is
/// preceded by enough `i`s).
pub fn is_suffix_yamanouchi(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word.iter().rev() {
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

/// Suffix-content condition on the colored word, bars ignored.
pub fn is_colored_yamanouchi(w: &ColoredWord) -> bool {
    let values: Vec<usize> = w.0.iter().map(|x| x.value).collect();
    is_suffix_yamanouchi(&values)
}

/// Row insertion into the rows of a tableau, returning the row and column
/// where the insertion stopped.
fn row_insert_from<T: Ord + Copy>(rows: &mut Vec<Vec<T>>, mut x: T, mut i: usize) -> (usize, usize) {
    loop {
        if i == rows.len() {
            rows.push(vec![x]);
            return (i, 0);
        }
        match rows[i].iter().position(|y| *y > x) {
            None => {
                rows[i].push(x);
                return (i, rows[i].len() - 1);
            }
            Some(j) => {
                x = std::mem::replace(&mut rows[i][j], x);
                i += 1;
            }
        }
    }
}

/// Schensted row insertion `T <- x` on a straight-shape tableau.
pub fn schensted_insert(t: &SkewSSYT, x: usize) -> Result<SkewSSYT> {
    if !t.inner().is_empty() {
        return Err(Error::Domain("row insertion needs a straight shape".into()));
    }
    let mut rows = t.rows().to_vec();
    row_insert_from(&mut rows, x, 0);
    SkewSSYT::straight(rows)
}

/// A tableau of partition shape filled with colored letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredTableau {
    rows: Vec<Vec<ColoredLetter>>,
}

impl ColoredTableau {
    pub fn empty() -> Self {
        ColoredTableau { rows: Vec::new() }
    }

    /// Checks partition shape and the four colored conditions: plain letters
    /// weakly increase along rows and strictly down columns, barred letters
    /// strictly increase along rows and weakly down columns.
    pub fn new(rows: Vec<Vec<ColoredLetter>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(shape)?;
        if shape.len() != rows.len() {
            return Err(Error::InvalidPartition("empty row in colored tableau".into()));
        }
        if rows.iter().flatten().any(|x| x.value == 0) {
            return Err(Error::Domain("colored letters start at 1".into()));
        }
        let t = ColoredTableau { rows };
        if !t.satisfies_colored_conditions() {
            return Err(Error::Domain(format!("not a colored tableau:\n{t}")));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<ColoredLetter>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<ColoredLetter> {
        self.rows.get(i).and_then(|r| r.get(j)).copied()
    }

    /// The lowest cell of the first column.
    pub fn south_west(&self) -> Option<ColoredLetter> {
        self.rows.last().map(|r| r[0])
    }

    pub fn content(&self) -> Vec<usize> {
        content_of(self.rows.iter().flatten().map(|x| x.value))
    }

    pub fn total_color(&self) -> usize {
        self.rows.iter().flatten().filter(|x| x.barred).count()
    }

    /// Rows right to left, top row first.
    pub fn reading_word(&self) -> Vec<ColoredLetter> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    fn pairs(&self) -> impl Iterator<Item = (ColoredLetter, ColoredLetter, bool)> + '_ {
        let horizontal = self
            .rows
            .iter()
            .flat_map(|r| r.windows(2).map(|w| (w[0], w[1], true)));
        let vertical = self.rows.windows(2).flat_map(|rr| {
            rr[1].iter().zip(&rr[0]).map(|(&below, &above)| (above, below, false))
        });
        horizontal.chain(vertical)
    }

    pub fn satisfies_colored_conditions(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| {
            let plain: Vec<_> = r.iter().filter(|x| !x.barred).collect();
            let barred: Vec<_> = r.iter().filter(|x| x.barred).collect();
            plain.windows(2).all(|w| w[0] <= w[1]) && barred.windows(2).all(|w| w[0] < w[1])
        });
        let width = self.rows.first().map_or(0, Vec::len);
        let cols_ok = (0..width).all(|j| {
            let col: Vec<ColoredLetter> = self.rows.iter().filter_map(|r| r.get(j).copied()).collect();
            let plain: Vec<_> = col.iter().filter(|x| !x.barred).collect();
            let barred: Vec<_> = col.iter().filter(|x| x.barred).collect();
            plain.windows(2).all(|w| w[0] < w[1]) && barred.windows(2).all(|w| w[0] <= w[1])
        });
        rows_ok && cols_ok
    }

    /// Rows and columns weakly increase in the total order.
    pub fn is_globally_weak(&self) -> bool {
        self.pairs().all(|(x, y, _)| x <= y)
    }

    /// Haiman's mixed insertion of a single letter.
    pub fn mixed_insert(&self, x: ColoredLetter) -> ColoredTableau {
        let mut t = self.clone();
        t.insert_in_place(x);
        t
    }

    fn insert_in_place(&mut self, x: ColoredLetter) {
        let mut pending = x;
        // (is_row, index)
        let mut target = (!x.barred, 0usize);
        loop {
            let bumped = if target.0 {
                self.bump_row(target.1, pending)
            } else {
                self.bump_column(target.1, pending)
            };
            match bumped {
                None => return,
                Some((y, i, j)) => {
                    pending = y;
                    target = if y.barred { (false, j + 1) } else { (true, i + 1) };
                }
            }
        }
    }

    /// Places `x` in row `i`, returning the displaced letter and its cell.
    fn bump_row(&mut self, i: usize, x: ColoredLetter) -> Option<(ColoredLetter, usize, usize)> {
        if i == self.rows.len() {
            self.rows.push(vec![x]);
            return None;
        }
        match self.rows[i].iter().position(|y| *y > x) {
            None => {
                self.rows[i].push(x);
                None
            }
            Some(j) => Some((std::mem::replace(&mut self.rows[i][j], x), i, j)),
        }
    }

    /// Places `x` in column `j`, returning the displaced letter and its cell.
    fn bump_column(&mut self, j: usize, x: ColoredLetter) -> Option<(ColoredLetter, usize, usize)> {
        let height = self.rows.iter().take_while(|r| r.len() > j).count();
        match (0..height).find(|&i| self.rows[i][j] > x) {
            None => {
                if height == self.rows.len() {
                    self.rows.push(vec![x]);
                } else {
                    debug_assert_eq!(self.rows[height].len(), j);
                    self.rows[height].push(x);
                }
                None
            }
            Some(i) => Some((std::mem::replace(&mut self.rows[i][j], x), i, j)),
        }
    }

    /// One line per row, letters separated by spaces, bars as apostrophes.
    pub fn to_ascii(&self) -> String {
        self.to_string()
    }

    pub fn to_ytableau(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        if x.barred {
                            format!("\\bar{}", x.value)
                        } else {
                            x.value.to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect();
        format!("\\begin{{ytableau}}\n{}\n\\end{{ytableau}}", rows.join(" \\\\\n"))
    }
}

impl Ord for ColoredTableau {
    /// Shape first, then the letters in row-major order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.rows.iter().flatten().cmp(other.rows.iter().flatten()))
    }
}

impl PartialOrd for ColoredTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColoredTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("(empty)");
        }
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{:<width$}", x.to_string())).collect();
            f.write_str(cells.join(" ").trim_end())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    cells: Vec<ColoredLetter>,
}

impl Serialize for ColoredTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape().into_parts(),
            cells: self.rows.iter().flatten().copied().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ColoredTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(deserializer)?;
        if raw.shape.iter().sum::<usize>() != raw.cells.len() {
            return Err(serde::de::Error::custom("shape and cell count disagree"));
        }
        let mut cells = raw.cells.into_iter();
        let rows = raw
            .shape
            .iter()
            .map(|&len| cells.by_ref().take(len).collect())
            .collect();
        ColoredTableau::new(rows).map_err(serde::de::Error::custom)
    }
}

pub fn mixed_insert(t: &ColoredTableau, x: ColoredLetter) -> ColoredTableau {
    t.mixed_insert(x)
}

/// `P(w)`: the letters of `w` mixed-inserted left to right into the empty
/// tableau.
pub fn mixed_insertion_tableau(w: &ColoredWord) -> ColoredTableau {
    let mut t = ColoredTableau::empty();
    for &x in w.letters() {
        t.insert_in_place(x);
    }
    t
}

/// The tableaux `P(w_1), P(w_1 w_2), ..., P(w)`.
pub fn mixed_insertion_trace(w: &ColoredWord) -> Vec<ColoredTableau> {
    let mut t = ColoredTableau::empty();
    w.letters()
        .iter()
        .map(|&x| {
            t.insert_in_place(x);
            t.clone()
        })
        .collect()
}

/// Words of content `lambda` whose every suffix has partition content.
pub fn suffix_yamanouchi_words(lambda: &Partition) -> Vec<Vec<usize>> {
    // built back to front: a letter i+1 may be placed once i+1 is still
    // below i in the running count
    fn rec(lambda: &[usize], counts: &mut Vec<usize>, rev: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rev.len() == lambda.iter().sum::<usize>() {
            out.push(rev.iter().rev().copied().collect());
            return;
        }
        for i in 0..lambda.len() {
            if counts[i] < lambda[i] && (i == 0 || counts[i] < counts[i - 1]) {
                counts[i] += 1;
                rev.push(i + 1);
                rec(lambda, counts, rev, out);
                rev.pop();
                counts[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), &mut vec![0; lambda.len()], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Subsets of size `k` of `0..n` as bitmasks, in increasing order.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// Every colored word `w` with content `lambda`, `tc(w) = d` and
/// `blft(w)` suffix-Yamanouchi. Such a word is a shuffle of a barred
/// prefix `y[..d]` and a plain suffix `y[d..]` of one suffix-Yamanouchi
/// word `y`, and distinct choices give distinct words.
pub fn cyt_words(lambda: &Partition, d: usize) -> Vec<ColoredWord> {
    let n = lambda.size();
    if d > n {
        return Vec::new();
    }
    let masks = subsets(n, d);
    let mut words = Vec::new();
    for y in suffix_yamanouchi_words(lambda) {
        for &mask in &masks {
            words.push(shuffle(&y, d, mask));
        }
    }
    words
}

fn shuffle(y: &[usize], d: usize, mask: u64) -> ColoredWord {
    let (mut b, mut u) = (0, d);
    let letters = (0..y.len())
        .map(|pos| {
            if mask >> pos & 1 == 1 {
                b += 1;
                ColoredLetter::barred(y[b - 1])
            } else {
                u += 1;
                ColoredLetter::plain(y[u - 1])
            }
        })
        .collect();
    ColoredWord(letters)
}

/// Blasiak tableaux for content `lambda` and total color `d`, grouped by
/// shape: distinct `P(w)` over the words of [`cyt_words`] whose
/// south-west cell is unbarred.
pub fn blasiak_tableaux_by_shape(lambda: &Partition, d: usize) -> BTreeMap<Partition, BTreeSet<ColoredTableau>> {
    let n = lambda.size();
    if n == 0 || d >= n {
        return BTreeMap::new();
    }
    let masks = subsets(n, d);
    let found: BTreeSet<ColoredTableau> = suffix_yamanouchi_words(lambda)
        .par_iter()
        .map(|y| {
            masks
                .iter()
                .map(|&mask| mixed_insertion_tableau(&shuffle(y, d, mask)))
                .filter(|t| t.south_west().is_some_and(|x| !x.barred))
                .collect::<BTreeSet<_>>()
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut grouped: BTreeMap<Partition, BTreeSet<ColoredTableau>> = BTreeMap::new();
    for t in found {
        grouped.entry(t.shape()).or_default().insert(t);
    }
    grouped
}

/// The Blasiak tableaux of shape `nu`, sorted and without repeats. Their
/// number is `g(lambda, (n-d, 1^d), nu)`.
pub fn enumerate_blasiak(lambda: &Partition, d: usize, nu: &Partition) -> Result<Vec<ColoredTableau>> {
    check_blasiak_args(lambda, d, nu)?;
    Ok(blasiak_tableaux_by_shape(lambda, d)
        .remove(nu)
        .map(|s| s.into_iter().collect())
        .unwrap_or_default())
}

pub fn count_blasiak(lambda: &Partition, d: usize, nu: &Partition) -> Result<u64> {
    Ok(enumerate_blasiak(lambda, d, nu)?.len() as u64)
}

fn check_blasiak_args(lambda: &Partition, d: usize, nu: &Partition) -> Result<()> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{nu}|")));
    }
    if d >= lambda.size() {
        return Err(Error::Domain(format!("total color {d} must be below {}", lambda.size())));
    }
    Ok(())
}
