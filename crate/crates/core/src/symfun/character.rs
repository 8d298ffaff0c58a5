//! Symmetric group characters by the Murnaghan–Nakayama rule and the
//! character-formula Kronecker coefficient.
//!
//! Border strips are removed on the beta-set (abacus) of `λ`: a rim hook of
//! length `k` corresponds to sliding one bead from position `b` down to the
//! empty position `b - k`, with sign `(-1)^{beads strictly between}`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{all_partitions, Partition};

/// Default bound on the degree of cached characters.
pub const DEFAULT_CACHE_DEGREE: usize = 14;

/// A conjugacy class of `S_n`, with the order `z_μ = ∏ i^{m_i} m_i!` of the
/// centralizer of any of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType {
    pub partition: Partition,
    pub z: BigUint,
}

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        let mut z = BigUint::one();
        let mut i = 0;
        let parts = partition.parts();
        while i < parts.len() {
            let part = parts[i];
            let mult = parts[i..].iter().take_while(|&&x| x == part).count();
            for k in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(k);
            }
            i += mult;
        }
        CycleType { partition, z }
    }

    pub fn degree(&self) -> usize {
        self.partition.size()
    }

    /// `n! / z_μ`
    pub fn class_size(&self) -> BigUint {
        factorial(self.degree()) / &self.z
    }

    /// `(-1)^{n - ℓ(μ)}`
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.partition.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Memo table for `χ^λ(μ)`, keyed on `(λ, μ)`. Entries with `|λ|` above the
/// degree bound are computed but not stored.
pub struct CharacterCache {
    max_degree: usize,
    values: RwLock<HashMap<Partition, HashMap<Partition, i64>>>,
    tables: RwLock<HashMap<usize, Arc<CharacterTable>>>,
}

/// On-disk form of one degree of the cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub n: usize,
    pub entries: Vec<(Partition, Partition, i64)>,
}

impl CharacterCache {
    pub fn new(max_degree: usize) -> Self {
        CharacterCache {
            max_degree,
            values: RwLock::new(HashMap::new()),
            tables: RwLock::new(HashMap::new()),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `χ^λ(μ)`.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch(format!(
                "χ^{lambda} evaluated on class {mu}: degrees {} and {}",
                lambda.size(),
                mu.size()
            )));
        }
        Ok(self.murnaghan_nakayama(lambda, mu))
    }

    fn lookup(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let values = self.values.read().expect("character cache poisoned");
        values.get(lambda).and_then(|row| row.get(mu)).copied()
    }

    fn store(&self, lambda: &Partition, mu: &Partition, value: i64) {
        if lambda.size() > self.max_degree {
            return;
        }
        let mut values = self.values.write().expect("character cache poisoned");
        values
            .entry(lambda.clone())
            .or_default()
            .insert(mu.clone(), value);
    }

    fn murnaghan_nakayama(&self, lambda: &Partition, mu: &Partition) -> i64 {
        if mu.is_empty() {
            return lambda.is_empty() as i64;
        }
        if let Some(v) = self.lookup(lambda, mu) {
            return v;
        }
        let k = mu.part(0);
        let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
        let len = lambda.len();
        let betas: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
        let mut total = 0i64;
        for (idx, &b) in betas.iter().enumerate() {
            if b < k || betas.contains(&(b - k)) {
                continue;
            }
            let between = betas.iter().filter(|&&x| x > b - k && x < b).count();
            let mut moved = betas.clone();
            moved[idx] = b - k;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let parts: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(i, &beta)| beta - (len - 1 - i))
                .collect();
            let smaller = Partition::new(parts).expect("rim hook removal leaves a partition");
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.murnaghan_nakayama(&smaller, &rest);
        }
        self.store(lambda, mu, total);
        total
    }

    /// The full character table of `S_n`, built once per degree.
    pub fn table(&self, n: usize) -> Arc<CharacterTable> {
        if let Some(t) = self.tables.read().expect("table cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(CharacterTable::build(self, n));
        if n <= self.max_degree {
            self.tables
                .write()
                .expect("table cache poisoned")
                .entry(n)
                .or_insert_with(|| Arc::clone(&table));
        }
        table
    }

    /// Serializes every character of degree `n` (computing missing ones).
    pub fn export(&self, n: usize) -> CacheFile {
        let table = self.table(n);
        let mut entries = Vec::with_capacity(table.irreps.len() * table.classes.len());
        for (i, lambda) in table.irreps.iter().enumerate() {
            for (k, class) in table.classes.iter().enumerate() {
                entries.push((lambda.clone(), class.partition.clone(), table.values[i][k]));
            }
        }
        CacheFile { n, entries }
    }

    /// Loads entries from a cache file. Entries whose degree does not match
    /// the file's `n` are rejected.
    pub fn import(&self, file: &CacheFile) -> Result<usize> {
        let mut loaded = 0;
        for (lambda, mu, value) in &file.entries {
            if lambda.size() != file.n || mu.size() != file.n {
                return Err(Error::SizeMismatch(format!(
                    "cache entry ({lambda}, {mu}) is not of degree {}",
                    file.n
                )));
            }
            self.store(lambda, mu, *value);
            loaded += 1;
        }
        Ok(loaded)
    }
}

/// Character values of `S_n` with irreducibles and classes both listed in
/// reverse-lexicographic order.
pub struct CharacterTable {
    pub n: usize,
    pub irreps: Vec<Partition>,
    pub classes: Vec<CycleType>,
    pub values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    fn build(cache: &CharacterCache, n: usize) -> Self {
        let irreps = all_partitions(n);
        let classes: Vec<CycleType> = irreps.iter().cloned().map(CycleType::new).collect();
        let values = irreps
            .iter()
            .map(|l| classes.iter().map(|c| cache.murnaghan_nakayama(l, &c.partition)).collect())
            .collect();
        let index = irreps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable {
            n,
            irreps,
            classes,
            values,
            index,
        }
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[i64]> {
        self.index.get(lambda).map(|&i| self.values[i].as_slice())
    }
}

static GLOBAL: OnceLock<CharacterCache> = OnceLock::new();

/// Process-wide cache used by the free functions of this module.
pub fn global_cache() -> &'static CharacterCache {
    GLOBAL.get_or_init(|| CharacterCache::new(DEFAULT_CACHE_DEGREE))
}

/// `χ^λ(μ)` through the global cache.
pub fn character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    global_cache().character(lambda, &mu.partition)
}

/// `g_{λμν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`, summed over cycle types.
pub fn kronecker_coefficient_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "g_{{{lambda}; {mu}; {nu}}} needs partitions of one size"
        )));
    }
    let table = global_cache().table(n);
    let rows = [lambda, mu, nu].map(|p| table.row(p).expect("partition of n is in the table"));

    // Σ_ρ (n!/z_ρ) χχχ, in i128 while it fits, otherwise exactly in BigInt.
    let mut small: Option<i128> = Some(0);
    let mut big = BigInt::zero();
    for (k, class) in table.classes.iter().enumerate() {
        let chi = rows[0][k] as i128 * rows[1][k] as i128;
        let size = class.class_size();
        if let Some(acc) = small {
            let term = size
                .to_i128()
                .and_then(|s| chi.checked_mul(rows[2][k] as i128)?.checked_mul(s));
            match term.and_then(|t| acc.checked_add(t)) {
                Some(v) => {
                    small = Some(v);
                    continue;
                }
                None => {
                    big = BigInt::from(acc);
                    small = None;
                }
            }
        }
        big += BigInt::from(chi) * BigInt::from(rows[2][k]) * BigInt::from(size);
    }
    let total = match small {
        Some(v) => BigInt::from(v),
        None => big,
    };
    let order = BigInt::from(factorial(n));
    if !(&total % &order).is_zero() || total.is_negative() {
        return Err(Error::Domain(format!(
            "character sum {total} is not a nonnegative multiple of {n}!"
        )));
    }
    Ok((total / order).to_u64().expect("Kronecker coefficient fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn centralizer_orders() {
        assert_eq!(CycleType::new(p(&[2, 2, 1])).z, BigUint::from(8u32));
        assert_eq!(CycleType::new(p(&[1, 1, 1])).z, BigUint::from(6u32));
        for n in 0..=8 {
            let total: BigUint = all_partitions(n)
                .into_iter()
                .map(|m| CycleType::new(m).class_size())
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=7 {
            for mu in all_partitions(n) {
                let c = CycleType::new(mu);
                assert_eq!(character(&p(&[n]), &c).unwrap(), 1);
                assert_eq!(character(&Partition::column(n), &c).unwrap(), c.sign());
            }
        }
    }

    #[test]
    fn known_values() {
        // S_4 standard representation
        let chi = |l: &[usize], m: &[usize]| character(&p(l), &CycleType::new(p(m))).unwrap();
        assert_eq!(chi(&[3, 1], &[1, 1, 1, 1]), 3);
        assert_eq!(chi(&[3, 1], &[2, 1, 1]), 1);
        assert_eq!(chi(&[3, 1], &[2, 2]), -1);
        assert_eq!(chi(&[3, 1], &[3, 1]), 0);
        assert_eq!(chi(&[3, 1], &[4]), -1);
        assert_eq!(chi(&[2, 2], &[2, 2]), 2);
        assert_eq!(chi(&[3, 2, 1], &[1; 6]), 16);
        assert!(character(&p(&[3, 1]), &CycleType::new(p(&[2, 1]))).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=8 {
            let table = global_cache().table(n);
            for row in &table.values {
                let sum: BigUint = row
                    .iter()
                    .zip(&table.classes)
                    .map(|(&v, c)| BigUint::from((v * v) as u64) * c.class_size())
                    .sum();
                assert_eq!(sum, factorial(n));
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let g = |a: &[usize], b: &[usize], c: &[usize]| {
            kronecker_coefficient_oracle(&p(a), &p(b), &p(c)).unwrap()
        };
        assert_eq!(g(&[3, 2, 1], &[2, 2, 1, 1], &[4, 1, 1]), 2);
        assert_eq!(g(&[4, 2], &[4, 2], &[4, 2]), 2);
        assert_eq!(g(&[5, 2, 1], &[4, 1, 1, 1, 1], &[4, 2, 1, 1]), 5);
        assert_eq!(g(&[5], &[3, 2], &[3, 2]), 1);
        assert_eq!(g(&[5], &[3, 2], &[2, 2, 1]), 0);
        assert!(kronecker_coefficient_oracle(&p(&[2]), &p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let cache = CharacterCache::new(6);
        let file = cache.export(4);
        assert_eq!(file.entries.len(), 25);
        let json = serde_json::to_string(&file).unwrap();
        let back: CacheFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, file);
        let fresh = CharacterCache::new(6);
        assert_eq!(fresh.import(&back).unwrap(), 25);
        assert_eq!(fresh.lookup(&p(&[3, 1]), &p(&[2, 2])), Some(-1));
        let bad = CacheFile {
            n: 3,
            entries: vec![(p(&[2]), p(&[2]), 1)],
        };
        assert!(fresh.import(&bad).is_err());
    }
}
