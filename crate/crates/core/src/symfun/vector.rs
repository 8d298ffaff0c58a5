use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::character::kronecker_coefficient_oracle;
use crate::error::{Error, Result};
use crate::partition::{all_partitions, subpartitions, Partition};
use crate::tableau::lr_coefficient;

/// A finite rational combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurVector {
    terms: BTreeMap<Partition, BigRational>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `s_λ`
    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigRational::one());
        SchurVector { terms }
    }

    /// `s_∅ = 1`
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut v = Self::zero();
        for (p, c) in terms {
            v.add_term(p, BigRational::from_integer(c.into()));
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, `None` for zero or mixed vectors.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SchurVector {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }
}

impl Add for &SchurVector {
    type Output = SchurVector;

    fn add(self, rhs: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Add for SchurVector {
    type Output = SchurVector;

    fn add(self, rhs: SchurVector) -> SchurVector {
        &self + &rhs
    }
}

impl Neg for &SchurVector {
    type Output = SchurVector;

    fn neg(self) -> SchurVector {
        SchurVector {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Sub for &SchurVector {
    type Output = SchurVector;

    fn sub(self, rhs: &SchurVector) -> SchurVector {
        self + &(-rhs)
    }
}

impl Sub for SchurVector {
    type Output = SchurVector;

    fn sub(self, rhs: SchurVector) -> SchurVector {
        &self - &rhs
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{} ", mag)?;
            }
            write!(f, "s[{}]", p)?;
        }
        Ok(())
    }
}

/// `s_μ s_ν = Σ_λ c^λ_{μν} s_λ`, extended bilinearly.
pub fn schur_product(f: &SchurVector, g: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero();
    for (mu, a) in f.terms() {
        for (nu, b) in g.terms() {
            let ab = a * b;
            for lambda in all_partitions(mu.size() + nu.size()) {
                if !lambda.contains(mu) || !lambda.contains(nu) {
                    continue;
                }
                let c = lr_coefficient(&lambda, mu, nu);
                if c > 0 {
                    out.add_term(lambda, &ab * BigRational::from_integer(c.into()));
                }
            }
        }
    }
    out
}

/// `Δ s_λ = Σ c^λ_{μν} s_μ ⊗ s_ν`, listing the nonzero `(μ, ν, c)` over all
/// bidegrees, `|μ|` ascending.
pub fn coproduct(lambda: &Partition) -> Vec<(Partition, Partition, u64)> {
    let n = lambda.size();
    let mut out = Vec::new();
    for mu in subpartitions(lambda) {
        for nu in all_partitions(n - mu.size()) {
            if !lambda.contains(&nu) {
                continue;
            }
            let c = lr_coefficient(lambda, &mu, &nu);
            if c > 0 {
                out.push((mu.clone(), nu, c));
            }
        }
    }
    out
}

/// Hall inner product; the Schur basis is orthonormal.
pub fn hall_inner(f: &SchurVector, g: &SchurVector) -> BigRational {
    f.terms()
        .filter_map(|(p, a)| g.terms.get(p).map(|b| a * b))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// Internal product `s_λ ∗ s_μ = Σ_ν g_{λμν} s_ν`, extended bilinearly.
/// Both arguments must be homogeneous of the same degree.
pub fn kronecker_product(f: &SchurVector, g: &SchurVector) -> Result<SchurVector> {
    if f.is_zero() || g.is_zero() {
        return Ok(SchurVector::zero());
    }
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::Domain("Kronecker product needs homogeneous arguments".into()));
    };
    if df != dg {
        return Err(Error::SizeMismatch(format!(
            "Kronecker product of degrees {df} and {dg}"
        )));
    }
    let shapes = all_partitions(df);
    let mut out = SchurVector::zero();
    for (lambda, a) in f.terms() {
        for (mu, b) in g.terms() {
            let ab = a * b;
            for nu in &shapes {
                let c = kronecker_coefficient_oracle(lambda, mu, nu)?;
                if c > 0 {
                    out.add_term(nu.clone(), &ab * BigRational::from_integer(c.into()));
                }
            }
        }
    }
    Ok(out)
}
