use serde::{Deserialize, Serialize};

use super::{hook_g, lr, GBackend, TermCertificate, TermIndex};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rosas::xi;
use crate::tableau::{lr_two_row, lr_via_strip_difference};

/// `λ = (d, e)` against `(a, b, 1^c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoRowNearHook {
    pub d: usize,
    pub e: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl TwoRowNearHook {
    pub fn new(d: usize, e: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        if d < e {
            return Err(Error::Domain(format!("need d >= e, got ({d},{e})")));
        }
        if !(a >= b && b >= 2) {
            return Err(Error::Domain(format!("need a >= b >= 2, got a={a} b={b}")));
        }
        if c < 1 {
            return Err(Error::Domain("need c >= 1".into()));
        }
        if a + b + c != d + e {
            return Err(Error::SizeMismatch(format!("a+b+c = {} but d+e = {}", a + b + c, d + e)));
        }
        Ok(TwoRowNearHook { d, e, a, b, c })
    }

    pub fn n(&self) -> usize {
        self.d + self.e
    }

    pub fn lambda(&self) -> Partition {
        Partition::from_unsorted(vec![self.d, self.e])
    }

    pub fn mu(&self) -> Partition {
        let mut parts = vec![self.a, self.b];
        parts.extend(std::iter::repeat_n(1, self.c));
        Partition::from_unsorted(parts)
    }

    fn check_nu(&self, nu: &Partition) -> Result<()> {
        if nu.size() != self.n() {
            return Err(Error::SizeMismatch(format!("|{nu}| != {}", self.n())));
        }
        Ok(())
    }
}

/// Value of a signed sum with its nonzero summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleSum {
    pub value: i64,
    pub terms: Vec<TermCertificate>,
}

impl TripleSum {
    fn from_terms(terms: Vec<TermCertificate>) -> Self {
        TripleSum { value: terms.iter().map(TermCertificate::contribution).sum(), terms }
    }

    fn negated(terms: Vec<TermCertificate>) -> Self {
        TripleSum { value: -terms.iter().map(TermCertificate::contribution).sum::<i64>(), terms }
    }
}

fn two_row(x: usize, y: usize) -> Partition {
    Partition::from_unsorted(vec![x, y])
}

/// Positive side with the `λ`-coefficient replaced by its two-row indicator:
/// `Σ_{η ⊢ N, j, r} 1[...] c^ν_{η,(b-1-j,j)} g((N-r,r), (a,1^{c+1}), η)`,
/// `N = n - b + 1`.
pub fn triple1(params: &TwoRowNearHook, nu: &Partition, backend: GBackend) -> Result<TripleSum> {
    params.check_nu(nu)?;
    let TwoRowNearHook { d, e, b, c, .. } = *params;
    let big = params.n() - b + 1;
    let mut terms = Vec::new();
    for eta in partitions_of(big, None).filter(|eta| nu.contains(eta)) {
        for j in 0..=(b - 1) / 2 {
            for r in 0..=big / 2 {
                if lr_two_row(big - r, r, b - 1 - j, j, d, e)? == 0 {
                    continue;
                }
                let lr_nu = lr(nu, &eta, &two_row(b - 1 - j, j));
                if lr_nu == 0 {
                    continue;
                }
                let g = hook_g(backend, &two_row(big - r, r), c + 1, &eta)?;
                if g == 0 {
                    continue;
                }
                terms.push(TermCertificate {
                    sign: 1,
                    index: TermIndex::Plus { eta: eta.clone(), j, r },
                    lr: lr_nu,
                    g,
                    lr_lambda: None,
                });
            }
        }
    }
    Ok(TripleSum::from_terms(terms))
}

/// Negative side: `Σ_{δ ⊢ M, i, r} 1[...] c^ν_{(a-i,i),δ} g((M-r,r),
/// (b-1,1^{c+1}), δ)`, `M = n - a`. Certificates carry sign `-1`; the
/// value is reported as a nonnegative number.
pub fn triple2(params: &TwoRowNearHook, nu: &Partition, backend: GBackend) -> Result<TripleSum> {
    params.check_nu(nu)?;
    let TwoRowNearHook { d, e, a, c, .. } = *params;
    let small = params.n() - a;
    let mut terms = Vec::new();
    for delta in partitions_of(small, None).filter(|delta| nu.contains(delta)) {
        for i in 0..=a / 2 {
            for r in 0..=small / 2 {
                if lr_two_row(a - i, i, small - r, r, d, e)? == 0 {
                    continue;
                }
                let lr_nu = lr(nu, &two_row(a - i, i), &delta);
                if lr_nu == 0 {
                    continue;
                }
                let g = hook_g(backend, &two_row(small - r, r), c + 1, &delta)?;
                if g == 0 {
                    continue;
                }
                terms.push(TermCertificate {
                    sign: -1,
                    index: TermIndex::Minus { delta: delta.clone(), i, r },
                    lr: lr_nu,
                    g,
                    lr_lambda: None,
                });
            }
        }
    }
    Ok(TripleSum::negated(terms))
}

fn xi_positive(eta: &Partition, arm: usize, r: usize, c: usize) -> bool {
    xi(eta, arm as i64, r as i64, c as i64).is_ok_and(|v| v > 0)
}

/// `(η, j, r)` with `η ∈ DH(N)`, `c^ν_{η,(b-1-j,j)} > 0` (as a difference of
/// strip-chain counts) and `Ξ^{[a]}_η(r, c) > 0`. Ordered by `η`
/// (reverse-lexicographic), then `j`, then `r`.
pub fn index_set_plus(nu: &Partition, a: usize, b: usize, c: usize) -> Vec<(Partition, usize, usize)> {
    if b < 1 || nu.size() != a + b + c {
        return Vec::new();
    }
    let big = nu.size() - b + 1;
    let mut out = Vec::new();
    for eta in partitions_of(big, None).filter(|eta| eta.is_double_hook() && nu.contains(eta)) {
        for j in 0..=(b - 1) / 2 {
            if lr_via_strip_difference(nu, &eta, b, j).map_or(true, |v| v <= 0) {
                continue;
            }
            for r in 0..=big / 2 {
                if xi_positive(&eta, a, r, c) {
                    out.push((eta.clone(), j, r));
                }
            }
        }
    }
    out
}

/// `(δ, i, r)` with `δ ∈ DH(M)`, `c^ν_{(a-i,i),δ} > 0` and
/// `Ξ^{[b-1]}_δ(r, c) > 0`, `M = n - a`.
pub fn index_set_minus(nu: &Partition, a: usize, b: usize, c: usize) -> Vec<(Partition, usize, usize)> {
    if b < 2 || nu.size() != a + b + c {
        return Vec::new();
    }
    let small = nu.size() - a;
    let mut out = Vec::new();
    for delta in partitions_of(small, None).filter(|delta| delta.is_double_hook() && nu.contains(delta)) {
        for i in 0..=a / 2 {
            if lr_via_strip_difference(nu, &delta, a + 1, i).map_or(true, |v| v <= 0) {
                continue;
            }
            for r in 0..=small / 2 {
                if xi_positive(&delta, b - 1, r, c) {
                    out.push((delta.clone(), i, r));
                }
            }
        }
    }
    out
}

/// [`index_set_plus`] restricted to
/// `max(N-r+j, r+b-1-j) <= d <= N+b-1-r-j`.
pub fn j_plus(d: usize, nu: &Partition, a: usize, b: usize, c: usize) -> Vec<(Partition, usize, usize)> {
    let big = (a + c + 1) as i64;
    let b = b as i64;
    let d = d as i64;
    index_set_plus(nu, a, b as usize, c)
        .into_iter()
        .filter(|(_, j, r)| {
            let (j, r) = (*j as i64, *r as i64);
            (big - r + j).max(r + b - 1 - j) <= d && d <= big + b - 1 - r - j
        })
        .collect()
}

/// [`index_set_minus`] restricted to `max(a-i+r, i+M-r) <= d <= a+M-i-r`.
pub fn j_minus(d: usize, nu: &Partition, a: usize, b: usize, c: usize) -> Vec<(Partition, usize, usize)> {
    let small = (b + c) as i64;
    let a_ = a as i64;
    let d = d as i64;
    index_set_minus(nu, a, b, c)
        .into_iter()
        .filter(|(_, i, r)| {
            let (i, r) = (*i as i64, *r as i64);
            (a_ - i + r).max(i + small - r) <= d && d <= a_ + small - i - r
        })
        .collect()
}

/// Sum over `𝓙⁺_d`; every certificate is strictly positive.
pub fn triple3(params: &TwoRowNearHook, nu: &Partition, backend: GBackend) -> Result<TripleSum> {
    params.check_nu(nu)?;
    let TwoRowNearHook { d, a, b, c, .. } = *params;
    let big = params.n() - b + 1;
    let mut terms = Vec::new();
    for (eta, j, r) in j_plus(d, nu, a, b, c) {
        let lr_nu = lr_via_strip_difference(nu, &eta, b, j)? as u64;
        let g = hook_g(backend, &two_row(big - r, r), c + 1, &eta)?;
        terms.push(TermCertificate { sign: 1, index: TermIndex::Plus { eta, j, r }, lr: lr_nu, g, lr_lambda: None });
    }
    Ok(TripleSum::from_terms(terms))
}

/// Sum over `𝓙⁻_d`; certificates carry sign `-1` and the value is
/// reported as a nonnegative number.
pub fn triple4(params: &TwoRowNearHook, nu: &Partition, backend: GBackend) -> Result<TripleSum> {
    params.check_nu(nu)?;
    let TwoRowNearHook { d, a, b, c, .. } = *params;
    let small = params.n() - a;
    let mut terms = Vec::new();
    for (delta, i, r) in j_minus(d, nu, a, b, c) {
        let lr_nu = lr_via_strip_difference(nu, &delta, a + 1, i)? as u64;
        let g = hook_g(backend, &two_row(small - r, r), c + 1, &delta)?;
        terms.push(TermCertificate { sign: -1, index: TermIndex::Minus { delta, i, r }, lr: lr_nu, g, lr_lambda: None });
    }
    Ok(TripleSum::negated(terms))
}

/// `g((d,e), (a,b,1^c), ν) = triple3 - triple4`.
pub fn g_two_row_near_hook(params: &TwoRowNearHook, nu: &Partition, backend: GBackend) -> Result<i64> {
    Ok(triple3(params, nu, backend)?.value - triple4(params, nu, backend)?.value)
}
