//! Closed form for `g((N-r, r), (a, 1^{c+1}), η)`: a two-row partition
//! against a hook, written as a piecewise function `Ξ` of the third index.

#![allow(clippy::int_plus_one)]

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

fn ind(b: bool) -> i64 {
    b as i64
}

/// Four indicator products, the last one subtracted.
pub fn phi(n3: i64, n4: i64, d1: i64, d2: i64, e: i64, r: i64) -> i64 {
    let base = d1 + 2 * d2;
    let open = base < e && e < base + 3;
    ind(n3 <= r - d2 - 1 && r - d2 - 1 <= n4) * ind(open)
        + ind(n3 <= r - d2 && r - d2 <= n4) * ind(base <= e && e <= base + 3)
        + ind(n3 <= r - d2 + 1 && r - d2 + 1 <= n4) * ind(open)
        - ind(n3 + d2 + d1 == r) * ind(base + 1 <= e && e <= base + 2)
}

/// Two indicator products. The midpoint condition `r <= (c+t+2)/2 <= N-r`
/// is tested on `2r <= c+t+2 <= 2(N-r)` so no rounding is involved.
pub fn psi(c: i64, r: i64, t: i64, n: i64) -> i64 {
    ind(r - 1 <= c + 1 && c + 1 <= n - r) * ind(c + 1 == t)
        + ind(2 * r <= c + t + 2 && c + t + 2 <= 2 * (n - r)) * ind((c + 1 - t).abs() <= 1)
}

/// The quantities `n3, n4, d1, d2` of a partition with at least two rows,
/// together with the branch flag `η1 - η2 > v(η)` that also selects `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleHookData {
    pub n3: i64,
    pub n4: i64,
    pub d1: i64,
    pub d2: i64,
    pub wide: bool,
}

impl DoubleHookData {
    pub fn of(eta: &Partition) -> Self {
        if eta.len() <= 1 {
            return DoubleHookData {
                n3: 0,
                n4: eta.part(0) as i64,
                d1: 0,
                d2: 0,
                wide: false,
            };
        }
        let (e1, e2) = (eta.part(0) as i64, eta.part(1) as i64);
        let u = eta.tail_twos() as i64;
        let v = eta.tail_ones() as i64;
        if e1 - e2 <= v {
            DoubleHookData { n3: e2, n4: e1, d1: v, d2: u, wide: false }
        } else {
            DoubleHookData { n3: u + 2, n4: u + v + 2, d1: e1 - e2, d2: e2 - 2, wide: true }
        }
    }

    /// `e^{[a]}(c)`
    pub fn e(&self, a: i64, c: i64) -> i64 {
        if self.wide {
            a - 1
        } else {
            c + 1
        }
    }
}

pub fn n3(eta: &Partition) -> i64 {
    DoubleHookData::of(eta).n3
}

pub fn n4(eta: &Partition) -> i64 {
    DoubleHookData::of(eta).n4
}

pub fn d1(eta: &Partition) -> i64 {
    DoubleHookData::of(eta).d1
}

pub fn d2(eta: &Partition) -> i64 {
    DoubleHookData::of(eta).d2
}

pub fn e_value(eta: &Partition, a: i64, c: i64) -> i64 {
    DoubleHookData::of(eta).e(a, c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XiCase {
    RZero,
    RowN,
    #[serde(rename = "column-1N")]
    Column1N,
    Hook,
    DoubleHook,
    Zero,
}

impl XiCase {
    pub fn tag(&self) -> &'static str {
        match self {
            XiCase::RZero => "r-zero",
            XiCase::RowN => "row-N",
            XiCase::Column1N => "column-1N",
            XiCase::Hook => "hook",
            XiCase::DoubleHook => "double-hook",
            XiCase::Zero => "zero",
        }
    }
}

impl fmt::Display for XiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Arguments handed to the inner function of the branch that fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fn", rename_all = "lowercase")]
pub enum XiInner {
    Phi { n3: i64, n4: i64, d1: i64, d2: i64, e: i64, r: i64 },
    Psi { c: i64, r: i64, t: i64, n: i64 },
}

impl fmt::Display for XiInner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XiInner::Phi { n3, n4, d1, d2, e, r } => write!(f, "Phi({n3},{n4},{d1},{d2};{e},{r})"),
            XiInner::Psi { c, r, t, n } => write!(f, "Psi({c},{r},{t},{n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiCaseReport {
    pub case: XiCase,
    pub value: u64,
    pub inner: Option<XiInner>,
}

impl fmt::Display for XiCaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.case, self.value)?;
        if let Some(inner) = &self.inner {
            write!(f, " via {inner}")?;
        }
        Ok(())
    }
}

/// Which text of `Ξ` to evaluate. The printed formula disagrees with the
/// character values in two places:
///
/// - the `η = (1^N)` branch tests `η = (N-r, r)ᵗ`, which never holds for
///   `r >= 1`; the true value is `1[(a, 1^{c+1}) = (N-r, r)ᵗ]`;
/// - at `r = 1`, `η = (a, 1^{c+1})` both indicators of `Ψ` fire and give 2,
///   while `g((N-1, 1), μ, μ)` is one less than the number of distinct parts
///   of `μ`, i.e. 1. The first indicator only counts for `r >= 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum XiReading {
    #[default]
    Corrected,
    AsPrinted,
}

/// `Ξ^{[a]}_η(r, c)` with `N = |η|`, branches tried top to bottom.
pub fn xi(eta: &Partition, a: i64, r: i64, c: i64) -> Result<u64> {
    Ok(xi_report(eta, a, r, c)?.value)
}

pub fn xi_report(eta: &Partition, a: i64, r: i64, c: i64) -> Result<XiCaseReport> {
    xi_report_with(eta, a, r, c, XiReading::default())
}

pub fn xi_report_with(eta: &Partition, a: i64, r: i64, c: i64, reading: XiReading) -> Result<XiCaseReport> {
    let n = eta.size() as i64;
    if r < 0 || r > n / 2 {
        return Err(Error::Domain(format!("r = {r} outside 0..={}", n / 2)));
    }
    let report = |case, value: i64, inner| {
        debug_assert!(value >= 0, "negative Xi value {value} in {case:?} for {eta}");
        XiCaseReport { case, value: value.max(0) as u64, inner }
    };
    if r == 0 {
        let hook = a >= 1 && c >= -1 && *eta == Partition::hook(a as usize, (c + 1) as usize);
        return Ok(report(XiCase::RZero, ind(hook), None));
    }
    if eta.len() == 1 {
        return Ok(report(XiCase::RowN, ind(c == 0 && r == 1), None));
    }
    if eta.part(0) == 1 {
        let value = match reading {
            XiReading::Corrected => ind(r == 1 && a == 2 && c == n - 3),
            XiReading::AsPrinted => ind(*eta == Partition::two_row((n - r) as usize, r as usize)?.transpose()),
        };
        return Ok(report(XiCase::Column1N, value, None));
    }
    if let Some((h, t)) = eta.as_hook() {
        if h >= 2 && t >= 1 {
            let t = t as i64;
            let mut value = psi(c, r, t, n);
            if reading == XiReading::Corrected && r == 1 && c + 1 == t && c + 1 <= n - r {
                value -= 1;
            }
            return Ok(report(XiCase::Hook, value, Some(XiInner::Psi { c, r, t, n })));
        }
    }
    if eta.is_double_hook() && eta.len() >= 2 && eta.part(1) >= 2 {
        let data = DoubleHookData::of(eta);
        let e = data.e(a, c);
        let value = phi(data.n3, data.n4, data.d1, data.d2, e, r);
        return Ok(report(
            XiCase::DoubleHook,
            value,
            Some(XiInner::Phi { n3: data.n3, n4: data.n4, d1: data.d1, d2: data.d2, e, r }),
        ));
    }
    Ok(report(XiCase::Zero, 0, None))
}

/// `g((N-r, r), (a, 1^{c+1}), ν)` evaluated by `Ξ^{[a]}_ν(r, c)`.
pub fn rosas_kronecker(n: usize, r: usize, a: usize, c: usize, nu: &Partition) -> Result<u64> {
    Ok(rosas_report(n, r, a, c, nu)?.value)
}

pub fn rosas_report(n: usize, r: usize, a: usize, c: usize, nu: &Partition) -> Result<XiCaseReport> {
    if nu.size() != n {
        return Err(Error::SizeMismatch(format!("|{nu}| != {n}")));
    }
    if a == 0 || a + c + 1 != n {
        return Err(Error::Domain(format!("hook ({a},1^{}) is not a hook of {n}", c + 1)));
    }
    if r > n / 2 {
        return Err(Error::Domain(format!("r = {r} exceeds {}", n / 2)));
    }
    xi_report(nu, a as i64, r as i64, c as i64)
}

/// Recognises `(N-r, r)` and `(a, 1^{c+1})` among the three indices and
/// evaluates the closed form, or returns `None` when no two of them have
/// those shapes.
pub fn rosas_for_triple(lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<Result<XiCaseReport>> {
    let n = lambda.size();
    let idx = [lambda, mu, nu];
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        let (Some((first, r)), Some((a, leg))) = (idx[i].as_two_row(), idx[j].as_hook()) else {
            continue;
        };
        if leg == 0 || first + r != n {
            continue;
        }
        return Some(rosas_report(n, r, a, leg - 1, idx[k]));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn phi_examples() {
        assert_eq!(phi(2, 3, 3, 0, 6, 2), 1);
        assert_eq!(phi(2, 3, 3, 0, 6, 3), 1);
        assert_eq!(phi(0, 0, 0, 0, 0, 5), 0);
        for r in 0..8 {
            assert_eq!(phi(2, 3, 3, 0, 6, r), ind((2..=3).contains(&r)));
        }
    }

    #[test]
    fn psi_examples() {
        // c+1 = t with r-1 <= c+1 <= N-r: both terms fire
        assert_eq!(psi(2, 2, 3, 8), 2);
        // |c+1-t| >= 2 leaves only the first term, which also needs c+1 = t
        assert_eq!(psi(2, 2, 5, 8), 0);
        assert_eq!(psi(2, 2, 4, 8), 1);
    }

    #[test]
    fn data_of_32111() {
        let eta = p(&[3, 2, 1, 1, 1]);
        let data = DoubleHookData::of(&eta);
        assert_eq!((data.n3, data.n4, data.d1, data.d2, data.e(2, 5)), (2, 3, 3, 0, 6));
        let report = xi_report(&eta, 2, 2, 5).unwrap();
        assert_eq!(report.case, XiCase::DoubleHook);
        assert_eq!(report.value, 1);
        assert_eq!(report.inner, Some(XiInner::Phi { n3: 2, n4: 3, d1: 3, d2: 0, e: 6, r: 2 }));
    }

    #[test]
    fn branch_examples() {
        assert_eq!(xi(&p(&[4, 2, 1]), 3, 2, 3).unwrap(), 1);
        for r in 1..=3 {
            for c in 0..3 {
                assert_eq!(xi(&p(&[7]), 6 - c, r, c).unwrap(), ind(c == 0 && r == 1) as u64);
            }
        }
        assert_eq!(xi_report(&p(&[5]), 4, 1, 0).unwrap().case, XiCase::RowN);
        assert_eq!(xi_report(&p(&[4, 1]), 4, 1, 0).unwrap().case, XiCase::Hook);
        assert_eq!(xi_report(&p(&[3, 3, 3]), 4, 1, 3).unwrap().case, XiCase::Zero);
        assert_eq!(xi(&p(&[3, 1, 1]), 3, 0, 1).unwrap(), 1);
        assert_eq!(xi(&p(&[3, 2]), 3, 0, 1).unwrap(), 0);
        assert!(xi(&p(&[3, 2]), 3, 3, 1).is_err());
    }

    #[test]
    fn column_branch() {
        let col = Partition::column(6);
        assert_eq!(xi(&col, 2, 1, 3).unwrap(), 1);
        assert_eq!(xi(&col, 3, 1, 2).unwrap(), 0);
        let lit = xi_report_with(&col, 2, 1, 3, XiReading::AsPrinted).unwrap();
        assert_eq!((lit.case, lit.value), (XiCase::Column1N, 0));
    }

    #[test]
    fn report_json() {
        let r = xi_report(&p(&[3, 2, 1, 1, 1]), 2, 2, 5).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"case":"double-hook","value":1,"inner":{"fn":"phi","n3":2,"n4":3,"d1":3,"d2":0,"e":6,"r":2}}"#
        );
        let c = xi_report(&Partition::column(4), 2, 1, 1).unwrap();
        assert!(serde_json::to_string(&c).unwrap().contains("column-1N"));
    }

    #[test]
    fn triple_recognition() {
        let r = rosas_for_triple(&p(&[6, 2]), &p(&[2, 1, 1, 1, 1, 1, 1]), &p(&[3, 2, 1, 1, 1])).unwrap().unwrap();
        assert_eq!(r.value, 1);
        assert!(rosas_for_triple(&p(&[3, 2, 1]), &p(&[3, 2, 1]), &p(&[3, 2, 1])).is_none());
    }
}
