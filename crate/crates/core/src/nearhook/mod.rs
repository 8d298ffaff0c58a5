//! Kronecker coefficients with a near-hook index `(a, b, 1^c)`.
//!
//! Giambelli's identity writes `s_{(a,b,1^c)}` as
//! `s_{(a,1^{c+1})} s_{(b-1)} - s_{(a)} s_{(b-1,1^{c+1})}`; Littlewood's
//! identity then turns `g(λ, (a,b,1^c), ν)` into two signed sums of
//! Littlewood–Richardson coefficients times hook-indexed Kronecker
//! coefficients. For `λ = (d, e)` the sums collapse to index sets of
//! strictly positive terms, and for `b = 2` and special `ν` to counts of
//! Blasiak tableaux.

mod fundamental;
mod interpret;
mod triples;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::colored::blasiak_tableaux_by_shape;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rosas::rosas_kronecker;
use crate::symfun::kronecker_coefficient_oracle;
use crate::tableau::lr_coefficient;

pub use fundamental::{fundamental_expansion, Expansion};
pub use interpret::{
    main_result_1, main_result_2, near_hook_kronecker, null_case_check, singleton_case_check, special_nu,
    NearHookRoute, WitnessMember, WitnessSet,
};
pub use triples::{
    g_two_row_near_hook, index_set_minus, index_set_plus, j_minus, j_plus, triple1, triple2, triple3, triple4,
    TripleSum, TwoRowNearHook,
};

/// How the hook-indexed factors `g(θ, (a, 1^{c+1}), η)` are evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GBackend {
    /// The closed form when `θ` has at most two rows, the character formula
    /// otherwise.
    #[default]
    Rosas,
    Oracle,
    Blasiak,
}

impl std::str::FromStr for GBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rosas" => Ok(GBackend::Rosas),
            "oracle" => Ok(GBackend::Oracle),
            "blasiak" => Ok(GBackend::Blasiak),
            _ => Err(Error::Parse(format!("unknown backend {s:?}"))),
        }
    }
}

type BlasiakCounts = HashMap<(Partition, usize), HashMap<Partition, u64>>;

fn blasiak_counts() -> &'static Mutex<BlasiakCounts> {
    static CACHE: OnceLock<Mutex<BlasiakCounts>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `g(theta, (m - leg, 1^leg), eta)` with `m = |theta|`.
pub fn hook_g(backend: GBackend, theta: &Partition, leg: usize, eta: &Partition) -> Result<u64> {
    let m = theta.size();
    if eta.size() != m {
        return Err(Error::SizeMismatch(format!("|{theta}| != |{eta}|")));
    }
    if leg >= m {
        return Err(Error::Domain(format!("leg {leg} too long for size {m}")));
    }
    match backend {
        GBackend::Rosas if theta.len() <= 2 && leg >= 1 => {
            rosas_kronecker(m, theta.part(1), m - leg, leg - 1, eta)
        }
        GBackend::Rosas | GBackend::Oracle => {
            kronecker_coefficient_oracle(theta, &Partition::hook(m - leg, leg), eta)
        }
        GBackend::Blasiak => {
            let key = (theta.clone(), leg);
            if let Some(v) = blasiak_counts().lock().unwrap().get(&key) {
                return Ok(v.get(eta).copied().unwrap_or(0));
            }
            let counts: HashMap<Partition, u64> = blasiak_tableaux_by_shape(theta, leg)
                .into_iter()
                .map(|(shape, set)| (shape, set.len() as u64))
                .collect();
            let value = counts.get(eta).copied().unwrap_or(0);
            blasiak_counts().lock().unwrap().insert(key, counts);
            Ok(value)
        }
    }
}

type LrKey = (Partition, Partition, Partition);

/// `lr_coefficient` behind a process-wide memo; the sweeps ask for the same
/// small coefficients many times.
pub(crate) fn lr(outer: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    static MEMO: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let (mu, nu) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (outer.clone(), mu.clone(), nu.clone());
    if let Some(&v) = memo.read().unwrap().get(&key) {
        return v;
    }
    let v = lr_coefficient(outer, mu, nu);
    memo.write().unwrap().insert(key, v);
    v
}

/// Position of one summand in a signed sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum TermIndex {
    /// `(η, δ, θ)` in the expansion for arbitrary `λ`.
    Triple { eta: Partition, delta: Partition, theta: Partition },
    /// `(η, j, r)` on the positive side.
    Plus { eta: Partition, j: usize, r: usize },
    /// `(δ, i, r)` on the negative side.
    Minus { delta: Partition, i: usize, r: usize },
}

impl fmt::Display for TermIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermIndex::Triple { eta, delta, theta } => write!(f, "({eta} | {delta} | {theta})"),
            TermIndex::Plus { eta, j, r } => write!(f, "({eta}, {j}, {r})"),
            TermIndex::Minus { delta, i, r } => write!(f, "({delta}, {i}, {r})"),
        }
    }
}

/// One summand `sign * lr * g` (times `lr_lambda` for the general expansion,
/// which has a second Littlewood–Richardson factor).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCertificate {
    pub sign: i8,
    pub index: TermIndex,
    pub lr: u64,
    pub g: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lr_lambda: Option<u64>,
}

impl TermCertificate {
    pub fn contribution(&self) -> i64 {
        self.sign as i64 * (self.lr * self.g * self.lr_lambda.unwrap_or(1)) as i64
    }
}

impl fmt::Display for TermCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { '-' } else { '+' };
        match self.lr_lambda {
            Some(l) => write!(f, "{sign} {} : {} * {} * {}", self.index, self.lr, self.g, l),
            None => write!(f, "{sign} {} : {} * {}", self.index, self.lr, self.g),
        }
    }
}

/// `(a, b, 1^c)` with `a >= b >= 2`, `c >= 0`.
pub(crate) fn check_near_hook(a: usize, b: usize, c: usize, n: usize) -> Result<()> {
    if !(a >= b && b >= 2) {
        return Err(Error::Domain(format!("near-hook needs a >= b >= 2, got a={a} b={b}")));
    }
    if a + b + c != n {
        return Err(Error::SizeMismatch(format!("a+b+c = {} but n = {n}", a + b + c)));
    }
    Ok(())
}
