use std::fmt;

use serde::{Deserialize, Serialize};

use super::fundamental::{fundamental_expansion, Expansion};
use super::triples::{j_minus, j_plus, triple3, triple4, TripleSum, TwoRowNearHook};
use super::GBackend;
use crate::colored::{enumerate_blasiak, ColoredTableau};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `(a+2, 2^{S-1}, 1^{c+2-2S})` for `1 <= S <= (c+2)/2`.
pub fn special_nu(a: usize, c: usize, s: usize) -> Option<Partition> {
    if s == 0 || 2 * s > c + 2 {
        return None;
    }
    let mut parts = vec![a + 2];
    parts.extend(std::iter::repeat_n(2, s - 1));
    parts.extend(std::iter::repeat_n(1, c + 2 - 2 * s));
    Some(Partition::from_unsorted(parts))
}

/// `b = 2` with `ν = special_nu(a, c, S)`; `d` may lie on either side of
/// the interval `[max(a+S, c+2-S), a+c+2-S]`.
#[derive(Clone, Copy, Debug)]
struct SpecialCase {
    a: usize,
    c: usize,
    d: usize,
    e: usize,
    s: usize,
}

impl SpecialCase {
    fn new(a: usize, b: usize, c: usize, d: usize, e: usize, s: usize) -> Option<Self> {
        let ok = a >= 2 && b == 2 && c >= 1 && s >= 1 && 2 * s <= c + 2 && d >= e && d + e == a + c + 2;
        ok.then_some(SpecialCase { a, c, d, e, s })
    }

    fn nu(&self) -> Partition {
        special_nu(self.a, self.c, self.s).expect("range checked")
    }

    fn delta_star(&self) -> Partition {
        let mut parts = vec![2; self.s];
        parts.extend(std::iter::repeat_n(1, self.c + 2 - 2 * self.s));
        Partition::from_unsorted(parts)
    }

    fn in_interval(&self) -> bool {
        let (a, c, s) = (self.a, self.c, self.s);
        (a + s).max(c + 2 - s) <= self.d && self.d + s <= a + c + 2
    }

    fn params(&self) -> TwoRowNearHook {
        TwoRowNearHook::new(self.d, self.e, self.a, 2, self.c).expect("checked in new")
    }

    fn describe(&self) -> String {
        format!("a={} b=2 c={} d={} e={} S={}", self.a, self.c, self.d, self.e, self.s)
    }
}

/// The unique element `(δ*, 0, S)` of `𝓙⁻_d` when the hypotheses of the
/// collapse hold; `None` when they do not. A hypothesis-satisfying input
/// whose `𝓙⁻_d` is not that singleton, or whose term is not 1, is reported
/// as [`Error::Counterexample`].
pub fn singleton_case_check(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e: usize,
    s: usize,
) -> Result<Option<(Partition, usize, usize)>> {
    let Some(case) = SpecialCase::new(a, b, c, d, e, s) else { return Ok(None) };
    if !case.in_interval() {
        return Ok(None);
    }
    let nu = case.nu();
    let expected = (case.delta_star(), 0, s);
    let set = j_minus(d, &nu, a, 2, c);
    if set != [expected.clone()] {
        return Err(Error::Counterexample(format!("{}: J- = {set:?}", case.describe())));
    }
    let t4 = triple4(&case.params(), &nu, GBackend::Rosas)?;
    if t4.value != 1 {
        return Err(Error::Counterexample(format!("{}: singleton term = {}", case.describe(), t4.value)));
    }
    Ok(Some(expected))
}

/// `true` when the hypotheses hold and `d` lies outside the interval, after
/// confirming that `𝓙⁻_d` is empty and `triple4 = 0`.
pub fn null_case_check(a: usize, b: usize, c: usize, d: usize, e: usize, s: usize) -> Result<bool> {
    let Some(case) = SpecialCase::new(a, b, c, d, e, s) else { return Ok(false) };
    if case.in_interval() {
        return Ok(false);
    }
    let nu = case.nu();
    let set = j_minus(d, &nu, a, 2, c);
    if !set.is_empty() {
        return Err(Error::Counterexample(format!("{}: J- = {set:?}", case.describe())));
    }
    let t4 = triple4(&case.params(), &nu, GBackend::Rosas)?;
    if t4.value != 0 {
        return Err(Error::Counterexample(format!("{}: triple4 = {}", case.describe(), t4.value)));
    }
    Ok(true)
}

/// A Blasiak tableau together with the index `(η, j, r)` of the block it
/// was drawn from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMember {
    pub tableau: ColoredTableau,
    pub eta: Partition,
    pub j: usize,
    pub r: usize,
}

/// Disjoint union of the blocks `ℬ_{(n-1-r,r),(a,1^{c+1}),η}` over
/// `(η, 0, r) ∈ 𝓙⁺_d`, sorted by shape, then reading word, then source.
/// When a minimum was removed it is kept in `removed_min` and is not among
/// `members`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSet {
    pub members: Vec<WitnessMember>,
    pub removed_min: Option<ColoredTableau>,
    /// `|ℬ|` for every index of `𝓙⁺_d`, in index order.
    pub blocks: Vec<((Partition, usize, usize), usize)>,
}

impl WitnessSet {
    fn collect(d: usize, nu: &Partition, a: usize, c: usize) -> Result<Self> {
        let n = nu.size();
        let mut members = Vec::new();
        let mut blocks = Vec::new();
        for (eta, j, r) in j_plus(d, nu, a, 2, c) {
            let content = Partition::from_unsorted(vec![n - 1 - r, r]);
            let block = enumerate_blasiak(&content, c + 1, &eta)?;
            blocks.push(((eta.clone(), j, r), block.len()));
            members.extend(block.into_iter().map(|tableau| WitnessMember { tableau, eta: eta.clone(), j, r }));
        }
        members.sort_by_cached_key(|m| (m.tableau.shape(), m.tableau.reading_word(), m.r, m.eta.clone()));
        Ok(WitnessSet { members, removed_min: None, blocks })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sum of the block sizes, before any removal.
    pub fn total(&self) -> usize {
        self.blocks.iter().map(|(_, k)| k).sum()
    }
}

impl fmt::Display for WitnessSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((eta, j, r), k) in &self.blocks {
            writeln!(f, "block ({eta}, {j}, {r}): {k}")?;
        }
        if let Some(t) = &self.removed_min {
            writeln!(f, "removed minimum:")?;
            writeln!(f, "{t}")?;
        }
        for m in &self.members {
            writeln!(f, "from ({}, {}, {}):", m.eta, m.j, m.r)?;
            writeln!(f, "{}", m.tableau)?;
        }
        Ok(())
    }
}

fn special_case_or_err(a: usize, c: usize, d: usize, e: usize, s: usize) -> Result<SpecialCase> {
    SpecialCase::new(a, 2, c, d, e, s).ok_or_else(|| {
        Error::Hypothesis(format!(
            "need a >= 2, c >= 1, 1 <= S <= (c+2)/2, d >= e, d+e = a+c+2; got a={a} c={c} d={d} e={e} S={s}"
        ))
    })
}

/// `g((d,e), (a,2,1^c), ν)` for `ν = (a+2, 2^{S-1}, 1^{c+2-2S})` and `d` in
/// the interval: one less than the number of Blasiak tableaux in the blocks
/// indexed by `𝓙⁺_d`. The lexicographically least tableau is removed.
pub fn main_result_1(a: usize, c: usize, d: usize, e: usize, s: usize) -> Result<(i64, WitnessSet)> {
    let case = special_case_or_err(a, c, d, e, s)?;
    if !case.in_interval() {
        return Err(Error::Hypothesis(format!(
            "{}: d is outside [max(a+S, c+2-S), a+c+2-S]; use main_result_2",
            case.describe()
        )));
    }
    let mut set = WitnessSet::collect(d, &case.nu(), a, c)?;
    let value = set.total() as i64 - 1;
    if !set.members.is_empty() {
        set.removed_min = Some(set.members.remove(0).tableau);
    }
    Ok((value, set))
}

/// As [`main_result_1`] for `d` outside the interval: the count is the
/// full number of tableaux, nothing is removed.
pub fn main_result_2(a: usize, c: usize, d: usize, e: usize, s: usize) -> Result<(i64, WitnessSet)> {
    let case = special_case_or_err(a, c, d, e, s)?;
    if case.in_interval() {
        return Err(Error::Hypothesis(format!(
            "{}: d is inside [max(a+S, c+2-S), a+c+2-S]; use main_result_1",
            case.describe()
        )));
    }
    let set = WitnessSet::collect(d, &case.nu(), a, c)?;
    Ok((set.total() as i64, set))
}

/// How a near-hook query was answered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "kebab-case")]
pub enum NearHookRoute {
    MainResult1 { params: TwoRowNearHook, s: usize, value: i64, witnesses: WitnessSet },
    MainResult2 { params: TwoRowNearHook, s: usize, value: i64, witnesses: WitnessSet },
    TwoRow { params: TwoRowNearHook, value: i64, triple3: TripleSum, triple4: TripleSum },
    Fundamental { lambda: Partition, near_hook: (usize, usize, usize), nu: Partition, expansion: Expansion },
}

impl NearHookRoute {
    pub fn value(&self) -> i64 {
        match self {
            NearHookRoute::MainResult1 { value, .. }
            | NearHookRoute::MainResult2 { value, .. }
            | NearHookRoute::TwoRow { value, .. } => *value,
            NearHookRoute::Fundamental { expansion, .. } => expansion.value,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NearHookRoute::MainResult1 { .. } => "main-result-1",
            NearHookRoute::MainResult2 { .. } => "main-result-2",
            NearHookRoute::TwoRow { .. } => "two-row",
            NearHookRoute::Fundamental { .. } => "fundamental",
        }
    }
}

/// Picks the most specific route for `g(λ, μ, ν)`:
///
/// - a two-row index and a near-hook index with `c >= 1`, `b = 2` and the
///   third index of the special form: Blasiak witness sets;
/// - a two-row index and a near-hook index with `c >= 1`: `triple3 - triple4`;
/// - any near-hook index: the general expansion.
///
/// The indices may come in any order.
pub fn near_hook_kronecker(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    backend: GBackend,
) -> Result<NearHookRoute> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda}, {mu}, {nu} have different sizes")));
    }
    let idx = [lambda, mu, nu];
    let orders = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)];

    for &(i, j, k) in &orders {
        let (Some((d, e)), Some((a, b, c))) = (idx[i].as_two_row(), idx[j].as_near_hook()) else { continue };
        if c == 0 {
            continue;
        }
        let params = TwoRowNearHook::new(d, e, a, b, c)?;
        let third = idx[k];
        if b == 2 {
            if let Some(s) = (1..=(c + 2) / 2).find(|&s| special_nu(a, c, s).as_ref() == Some(third)) {
                let case = SpecialCase::new(a, b, c, d, e, s).expect("checked");
                return Ok(if case.in_interval() {
                    let (value, witnesses) = main_result_1(a, c, d, e, s)?;
                    NearHookRoute::MainResult1 { params, s, value, witnesses }
                } else {
                    let (value, witnesses) = main_result_2(a, c, d, e, s)?;
                    NearHookRoute::MainResult2 { params, s, value, witnesses }
                });
            }
        }
        let t3 = triple3(&params, third, backend)?;
        let t4 = triple4(&params, third, backend)?;
        return Ok(NearHookRoute::TwoRow { params, value: t3.value - t4.value, triple3: t3, triple4: t4 });
    }

    for &(i, j, k) in &orders {
        let Some((a, b, c)) = idx[j].as_near_hook() else { continue };
        let expansion = fundamental_expansion(idx[i], idx[k], a, b, c, backend)?;
        return Ok(NearHookRoute::Fundamental {
            lambda: idx[i].clone(),
            near_hook: (a, b, c),
            nu: idx[k].clone(),
            expansion,
        });
    }

    Err(Error::Hypothesis(format!("none of {lambda}, {mu}, {nu} is a near-hook (a,b,1^c) with a >= b >= 2")))
}
