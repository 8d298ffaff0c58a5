use std::time::Instant;

use clap::ValueEnum;
use kronecker::colored::enumerate_blasiak;
use kronecker::nearhook::{near_hook_kronecker, GBackend, NearHookRoute};
use kronecker::rosas::rosas_for_triple;
use kronecker::symfun::kronecker_coefficient_oracle;
use kronecker::{Error, Partition, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Blasiak,
    Rosas,
    Nearhook,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Blasiak => "blasiak",
            Method::Rosas => "rosas",
            Method::Nearhook => "nearhook",
            Method::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: String,
    pub value: i64,
    #[serde(skip)]
    pub runtime_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explain: Option<Value>,
    #[serde(skip)]
    pub explain_text: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KronReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub results: Vec<MethodResult>,
    pub agree: bool,
    pub value: Option<i64>,
}

/// `(arm, leg)` of the first hook index with its two companions, preferring
/// `μ`.
fn hook_position(idx: [&Partition; 3]) -> Option<(&Partition, usize, &Partition)> {
    for (h, l, n) in [(1, 0, 2), (0, 1, 2), (2, 0, 1)] {
        if let Some((_, leg)) = idx[h].as_hook() {
            return Some((idx[l], leg, idx[n]));
        }
    }
    None
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u128)> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed().as_millis()))
}

fn run_oracle(idx: [&Partition; 3]) -> Result<MethodResult> {
    let (v, ms) = timed(|| kronecker_coefficient_oracle(idx[0], idx[1], idx[2]))?;
    Ok(MethodResult {
        method: "oracle".into(),
        value: v as i64,
        runtime_ms: ms,
        summary: None,
        explain: None,
        explain_text: None,
    })
}

fn run_blasiak(idx: [&Partition; 3], explain: bool) -> Result<MethodResult> {
    let (lambda, d, nu) = hook_position(idx)
        .ok_or_else(|| Error::Hypothesis("blasiak needs a hook index (m-d, 1^d)".into()))?;
    let (tabs, ms) = timed(|| enumerate_blasiak(lambda, d, nu))?;
    let summary = format!("content {lambda}, total color {d}, shape {nu}");
    let (explain, explain_text) = if explain {
        let text = tabs.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
        (Some(serde_json::to_value(&tabs).expect("tableaux serialize")), Some(text))
    } else {
        (None, None)
    };
    Ok(MethodResult {
        method: "blasiak".into(),
        value: tabs.len() as i64,
        runtime_ms: ms,
        summary: Some(summary),
        explain,
        explain_text,
    })
}

fn run_rosas(idx: [&Partition; 3]) -> Result<MethodResult> {
    let start = Instant::now();
    let report = rosas_for_triple(idx[0], idx[1], idx[2]).ok_or_else(|| {
        Error::Hypothesis("rosas needs a two-row index (N-r, r) and a hook index (a, 1^{c+1})".into())
    })??;
    Ok(MethodResult {
        method: "rosas".into(),
        value: report.value as i64,
        runtime_ms: start.elapsed().as_millis(),
        summary: Some(format!("branch {report}")),
        explain: None,
        explain_text: None,
    })
}

fn run_nearhook(idx: [&Partition; 3], backend: GBackend, explain: bool) -> Result<MethodResult> {
    let (route, ms) = timed(|| near_hook_kronecker(idx[0], idx[1], idx[2], backend))?;
    let summary = match &route {
        NearHookRoute::TwoRow { triple3, triple4, .. } => {
            format!("route two-row, triple3 = {}, triple4 = {}", triple3.value, triple4.value)
        }
        NearHookRoute::MainResult1 { witnesses, .. } => {
            format!("route main-result-1, {} Blasiak tableaux, minimum removed", witnesses.total())
        }
        NearHookRoute::MainResult2 { witnesses, .. } => {
            format!("route main-result-2, {} Blasiak tableaux", witnesses.total())
        }
        NearHookRoute::Fundamental { expansion, .. } => {
            format!("route fundamental, {} terms", expansion.terms.len())
        }
    };
    let (explain, explain_text) = if explain {
        (Some(serde_json::to_value(&route).expect("route serializes")), Some(explain_route(&route)))
    } else {
        (None, None)
    };
    Ok(MethodResult {
        method: "nearhook".into(),
        value: route.value(),
        runtime_ms: ms,
        summary: Some(summary),
        explain,
        explain_text,
    })
}

fn explain_route(route: &NearHookRoute) -> String {
    let mut out = String::new();
    match route {
        NearHookRoute::TwoRow { params, triple3, triple4, .. } => {
            out += &format!("(d,e) = ({},{}), (a,b,c) = ({},{},{})\n", params.d, params.e, params.a, params.b, params.c);
            out += &format!("triple3 = {}\n", triple3.value);
            for t in &triple3.terms {
                out += &format!("  {t}\n");
            }
            out += &format!("triple4 = {}\n", triple4.value);
            for t in &triple4.terms {
                out += &format!("  {t}\n");
            }
        }
        NearHookRoute::MainResult1 { s, witnesses, .. } | NearHookRoute::MainResult2 { s, witnesses, .. } => {
            out += &format!("S = {s}\n");
            out += &witnesses.to_string();
        }
        NearHookRoute::Fundamental { expansion, .. } => {
            for t in &expansion.terms {
                out += &format!("  {t}\n");
            }
        }
    }
    out
}

fn run_one(method: Method, idx: [&Partition; 3], backend: GBackend, explain: bool) -> Result<MethodResult> {
    match method {
        Method::Oracle => run_oracle(idx),
        Method::Blasiak => run_blasiak(idx, explain),
        Method::Rosas => run_rosas(idx),
        Method::Nearhook => run_nearhook(idx, backend, explain),
        Method::All => unreachable!("expanded by caller"),
    }
}

/// Evaluates `g(λ, μ, ν)` by one method, or by every applicable one for
/// [`Method::All`]. A hypothesis failure is an error for a single method
/// and a skip for `all`.
pub fn kron(
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    method: Method,
    backend: GBackend,
    explain: bool,
) -> Result<KronReport> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda}, {mu}, {nu} have sizes {n}, {}, {}", mu.size(), nu.size())));
    }
    let idx = [&lambda, &mu, &nu];
    let results = if method == Method::All {
        let mut out = Vec::new();
        for m in [Method::Oracle, Method::Blasiak, Method::Rosas, Method::Nearhook] {
            match run_one(m, idx, backend, explain) {
                Ok(r) => out.push(r),
                Err(Error::Hypothesis(_)) => {}
                Err(e) => return Err(e),
            }
        }
        out
    } else {
        vec![run_one(method, idx, backend, explain).map_err(|e| match e {
            Error::Hypothesis(msg) => Error::Hypothesis(format!("method {}: {msg}", method.name())),
            other => other,
        })?]
    };
    let agree = results.windows(2).all(|w| w[0].value == w[1].value);
    let value = agree.then(|| results[0].value);
    Ok(KronReport { lambda, mu, nu, results, agree, value })
}
