//! Exhaustive verification sweeps.
//!
//! Every suite enumerates its cases in a fixed order, checks them in
//! parallel on a pool of the requested size, and reassembles the results in
//! case order, so a report depends only on the suite and its bound.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colored::blasiak_tableaux_by_shape;
use crate::error::{Error, Result};
use crate::nearhook::{
    fundamental_expansion, index_set_minus, index_set_plus, main_result_1, main_result_2, null_case_check,
    singleton_case_check, special_nu, triple1, triple2, triple3, triple4, GBackend, TwoRowNearHook,
};
use crate::partition::{all_partitions, Partition};
use crate::rosas::rosas_kronecker;
use crate::symfun::{
    coproduct, giambelli_leibniz, jacobi_trudi, kronecker_coefficient_oracle, kronecker_product, schur_product,
    SchurVector,
};
use crate::tableau::{lr_coefficient, lr_two_row, lr_via_strip_difference};

/// Failures kept in a report; the total is always counted.
pub const MAX_FAILURES: usize = 20;

pub struct Suite {
    pub name: &'static str,
    pub default_n: usize,
    pub description: &'static str,
    run: fn(usize) -> Vec<Outcome>,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "littlewood", default_n: 7, description: "(s_λ s_μ) * s_ν by Littlewood's identity, |λ|+|μ| <= n", run: littlewood },
    Suite { name: "giambelli", default_n: 9, description: "Giambelli determinant sums to s_λ", run: giambelli },
    Suite { name: "jacobi-trudi", default_n: 8, description: "Jacobi–Trudi determinant sums to s_λ", run: jacobi_trudi_suite },
    Suite { name: "symmetry", default_n: 8, description: "S3 symmetry, conjugation, trivial and sign indices", run: symmetry },
    Suite { name: "two-row-lr", default_n: 10, description: "two-row LR closed form against enumeration", run: two_row_lr },
    Suite { name: "strip-difference", default_n: 8, description: "c^ν_{η,(b-1-j,j)} as a difference of strip-chain counts", run: strip_difference },
    Suite { name: "blasiak-vs-oracle", default_n: 8, description: "Blasiak tableau counts against the character formula", run: blasiak_vs_oracle },
    Suite { name: "rosas-vs-oracle", default_n: 10, description: "two-row by hook closed form against the character formula", run: rosas_vs_oracle },
    Suite { name: "fundamental", default_n: 8, description: "near-hook expansion for arbitrary λ, ν", run: fundamental },
    Suite { name: "triples", default_n: 9, description: "triple1 - triple2 and triple3 - triple4 for λ = (d,e)", run: triples },
    Suite { name: "index-sets", default_n: 8, description: "index-set membership iff a positive summand", run: index_sets },
    Suite { name: "main-results", default_n: 10, description: "b = 2 collapse lemmas and Blasiak witness sets", run: main_results },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} n<={}: {} checks, {} failures", self.suite, self.n, self.checks, self.failure_count)?;
        for x in &self.failures {
            writeln!(f, "  {}: {}", x.case, x.detail)?;
        }
        Ok(())
    }
}

/// Runs `name` up to bound `n` on `jobs` worker threads (0 for rayon's
/// default).
pub fn run_suite(name: &str, n: usize, jobs: usize) -> Result<SuiteReport> {
    let s = suite(name).ok_or_else(|| Error::Parse(format!("unknown suite {name:?}")))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    let outcomes = pool.install(|| (s.run)(n));
    let mut report = SuiteReport { suite: s.name.to_string(), n, checks: 0, failure_count: 0, failures: Vec::new() };
    for o in outcomes {
        report.checks += o.checks;
        report.failure_count += o.failures.len() as u64;
        for x in o.failures {
            if report.failures.len() < MAX_FAILURES {
                report.failures.push(x);
            }
        }
    }
    Ok(report)
}

#[derive(Default)]
struct Outcome {
    checks: u64,
    failures: Vec<Failure>,
}

impl Outcome {
    fn check(&mut self, ok: bool, case: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure { case: case(), detail: detail() });
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, case: impl FnOnce() -> String) {
        self.checks += 1;
        if got != want {
            self.failures.push(Failure { case: case(), detail: format!("got {got:?}, expected {want:?}") });
        }
    }

    fn error(&mut self, case: String, e: Error) {
        self.checks += 1;
        self.failures.push(Failure { case, detail: e.to_string() });
    }
}

fn sweep<C: Sync>(cases: Vec<C>, f: impl Fn(&C, &mut Outcome) -> Result<()> + Sync, name: impl Fn(&C) -> String + Sync) -> Vec<Outcome> {
    cases
        .par_iter()
        .map(|c| {
            let mut o = Outcome::default();
            if let Err(e) = f(c, &mut o) {
                o.error(name(c), e);
            }
            o
        })
        .collect()
}

fn oracle(l: &Partition, m: &Partition, n: &Partition) -> Result<u64> {
    kronecker_coefficient_oracle(l, m, n)
}

fn two_row(x: usize, y: usize) -> Partition {
    Partition::from_unsorted(vec![x, y])
}

fn near_hooks(n: usize, min_c: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for b in 2..=n / 2 {
        for a in b..=n - b {
            if n - a - b >= min_c {
                out.push((a, b, n - a - b));
            }
        }
    }
    out
}

fn littlewood(n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for k in 1..n {
        for l in 1..=n - k {
            for lambda in all_partitions(k) {
                for mu in all_partitions(l) {
                    for nu in all_partitions(k + l) {
                        cases.push((lambda.clone(), mu.clone(), nu));
                    }
                }
            }
        }
    }
    sweep(
        cases,
        |(lambda, mu, nu), o| {
            let prod = schur_product(&SchurVector::basis(lambda.clone()), &SchurVector::basis(mu.clone()));
            let lhs = kronecker_product(&prod, &SchurVector::basis(nu.clone()))?;
            let mut rhs = SchurVector::zero();
            for (alpha, beta, c) in coproduct(nu) {
                if alpha.size() != lambda.size() {
                    continue;
                }
                let left = kronecker_product(&SchurVector::basis(lambda.clone()), &SchurVector::basis(alpha))?;
                let right = kronecker_product(&SchurVector::basis(mu.clone()), &SchurVector::basis(beta))?;
                let term = schur_product(&left, &right).scale(&num_rational::BigRational::from_integer(c.into()));
                rhs = &rhs + &term;
            }
            o.check(lhs == rhs, || format!("λ={lambda} μ={mu} ν={nu}"), || format!("{lhs} != {rhs}"));
            Ok(())
        },
        |(l, m, n)| format!("λ={l} μ={m} ν={n}"),
    )
}

fn giambelli(n: usize) -> Vec<Outcome> {
    let cases: Vec<Partition> = (1..=n).flat_map(all_partitions).collect();
    sweep(
        cases,
        |lambda, o| {
            let sum = giambelli_leibniz(lambda)?.iter().fold(SchurVector::zero(), |acc, t| &acc + &t.expand());
            o.eq(sum, SchurVector::basis(lambda.clone()), || format!("λ={lambda}"));
            Ok(())
        },
        |l| format!("λ={l}"),
    )
}

fn jacobi_trudi_suite(n: usize) -> Vec<Outcome> {
    let cases: Vec<Partition> = (1..=n).flat_map(all_partitions).collect();
    sweep(
        cases,
        |lambda, o| {
            let sum = jacobi_trudi(lambda).iter().fold(SchurVector::zero(), |acc, t| &acc + &t.to_schur());
            o.eq(sum, SchurVector::basis(lambda.clone()), || format!("λ={lambda}"));
            Ok(())
        },
        |l| format!("λ={l}"),
    )
}

fn symmetry(n: usize) -> Vec<Outcome> {
    let cases: Vec<(Partition, Partition)> = (1..=n)
        .flat_map(|m| {
            let parts = all_partitions(m);
            parts.iter().flat_map(|l| parts.iter().map(move |u| (l.clone(), u.clone()))).collect::<Vec<_>>()
        })
        .collect();
    sweep(
        cases,
        |(lambda, mu), o| {
            let m = lambda.size();
            for nu in all_partitions(m) {
                let g = oracle(lambda, mu, &nu)?;
                let case = || format!("λ={lambda} μ={mu} ν={nu}");
                for (x, y, z) in [(mu, lambda, &nu), (lambda, &nu, mu), (&nu, mu, lambda), (mu, &nu, lambda), (&nu, lambda, mu)] {
                    o.eq(oracle(x, y, z)?, g, case);
                }
                o.eq(oracle(&lambda.transpose(), &mu.transpose(), &nu)?, g, case);
                o.eq(oracle(&lambda.transpose(), mu, &nu.transpose())?, g, case);
            }
            o.eq(oracle(lambda, &Partition::row(m), mu)?, (lambda == mu) as u64, || format!("trivial λ={lambda} ν={mu}"));
            o.eq(
                oracle(lambda, &Partition::column(m), mu)?,
                (lambda.transpose() == *mu) as u64,
                || format!("sign λ={lambda} ν={mu}"),
            );
            Ok(())
        },
        |(l, m)| format!("λ={l} μ={m}"),
    )
}

fn two_row_lr(n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for m in 0..=n {
        for x in 0..=m {
            for y in 0..=x.min(m - x) {
                for u in 0..=m - x - y {
                    let v = m - x - y - u;
                    if v <= u {
                        cases.push((x, y, u, v));
                    }
                }
            }
        }
    }
    sweep(
        cases,
        |&(x, y, u, v), o| {
            let m = x + y + u + v;
            for e in 0..=m / 2 {
                let d = m - e;
                let closed = lr_two_row(x, y, u, v, d, e)? as u64;
                let direct = lr_coefficient(&two_row(d, e), &two_row(x, y), &two_row(u, v));
                o.eq(closed, direct, || format!("({x},{y}) ({u},{v}) -> ({d},{e})"));
            }
            Ok(())
        },
        |&(x, y, u, v)| format!("({x},{y}) ({u},{v})"),
    )
}

fn strip_difference(n: usize) -> Vec<Outcome> {
    let cases: Vec<Partition> = (1..=n).flat_map(all_partitions).collect();
    sweep(
        cases,
        |nu, o| {
            let m = nu.size();
            for b in 1..=m + 1 {
                for eta in all_partitions(m + 1 - b) {
                    for j in 0..=(b - 1) / 2 {
                        let diff = lr_via_strip_difference(nu, &eta, b, j)?;
                        let direct = lr_coefficient(nu, &eta, &two_row(b - 1 - j, j)) as i64;
                        o.eq(diff, direct, || format!("ν={nu} η={eta} b={b} j={j}"));
                    }
                }
            }
            Ok(())
        },
        |nu| format!("ν={nu}"),
    )
}

fn blasiak_vs_oracle(n: usize) -> Vec<Outcome> {
    let cases: Vec<(Partition, usize)> = (1..=n)
        .flat_map(|m| all_partitions(m).into_iter().flat_map(move |l| (0..m).map(move |d| (l.clone(), d))))
        .collect();
    sweep(
        cases,
        |(lambda, d), o| {
            let m = lambda.size();
            let hook = Partition::hook(m - d, *d);
            let by_shape = blasiak_tableaux_by_shape(lambda, *d);
            for nu in all_partitions(m) {
                let count = by_shape.get(&nu).map_or(0, |s| s.len() as u64);
                o.eq(count, oracle(lambda, &hook, &nu)?, || format!("λ={lambda} d={d} ν={nu}"));
            }
            for (nu, set) in &by_shape {
                o.check(
                    set.iter().all(|t| t.is_globally_weak() && t.satisfies_colored_conditions() && t.content() == lambda.parts()),
                    || format!("λ={lambda} d={d} ν={nu}"),
                    || "tableau violates the colored conditions".into(),
                );
            }
            Ok(())
        },
        |(l, d)| format!("λ={l} d={d}"),
    )
}

fn rosas_vs_oracle(n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for big in 2..=n {
        for r in 0..=big / 2 {
            for a in 1..big {
                cases.push((big, r, a, big - a - 1));
            }
        }
    }
    sweep(
        cases,
        |&(big, r, a, c), o| {
            let lambda = two_row(big - r, r);
            let hook = Partition::hook(a, c + 1);
            for nu in all_partitions(big) {
                let g = rosas_kronecker(big, r, a, c, &nu)?;
                o.eq(g, oracle(&lambda, &hook, &nu)?, || format!("N={big} r={r} a={a} c={c} ν={nu}"));
                if r >= 1 && g > 0 {
                    o.check(nu.is_double_hook(), || format!("N={big} r={r} a={a} c={c} ν={nu}"), || "positive outside DH(N)".into());
                }
            }
            Ok(())
        },
        |&(big, r, a, c)| format!("N={big} r={r} a={a} c={c}"),
    )
}

fn fundamental(n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for m in 4..=n {
        for (a, b, c) in near_hooks(m, 0) {
            for lambda in all_partitions(m) {
                cases.push((lambda, a, b, c));
            }
        }
    }
    sweep(
        cases,
        |(lambda, a, b, c), o| {
            let mu = near_hook(*a, *b, *c);
            for nu in all_partitions(lambda.size()) {
                let ex = fundamental_expansion(lambda, &nu, *a, *b, *c, GBackend::Rosas)?;
                o.eq(ex.value, oracle(lambda, &mu, &nu)? as i64, || format!("λ={lambda} μ={mu} ν={nu}"));
            }
            Ok(())
        },
        |(l, a, b, c)| format!("λ={l} (a,b,c)=({a},{b},{c})"),
    )
}

fn near_hook(a: usize, b: usize, c: usize) -> Partition {
    let mut parts = vec![a, b];
    parts.extend(std::iter::repeat_n(1, c));
    Partition::from_unsorted(parts)
}

fn triples(n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for m in 5..=n {
        for (a, b, c) in near_hooks(m, 1) {
            for e in 0..=m / 2 {
                cases.push(TwoRowNearHook::new(m - e, e, a, b, c).expect("admissible"));
            }
        }
    }
    sweep(
        cases,
        |params, o| {
            for nu in all_partitions(params.n()) {
                let case = || format!("{params:?} ν={nu}");
                let g = oracle(&params.lambda(), &params.mu(), &nu)? as i64;
                let t1 = triple1(params, &nu, GBackend::Oracle)?;
                let t2 = triple2(params, &nu, GBackend::Oracle)?;
                let t3 = triple3(params, &nu, GBackend::Rosas)?;
                let t4 = triple4(params, &nu, GBackend::Rosas)?;
                o.eq(t1.value - t2.value, g, case);
                o.eq(t3.value - t4.value, g, case);
                o.eq(&t3.terms, &t1.terms, case);
                o.eq(&t4.terms, &t2.terms, case);
                o.check(
                    t3.terms.iter().chain(&t4.terms).all(|t| t.lr > 0 && t.g > 0),
                    case,
                    || "non-positive certificate".into(),
                );
            }
            Ok(())
        },
        |p| format!("{p:?}"),
    )
}

fn index_sets(n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for m in 5..=n {
        for (a, b, c) in near_hooks(m, 1) {
            for nu in all_partitions(m) {
                cases.push((nu, a, b, c));
            }
        }
    }
    sweep(
        cases,
        |(nu, a, b, c), o| {
            let (a, b, c) = (*a, *b, *c);
            let m = nu.size();
            let plus = index_set_plus(nu, a, b, c);
            let big = m - b + 1;
            for eta in all_partitions(big) {
                for j in 0..=(b - 1) / 2 {
                    let lr = lr_coefficient(nu, &eta, &two_row(b - 1 - j, j));
                    for r in 0..=big / 2 {
                        let g = oracle(&two_row(big - r, r), &Partition::hook(a, c + 1), &eta)?;
                        o.eq(plus.contains(&(eta.clone(), j, r)), lr * g > 0, || format!("+ ν={nu} ({a},{b},{c}) ({eta},{j},{r})"));
                    }
                }
            }
            let minus = index_set_minus(nu, a, b, c);
            let small = m - a;
            for delta in all_partitions(small) {
                for i in 0..=a / 2 {
                    let lr = lr_coefficient(nu, &two_row(a - i, i), &delta);
                    for r in 0..=small / 2 {
                        let g = oracle(&two_row(small - r, r), &Partition::hook(b - 1, c + 1), &delta)?;
                        o.eq(minus.contains(&(delta.clone(), i, r)), lr * g > 0, || format!("- ν={nu} ({a},{b},{c}) ({delta},{i},{r})"));
                    }
                }
            }
            Ok(())
        },
        |(nu, a, b, c)| format!("ν={nu} ({a},{b},{c})"),
    )
}

fn main_results(n: usize) -> Vec<Outcome> {
    let mut cases = Vec::new();
    for m in 5..=n {
        for a in 2..=m - 3 {
            let c = m - a - 2;
            for s in 1..=(c + 2) / 2 {
                for e in 0..=m / 2 {
                    cases.push((a, c, m - e, e, s));
                }
            }
        }
    }
    sweep(
        cases,
        |&(a, c, d, e, s), o| {
            let case = || format!("a={a} c={c} d={d} e={e} S={s}");
            let nu = special_nu(a, c, s).expect("range");
            let params = TwoRowNearHook::new(d, e, a, 2, c)?;
            let g = oracle(&params.lambda(), &params.mu(), &nu)? as i64;
            let singleton = singleton_case_check(a, 2, c, d, e, s)?;
            let null = null_case_check(a, 2, c, d, e, s)?;
            o.check(singleton.is_some() != null, case, || "neither or both collapse lemmas apply".into());
            let (value, set) = if singleton.is_some() { main_result_1(a, c, d, e, s)? } else { main_result_2(a, c, d, e, s)? };
            o.eq(value, g, case);
            o.eq(set.members.len() as i64, value, case);
            o.check(set.blocks.iter().all(|(_, k)| *k > 0), case, || format!("empty block in {:?}", set.blocks));
            for ((eta, _, _), _) in &set.blocks {
                o.eq(lr_coefficient(&nu, eta, &Partition::row(1)), 1, || format!("{} η={eta}", case()));
            }
            Ok(())
        },
        |&(a, c, d, e, s)| format!("a={a} c={c} d={d} e={e} S={s}"),
    )
}
