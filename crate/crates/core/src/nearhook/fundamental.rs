use serde::{Deserialize, Serialize};

use super::{check_near_hook, hook_g, lr, GBackend, TermCertificate, TermIndex};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// A signed list of summands and their total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub terms: Vec<TermCertificate>,
    pub value: i64,
}

fn contained_in(n: usize, outer: &[&Partition]) -> Vec<Partition> {
    partitions_of(n, None).filter(|p| outer.iter().all(|o| o.contains(p))).collect()
}

/// `g(λ, (a,b,1^c), ν)` as
///
/// ```text
///   Σ_{η ⊢ n-b+1, δ ⊢ b-1, θ ⊢ n-b+1} c^ν_{ηδ} g(θ, (a,1^{c+1}), η) c^λ_{θδ}
/// - Σ_{η ⊢ a,     δ ⊢ n-a, θ ⊢ n-a}   c^ν_{ηδ} g(θ, (b-1,1^{c+1}), δ) c^λ_{ηθ}
/// ```
///
/// Terms with a vanishing Littlewood–Richardson factor are left out; terms
/// whose hook coefficient vanishes are kept. Order: `η`, then `δ`, then `θ`,
/// each in reverse-lexicographic order.
pub fn fundamental_expansion(
    lambda: &Partition,
    nu: &Partition,
    a: usize,
    b: usize,
    c: usize,
    backend: GBackend,
) -> Result<Expansion> {
    let n = lambda.size();
    if nu.size() != n {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{nu}|")));
    }
    check_near_hook(a, b, c, n)?;
    let mut terms = Vec::new();

    let big = n - b + 1;
    for eta in contained_in(big, &[nu]) {
        for delta in contained_in(b - 1, &[nu, lambda]) {
            let lr_nu = lr(nu, &eta, &delta);
            if lr_nu == 0 {
                continue;
            }
            for theta in contained_in(big, &[lambda]) {
                let lr_lambda = lr(lambda, &theta, &delta);
                if lr_lambda == 0 {
                    continue;
                }
                let g = hook_g(backend, &theta, c + 1, &eta)?;
                terms.push(TermCertificate {
                    sign: 1,
                    index: TermIndex::Triple { eta: eta.clone(), delta: delta.clone(), theta },
                    lr: lr_nu,
                    g,
                    lr_lambda: Some(lr_lambda),
                });
            }
        }
    }

    for eta in contained_in(a, &[nu, lambda]) {
        for delta in contained_in(n - a, &[nu]) {
            let lr_nu = lr(nu, &eta, &delta);
            if lr_nu == 0 {
                continue;
            }
            for theta in contained_in(n - a, &[lambda]) {
                let lr_lambda = lr(lambda, &eta, &theta);
                if lr_lambda == 0 {
                    continue;
                }
                let g = hook_g(backend, &theta, c + 1, &delta)?;
                terms.push(TermCertificate {
                    sign: -1,
                    index: TermIndex::Triple { eta: eta.clone(), delta: delta.clone(), theta },
                    lr: lr_nu,
                    g,
                    lr_lambda: Some(lr_lambda),
                });
            }
        }
    }

    let value = terms.iter().map(TermCertificate::contribution).sum();
    Ok(Expansion { terms, value })
}
