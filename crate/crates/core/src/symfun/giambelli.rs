//! Determinantal expansions of Schur functions: Giambelli (hook entries,
//! indexed by Frobenius coordinates) and Jacobi–Trudi (complete homogeneous
//! entries), both written out term by term with the Leibniz formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::{schur_product, SchurVector};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `sgn(σ) ∏ᵢ s_{(αᵢ+1, 1^{β_{σ(i)}})}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedHookProduct {
    pub sign: i8,
    pub hooks: Vec<Partition>,
}

impl SignedHookProduct {
    /// Multiplies the hooks out in the Schur basis, sign included.
    pub fn expand(&self) -> SchurVector {
        let prod = self
            .hooks
            .iter()
            .fold(SchurVector::one(), |acc, h| schur_product(&acc, &SchurVector::basis(h.clone())));
        if self.sign < 0 {
            -&prod
        } else {
            prod
        }
    }
}

impl fmt::Display for SignedHookProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "- " } else { "+ " })?;
        let factors: Vec<String> = self.hooks.iter().map(|h| format!("s[{}]", h)).collect();
        f.write_str(&factors.join(" "))
    }
}

/// `sgn(σ) ∏ᵢ h_{indices[i]}`; `h_0 = 1` factors are kept so the terms line
/// up with the rows of the determinant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HMonomial {
    pub sign: i8,
    pub indices: Vec<usize>,
}

impl HMonomial {
    /// `h_k = s_(k)`, so the monomial expands as a product of one-row Schur
    /// functions.
    pub fn to_schur(&self) -> SchurVector {
        let prod = self.indices.iter().fold(SchurVector::one(), |acc, &k| {
            schur_product(&acc, &SchurVector::basis(Partition::row(k)))
        });
        if self.sign < 0 {
            -&prod
        } else {
            prod
        }
    }
}

impl fmt::Display for HMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "- " } else { "+ " })?;
        let factors: Vec<String> = self.indices.iter().map(|k| format!("h{}", k)).collect();
        f.write_str(&factors.join(" "))
    }
}

/// Permutations of `0..d` in lexicographic order, paired with their signs.
fn signed_permutations(d: usize) -> Vec<(i8, Vec<usize>)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut perms);
    perms
        .into_iter()
        .map(|p| (permutation_sign(&p), p))
        .collect()
}

fn permutation_sign(perm: &[usize]) -> i8 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Giambelli's determinant `det(s_{(αᵢ+1, 1^{βⱼ})})` expanded over `S_d`,
/// identity permutation first.
pub fn giambelli_leibniz(lambda: &Partition) -> Result<Vec<SignedHookProduct>> {
    if lambda.is_empty() {
        return Err(Error::Domain("Giambelli expansion of the empty partition".into()));
    }
    let coords = lambda.frobenius();
    let d = coords.rank();
    Ok(signed_permutations(d)
        .into_iter()
        .map(|(sign, sigma)| SignedHookProduct {
            sign,
            hooks: (0..d)
                .map(|i| Partition::hook(coords.alphas[i] + 1, coords.betas[sigma[i]]))
                .collect(),
        })
        .collect())
}

/// Jacobi–Trudi `det(h_{λᵢ−i+j})` expanded by Leibniz, dropping every term
/// with a negative index. Terms come in lexicographic order of `σ`.
pub fn jacobi_trudi(lambda: &Partition) -> Vec<HMonomial> {
    let len = lambda.len();
    let mut out = Vec::new();
    let mut sigma = Vec::with_capacity(len);
    let mut used = vec![false; len];
    fn rec(
        lambda: &Partition,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<HMonomial>,
    ) {
        let i = sigma.len();
        if i == used.len() {
            let indices = sigma
                .iter()
                .enumerate()
                .map(|(r, &c)| lambda.part(r) + c - r)
                .collect();
            out.push(HMonomial {
                sign: permutation_sign(sigma),
                indices,
            });
            return;
        }
        for c in 0..used.len() {
            // entry (i, c) is h_{λᵢ - i + c}; skip negative indices
            if used[c] || lambda.part(i) + c < i {
                continue;
            }
            used[c] = true;
            sigma.push(c);
            rec(lambda, sigma, used, out);
            sigma.pop();
            used[c] = false;
        }
    }
    rec(lambda, &mut sigma, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn near_hook_giambelli() {
        for (a, b, c) in [(4, 2, 0), (3, 2, 2), (5, 3, 1)] {
            let mut parts = vec![a, b];
            parts.extend(std::iter::repeat_n(1, c));
            let terms = giambelli_leibniz(&p(&parts)).unwrap();
            assert_eq!(
                terms,
                vec![
                    SignedHookProduct {
                        sign: 1,
                        hooks: vec![Partition::hook(a, c + 1), Partition::row(b - 1)],
                    },
                    SignedHookProduct {
                        sign: -1,
                        hooks: vec![Partition::row(a), Partition::hook(b - 1, c + 1)],
                    },
                ]
            );
        }
    }

    #[test]
    fn hook_and_staircase_giambelli() {
        let terms = giambelli_leibniz(&p(&[4, 1, 1])).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].hooks, vec![p(&[4, 1, 1])]);
        assert_eq!(terms[0].sign, 1);

        let lambda = p(&[3, 2, 1]);
        let terms = giambelli_leibniz(&lambda).unwrap();
        assert_eq!(terms.len(), 2);
        let sum = terms.iter().fold(SchurVector::zero(), |acc, t| &acc + &t.expand());
        assert_eq!(sum, SchurVector::basis(lambda));
        assert!(giambelli_leibniz(&p(&[])).is_err());
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(
            jacobi_trudi(&p(&[5, 3])),
            vec![
                HMonomial { sign: 1, indices: vec![5, 3] },
                HMonomial { sign: -1, indices: vec![6, 2] },
            ]
        );
        assert_eq!(jacobi_trudi(&p(&[4])), vec![HMonomial { sign: 1, indices: vec![4] }]);
        // (b-1-j, j) with b = 6, j = 2
        assert_eq!(
            jacobi_trudi(&p(&[3, 2])),
            vec![
                HMonomial { sign: 1, indices: vec![3, 2] },
                HMonomial { sign: -1, indices: vec![4, 1] },
            ]
        );
        // j = 0: the second term has h_{-1} and disappears
        assert_eq!(jacobi_trudi(&p(&[5])).len(), 1);
        assert_eq!(jacobi_trudi(&Partition::column(4)).len(), 8);
    }
}
