use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The ring S = K[x0..xn] is identified by its variable count alone;
/// variable names are fixed as x0, x1, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSignature {
    num_vars: usize,
}

impl RingSignature {
    pub fn new(num_vars: usize) -> Result<Self> {
        if num_vars < 2 {
            return Err(Error::InvalidParameter(format!(
                "ring needs at least 2 variables, got {num_vars}"
            )));
        }
        Ok(RingSignature { num_vars })
    }

    /// Signature of K[x0..xn] for ambient projective dimension n.
    pub fn projective(n: usize) -> Result<Self> {
        RingSignature::new(n + 1)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Same ring with one extra variable prepended (used for elimination).
    pub fn extended(&self) -> Self {
        RingSignature {
            num_vars: self.num_vars + 1,
        }
    }

    pub fn check_match(&self, other: &RingSignature) -> Result<()> {
        if self != other {
            Err(Error::SignatureMismatch(self.num_vars, other.num_vars))
        } else {
            Ok(())
        }
    }
}

/// A power product of the variables, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    pub fn var(i: usize, num_vars: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, when it divides.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Prepend a zero exponent for a new first variable.
    pub fn lifted(&self) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + 1);
        exps.push(0);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// Drop the first variable; only valid when its exponent is zero.
    pub fn projected(&self) -> Monomial {
        debug_assert_eq!(self.exps[0], 0);
        Monomial {
            exps: self.exps[1..].to_vec(),
        }
    }
}

/// All monomials of the given total degree in `num_vars` variables,
/// in a fixed deterministic order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Number of monomials of total degree `t` in `num_vars` variables,
/// i.e. C(t + num_vars - 1, num_vars - 1). Zero for negative t.
pub fn monomial_count(num_vars: usize, t: i64) -> u64 {
    if t < 0 {
        return 0;
    }
    let n = (num_vars - 1) as u64;
    let t = t as u64;
    let mut acc: u64 = 1;
    for k in 1..=n {
        acc = acc * (t + k) / k;
    }
    acc
}
