// Shared between test binaries; each binary uses a different subset.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rnc::linalg;
use rnc::poly::Coeff;
use rnc::ring::{monomial_count, monomials_of_degree};
use rnc::{Ideal, Monomial, Polynomial, RingSignature};
use std::collections::HashMap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pick(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    rng.next_u64() % bound
}

pub fn random_monomial(rng: &mut ChaCha8Rng, num_vars: usize, max_deg: u32) -> Monomial {
    let deg = pick(rng, max_deg as u64 + 1) as u32;
    let mut exps = vec![0u32; num_vars];
    for _ in 0..deg {
        let i = pick(rng, num_vars as u64) as usize;
        exps[i] += 1;
    }
    Monomial::new(exps)
}

pub fn random_homogeneous_poly(
    rng: &mut ChaCha8Rng,
    sig: RingSignature,
    deg: u32,
    max_terms: usize,
) -> Polynomial {
    let monos = monomials_of_degree(sig.num_vars(), deg);
    let nt = pick(rng, max_terms as u64) as usize + 1;
    let mut terms = Vec::with_capacity(nt);
    for _ in 0..nt {
        let c = pick(rng, 19) as i64 - 9;
        if c == 0 {
            continue;
        }
        let m = monos[pick(rng, monos.len() as u64) as usize].clone();
        terms.push((Coeff::from_integer(BigInt::from(c)), m));
    }
    Polynomial::from_terms(sig, terms)
}

/// Coefficient row of a polynomial in the degree-t monomial basis.
pub fn poly_row(f: &Polynomial, index: &HashMap<Monomial, usize>, width: usize) -> Vec<Coeff> {
    let mut row = vec![Coeff::from_integer(BigInt::from(0)); width];
    for (c, m) in f.terms() {
        row[index[m]] = c.clone();
    }
    row
}

/// dim of the degree-t graded piece of the ideal generated by `gens`,
/// by ranking the rows of all monomial multiples that land in degree t.
/// Independent of any Groebner machinery.
pub fn dim_degree_oracle(gens: &[Polynomial], sig: RingSignature, t: u32) -> usize {
    let monos = monomials_of_degree(sig.num_vars(), t);
    let index: HashMap<Monomial, usize> = monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let width = monos.len();
    let one = Coeff::from_integer(BigInt::from(1));
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(sig.num_vars(), t - dg) {
            rows.push(poly_row(&g.mul_term(&one, &m), &index, width));
        }
    }
    linalg::rank(rows, width)
}

/// Hilbert function of S/<gens> by the rank oracle.
pub fn hf_oracle(gens: &[Polynomial], sig: RingSignature, t: u32) -> u64 {
    monomial_count(sig.num_vars(), t as i64) - dim_degree_oracle(gens, sig, t) as u64
}

/// A monomial ideal with combinatorial (division-based) operations,
/// serving as an independent oracle for intersection, colon, and
/// saturation of the polynomial-ideal machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoOracle {
    pub num_vars: usize,
    pub gens: Vec<Monomial>,
}

impl MonoOracle {
    pub fn new(num_vars: usize, gens: Vec<Monomial>) -> Self {
        let mut sorted = gens;
        sorted.sort_by_key(|m| (m.degree(), m.exponents().to_vec()));
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in sorted {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonoOracle {
            num_vars,
            gens: minimal,
        }
    }

    pub fn member(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn intersection(&self, other: &MonoOracle) -> MonoOracle {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonoOracle::new(self.num_vars, gens)
    }

    pub fn colon_single(&self, h: &Monomial) -> MonoOracle {
        let gens = self
            .gens
            .iter()
            .map(|g| g.gcd(h).div(g).expect("gcd divides"))
            .collect();
        MonoOracle::new(self.num_vars, gens)
    }

    pub fn colon(&self, other: &MonoOracle) -> MonoOracle {
        let mut acc: Option<MonoOracle> = None;
        for h in &other.gens {
            let piece = self.colon_single(h);
            acc = Some(match acc {
                None => piece,
                Some(prev) => prev.intersection(&piece),
            });
        }
        acc.expect("nonempty generators")
    }

    pub fn irrelevant(num_vars: usize) -> MonoOracle {
        MonoOracle::new(
            num_vars,
            (0..num_vars).map(|i| Monomial::var(i, num_vars)).collect(),
        )
    }

    pub fn saturation(&self, other: &MonoOracle) -> MonoOracle {
        let mut current = self.clone();
        loop {
            let next = current.colon(other);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn to_ideal(&self, sig: RingSignature) -> Ideal {
        let one = Coeff::from_integer(BigInt::from(1));
        let gens = self
            .gens
            .iter()
            .map(|m| Polynomial::monomial(sig, one.clone(), m.clone()))
            .collect();
        Ideal::new(sig, gens).expect("nonempty monomial generators")
    }
}

pub fn random_mono_oracle(rng: &mut ChaCha8Rng, num_vars: usize, max_deg: u32) -> MonoOracle {
    let count = pick(rng, 3) as usize + 1;
    let gens = (0..count)
        .map(|_| {
            let mut m = random_monomial(rng, num_vars, max_deg);
            if m.is_one() {
                m = Monomial::var(0, num_vars);
            }
            m
        })
        .collect();
    MonoOracle::new(num_vars, gens)
}
