use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::{monomial_count, monomials_of_degree, Monomial, RingSignature};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tabulated Hilbert function of S/J.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub values: Vec<u64>,
    pub stabilized: bool,
    pub stable_value: Option<u64>,
}

impl HilbertTable {
    pub fn first_differences(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.values.len());
        let mut prev = 0i64;
        for &v in &self.values {
            out.push(v as i64 - prev);
            prev = v as i64;
        }
        out
    }
}

/// A monomial ideal given by its minimal generators (mutually
/// non-dividing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    sig: RingSignature,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(sig: RingSignature, gens: Vec<Monomial>) -> Self {
        let mut minimal: Vec<Monomial> = Vec::new();
        let mut sorted = gens;
        sorted.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| TermOrder::Grevlex.compare(a, b))
        });
        sorted.dedup();
        for g in sorted {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { sig, gens: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn signature(&self) -> RingSignature {
        self.sig
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Number of degree-t monomials inside the ideal.
    pub fn count_in_degree(&self, t: u32) -> u64 {
        monomials_of_degree(self.sig.num_vars(), t)
            .iter()
            .filter(|m| self.contains(m))
            .count() as u64
    }
}

/// The initial (leading-monomial) ideal of I under `order`.
pub fn initial_ideal(ideal: &Ideal, order: TermOrder) -> Result<MonomialIdeal> {
    let gb = ideal.groebner(order)?;
    Ok(MonomialIdeal::new(ideal.signature(), gb.leading_monomials()))
}

/// Hilbert function of S/I for t = 0..=t_max, by counting standard
/// monomials of the grevlex initial ideal.
pub fn hilbert_function(ideal: &Ideal, t_max: u32) -> Result<HilbertTable> {
    let init = initial_ideal(ideal, TermOrder::Grevlex)?;
    let nv = ideal.signature().num_vars();
    let mut values = Vec::with_capacity(t_max as usize + 1);
    for t in 0..=t_max {
        let total = monomial_count(nv, t as i64);
        values.push(total - init.count_in_degree(t));
    }
    // stabilized when the tail is constant over at least two steps
    let n = values.len();
    let stabilized = n >= 3 && values[n - 1] == values[n - 2] && values[n - 2] == values[n - 3];
    let stable_value = if stabilized { Some(values[n - 1]) } else { None };
    Ok(HilbertTable {
        values,
        stabilized,
        stable_value,
    })
}

const HILBERT_CAP: u32 = 64;

/// Degree of the zero-dimensional scheme cut out by I: the stable value
/// of the Hilbert function of the saturation.
pub fn scheme_degree(ideal: &Ideal) -> Result<u64> {
    let sat = ideal.saturation(&Ideal::irrelevant(ideal.signature()))?;
    let init = initial_ideal(&sat, TermOrder::Grevlex)?;
    let nv = sat.signature().num_vars();
    let mut prev: Option<u64> = None;
    let mut run = 0u32;
    for t in 0..=HILBERT_CAP {
        let v = monomial_count(nv, t as i64) - init.count_in_degree(t);
        if prev == Some(v) {
            run += 1;
            if run >= 2 {
                return Ok(v);
            }
        } else {
            run = 0;
        }
        prev = Some(v);
    }
    Err(Error::NotStabilized(HILBERT_CAP as usize))
}

/// Characteristic-zero Borel-fixedness: swapping any variable of a
/// generator for a smaller-index variable stays in the ideal.
pub fn is_borel_fixed(m: &MonomialIdeal) -> bool {
    for u in &m.gens {
        for j in 0..u.num_vars() {
            if u.exponents()[j] == 0 {
                continue;
            }
            for i in 0..j {
                let mut exps = u.exponents().to_vec();
                exps[j] -= 1;
                exps[i] += 1;
                if !m.contains(&Monomial::new(exps)) {
                    return false;
                }
            }
        }
    }
    true
}

const GIN_ATTEMPTS: usize = 5;
const GIN_COEFF_RANGE: i64 = 100;

/// Generic initial ideal: grevlex initial ideal after a random
/// invertible linear change of coordinates drawn from `seed`, retried
/// until Borel-fixed.
pub fn generic_initial_ideal(ideal: &Ideal, seed: u64) -> Result<MonomialIdeal> {
    let sig = ideal.signature();
    let nv = sig.num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GIN_ATTEMPTS {
        let matrix = loop {
            let m = random_matrix(&mut rng, nv);
            if is_invertible(&m) {
                break m;
            }
        };
        let images: Vec<Polynomial> = (0..nv)
            .map(|i| {
                let terms = (0..nv)
                    .map(|j| {
                        (
                            BigRational::from_integer(BigInt::from(matrix[i][j])),
                            Monomial::var(j, nv),
                        )
                    })
                    .collect();
                Polynomial::from_terms(sig, terms)
            })
            .collect();
        let mut gens = Vec::with_capacity(ideal.generators().len());
        for g in ideal.generators() {
            gens.push(g.substitute(&images)?);
        }
        let transformed = Ideal::new(sig, gens)?;
        let init = initial_ideal(&transformed, TermOrder::Grevlex)?;
        if is_borel_fixed(&init) {
            return Ok(init);
        }
    }
    Err(Error::GinNotBorelFixed(GIN_ATTEMPTS))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| (rng.next_u64() % (2 * GIN_COEFF_RANGE as u64 + 1)) as i64 - GIN_COEFF_RANGE)
                .collect()
        })
        .collect()
}

fn is_invertible(m: &[Vec<i64>]) -> bool {
    // fraction-free elimination over BigInt
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| a[r][col] != BigInt::from(0)) {
            Some(p) => p,
            None => return false,
        };
        a.swap(col, pivot);
        for r in (col + 1)..n {
            let factor_num = a[r][col].clone();
            let factor_den = a[col][col].clone();
            for c in col..n {
                a[r][c] = &a[r][c] * &factor_den - &factor_num * &a[col][c];
            }
        }
    }
    true
}

/// Castelnuovo-Mumford regularity: the maximum generator degree of the
/// Borel-fixed generic initial ideal. Computed for two seeds and
/// required to agree.
pub fn regularity(ideal: &Ideal, seed: u64) -> Result<u32> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let g1 = generic_initial_ideal(ideal, seed)?;
    let r1 = g1.max_generator_degree();
    let seed2 = seed.wrapping_add(1);
    let g2 = generic_initial_ideal(ideal, seed2)?;
    let r2 = g2.max_generator_degree();
    if r1 != r2 {
        return Err(Error::SeedDisagreement(seed, seed2, r1 as usize, r2 as usize));
    }
    Ok(r1)
}

/// The sequence reg(I^r)/r for r = 1..=r_max.
pub fn areg_estimate(ideal: &Ideal, r_max: u32, seed: u64) -> Result<Vec<BigRational>> {
    if r_max < 2 {
        return Err(Error::InvalidParameter("areg needs r_max >= 2".into()));
    }
    let mut out = Vec::with_capacity(r_max as usize);
    for r in 1..=r_max {
        let reg = regularity(&ideal.power(r)?, seed)?;
        out.push(BigRational::new(BigInt::from(reg), BigInt::from(r)));
    }
    Ok(out)
}

/// A complex of free graded modules presented by polynomial matrices.
/// twists[0] belongs to F0 (always [0] here, i.e. F0 = S), twists[i]
/// to F_i; matrices[i-1] is A_i: F_i -> F_{i-1}, entry (p, q)
/// homogeneous of degree twists[i][q] - twists[i-1][p] or zero.
#[derive(Debug, Clone)]
pub struct GradedComplex {
    pub sig: RingSignature,
    pub twists: Vec<Vec<i64>>,
    pub matrices: Vec<Vec<Vec<Polynomial>>>,
}

impl GradedComplex {
    fn check_shapes(&self) -> Result<()> {
        if self.twists.len() != self.matrices.len() + 1 {
            return Err(Error::ShapeMismatch(format!(
                "{} twist lists for {} matrices",
                self.twists.len(),
                self.matrices.len()
            )));
        }
        for (i, mat) in self.matrices.iter().enumerate() {
            let rows = self.twists[i].len();
            let cols = self.twists[i + 1].len();
            if mat.len() != rows || mat.iter().any(|r| r.len() != cols) {
                return Err(Error::ShapeMismatch(format!(
                    "matrix A{} is not {} x {}",
                    i + 1,
                    rows,
                    cols
                )));
            }
        }
        Ok(())
    }

    pub fn entries_homogeneous(&self) -> bool {
        for (i, mat) in self.matrices.iter().enumerate() {
            for (p, row) in mat.iter().enumerate() {
                for (q, entry) in row.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let expected = self.twists[i + 1][q] - self.twists[i][p];
                    if !entry.is_homogeneous() || entry.degree().map(i64::from) != Some(expected) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn compositions_vanish(&self) -> Result<bool> {
        for w in self.matrices.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let rows = a.len();
            let mid = b.len();
            let cols = b[0].len();
            for r in 0..rows {
                for c in 0..cols {
                    let mut acc = Polynomial::zero(self.sig);
                    for k in 0..mid {
                        acc = acc.add(&a[r][k].mul(&b[k][c])?)?;
                    }
                    if !acc.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Verify a stated complex against an ideal: consecutive products
/// vanish, the first matrix generates I, entries are homogeneous of
/// the twist-prescribed degrees, and the alternating sum of
/// twist-derived Hilbert series reproduces HF(S/I) up to t_max.
pub fn verify_complex(complex: &GradedComplex, ideal: &Ideal, t_max: u32) -> Result<bool> {
    complex.sig.check_match(&ideal.signature())?;
    complex.check_shapes()?;
    if complex.twists[0] != vec![0] {
        return Err(Error::ShapeMismatch("F0 must be S itself".into()));
    }
    if !complex.entries_homogeneous() {
        return Ok(false);
    }
    if !complex.compositions_vanish()? {
        return Ok(false);
    }
    // columns of A1 must generate I
    let a1 = &complex.matrices[0];
    let cols: Vec<Polynomial> = a1[0].iter().filter(|f| !f.is_zero()).cloned().collect();
    let generated = Ideal::new(complex.sig, cols)?;
    if !generated.ideal_eq(ideal)? {
        return Ok(false);
    }
    // graded Euler characteristic
    let hf = hilbert_function(ideal, t_max)?;
    let nv = complex.sig.num_vars();
    for t in 0..=t_max {
        let mut expected: i64 = 0;
        for (i, twist_list) in complex.twists.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &a in twist_list {
                expected += sign * monomial_count(nv, t as i64 - a) as i64;
            }
        }
        if expected != hf.values[t as usize] as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn sig(n: usize) -> RingSignature {
        RingSignature::projective(n).unwrap()
    }

    fn p(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, sig(n)).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        Ideal::new(sig(n), gens.iter().map(|g| p(g, n)).collect()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn irrelevant_hilbert_function() {
        let i = Ideal::irrelevant(sig(2));
        let hf = hilbert_function(&i, 5).unwrap();
        assert_eq!(hf.values, vec![1, 0, 0, 0, 0, 0]);
        assert!(hf.stabilized);
        assert_eq!(hf.stable_value, Some(0));
    }

    #[test]
    fn single_point_degree() {
        let i = ideal(&["x1", "x2"], 2);
        assert_eq!(scheme_degree(&i).unwrap(), 1);
    }

    #[test]
    fn borel_fixed_examples() {
        let s = sig(2);
        // <x0^2, x0x1, x1^3> is Borel-fixed in 3 variables
        let b = MonomialIdeal::new(s, vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 3, 0])]);
        assert!(is_borel_fixed(&b));
        // <x1^2> misses x0*x1
        let nb = MonomialIdeal::new(s, vec![m(&[0, 2, 0])]);
        assert!(!is_borel_fixed(&nb));
        // <x0>: nothing smaller to swap to
        let principal = MonomialIdeal::new(s, vec![m(&[1, 0, 0])]);
        assert!(is_borel_fixed(&principal));
    }

    #[test]
    fn gin_of_irrelevant_is_itself() {
        let i = Ideal::irrelevant(sig(2));
        let g = generic_initial_ideal(&i, 0).unwrap();
        let expect = MonomialIdeal::new(sig(2), vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
        assert_eq!(g, expect);
        assert_eq!(regularity(&i, 0).unwrap(), 1);
    }

    #[test]
    fn gin_of_principal_conic_is_x0_squared() {
        let i = ideal(&["x1^2-x0*x2"], 2);
        let g1 = generic_initial_ideal(&i, 1).unwrap();
        let g2 = generic_initial_ideal(&i, 17).unwrap();
        let expect = MonomialIdeal::new(sig(2), vec![m(&[2, 0, 0])]);
        assert_eq!(g1, expect);
        assert_eq!(g2, expect);
    }

    #[test]
    fn minimal_monomial_generators_deduplicated() {
        let s = sig(2);
        let mi = MonomialIdeal::new(s, vec![m(&[1, 0, 0]), m(&[2, 0, 0]), m(&[1, 1, 0])]);
        assert_eq!(mi.generators(), &[m(&[1, 0, 0])]);
    }

    #[test]
    fn corrupted_complex_fails() {
        // conic j=0, d=2: flip one sign in A2 and the product check fails
        let s = sig(2);
        let q = p("x1^2-x0*x2", 2);
        let g = p("x1*x0-x1*x2", 2);
        let i = Ideal::new(s, vec![q.clone(), g.clone()]).unwrap();
        let good = GradedComplex {
            sig: s,
            twists: vec![vec![0], vec![2, 2], vec![4]],
            matrices: vec![
                vec![vec![q.clone(), g.clone()]],
                vec![vec![g.clone()], vec![q.neg()]],
            ],
        };
        assert!(verify_complex(&good, &i, 10).unwrap());
        let bad = GradedComplex {
            sig: s,
            twists: vec![vec![0], vec![2, 2], vec![4]],
            matrices: vec![vec![vec![q.clone(), g.clone()]], vec![vec![g], vec![q]]],
        };
        assert!(!verify_complex(&bad, &i, 10).unwrap());
    }
}
