use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::ring::{Monomial, RingSignature};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

pub type Coeff = BigRational;

/// A multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a canonical form: strictly descending under
/// grevlex, no zero coefficients, no duplicate monomials. Two values
/// are equal iff they are the same mathematical polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    sig: RingSignature,
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn zero(sig: RingSignature) -> Self {
        Polynomial { sig, terms: Vec::new() }
    }

    pub fn one(sig: RingSignature) -> Self {
        Polynomial::constant(sig, Coeff::one())
    }

    pub fn constant(sig: RingSignature, c: Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(sig);
        }
        Polynomial {
            sig,
            terms: vec![(c, Monomial::one(sig.num_vars()))],
        }
    }

    pub fn var(sig: RingSignature, i: usize) -> Self {
        assert!(i < sig.num_vars());
        Polynomial {
            sig,
            terms: vec![(Coeff::one(), Monomial::var(i, sig.num_vars()))],
        }
    }

    pub fn monomial(sig: RingSignature, c: Coeff, m: Monomial) -> Self {
        assert_eq!(m.num_vars(), sig.num_vars());
        if c.is_zero() {
            return Polynomial::zero(sig);
        }
        Polynomial { sig, terms: vec![(c, m)] }
    }

    /// Canonicalize an arbitrary term list: merge duplicates, drop
    /// zeros, sort descending grevlex.
    pub fn from_terms(sig: RingSignature, terms: Vec<(Coeff, Monomial)>) -> Self {
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            debug_assert_eq!(m.num_vars(), sig.num_vars());
            let entry = map.entry(m).or_insert_with(Coeff::zero);
            *entry += c;
        }
        let mut terms: Vec<(Coeff, Monomial)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_unstable_by(|a, b| TermOrder::Grevlex.compare(&b.1, &a.1));
        Polynomial { sig, terms }
    }

    pub fn signature(&self) -> RingSignature {
        self.sig
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => {
                let d = m.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one() || self.is_zero()
    }

    /// The order-maximal term. Errors on the zero polynomial.
    pub fn leading_term(&self, order: TermOrder) -> Result<(&Coeff, &Monomial)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if order == TermOrder::Grevlex {
            let (c, m) = &self.terms[0];
            return Ok((c, m));
        }
        let (c, m) = self
            .terms
            .iter()
            .max_by(|a, b| order.compare(&a.1, &b.1))
            .unwrap();
        Ok((c, m))
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Result<Monomial> {
        Ok(self.leading_term(order)?.1.clone())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.sig.check_match(&other.sig)?;
        // merge two descending-sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match TermOrder::Grevlex.compare(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].0 + &other.terms[j].0;
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { sig: self.sig, terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            sig: self.sig,
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.sig);
        }
        Polynomial {
            sig: self.sig,
            terms: self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect(),
        }
    }

    /// Multiply by a single term c*m. Preserves sortedness.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.sig);
        }
        Polynomial {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (a * c, t.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.sig.check_match(&other.sig)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.sig));
        }
        let mut map: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                let m = ma.mul(mb);
                let entry = map.entry(m).or_insert_with(Coeff::zero);
                *entry += a * b;
            }
        }
        let mut terms: Vec<(Coeff, Monomial)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_unstable_by(|a, b| TermOrder::Grevlex.compare(&b.1, &a.1));
        Ok(Polynomial { sig: self.sig, terms })
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.sig);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Divide by the content: result has coprime integer coefficients
    /// and positive leading (grevlex) coefficient. Zero stays zero.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for (c, _) in &self.terms {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut numer_gcd = BigInt::zero();
        for (c, _) in &self.terms {
            numer_gcd = num_integer::gcd(numer_gcd, (c * &denom_lcm).to_integer());
        }
        let mut factor = BigRational::new(denom_lcm, numer_gcd);
        if self.terms[0].0.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: TermOrder) -> Result<Polynomial> {
        let (lc, _) = self.leading_term(order)?;
        let inv = lc.recip();
        Ok(self.scale(&inv))
    }

    /// Exact division by a nonzero polynomial; errors if the remainder
    /// would be nonzero (callers use this only when divisibility is
    /// guaranteed).
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.sig.check_match(&divisor.sig)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let order = TermOrder::Grevlex;
        let (dc, dm) = divisor.leading_term(order)?;
        let (dc, dm) = (dc.clone(), dm.clone());
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        while !rem.is_zero() {
            let (rc, rm) = rem.leading_term(order)?;
            let q = dm.div(rm).ok_or_else(|| {
                Error::Internal(format!("exact division failed: {} by {}", self, divisor))
            })?;
            let qc = rc / &dc;
            rem = rem.sub(&divisor.mul_term(&qc, &q))?;
            quot_terms.push((qc, q));
        }
        Ok(Polynomial::from_terms(self.sig, quot_terms))
    }

    /// Apply the substitution x_i -> images[i].
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.sig.num_vars());
        for im in images {
            self.sig.check_match(&im.signature())?;
        }
        // memoized powers of each image, up to the max exponent needed
        let nv = self.sig.num_vars();
        let mut max_exp = vec![0u32; nv];
        for (_, m) in &self.terms {
            for (i, e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(*e);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(nv);
        for i in 0..nv {
            let mut ps = vec![Polynomial::one(self.sig)];
            for k in 1..=max_exp[i] {
                let next = ps[(k - 1) as usize].mul(&images[i])?;
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut acc = Polynomial::zero(self.sig);
        for (c, m) in &self.terms {
            let mut term = Polynomial::constant(self.sig, c.clone());
            for (i, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    term = term.mul(&powers[i][*e as usize])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Lift into the ring with one extra elimination variable in front.
    pub fn lifted(&self) -> Polynomial {
        Polynomial {
            sig: self.sig.extended(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.clone(), m.lifted()))
                .collect(),
        }
    }

    /// Project back from the extended ring; the first variable must not
    /// occur.
    pub fn projected(&self, target: RingSignature) -> Result<Polynomial> {
        debug_assert_eq!(target.num_vars() + 1, self.sig.num_vars());
        for (_, m) in &self.terms {
            if m.exponents()[0] != 0 {
                return Err(Error::Internal(
                    "projection of a polynomial involving the elimination variable".into(),
                ));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), m.projected()))
            .collect();
        Ok(Polynomial { sig: target, terms })
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    /// Terms in descending grevlex; coefficient 1 omitted, -1 printed
    /// as a bare minus; no whitespace. This is the bit-exact inverse of
    /// the parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_monomial(m))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}
