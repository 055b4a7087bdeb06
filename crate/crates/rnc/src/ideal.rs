use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::linalg::RowSpace;
use crate::order::TermOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{monomials_of_degree, Monomial, RingSignature};
use num_traits::One;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A homogeneous ideal given by a generator list, with a memoized
/// reduced Groebner basis per term order. Clones share the cache.
#[derive(Debug, Clone)]
pub struct Ideal {
    sig: RingSignature,
    gens: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>>,
}

impl Ideal {
    pub fn new(sig: RingSignature, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            sig.check_match(&g.signature())?;
        }
        if gens.iter().all(|g| g.is_zero()) {
            return Err(Error::EmptyGenerators);
        }
        Ok(Ideal {
            sig,
            gens,
            cache: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn principal(f: Polynomial) -> Result<Self> {
        let sig = f.signature();
        Ideal::new(sig, vec![f])
    }

    /// The irrelevant maximal ideal (x0, ..., xn).
    pub fn irrelevant(sig: RingSignature) -> Self {
        let gens = (0..sig.num_vars())
            .map(|i| Polynomial::var(sig, i))
            .collect();
        Ideal::new(sig, gens).expect("irrelevant ideal is never empty")
    }

    pub fn signature(&self) -> RingSignature {
        self.sig
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NonHomogeneous)
        }
    }

    /// The reduced Groebner basis under `order`, computed at most once.
    pub fn groebner(&self, order: TermOrder) -> Result<Arc<GroebnerBasis>> {
        let mut cache = self.cache.lock().unwrap();
        if let Some(gb) = cache.get(&order) {
            return Ok(Arc::clone(gb));
        }
        let gb = Arc::new(buchberger(&self.gens, order)?);
        cache.insert(order, Arc::clone(&gb));
        Ok(gb)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner(TermOrder::Grevlex)?.is_unit())
    }

    /// Ideal membership through the division algorithm.
    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        self.sig.check_match(&f.signature())?;
        if f.is_zero() {
            return Ok(true);
        }
        let gb = self.groebner(TermOrder::Grevlex)?;
        Ok(normal_form(f, &gb.elements, TermOrder::Grevlex)?.is_zero())
    }

    /// True iff other is contained in self.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.sig.check_match(&other.sig)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality: identical reduced grevlex Groebner bases.
    pub fn ideal_eq(&self, other: &Ideal) -> Result<bool> {
        self.sig.check_match(&other.sig)?;
        Ok(self.groebner(TermOrder::Grevlex)?.elements
            == other.groebner(TermOrder::Grevlex)?.elements)
    }

    /// Ordinary power: generated by all r-fold products of generators.
    pub fn power(&self, r: u32) -> Result<Ideal> {
        if r == 0 {
            return Err(Error::InvalidParameter(
                "ideal power requires r >= 1".into(),
            ));
        }
        if r == 1 {
            return Ok(self.clone());
        }
        let nonzero: Vec<&Polynomial> = self.gens.iter().filter(|g| !g.is_zero()).collect();
        let mut products: Vec<Polynomial> = Vec::new();
        let mut stack: Vec<usize> = vec![0; r as usize];
        loop {
            let mut prod = Polynomial::one(self.sig);
            for &i in &stack {
                prod = prod.mul(nonzero[i])?;
            }
            if !prod.is_zero() && !products.contains(&prod) {
                products.push(prod);
            }
            // next non-decreasing index tuple
            let mut pos = stack.len();
            loop {
                if pos == 0 {
                    return Ideal::new(self.sig, products);
                }
                pos -= 1;
                if stack[pos] + 1 < nonzero.len() {
                    let v = stack[pos] + 1;
                    for s in stack.iter_mut().skip(pos) {
                        *s = v;
                    }
                    break;
                }
            }
        }
    }

    /// Generated by all pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.sig.check_match(&other.sig)?;
        let mut gens = Vec::new();
        for f in self.gens.iter().filter(|g| !g.is_zero()) {
            for g in other.gens.iter().filter(|g| !g.is_zero()) {
                let p = f.mul(g)?;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(self.sig, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.sig.check_match(&other.sig)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.sig, gens)
    }

    /// Intersection via a single auxiliary elimination variable t:
    /// eliminate t from t*I + (1-t)*J.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.sig.check_match(&other.sig)?;
        let ext = self.sig.extended();
        let t = Polynomial::var(ext, 0);
        let one_minus_t = Polynomial::one(ext).sub(&t)?;
        let mut gens = Vec::new();
        for f in self.gens.iter().filter(|g| !g.is_zero()) {
            gens.push(t.mul(&f.lifted())?);
        }
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            gens.push(one_minus_t.mul(&g.lifted())?);
        }
        let gb = buchberger(&gens, TermOrder::Block(1))?;
        let mut result = Vec::new();
        for g in &gb.elements {
            if g.terms().iter().all(|(_, m)| m.exponents()[0] == 0) {
                result.push(g.projected(self.sig)?);
            }
        }
        if result.is_empty() {
            return Err(Error::Internal(
                "intersection of nonzero ideals came out empty".into(),
            ));
        }
        Ideal::new(self.sig, result)
    }

    /// Colon ideal {f : f*J contained in self}, computed generator by
    /// generator of J as (self intersect <g>)/g.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.sig.check_match(&other.sig)?;
        let mut acc: Option<Ideal> = None;
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let slice = self.intersection(&Ideal::principal(g.clone())?)?;
            let mut quotients = Vec::with_capacity(slice.gens.len());
            for h in &slice.gens {
                quotients.push(h.div_exact(g)?);
            }
            let part = Ideal::new(self.sig, quotients)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersection(&part)?,
            });
        }
        acc.ok_or(Error::EmptyGenerators)
    }

    /// Stabilized iterated colon (self : other^infinity).
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        for _ in 0..50 {
            let next = current.colon(other)?;
            if next.ideal_eq(&current)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::IterationCap("saturation"))
    }

    /// m-th symbolic power: for saturated ideals of reduced points this
    /// is the irrelevant-ideal saturation of the ordinary power.
    pub fn symbolic_power(&self, m: u32) -> Result<Ideal> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "symbolic power requires m >= 1".into(),
            ));
        }
        self.power(m)?.saturation(&Ideal::irrelevant(self.sig))
    }

    /// A basis of the degree-t graded piece as a vector space: one
    /// element per degree-t monomial in the initial ideal, with that
    /// monomial as its leading term.
    pub fn basis_of_degree(&self, t: u32) -> Result<Vec<Polynomial>> {
        let gb = self.groebner(TermOrder::Grevlex)?;
        let leads = gb.leading_monomials();
        let mut out = Vec::new();
        for u in monomials_of_degree(self.sig.num_vars(), t) {
            if let Some(pos) = leads.iter().position(|l| l.divides(&u)) {
                let shift = leads[pos].div(&u).unwrap();
                out.push(gb.elements[pos].mul_term(&Coeff::one(), &shift));
            }
        }
        Ok(out)
    }

    /// dim_K of the degree-t graded piece.
    pub fn dim_of_degree(&self, t: u32) -> Result<usize> {
        let gb = self.groebner(TermOrder::Grevlex)?;
        let leads = gb.leading_monomials();
        Ok(monomials_of_degree(self.sig.num_vars(), t)
            .iter()
            .filter(|u| leads.iter().any(|l| l.divides(u)))
            .count())
    }

    /// Degree-by-degree minimal generators of a homogeneous ideal, with
    /// deterministic reduced-echelon representatives.
    pub fn minimal_generators(&self) -> Result<MinimalGenerators> {
        self.require_homogeneous()?;
        if self.is_unit()? {
            return Ok(MinimalGenerators {
                elements: vec![Polynomial::one(self.sig)],
                degrees: vec![0],
                alpha: 0,
                beta: 0,
            });
        }
        let gb = self.groebner(TermOrder::Grevlex)?;
        let low = gb
            .elements
            .iter()
            .filter_map(|g| g.degree())
            .min()
            .expect("nonzero ideal");
        let high = self
            .gens
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .expect("nonzero ideal");
        let nv = self.sig.num_vars();
        let mut elements = Vec::new();
        let mut degrees = Vec::new();
        let mut prev_basis: Vec<Polynomial> = Vec::new();
        for t in low..=high {
            let monos = monomials_of_degree(nv, t);
            let index: HashMap<&Monomial, usize> =
                monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut space = RowSpace::new(monos.len());
            for b in &prev_basis {
                for i in 0..nv {
                    let shifted = b.mul_term(&Coeff::one(), &Monomial::var(i, nv));
                    space.insert(poly_row(&shifted, &index));
                }
            }
            let basis_t = self.basis_of_degree(t)?;
            for cand in &basis_t {
                if let Some(residual) = space.insert(poly_row(cand, &index)) {
                    elements.push(row_poly(&residual, &monos, self.sig));
                    degrees.push(t);
                }
            }
            prev_basis = basis_t;
        }
        let alpha = degrees.iter().copied().min().unwrap_or(0);
        let beta = degrees.iter().copied().max().unwrap_or(0);
        Ok(MinimalGenerators {
            elements,
            degrees,
            alpha,
            beta,
        })
    }

    /// Number of minimal generators of the module I^(m)/I^m.
    pub fn sdefect(&self, m: u32) -> Result<u32> {
        if m < 2 {
            return Err(Error::InvalidParameter("sdefect requires m >= 2".into()));
        }
        let sym = self.symbolic_power(m)?;
        let ord = self.power(m)?;
        let mg = sym.minimal_generators()?;
        let nv = self.sig.num_vars();
        let mut total: u32 = 0;
        let mut prev_sym_basis: Vec<Polynomial> = Vec::new();
        for t in mg.alpha..=mg.beta {
            let monos = monomials_of_degree(nv, t);
            let index: HashMap<&Monomial, usize> =
                monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut space = RowSpace::new(monos.len());
            for f in ord.basis_of_degree(t)? {
                space.insert(poly_row(&f, &index));
            }
            for b in &prev_sym_basis {
                for i in 0..nv {
                    let shifted = b.mul_term(&Coeff::one(), &Monomial::var(i, nv));
                    space.insert(poly_row(&shifted, &index));
                }
            }
            let covered = space.rank();
            let sym_basis = sym.basis_of_degree(t)?;
            total += (sym_basis.len() - covered.min(sym_basis.len())) as u32;
            prev_sym_basis = sym_basis;
        }
        Ok(total)
    }
}

fn poly_row(f: &Polynomial, index: &HashMap<&Monomial, usize>) -> Vec<Coeff> {
    let mut row = vec![Coeff::from_integer(0.into()); index.len()];
    for (c, m) in f.terms() {
        row[index[m]] = c.clone();
    }
    row
}

fn row_poly(row: &[Coeff], monos: &[Monomial], sig: RingSignature) -> Polynomial {
    let terms = row
        .iter()
        .zip(monos)
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .map(|(c, m)| (c.clone(), m.clone()))
        .collect();
    Polynomial::from_terms(sig, terms)
}

/// A minimal generating set of a homogeneous ideal plus its degree
/// statistics alpha (min) and beta (max).
#[derive(Debug, Clone)]
pub struct MinimalGenerators {
    pub elements: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub alpha: u32,
    pub beta: u32,
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

    #[test]
    fn membership_basics() {
        let i = ideal(&["x1^2-x0*x2"], 2);
        assert!(i.member(&p("x1^2-x0*x2", 2)).unwrap());
        assert!(!i.member(&p("x0", 2)).unwrap());
    }

    #[test]
    fn power_identity_and_square() {
        let i = ideal(&["x1^2-x0*x2", "x1*x0-x1*x2"], 2);
        assert!(i.power(1).unwrap().ideal_eq(&i).unwrap());
        let sq = i.power(2).unwrap();
        assert_eq!(sq.generators().len(), 3);
        assert!(i.contains(&sq).unwrap());
        assert!(i.power(0).is_err());
        // I^(a+b) = I^a * I^b
        let lhs = i.power(3).unwrap();
        let rhs = i.power(2).unwrap().product(&i).unwrap();
        assert!(lhs.ideal_eq(&rhs).unwrap());
    }

    #[test]
    fn intersection_of_coprime_principals() {
        let a = ideal(&["x0"], 2);
        let b = ideal(&["x1"], 2);
        let c = a.intersection(&b).unwrap();
        assert!(c.ideal_eq(&ideal(&["x0*x1"], 2)).unwrap());
        // I cap I = I
        assert!(a.intersection(&a).unwrap().ideal_eq(&a).unwrap());
    }

    #[test]
    fn intersection_of_linear_ideals() {
        let a = ideal(&["x0", "x1"], 2);
        let b = ideal(&["x1", "x2"], 2);
        let c = a.intersection(&b).unwrap();
        assert!(c.ideal_eq(&ideal(&["x1", "x0*x2"], 2)).unwrap());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(&["x0^2"], 2);
        let j = ideal(&["x0"], 2);
        assert!(i.colon(&j).unwrap().ideal_eq(&j).unwrap());

        let i = ideal(&["x0*x1", "x0*x2"], 2);
        let c = i.colon(&ideal(&["x0"], 2)).unwrap();
        assert!(c.ideal_eq(&ideal(&["x1", "x2"], 2)).unwrap());

        // colon(I, I) is the unit ideal
        let i = ideal(&["x1^2-x0*x2"], 2);
        assert!(i.colon(&i).unwrap().is_unit().unwrap());
    }

    #[test]
    fn saturation_classic_example() {
        let i = ideal(&["x0^2", "x0*x1"], 2);
        let m = ideal(&["x0", "x1"], 2);
        let s = i.saturation(&m).unwrap();
        assert!(s.ideal_eq(&ideal(&["x0"], 2)).unwrap());
    }

    #[test]
    fn saturated_ideal_is_a_fixpoint() {
        let i = ideal(&["x1^2-x0*x2", "x1*x0-x1*x2"], 2);
        let s = i.saturation(&Ideal::irrelevant(sig(2))).unwrap();
        assert!(s.ideal_eq(&i).unwrap());
    }

    #[test]
    fn symbolic_power_m1_is_identity_on_saturated() {
        let i = ideal(&["x1", "x2"], 2);
        assert!(i.symbolic_power(1).unwrap().ideal_eq(&i).unwrap());
        assert!(i.symbolic_power(0).is_err());
    }

    #[test]
    fn ordinary_power_always_inside_symbolic() {
        let i = ideal(&["x1^2-x0*x2", "x1*x0-x1*x2"], 2);
        for m in 2..=3 {
            let sym = i.symbolic_power(m).unwrap();
            let ord = i.power(m).unwrap();
            assert!(sym.contains(&ord).unwrap());
        }
    }

    #[test]
    fn minimal_generators_redundancy_removal() {
        let i = ideal(&["x0", "x0^2"], 2);
        let mg = i.minimal_generators().unwrap();
        assert_eq!(mg.elements, vec![p("x0", 2)]);
        assert_eq!(mg.degrees, vec![1]);
        assert_eq!((mg.alpha, mg.beta), (1, 1));
    }

    #[test]
    fn minimal_generators_rejects_non_homogeneous() {
        let i = ideal(&["x0^2+x1"], 2);
        assert!(i.minimal_generators().is_err());
    }

    #[test]
    fn sdefect_of_complete_intersection_point_is_zero() {
        let i = ideal(&["x1", "x2"], 2);
        for m in 2..=3 {
            assert_eq!(i.sdefect(m).unwrap(), 0);
        }
    }

    #[test]
    fn unit_ideal_flag() {
        let i = ideal(&["x0", "x0+1"], 2);
        assert!(i.is_unit().unwrap());
        let j = ideal(&["x0"], 2);
        assert!(!j.is_unit().unwrap());
    }

    #[test]
    fn dim_of_degree_matches_basis() {
        let i = ideal(&["x1^2-x0*x2", "x1*x0-x1*x2"], 2);
        for t in 0..6 {
            assert_eq!(i.dim_of_degree(t).unwrap(), i.basis_of_degree(t).unwrap().len());
        }
    }
}
