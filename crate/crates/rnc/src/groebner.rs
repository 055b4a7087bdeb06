use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::Monomial;
use num_traits::Zero;
use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap, HashSet};

/// A reduced Groebner basis: elements monic under `order`, no term of
/// any element divisible by the leading monomial of another, sorted
/// ascending by leading monomial. Unique per (ideal, order), so list
/// equality is ideal equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("GB element nonzero"))
            .collect()
    }

    /// The basis consists of the single constant 1, i.e. the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }
}

/// Monomial keyed by a runtime term order, so a BTreeMap can hold a
/// polynomial sorted under any order.
#[derive(Debug, Clone)]
struct Keyed {
    order: TermOrder,
    mono: Monomial,
}

impl PartialEq for Keyed {
    fn eq(&self, other: &Self) -> bool {
        self.mono == other.mono
    }
}
impl Eq for Keyed {}
impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.compare(&self.mono, &other.mono)
    }
}

fn to_map(f: &Polynomial, order: TermOrder) -> BTreeMap<Keyed, Coeff> {
    f.terms()
        .iter()
        .map(|(c, m)| {
            (
                Keyed {
                    order,
                    mono: m.clone(),
                },
                c.clone(),
            )
        })
        .collect()
}

/// Remainder of `f` on division by `basis` under `order`: no term of
/// the result is divisible by any basis leading monomial, and
/// f - result lies in the ideal generated by `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: TermOrder) -> Result<Polynomial> {
    let sig = f.signature();
    let mut leads = Vec::with_capacity(basis.len());
    for g in basis {
        sig.check_match(&g.signature())?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        leads.push((g.leading_term(order)?.0.clone(), g.leading_monomial(order)?));
    }
    let mut work = to_map(f, order);
    let mut remainder: Vec<(Coeff, Monomial)> = Vec::new();
    while let Some((key, coeff)) = work.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let mut reduced = false;
        for (i, (lc, lm)) in leads.iter().enumerate() {
            if let Some(shift) = lm.div(&key.mono) {
                let factor = &coeff / lc;
                work.remove(&key);
                // leading term cancels exactly; subtract the tail
                for (gc, gm) in basis[i].terms() {
                    if gm == lm {
                        continue;
                    }
                    subtract_single(&mut work, order, &(&factor * gc), &shift, gm);
                }
                reduced = true;
                break;
            }
        }
        if !reduced {
            work.remove(&key);
            remainder.push((coeff, key.mono));
        }
    }
    Ok(Polynomial::from_terms(sig, remainder))
}

fn subtract_single(
    map: &mut BTreeMap<Keyed, Coeff>,
    order: TermOrder,
    delta: &Coeff,
    shift: &Monomial,
    gm: &Monomial,
) {
    let key = Keyed {
        order,
        mono: gm.mul(shift),
    };
    match map.get_mut(&key) {
        Some(c) => {
            *c -= delta;
            if c.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, -delta.clone());
        }
    }
}

/// The S-polynomial of f and g under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: TermOrder) -> Result<Polynomial> {
    let (fc, fm) = f.leading_term(order)?;
    let (gc, gm) = g.leading_term(order)?;
    let lcm = fm.lcm(gm);
    let uf = fm.div(&lcm).unwrap();
    let ug = gm.div(&lcm).unwrap();
    let left = f.mul_term(&fc.recip(), &uf);
    let right = g.mul_term(&gc.recip(), &ug);
    left.sub(&right)
}

/// Buchberger's algorithm with the normal (minimal lcm degree first)
/// selection strategy, the coprime criterion, and the chain criterion.
/// Returns the reduced Groebner basis.
pub fn buchberger(gens: &[Polynomial], order: TermOrder) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let sig = gens[0].signature();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        sig.check_match(&g.signature())?;
        if !g.is_zero() {
            basis.push(g.primitive_part());
        }
    }
    if basis.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    basis.sort_by(|a, b| {
        order.compare(
            &a.leading_monomial(order).unwrap(),
            &b.leading_monomial(order).unwrap(),
        )
    });
    basis.dedup();

    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap())
        .collect();

    // min-heap on (lcm degree, i, j)
    let mut pairs: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let deg = leads[i].lcm(&leads[j]).degree();
            pairs.push(Reverse((deg, i, j)));
        }
    }
    let mut handled: HashSet<(usize, usize)> = HashSet::new();

    while let Some(Reverse((_, i, j))) = pairs.pop() {
        handled.insert((i, j));
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let lcm_ij = leads[i].lcm(&leads[j]);
        // chain criterion: some already-handled k whose leading
        // monomial divides lcm(i, j)
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm_ij)
                && handled.contains(&key(i, k))
                && handled.contains(&key(j, k))
        });
        if chained {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = normal_form(&s, &basis, order)?;
        if !r.is_zero() {
            let r = r.primitive_part();
            let lead = r.leading_monomial(order)?;
            let new_idx = basis.len();
            for k in 0..new_idx {
                let deg = leads[k].lcm(&lead).degree();
                pairs.push(Reverse((deg, k, new_idx)));
            }
            basis.push(r);
            leads.push(lead);
        }
    }

    Ok(GroebnerBasis {
        order,
        elements: reduce_basis(basis, order)?,
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimize and auto-reduce a Groebner basis; elements come out monic
/// and sorted ascending by leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>, order: TermOrder) -> Result<Vec<Polynomial>> {
    // minimize: drop elements whose leading monomial is divisible by
    // another retained leading monomial
    basis.sort_by(|a, b| {
        order.compare(
            &a.leading_monomial(order).unwrap(),
            &b.leading_monomial(order).unwrap(),
        )
    });
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut kept_leads: Vec<Monomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial(order)?;
        if !kept_leads.iter().any(|l| l.divides(&lm)) {
            kept.push(g);
            kept_leads.push(lm);
        }
    }
    // tail-reduce each element against the others
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = if others.is_empty() {
            kept[i].clone()
        } else {
            normal_form(&kept[i], &others, order)?
        };
        reduced.push(r.monic(order)?);
    }
    reduced.sort_by(|a, b| {
        order.compare(
            &a.leading_monomial(order).unwrap(),
            &b.leading_monomial(order).unwrap(),
        )
    });
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingSignature;

    fn sig(n: usize) -> RingSignature {
        RingSignature::projective(n).unwrap()
    }

    fn p(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, sig(n)).unwrap()
    }

    #[test]
    fn normal_form_of_multiple_is_zero() {
        let q = p("x1^2-x0*x2", 2);
        let f = p("x1", 2).mul(&q).unwrap();
        let r = normal_form(&f, &[q], TermOrder::Grevlex).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn normal_form_no_reduction_possible() {
        let q = p("x1^2-x0*x2", 2);
        let f = p("x0^2", 2);
        let r = normal_form(&f, std::slice::from_ref(&q), TermOrder::Grevlex).unwrap();
        assert_eq!(r, f);
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let q = p("x1^2-x0*x2", 2);
        let gb = buchberger(&[q.clone()], TermOrder::Grevlex).unwrap();
        assert_eq!(gb.elements, vec![q]);
    }

    #[test]
    fn linear_elimination() {
        let gb = buchberger(&[p("x0", 2), p("x0+x1", 2)], TermOrder::Grevlex).unwrap();
        assert_eq!(gb.elements, vec![p("x1", 2), p("x0", 2)]);
    }

    #[test]
    fn twisted_cubic_quadrics_are_a_basis() {
        // All three S-pairs reduce to zero, so the generators are
        // already a Groebner basis.
        let gens = [
            p("x2^2-x1*x3", 3),
            p("x1*x2-x0*x3", 3),
            p("x1^2-x0*x2", 3),
        ];
        let gb = buchberger(&gens, TermOrder::Grevlex).unwrap();
        assert_eq!(gb.elements.len(), 3);
        for g in &gens {
            assert!(normal_form(g, &gb.elements, TermOrder::Grevlex)
                .unwrap()
                .is_zero());
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                let s = s_polynomial(&gens[i], &gens[j], TermOrder::Grevlex).unwrap();
                assert!(normal_form(&s, &gens, TermOrder::Grevlex).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn buchberger_is_idempotent() {
        let gens = [p("x1^2-x0*x2", 2), p("x1*x0^2-x1*x2^2", 2)];
        let gb = buchberger(&gens, TermOrder::Grevlex).unwrap();
        let gb2 = buchberger(&gb.elements, TermOrder::Grevlex).unwrap();
        assert_eq!(gb, gb2);
    }

    #[test]
    fn empty_and_all_zero_rejected() {
        assert!(buchberger(&[], TermOrder::Grevlex).is_err());
        assert!(buchberger(&[Polynomial::zero(sig(2))], TermOrder::Grevlex).is_err());
    }

    #[test]
    fn all_spolys_reduce_to_zero() {
        let gens = [
            p("x2^2-x1*x3", 3),
            p("x1*x2-x0*x3", 3),
            p("x1^2-x0*x2", 3),
            p("x2*x0-x2*x3+x1*x3", 3),
        ];
        let gb = buchberger(&gens, TermOrder::Grevlex).unwrap();
        for i in 0..gb.elements.len() {
            for j in (i + 1)..gb.elements.len() {
                let s = s_polynomial(&gb.elements[i], &gb.elements[j], TermOrder::Grevlex).unwrap();
                assert!(normal_form(&s, &gb.elements, TermOrder::Grevlex)
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn normal_form_is_linear_over_fixed_basis() {
        let gb = buchberger(
            &[p("x1^2-x0*x2", 2), p("x0*x1-x2^2", 2)],
            TermOrder::Grevlex,
        )
        .unwrap();
        let f = p("x0^3+x1*x2^2", 2);
        let g = p("x0^2*x1-7*x2^3", 2);
        let nf = |h: &Polynomial| normal_form(h, &gb.elements, TermOrder::Grevlex).unwrap();
        let lhs = nf(&f.add(&g).unwrap());
        let rhs = nf(&nf(&f).add(&nf(&g)).unwrap());
        assert_eq!(lhs, rhs);
    }
}
