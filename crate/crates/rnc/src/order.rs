use crate::ring::Monomial;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A multiplicative total well-order on monomials.
///
/// `Block(k)` eliminates the first `k` variables: lex on the block,
/// grevlex on the rest. Any monomial involving a block variable is
/// larger than any monomial that does not, which is what elimination
/// (intersection, saturation by a single element) needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    Grevlex,
    Lex,
    Block(usize),
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), b.num_vars());
        match self {
            TermOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            TermOrder::Lex => lex(a.exponents(), b.exponents()),
            TermOrder::Block(k) => {
                let (ab, at) = a.exponents().split_at(*k);
                let (bb, bt) = b.exponents().split_at(*k);
                lex(ab, bb).then_with(|| grevlex(at, bt))
            }
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal degree: the monomial whose last differing exponent is
    // smaller is the larger one.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_on_conic_quadric() {
        // x1^2 > x0*x2 under grevlex with x0 > x1 > x2
        let o = TermOrder::Grevlex;
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.compare(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_on_conic_quadric() {
        // x0*x2 > x1^2 under lex
        let o = TermOrder::Lex;
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_variable() {
        let o = TermOrder::Block(1);
        // t^1 beats any power of the remaining variables
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        // with no t, falls back to grevlex on the tail
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }
}
