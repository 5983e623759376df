use std::cmp::Ordering;

use super::monomial::{grevlex_cmp, lex_cmp, Monomial};

/// Term orders used by the Gröbner kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// The first `eliminated` variables form a grevlex block that dominates a
    /// grevlex block on the remaining variables.
    Block { eliminated: usize },
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Block { eliminated } => {
                let k = eliminated.min(a.len());
                match grevlex_cmp(&a[..k], &b[..k]) {
                    Ordering::Equal => grevlex_cmp(&a[k..], &b[k..]),
                    o => o,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_textbook_cases() {
        let o = MonomialOrder::GrevLex;
        // x^2 > x*y > y^2 > x*z > y*z > z^2 in grevlex with x > y > z
        let chain = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in chain.windows(2) {
            assert_eq!(o.compare(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn block_order_eliminates_prefix() {
        let o = MonomialOrder::Block { eliminated: 1 };
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    fn exps() -> impl Strategy<Value = Vec<u16>> {
        proptest::collection::vec(0u16..4, 3)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in exps(), b in exps(), c in exps()) {
            for o in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Block { eliminated: 1 }] {
                let (a, b, c) = (m(&a), m(&b), m(&c));
                prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&c), &b.mul(&c)));
                // 1 is the minimum
                prop_assert_ne!(o.compare(&a, &Monomial::one(3)), Ordering::Less);
            }
        }
    }
}
