//! Term orders: lex, graded reverse lex, and block elimination orders.
//!
//! Every order here is a total order on monomials that is compatible with
//! multiplication and has 1 as its minimum, which is what the division
//! algorithm and Buchberger's algorithm require. The priority list says
//! which variable is largest; a block order makes every variable of the
//! first block larger than any monomial in the second, which is the
//! elimination property.

use std::cmp::Ordering;
use std::fmt;

use crate::mono::Mono;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Lexicographic with the given variable priority (largest first).
    Lex { priority: Vec<usize> },
    /// Graded reverse lexicographic with the given priority.
    Grevlex { priority: Vec<usize> },
    /// Two grevlex blocks; the first block dominates.
    Block {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

impl TermOrder {
    /// Lex with `x_0 > x_1 > ... > x_(n-1)`.
    pub fn lex(n: usize) -> TermOrder {
        TermOrder::Lex {
            priority: (0..n).collect(),
        }
    }

    /// Grevlex with the natural priority.
    pub fn grevlex(n: usize) -> TermOrder {
        TermOrder::Grevlex {
            priority: (0..n).collect(),
        }
    }

    /// Elimination order: variables `0..split` beat variables `split..n`.
    pub fn elimination(split: usize, n: usize) -> TermOrder {
        TermOrder::Block {
            first: (0..split).collect(),
            second: (split..n).collect(),
        }
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            TermOrder::Lex { priority } => cmp_lex(a, b, priority),
            TermOrder::Grevlex { priority } => cmp_grevlex(a, b, priority),
            TermOrder::Block { first, second } => {
                cmp_grevlex(a, b, first).then_with(|| cmp_grevlex(a, b, second))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Mono, b: &'a Mono) -> &'a Mono {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn cmp_lex(a: &Mono, b: &Mono, priority: &[usize]) -> Ordering {
    for &v in priority {
        match a.0[v].cmp(&b.0[v]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &Mono, b: &Mono, priority: &[usize]) -> Ordering {
    let da: u64 = priority.iter().map(|&v| a.0[v] as u64).sum();
    let db: u64 = priority.iter().map(|&v| b.0[v] as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // ties break on the least variable: the monomial with the smaller
    // exponent there is the larger one
    for &v in priority.iter().rev() {
        match a.0[v].cmp(&b.0[v]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let natural = |p: &[usize]| p.iter().copied().eq(0..p.len());
        let list = |p: &[usize]| {
            p.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(">")
        };
        match self {
            TermOrder::Lex { priority } if natural(priority) => write!(f, "lex"),
            TermOrder::Lex { priority } => write!(f, "lex({})", list(priority)),
            TermOrder::Grevlex { priority } if natural(priority) => write!(f, "grevlex"),
            TermOrder::Grevlex { priority } => write!(f, "grevlex({})", list(priority)),
            TermOrder::Block { first, second } => {
                write!(f, "block({}|{})", list(first), list(second))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> Mono {
        Mono(exps.to_vec())
    }

    #[test]
    fn lex_basics() {
        let o = TermOrder::lex(2);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn grevlex_basics() {
        let o = TermOrder::grevlex(3);
        // same degree: x z vs y^2 -- grevlex compares the last variable
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
        // classic: x^2 > xy > y^2 in two variables
        let o2 = TermOrder::grevlex(2);
        assert_eq!(o2.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o2.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn elimination_property() {
        let o = TermOrder::elimination(1, 3);
        // any power of the first block beats any monomial of the second
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 2])), Ordering::Less);
    }

    #[test]
    fn rendering() {
        assert_eq!(TermOrder::lex(3).to_string(), "lex");
        assert_eq!(TermOrder::grevlex(2).to_string(), "grevlex");
        assert_eq!(TermOrder::elimination(2, 4).to_string(), "block(1>2|3>4)");
        let o = TermOrder::Lex {
            priority: vec![2, 0, 1],
        };
        assert_eq!(o.to_string(), "lex(3>1>2)");
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Mono> {
        proptest::collection::vec(0u32..5, n).prop_map(Mono)
    }

    proptest! {
        #[test]
        fn total_order_axioms(a in arb_mono(4), b in arb_mono(4), c in arb_mono(4)) {
            for order in [TermOrder::lex(4), TermOrder::grevlex(4), TermOrder::elimination(2, 4)] {
                // 1 is minimal
                prop_assert_ne!(order.cmp(&Mono::one(4), &a), Ordering::Greater);
                // antisymmetry
                prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
                // compatibility with multiplication
                let ac = a.mul(&c);
                let bc = b.mul(&c);
                prop_assert_eq!(order.cmp(&ac, &bc), order.cmp(&a, &b));
                // equality only for equal monomials
                if order.cmp(&a, &b) == Ordering::Equal {
                    prop_assert_eq!(&a, &b);
                }
            }
        }
    }
}
