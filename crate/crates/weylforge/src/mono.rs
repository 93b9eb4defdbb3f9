//! Exponent vectors with a canonical graded-lexicographic order.
//!
//! The same type backs commutative monomials (one exponent per variable)
//! and Weyl standard monomials (2n entries: the x-exponents followed by
//! the d-exponents). Ordered maps keyed by [`Mono`] therefore iterate in
//! a fixed order, which is what makes printing and hashing deterministic.

use std::cmp::Ordering;

/// A dense exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(len: usize) -> Mono {
        Mono(vec![0; len])
    }

    /// The monomial with exponent 1 on variable `i`.
    pub fn var(i: usize, len: usize) -> Mono {
        let mut e = vec![0; len];
        e[i] = 1;
        Mono(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.len(), other.len());
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Mono)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.len(), other.len());
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when no variable appears in both monomials.
    pub fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Mono {
    /// Graded lexicographic: total degree first, then leftmost exponent.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x2 = Mono(vec![2, 0]);
        let xy = Mono(vec![1, 1]);
        let y2 = Mono(vec![0, 2]);
        let x = Mono(vec![1, 0]);
        assert!(x2 > xy && xy > y2);
        assert!(xy > x); // higher degree wins
        assert!(Mono::one(2) < x);
    }

    #[test]
    fn division_and_lcm() {
        let a = Mono(vec![2, 1]);
        let b = Mono(vec![1, 0]);
        assert_eq!(a.checked_div(&b), Some(Mono(vec![1, 1])));
        assert_eq!(b.checked_div(&a), None);
        assert!(b.divides(&a));
        assert_eq!(a.lcm(&Mono(vec![0, 3])), Mono(vec![2, 3]));
        assert!(Mono(vec![1, 0]).coprime(&Mono(vec![0, 2])));
        assert!(!a.coprime(&b));
    }
}
