use std::fmt;

/// A monomial `t1^a1 * ... * ts^as`, stored as its exponent vector.
///
/// The derived `Ord` is structural (it only serves as a map key); use a
/// [`MonomialOrder`](super::MonomialOrder) for term orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `t_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this monomial is a pure power `t_i^e` with `e >= 1`, returns `(i, e)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Evaluates at a point given as canonical residues.
    pub fn evaluate(&self, field: crate::PrimeField, point: &[u64]) -> u64 {
        let mut acc = 1 % field.order();
        for (&e, &p) in self.0.iter().zip(point) {
            if e > 0 {
                acc = field.mul(acc, field.pow(p, e as u64));
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    /// `t1^2*t2` style; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![2, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![1, 0])));
        assert_eq!(a.lcm(&Monomial::new(vec![3, 0])), Monomial::new(vec![3, 2]));
        assert!(Monomial::new(vec![2, 0]).is_coprime(&Monomial::new(vec![0, 5])));
    }

    #[test]
    fn text_form() {
        assert_eq!(Monomial::new(vec![2, 1]).to_string(), "t1^2*t2");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(Monomial::var(3, 2).to_string(), "t3");
    }

    #[test]
    fn pure_powers() {
        assert_eq!(Monomial::new(vec![0, 3]).pure_power(), Some((1, 3)));
        assert_eq!(Monomial::new(vec![1, 3]).pure_power(), None);
        assert_eq!(Monomial::one(2).pure_power(), None);
    }
}
