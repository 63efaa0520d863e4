//! Prime fields `F_q` with canonical residues in `[0, q)`.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field with `q` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    /// Fails fast when `q` is not prime. `q` must stay below `2^31` so that
    /// products of residues fit in a `u64`.
    pub fn new(q: u64) -> Result<Self> {
        if q >= 1 << 31 {
            return Err(Error::FieldTooLarge(q));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Canonical residue of a signed integer.
    #[inline]
    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.q as i64) as u64
    }

    pub fn element(&self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    // Raw residue arithmetic. Inputs must already be canonical.

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.q) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// All elements `0, 1, ..., q-1`.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    /// The multiplicative group `K*` in ascending order.
    pub fn nonzero_elements(&self) -> Vec<FieldElement> {
        (1..self.q)
            .map(|value| FieldElement { value, field: *self })
            .collect()
    }

    /// Centered representative in `(-q/2, q/2]`, used for printing.
    pub fn centered(&self, a: u64) -> i64 {
        if a > self.q / 2 {
            a as i64 - self.q as i64
        } else {
            a as i64
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`PrimeField`]. The residue is always canonical, so
/// equality and hashing are structural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElement) -> Result<PrimeField> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.q,
                right: other.field.q,
            });
        }
        Ok(self.field)
    }

    fn with(&self, value: u64) -> FieldElement {
        FieldElement {
            value,
            field: self.field,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        let k = self.check(other)?;
        Ok(self.with(k.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        let k = self.check(other)?;
        Ok(self.with(k.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        let k = self.check(other)?;
        Ok(self.with(k.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.value)?))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(q: u64, v: i64) -> FieldElement {
        PrimeField::new(q).unwrap().element(v)
    }

    #[test]
    fn small_arithmetic() {
        assert_eq!(el(3, 2).add(&el(3, 2)).unwrap(), el(3, 1));
        assert_eq!(el(5, 3).mul(&el(5, 4)).unwrap(), el(5, 2));
        assert_eq!(el(3, 0).neg(), el(3, 0));
        assert_eq!(el(5, 1).sub(&el(5, 3)).unwrap(), el(5, 3));
    }

    #[test]
    fn inverses() {
        assert_eq!(el(5, 2).inv().unwrap(), el(5, 3));
        assert_eq!(el(3, 2).inv().unwrap(), el(3, 2));
        assert_eq!(el(5, 1).inv().unwrap(), el(5, 1));
        assert_eq!(el(7, 0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let err = el(3, 1).add(&el(5, 1)).unwrap_err();
        assert_eq!(err, Error::FieldMismatch { left: 3, right: 5 });
        assert!(el(3, 1).mul(&el(5, 1)).is_err());
    }

    #[test]
    fn composite_rejected() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(0), Err(Error::NotPrime(0)));
        assert!(PrimeField::new(13).is_ok());
    }

    #[test]
    fn nonzero_elements_ascending() {
        let vals = |q| {
            PrimeField::new(q)
                .unwrap()
                .nonzero_elements()
                .iter()
                .map(|e| e.value())
                .collect::<Vec<_>>()
        };
        assert_eq!(vals(3), vec![1, 2]);
        assert_eq!(vals(5), vec![1, 2, 3, 4]);
        assert_eq!(vals(2), vec![1]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 5, 7] {
            let k = PrimeField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(k.add(a, k.neg(a)), 0);
                assert_eq!(k.mul(a, 1), a);
                for b in 0..q {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    assert_eq!(k.sub(k.add(a, b), b), a);
                    for c in 0..q {
                        assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_property_up_to_13() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let k = PrimeField::new(q).unwrap();
            for a in 1..q {
                assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
            }
        }
    }
}
