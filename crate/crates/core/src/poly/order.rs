use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::{Error, Result};

/// Monomial orders with variable priority `t1 > t2 > ... > ts`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GRevLex,
}

impl MonomialOrder {
    /// Compares two monomials with the same number of variables.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let (x, y) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => lex(x, y),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| lex(x, y)),
            MonomialOrder::GRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // The last differing variable decides; the smaller exponent wins.
                for (ea, eb) in x.iter().zip(y).rev() {
                    if ea != eb {
                        return eb.cmp(ea);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Checked comparison that rejects monomials in different rings.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Sorts monomials in descending order.
    pub fn sort_desc(&self, monomials: &mut [Monomial]) {
        monomials.sort_by(|a, b| self.cmp(b, a));
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GRevLex => "grevlex",
        }
    }
}

fn lex(x: &[u32], y: &[u32]) -> Ordering {
    for (a, b) in x.iter().zip(y) {
        if a != b {
            return a.cmp(b);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            "grevlex" => Ok(MonomialOrder::GRevLex),
            other => Err(Error::InvalidParameter(format!(
                "unknown monomial order `{other}` (expected lex, grlex or grevlex)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    const ORDERS: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GRevLex];

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn all_up_to(nvars: usize, deg: u32) -> Vec<Monomial> {
        (0..nvars)
            .map(|_| 0..=deg)
            .multi_cartesian_product()
            .filter(|e| e.iter().sum::<u32>() <= deg)
            .map(Monomial::new)
            .collect()
    }

    #[test]
    fn documented_cases() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(MonomialOrder::GrLex.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        for o in ORDERS {
            assert_eq!(o.cmp(&m(&[2, 1]), &m(&[2, 1])), Ordering::Equal);
        }
        // grevlex and grlex differ in three variables: t1*t3 vs t2^2
        assert_eq!(MonomialOrder::GrLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(MonomialOrder::GRevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn order_axioms_exhaustive() {
        for nvars in 1..=3 {
            let mons = all_up_to(nvars, 4);
            let small = all_up_to(nvars, 2);
            for o in ORDERS {
                for a in &mons {
                    assert_ne!(o.cmp(a, &Monomial::one(nvars)), Ordering::Less);
                    for b in &mons {
                        let ab = o.cmp(a, b);
                        assert_eq!(ab, o.cmp(b, a).reverse());
                        assert_eq!(ab == Ordering::Equal, a == b);
                        for c in &small {
                            assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), ab);
                        }
                    }
                }
                for (a, b, c) in small.iter().cartesian_product(&small).cartesian_product(&small).map(|((a, b), c)| (a, b, c)) {
                    if o.cmp(a, b) == Ordering::Less && o.cmp(b, c) == Ordering::Less {
                        assert_eq!(o.cmp(a, c), Ordering::Less);
                    }
                }
            }
        }
    }
}
