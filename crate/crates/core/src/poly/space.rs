use std::collections::HashMap;

use super::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

/// A finite-dimensional subspace of `F_q[t1, ..., ts]`, held in fully
/// reduced echelon form: basis elements are monic, their leads are pairwise
/// distinct and sorted in descending order, and no basis element has a
/// nonzero coefficient at another element's lead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpace {
    field: PrimeField,
    nvars: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

impl PolySpace {
    pub fn zero(field: PrimeField, nvars: usize, order: MonomialOrder) -> Self {
        PolySpace {
            field,
            nvars,
            order,
            basis: Vec::new(),
            leads: Vec::new(),
        }
    }

    /// Gaussian elimination on monomial coordinates. Zero vectors are
    /// discarded; the result spans the same space as `vectors`.
    pub fn echelonize(
        field: PrimeField,
        nvars: usize,
        order: MonomialOrder,
        vectors: &[Polynomial],
    ) -> Result<Self> {
        for v in vectors {
            if v.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: v.nvars(),
                });
            }
            if v.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.order(),
                    right: v.field().order(),
                });
            }
        }
        let mut columns: Vec<Monomial> = vectors
            .iter()
            .flat_map(|v| v.monomials().cloned())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        order.sort_desc(&mut columns);
        let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = Matrix::zeros(field, vectors.len(), columns.len());
        for (i, v) in vectors.iter().enumerate() {
            for (m, c) in v.terms() {
                mat.set(i, index[m], c);
            }
        }
        let pivots = mat.rref();
        let basis = (0..pivots.len())
            .map(|i| {
                let row = mat.row(i);
                Polynomial::from_terms(
                    field,
                    nvars,
                    row.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(j, &c)| (columns[j].clone(), c as i64)),
                )
                .expect("dimensions checked")
            })
            .collect();
        let leads = pivots.iter().map(|&p| columns[p].clone()).collect();
        Ok(PolySpace {
            field,
            nvars,
            order,
            basis,
            leads,
        })
    }

    /// The span of a set of monomials.
    pub fn from_monomials(
        field: PrimeField,
        nvars: usize,
        order: MonomialOrder,
        monomials: &[Monomial],
    ) -> Result<Self> {
        let vs: Vec<Polynomial> = monomials
            .iter()
            .map(|m| Polynomial::monomial(field, m.clone(), 1))
            .collect();
        Self::echelonize(field, nvars, order, &vs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// Leads of the basis, in descending order.
    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    /// Coordinates of `f` against the basis together with the remainder
    /// `f - sum c_i b_i`, which is zero exactly when `f` lies in the space.
    pub fn reduce(&self, f: &Polynomial) -> (Vec<u64>, Polynomial) {
        let coords: Vec<u64> = self.leads.iter().map(|m| f.coefficient(m)).collect();
        let mut rem = f.clone();
        for ((b, m), &c) in self.basis.iter().zip(&self.leads).zip(&coords) {
            if c != 0 {
                rem.sub_scaled(c, &Monomial::one(m.nvars()), b);
            }
        }
        (coords, rem)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).1.is_zero()
    }

    pub fn coordinates(&self, f: &Polynomial) -> Option<Vec<u64>> {
        let (c, r) = self.reduce(f);
        r.is_zero().then_some(c)
    }

    /// `sum coeffs[i] * basis[i]`.
    pub fn combination(&self, coeffs: &[u64]) -> Polynomial {
        debug_assert_eq!(coeffs.len(), self.dim());
        let mut out = Polynomial::zero(self.field, self.nvars);
        let one = Monomial::one(self.nvars);
        for (b, &c) in self.basis.iter().zip(coeffs) {
            if c != 0 {
                out.sub_scaled(self.field.neg(c), &one, b);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &PolySpace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}
