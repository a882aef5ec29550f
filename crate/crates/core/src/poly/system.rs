use std::ops::Index;

use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// An indexed, zero-free list of polynomials over one field and one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    field: FieldSpec,
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    stripped: Vec<usize>,
}

impl PolySystem {
    /// Collects `polys`, dropping zero polynomials. Their positions in the input are
    /// available from [`PolySystem::stripped_zeros`].
    pub fn new(
        field: FieldSpec,
        nvars: usize,
        order: MonomialOrder,
        polys: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Self> {
        let mut kept = Vec::new();
        let mut stripped = Vec::new();
        for (i, p) in polys.into_iter().enumerate() {
            if p.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), p.field().to_string()));
            }
            if p.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
            if p.is_zero() {
                stripped.push(i);
            } else {
                kept.push(p.with_order(order));
            }
        }
        Ok(PolySystem {
            field,
            nvars,
            order,
            polys: kept,
            stripped,
        })
    }

    pub fn empty(field: FieldSpec, nvars: usize, order: MonomialOrder) -> Self {
        PolySystem {
            field,
            nvars,
            order,
            polys: Vec::new(),
            stripped: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Polynomial> {
        self.polys.iter()
    }

    /// Input positions of zero polynomials removed at construction.
    pub fn stripped_zeros(&self) -> &[usize] {
        &self.stripped
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolySystem {
        PolySystem {
            order,
            polys: self.polys.iter().map(|p| p.with_order(order)).collect(),
            field: self.field,
            nvars: self.nvars,
            stripped: self.stripped.clone(),
        }
    }

    /// The members at `indices`, in the given order.
    pub fn subsystem(&self, indices: &[usize]) -> Result<PolySystem> {
        let polys = indices
            .iter()
            .map(|&i| {
                self.polys.get(i).cloned().ok_or(Error::IndexOutOfRange {
                    index: i,
                    len: self.polys.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolySystem {
            field: self.field,
            nvars: self.nvars,
            order: self.order,
            polys,
            stripped: Vec::new(),
        })
    }

    pub fn max_degree(&self) -> u32 {
        self.polys.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.polys.iter().all(Polynomial::is_homogeneous)
    }

    /// Index of the first non-homogeneous member.
    pub fn first_inhomogeneous(&self) -> Option<usize> {
        self.polys.iter().position(|p| !p.is_homogeneous())
    }
}

impl Index<usize> for PolySystem {
    type Output = Polynomial;
    fn index(&self, i: usize) -> &Polynomial {
        &self.polys[i]
    }
}

impl<'a> IntoIterator for &'a PolySystem {
    type Item = &'a Polynomial;
    type IntoIter = std::slice::Iter<'a, Polynomial>;
    fn into_iter(self) -> Self::IntoIter {
        self.polys.iter()
    }
}
