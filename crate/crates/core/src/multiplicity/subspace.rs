use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::scalar::Field;

use super::lattice::{hermite_normal_form, integer_kernel, smith_diagonal};

/// Linear subspace of `Q^n` spanned by an independent family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSubspace<F> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> RationalSubspace<F> {
    pub fn new(ambient_dim: usize, basis: Vec<Vec<F>>) -> Result<Self> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, got: v.len() });
        }
        if rank(&basis, ambient_dim) != basis.len() {
            return Err(Error::DegenerateInput("subspace basis is linearly dependent".into()));
        }
        Ok(Self { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Basis rows scaled by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.basis
            .iter()
            .map(|v| {
                let fracs: Vec<(BigInt, BigInt)> = v.iter().map(Field::to_big_fraction).collect();
                let l = fracs.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
                fracs.into_iter().map(|(n, d)| n * (&l / d)).collect()
            })
            .collect()
    }
}

/// A basis of `L ∩ Z^n` in Hermite normal form, computed as the integer
/// kernel of the integer kernel of `L`.
pub fn saturated_lattice_basis<F: Field>(l: &RationalSubspace<F>) -> Vec<Vec<BigInt>> {
    if l.dim() == 0 {
        return Vec::new();
    }
    let n = l.ambient_dim;
    let orth = integer_kernel(&l.integer_rows(), n);
    hermite_normal_form(&integer_kernel(&orth, n))
}

/// `[Z^n : (L1 ∩ Z^n) ⊕ (L2 ∩ Z^n)]`, the volume of the principal
/// parallelepiped.
pub fn principal_index<F: Field>(l1: &RationalSubspace<F>, l2: &RationalSubspace<F>) -> Result<BigInt> {
    let n = l1.ambient_dim;
    if l2.ambient_dim != n {
        return Err(Error::DimensionMismatch { expected: n, got: l2.ambient_dim });
    }
    if l1.dim() + l2.dim() != n {
        return Err(Error::NotComplementary);
    }
    let mut stacked = saturated_lattice_basis(l1);
    stacked.extend(saturated_lattice_basis(l2));
    let d = smith_diagonal(&stacked);
    if d.len() != n {
        return Err(Error::NotComplementary);
    }
    Ok(d.into_iter().fold(BigInt::one(), |acc, v| acc * v).abs())
}

/// The transversal intersection multiplicity `ξ` of two affine pieces with
/// direction spaces `l1` and `l2`.
pub fn transversal_multiplicity<F: Field>(l1: &RationalSubspace<F>, l2: &RationalSubspace<F>) -> Result<BigInt> {
    principal_index(l1, l2)
}

/// Generators of the direction space of `{x : A x = b}`.
pub fn direction_space<F: Field>(equations: &[Vec<F>], ambient_dim: usize) -> Result<RationalSubspace<F>> {
    RationalSubspace::new(ambient_dim, crate::linalg::nullspace(equations, ambient_dim))
}
