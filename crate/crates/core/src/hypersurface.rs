//! A projective hypersurface V(f) together with its gradient.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::poly::{basis_index, dim_graded, monomial_basis, HomogeneousPoly};
use crate::rational::Rational;

/// Hypersurface V(f) in P^n, f homogeneous of degree N >= 2 in n+1 variables.
#[derive(Debug, Clone)]
pub struct Hypersurface {
    f: HomogeneousPoly,
    partials: Vec<HomogeneousPoly>,
}

impl Hypersurface {
    pub fn new(f: HomogeneousPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.degree() < 2 {
            return Err(Error::DegreeTooSmall(f.degree()));
        }
        let partials = (0..f.num_vars()).map(|i| f.partial_derivative(i)).collect();
        Ok(Hypersurface { f, partials })
    }

    pub fn f(&self) -> &HomogeneousPoly {
        &self.f
    }

    pub fn num_vars(&self) -> usize {
        self.f.num_vars()
    }

    /// Dimension n of the ambient projective space.
    pub fn n(&self) -> usize {
        self.num_vars() - 1
    }

    pub fn degree(&self) -> u32 {
        self.f.degree()
    }

    pub fn partial(&self, i: usize) -> &HomogeneousPoly {
        &self.partials[i]
    }

    pub fn partials(&self) -> &[HomogeneousPoly] {
        &self.partials
    }

    pub fn gradient_at(&self, q: &[Rational]) -> Vec<Rational> {
        self.partials.iter().map(|p| p.evaluate(q)).collect()
    }

    /// True when q lies on V and every partial vanishes there.
    pub fn is_singular_point(&self, q: &[Rational]) -> bool {
        self.f.evaluate(q).is_zero() && self.gradient_at(q).iter().all(Zero::is_zero)
    }

    /// Matrix of (a_0,..,a_n) -> Sum a_i f_i from S_m^{n+1} to S_{m+N-1}.
    ///
    /// Rows are indexed by the degree-(m+N-1) monomial basis, columns by
    /// (component, degree-m monomial) with the component index major. Both
    /// bases are in the fixed descending term order.
    pub fn jacobian_matrix(&self, m: u32) -> RatMatrix {
        let v = self.num_vars();
        let target = m + self.degree() - 1;
        let row_basis = monomial_basis(v, target);
        let row_index = basis_index(&row_basis);
        let col_basis = monomial_basis(v, m);
        let rows = row_basis.len();
        let cols = v * col_basis.len();
        let mut mat = RatMatrix::zeros(rows, cols);
        for (block, partial) in self.partials.iter().enumerate() {
            for (j, mono) in col_basis.iter().enumerate() {
                let col = block * col_basis.len() + j;
                for (e, c) in partial.terms() {
                    let r = row_index[&e.mul(mono)];
                    mat.set(r, col, c.clone());
                }
            }
        }
        debug_assert_eq!(rows, dim_graded(v, target as i64));
        mat
    }
}
