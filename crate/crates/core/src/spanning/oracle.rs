use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Result;
use crate::invariants::{derivation, Elementary};
use crate::linalg::{EchelonBasis, Matrix};
use crate::poly::{ADegree, Ambient, Monomial, Poly};
use crate::rational::Rational;

/// The monomials of one A-degree, used as coordinates for linear algebra on
/// polynomials.
#[derive(Clone, Debug)]
pub struct MonomialSpace {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialSpace {
    pub fn new(amb: &Ambient, chi: &ADegree) -> Result<Self> {
        let monomials = amb.monomials_of_degree(chi)?;
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(MonomialSpace { monomials, index })
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Coefficient vector; `None` when `f` has a term outside the space.
    pub fn to_vec(&self, f: &Poly) -> Option<Vec<Rational>> {
        f.coefficients_in(&self.index)
    }

    pub fn to_poly(&self, v: &[Rational]) -> Poly {
        Poly::from_terms(
            self.monomials
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

/// Basis of the `SL(alpha)`-invariants of A-degree `chi`: the common kernel
/// of every derivation `D_{v,E}` on the span of the degree-`chi` monomials,
/// returned in reduced echelon form over the monomial basis.
pub fn weight_space_basis(amb: &Ambient, chi: &ADegree) -> Result<Vec<Poly>> {
    let space = MonomialSpace::new(amb, chi)?;
    let n = space.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut ops: Vec<(crate::quiver::Id, Elementary)> = Vec::new();
    for v in amb.quiver().vertices() {
        for e in Elementary::all(amb.alpha().get(v)) {
            ops.push((v.clone(), e));
        }
    }
    // Images of every monomial under every derivation, computed in parallel
    // and collected in a fixed order.
    let images: Vec<Vec<Poly>> = space
        .monomials()
        .par_iter()
        .map(|m| {
            let f = Poly::term(m.clone(), Rational::from_integer(1.into()));
            ops.iter()
                .map(|(v, e)| derivation(amb, v, e, &f))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    // One constraint row per (operator, output monomial) with a nonzero entry.
    let mut rows = EchelonBasis::new(n);
    for k in 0..ops.len() {
        let mut by_output: HashMap<Monomial, Vec<Rational>> = HashMap::new();
        for (j, imgs) in images.iter().enumerate() {
            for (m, c) in imgs[k].terms() {
                by_output
                    .entry(m.clone())
                    .or_insert_with(|| vec![Rational::zero(); n])[j] += c;
            }
        }
        let mut keys: Vec<Monomial> = by_output.keys().cloned().collect();
        keys.sort();
        for m in keys {
            rows.insert(&by_output[&m]);
        }
    }
    let constraints: Vec<Vec<Rational>> = rows.rows().cloned().collect();
    let kernel = if constraints.is_empty() {
        Matrix::identity(n).row_vecs()
    } else {
        Matrix::from_rows(constraints.len(), n, constraints)?.nullspace()
    };
    let mut basis = EchelonBasis::new(n);
    for v in &kernel {
        basis.insert(v);
    }
    Ok(basis.rows().map(|v| space.to_poly(v)).collect())
}
