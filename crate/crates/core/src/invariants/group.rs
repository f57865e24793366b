use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Ambient, RepPoint, VWeight};
use crate::quiver::{AddMap, Id, PathComb};
use crate::rational::{self, Rational};

/// An element `g` of `GL(alpha)`: one invertible block per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    blocks: BTreeMap<Id, Matrix>,
}

impl GroupElement {
    pub fn new(amb: &Ambient, blocks: BTreeMap<Id, Matrix>) -> Result<Self> {
        for v in amb.quiver().vertices() {
            let n = amb.alpha().get(v);
            let b = blocks
                .get(v)
                .ok_or_else(|| Error::ShapeMismatch(format!("no block for vertex {v}")))?;
            if b.shape() != (n, n) {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v} needs a {n}x{n} block"
                )));
            }
            if b.det().is_zero() {
                return Err(Error::Singular);
            }
        }
        Ok(GroupElement { blocks })
    }

    pub fn identity(amb: &Ambient) -> Self {
        GroupElement {
            blocks: amb
                .quiver()
                .vertices()
                .iter()
                .map(|v| (v.clone(), Matrix::identity(amb.alpha().get(v))))
                .collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(amb: &Ambient, rng: &mut R, span: i64) -> Self {
        GroupElement {
            blocks: amb
                .quiver()
                .vertices()
                .iter()
                .map(|v| {
                    (
                        v.clone(),
                        Matrix::random_invertible(rng, amb.alpha().get(v), span),
                    )
                })
                .collect(),
        }
    }

    /// The torus element with scalar `t_v` at each vertex.
    pub fn torus(amb: &Ambient, scalars: &BTreeMap<Id, Rational>) -> Result<Self> {
        let blocks = amb
            .quiver()
            .vertices()
            .iter()
            .map(|v| {
                let t = scalars.get(v).cloned().unwrap_or_else(Rational::one);
                (v.clone(), Matrix::scalar(amb.alpha().get(v), &t))
            })
            .collect();
        Self::new(amb, blocks)
    }

    pub fn block(&self, v: &str) -> Result<&Matrix> {
        self.blocks
            .get(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    /// `(g.p)(a) = g_{i(a)}^{-1} p(a) g_{t(a)}`.
    pub fn act(&self, amb: &Ambient, p: &RepPoint) -> Result<RepPoint> {
        let mut out = p.clone();
        for a in amb.quiver().arrows() {
            let left = self.block(&a.from)?.inverse()?;
            let m = left.try_mul(p.get(&a.id)?)?.try_mul(self.block(&a.to)?)?;
            out.set(&a.id, m)?;
        }
        Ok(out)
    }

    /// `prod_v det(g_v)^{sigma_v}`.
    pub fn character(&self, sigma: &VWeight) -> Result<Rational> {
        let mut acc = Rational::one();
        for (v, e) in &sigma.0 {
            acc *= rational::powi(&self.block(v)?.det(), *e)?;
        }
        Ok(acc)
    }
}

/// Rescales arrow blocks of a point: `(lambda.p)(a) = lambda_a p(a)`.
/// Arrows not listed keep scale one.
pub fn scale_point_arrows(p: &RepPoint, lambda: &BTreeMap<Id, Rational>) -> Result<RepPoint> {
    let mut out = p.clone();
    for (a, t) in lambda {
        let m = p.get(a)?.scale(t);
        out.set(a, m)?;
    }
    Ok(out)
}

/// The lifted action on maps: every path term is multiplied by the product
/// of `lambda_a` over its arrows.
pub fn scale_map_arrows(phi: &AddMap, lambda: &BTreeMap<Id, Rational>) -> Result<AddMap> {
    let entries = phi
        .entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    PathComb::from_terms(
                        e.source().clone(),
                        e.target().clone(),
                        e.terms().map(|(p, c)| {
                            let w = p.arrows().iter().fold(c.clone(), |acc, a| {
                                acc * lambda.get(a).cloned().unwrap_or_else(Rational::one)
                            });
                            (p.clone(), w)
                        }),
                    )
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    AddMap::new(
        phi.source_slots().to_vec(),
        phi.target_slots().to_vec(),
        entries,
    )
}
